#include "jmb/shape.hpp"

#include <algorithm>
#include <cctype>

#include "jmb/errors.hpp"

namespace jmb {

namespace {

std::string block_string(const Block& b) {
  std::string s = "P" + std::to_string(b.entry.degree);
  if (b.t > 1) s += "^(" + std::to_string(b.t) + ")";
  if (b.entry.kind == ConstituentKind::Symmetric) s += "~" + b.entry.label;
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  bool take(char c) {
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned number() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a number");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "shape '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                            ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_shape(const SaturatedPair& pair) {
  std::string s;
  for (std::size_t i = 0; i < pair.blocks.size(); ++i) {
    if (i) s += '+';
    s += block_string(pair.blocks[i]);
  }
  return s;
}

std::vector<ShapeBlock> parse_shape(std::string_view text) {
  Cursor c(text);
  std::vector<ShapeBlock> out;
  do {
    ShapeBlock b;
    c.expect('P');
    b.m = c.number();
    if (b.m == 0) c.fail("subdegree must be >= 1");
    if (c.take('^')) {
      c.expect('(');
      b.t = c.number();
      c.expect(')');
      if (b.t == 0) c.fail("multiplicity must be >= 1");
    }
    if (c.take('~')) {
      c.expect('S');
      b.symmetric_k = c.number();
    }
    out.push_back(b);
  } while (c.take('+'));
  if (!c.done()) c.fail("trailing characters");
  return out;
}

SaturatedPair pair_from_shape(std::string_view text, Characteristic l, const Catalog& catalog) {
  SaturatedPair pair;
  pair.l = l.value();
  for (const auto& sb : parse_shape(text)) {
    const auto entry = catalog.constituent(l, sb.m);
    if (!entry) {
      throw ValidationError("no constituent of subdegree " + std::to_string(sb.m) +
                            " in characteristic " + std::to_string(l.value()));
    }
    const bool symmetric = entry->kind == ConstituentKind::Symmetric;
    if (sb.symmetric_k &&
        (!symmetric || entry->label != "S" + std::to_string(*sb.symmetric_k))) {
      throw ValidationError("shape block P" + std::to_string(sb.m) +
                            " disagrees with catalog constituent " + entry->label);
    }
    pair.n += sb.m * sb.t;
    pair.blocks.push_back(Block{*entry, sb.t});
  }
  std::sort(pair.blocks.begin(), pair.blocks.end(),
            [](const Block& a, const Block& b) { return a.entry.degree > b.entry.degree; });
  validate_pair(pair, catalog);
  return pair;
}

}  // namespace jmb
