#include "jmb/expr.hpp"

#include <cctype>

#include "jmb/errors.hpp"

namespace jmb {

struct Expr::Node {
  enum class Kind { Literal, Var, Add, Mul, Pow, Fact, N, Idx, Prod };
  Kind kind = Kind::Literal;
  Nat value;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

NodePtr make(Kind k, std::vector<NodePtr> args) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool take(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "expression '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + what);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (take('+')) lhs = make(Kind::Add, {lhs, term()});
    return lhs;
  }
  NodePtr term() {
    NodePtr lhs = factor();
    while (take('*')) lhs = make(Kind::Mul, {lhs, factor()});
    return lhs;
  }
  NodePtr factor() {
    NodePtr base = atom();
    if (take('^')) return make(Kind::Pow, {base, factor()});
    return base;
  }
  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::Literal;
      n->value = Nat::parse(text_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "l") return make(Kind::Var, {});
      Kind k;
      std::size_t arity = 2;
      if (name == "fact") {
        k = Kind::Fact;
        arity = 1;
      } else if (name == "N") {
        k = Kind::N;
      } else if (name == "idx") {
        k = Kind::Idx;
      } else if (name == "prod") {
        k = Kind::Prod;
      } else {
        pos_ = start;
        fail("unknown name '" + std::string(name) + "'");
      }
      expect('(');
      std::vector<NodePtr> args{expr()};
      while (args.size() < arity) {
        expect(',');
        args.push_back(expr());
      }
      expect(')');
      return make(k, std::move(args));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool node_uses_l(const Expr::Node& n) {
  if (n.kind == Kind::Var) return true;
  for (const auto& a : n.args) {
    if (node_uses_l(*a)) return true;
  }
  return false;
}

std::uint64_t small(const Nat& v, const char* what) {
  if (!v.fits_u64() || v.to_u64() > 0xFFFFFFFFu) {
    throw DomainError(std::string(what) + " argument too large");
  }
  return v.to_u64();
}

Nat eval_node(const Expr::Node& n, const Catalog& cat, std::optional<Characteristic> l) {
  const auto arg = [&](std::size_t i) { return eval_node(*n.args[i], cat, l); };
  switch (n.kind) {
    case Kind::Literal:
      return n.value;
    case Kind::Var:
      if (!l) throw DomainError("expression uses l but no characteristic is set");
      return Nat(l->value());
    case Kind::Add:
      return arg(0) + arg(1);
    case Kind::Mul:
      return arg(0) * arg(1);
    case Kind::Pow:
      return power(arg(0), small(arg(1), "exponent"));
    case Kind::Fact:
      return factorial(small(arg(0), "factorial"));
    case Kind::N:
      return cat.N_bound(static_cast<unsigned>(small(arg(0), "N")),
                         Characteristic(small(arg(1), "N")));
    case Kind::Idx: {
      const auto e = cat.constituent(Characteristic(small(arg(1), "idx")),
                                     static_cast<unsigned>(small(arg(0), "idx")));
      return e ? e->index : Nat(0);
    }
    case Kind::Prod: {
      const std::uint64_t a = small(arg(0), "prod");
      const std::uint64_t b = small(arg(1), "prod");
      mpz_class acc = 1;
      for (std::uint64_t i = a; i <= b; ++i) acc *= static_cast<unsigned long>(i);
      return Nat(acc);
    }
  }
  throw DomainError("bad expression node");
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse_all();
  e.text_ = std::string(text);
  return e;
}

bool Expr::uses_l() const noexcept { return root_ && node_uses_l(*root_); }

Nat Expr::eval(const Catalog& catalog, std::optional<Characteristic> l) const {
  return eval_node(*root_, catalog, l);
}

std::optional<std::uint64_t> Expr::factorial_argument(const Catalog& catalog,
                                                      std::optional<Characteristic> l) const {
  if (root_->kind != Kind::Fact) return std::nullopt;
  const Nat k = eval_node(*root_->args[0], catalog, l);
  if (!k.fits_u64()) throw DomainError("factorial argument too large");
  return k.to_u64();
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

bool holds(Relation r, std::strong_ordering ord) {
  switch (r) {
    case Relation::Less: return ord < 0;
    case Relation::LessEq: return ord <= 0;
    case Relation::Greater: return ord > 0;
    case Relation::GreaterEq: return ord >= 0;
    case Relation::Equal: return ord == 0;
  }
  return false;
}

std::strong_ordering compare(const Expr& a, const Expr& b, const Catalog& catalog,
                             std::optional<Characteristic> l) {
  const auto ka = a.factorial_argument(catalog, l);
  const auto kb = b.factorial_argument(catalog, l);
  const bool big_a = ka && *ka > kFactorialCap;
  const bool big_b = kb && *kb > kFactorialCap;
  if (ka && kb && (big_a || big_b)) {
    // n! is strictly increasing for n >= 1 and 0! = 1!.
    const auto norm = [](std::uint64_t k) { return k == 0 ? 1 : k; };
    return norm(*ka) <=> norm(*kb);
  }
  if (big_b) return compare_with_factorial(a.eval(catalog, l), *kb);
  if (big_a) return 0 <=> compare_with_factorial(b.eval(catalog, l), *ka);
  return a.eval(catalog, l) <=> b.eval(catalog, l);
}

Chain Chain::parse(std::string_view text) {
  Chain chain;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (depth != 0 || (c != '<' && c != '>' && c != '=')) continue;
    Relation rel;
    std::size_t width = 1;
    const bool eq_next = i + 1 < text.size() && text[i + 1] == '=';
    if (c == '<') {
      rel = eq_next ? Relation::LessEq : Relation::Less;
      width = eq_next ? 2 : 1;
    } else if (c == '>') {
      rel = eq_next ? Relation::GreaterEq : Relation::Greater;
      width = eq_next ? 2 : 1;
    } else {
      rel = Relation::Equal;
    }
    chain.terms.push_back(Expr::parse(text.substr(start, i - start)));
    chain.relations.push_back(rel);
    i += width - 1;
    start = i + 1;
  }
  chain.terms.push_back(Expr::parse(text.substr(start)));
  if (chain.relations.empty()) {
    throw ParseError(0, "claim '" + std::string(text) + "' has no relation");
  }
  return chain;
}

bool Chain::uses_l() const {
  for (const auto& t : terms) {
    if (t.uses_l()) return true;
  }
  return false;
}

}  // namespace jmb
