#include "jmb/catalog_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "jmb/errors.hpp"

namespace jmb {

namespace {

using Fields = std::map<std::string, std::string, std::less<>>;

bool needs_quotes(std::string_view v) {
  return v.empty() || v.find_first_of(" \t\"") != std::string_view::npos;
}

std::string field(std::string_view key, std::string_view value) {
  std::string out(key);
  out += '=';
  if (needs_quotes(value)) {
    out += '"';
    out += value;
    out += '"';
  } else {
    out += value;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Fields tokenize(std::string_view line, std::size_t lineno) {
  Fields out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos) {
      throw ParseError(lineno, "expected key=value near '" + std::string(line.substr(i)) + "'");
    }
    std::string key(line.substr(i, eq - i));
    if (key.empty() || key.find(' ') != std::string::npos) {
      throw ParseError(lineno, "bad key near '" + std::string(line.substr(i)) + "'");
    }
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw ParseError(lineno, "unterminated quote");
      value = std::string(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      const std::size_t end = std::min(line.find_first_of(" \t", i), line.size());
      value = std::string(line.substr(i, end - i));
      i = end;
    }
    if (!out.emplace(std::move(key), std::move(value)).second) {
      throw ParseError(lineno, "repeated key");
    }
  }
  return out;
}

const std::string& require(const Fields& f, std::string_view key, std::size_t lineno) {
  const auto it = f.find(key);
  if (it == f.end()) throw ParseError(lineno, "missing field '" + std::string(key) + "'");
  return it->second;
}

std::string optional_field(const Fields& f, std::string_view key) {
  const auto it = f.find(key);
  return it == f.end() ? std::string() : it->second;
}

unsigned parse_unsigned(const std::string& text, std::size_t lineno, std::string_view what) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(lineno, "bad " + std::string(what) + " '" + text + "'");
  }
  return static_cast<unsigned>(std::stoul(text));
}

void check_keys(const Fields& f, std::initializer_list<std::string_view> allowed,
                std::size_t lineno) {
  for (const auto& [k, v] : f) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) throw ParseError(lineno, "unknown field '" + k + "'");
  }
}

std::string exceptions_to_string(const std::vector<std::pair<unsigned, unsigned>>& exc) {
  std::string s;
  for (std::size_t i = 0; i < exc.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exc[i].first) + ":" + std::to_string(exc[i].second);
  }
  return s;
}

std::vector<std::pair<unsigned, unsigned>> parse_exceptions(const std::string& text,
                                                            std::size_t lineno) {
  std::vector<std::pair<unsigned, unsigned>> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "bad inertia exception '" + item + "'");
    out.emplace_back(parse_unsigned(item.substr(0, colon), lineno, "prime"),
                     parse_unsigned(item.substr(colon + 1), lineno, "inertia"));
  }
  return out;
}

CharCondition parse_cond(const std::string& text, std::size_t lineno) {
  try {
    return CharCondition::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(lineno, e.what());
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
  }
}

}  // namespace

Nat parse_index_expr(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError(0, "empty index expression");
  Nat product(1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = std::min(text.find('*', pos), text.size());
    const std::string_view term = trim(text.substr(pos, star - pos));
    if (term.starts_with("fact(") && term.ends_with(")")) {
      const std::string_view arg = term.substr(5, term.size() - 6);
      product *= factorial(Nat::parse(trim(arg)).to_u64());
    } else {
      product *= Nat::parse(term);
    }
    pos = star + 1;
  }
  return product;
}

std::string serialize_catalog(const Catalog& c) {
  std::ostringstream out;
  out << "# primitive-group bound catalog\n";
  out << "jordan-catalog v" << c.version() << " mode=" << to_string(c.mode()) << "\n";
  for (const auto& r : c.primitive_rows()) {
    out << "kind=primitive degree=" << r.degree << " cond=" << r.cond.to_string()
        << " index=" << r.bound.to_string() << ' ' << field("label", r.label) << ' '
        << field("src", r.source_anchor) << '\n';
  }
  for (const auto& r : c.constituent_rows()) {
    out << "kind=constituent degree=" << r.entry.degree << " cond=" << r.cond.to_string()
        << " index=" << r.entry.index.to_string() << ' ' << field("label", r.entry.label)
        << " center=" << r.entry.center_order << ' ' << field("src", r.entry.source_anchor)
        << '\n';
  }
  for (const auto& r : c.components()) {
    out << "kind=component degree=" << r.degree << " cond=" << r.cond.to_string() << ' '
        << field("name", r.name) << " index=" << r.index_E.to_string()
        << " inertia=" << r.inertia_generic
        << " exc=" << (r.inertia_exceptions.empty() ? "none" : exceptions_to_string(r.inertia_exceptions))
        << " part=" << r.table_part << ' ' << field("src", r.source_anchor) << '\n';
  }
  for (const auto& r : c.quasicomponents()) {
    out << "kind=quasicomponent p=" << r.p << " m=" << r.m << " degree=" << r.degree
        << " cond=" << r.cond.to_string() << " index=" << r.bound.to_string() << ' '
        << field("label", r.label) << ' ' << field("src", r.source_anchor) << '\n';
  }
  return out.str();
}

Catalog parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  Catalog catalog;
  std::set<std::tuple<std::string, std::string, std::string>> seen;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      if (!line.starts_with("jordan-catalog ")) {
        throw ParseError(lineno, "expected header 'jordan-catalog v1 mode=<mode>'");
      }
      std::istringstream hs{std::string(line)};
      std::string magic, version, mode;
      hs >> magic >> version >> mode;
      if (version != "v1") throw ParseError(lineno, "unsupported version '" + version + "'");
      if (!mode.starts_with("mode=")) throw ParseError(lineno, "header lacks mode=");
      try {
        catalog = Catalog::builtin(parse_catalog_mode(mode.substr(5)));
      } catch (const ValidationError& e) {
        throw ParseError(lineno, e.what());
      }
      have_header = true;
      continue;
    }

    const Fields f = tokenize(line, lineno);
    const std::string& kind = require(f, "kind", lineno);
    std::string key_degree = optional_field(f, "degree");
    if (kind == "quasicomponent") key_degree = optional_field(f, "p") + "^" + optional_field(f, "m");
    if (kind == "component") key_degree += "/" + optional_field(f, "name");
    if (!seen.emplace(kind, key_degree, optional_field(f, "cond")).second) {
      throw ValidationError("line " + std::to_string(lineno) + ": duplicate " + kind +
                            " row for degree " + key_degree);
    }

    try {
      if (kind == "primitive") {
        check_keys(f, {"kind", "degree", "cond", "index", "label", "src"}, lineno);
        catalog.put(PrimitiveRow{parse_unsigned(require(f, "degree", lineno), lineno, "degree"),
                                 parse_cond(require(f, "cond", lineno), lineno),
                                 parse_index_expr(require(f, "index", lineno)),
                                 require(f, "label", lineno), optional_field(f, "src")});
      } else if (kind == "constituent") {
        check_keys(f, {"kind", "degree", "cond", "index", "label", "center", "src"}, lineno);
        ConstituentEntry e;
        e.degree = parse_unsigned(require(f, "degree", lineno), lineno, "degree");
        e.index = parse_index_expr(require(f, "index", lineno));
        e.label = require(f, "label", lineno);
        const std::string center = optional_field(f, "center");
        e.center_order = center.empty() ? 1 : parse_unsigned(center, lineno, "center");
        e.kind = (e.degree == 1 && e.index == Nat(1)) ? ConstituentKind::Trivial
                                                      : ConstituentKind::Table;
        e.source_anchor = optional_field(f, "src");
        catalog.put(ConstituentRow{parse_cond(require(f, "cond", lineno), lineno), std::move(e)});
      } else if (kind == "component") {
        check_keys(f, {"kind", "degree", "cond", "name", "index", "inertia", "exc", "part", "src"},
                   lineno);
        ComponentEntry e;
        e.name = require(f, "name", lineno);
        e.degree = parse_unsigned(require(f, "degree", lineno), lineno, "degree");
        e.index_E = parse_index_expr(require(f, "index", lineno));
        e.inertia_generic = parse_unsigned(require(f, "inertia", lineno), lineno, "inertia");
        e.inertia_exceptions = parse_exceptions(optional_field(f, "exc"), lineno);
        e.cond = parse_cond(require(f, "cond", lineno), lineno);
        const std::string part = optional_field(f, "part");
        if (!part.empty() && (part.size() != 1 || part[0] < 'a' || part[0] > 'c')) {
          throw ParseError(lineno, "part must be a, b or c");
        }
        e.table_part = part.empty() ? 'a' : part[0];
        e.source_anchor = optional_field(f, "src");
        catalog.put(std::move(e));
      } else if (kind == "quasicomponent") {
        check_keys(f, {"kind", "p", "m", "degree", "cond", "index", "label", "src"}, lineno);
        QuasicomponentEntry e;
        e.p = parse_unsigned(require(f, "p", lineno), lineno, "p");
        e.m = parse_unsigned(require(f, "m", lineno), lineno, "m");
        if (!is_prime(e.p) || e.m < 1) throw ValidationError("quasicomponent needs prime p, m >= 1");
        const Nat degree = power(Nat(e.p), e.m);
        e.degree = static_cast<unsigned>(degree.to_u64());
        if (f.contains("degree") &&
            parse_unsigned(require(f, "degree", lineno), lineno, "degree") != e.degree) {
          throw ValidationError("quasicomponent degree must equal p^m");
        }
        e.bound = sp_normalizer_bound(e.p, e.m);
        if (f.contains("index") && parse_index_expr(require(f, "index", lineno)) != e.bound) {
          throw ValidationError("quasicomponent index must equal p^(2m)|Sp_2m(p)|");
        }
        e.label = require(f, "label", lineno);
        e.cond = parse_cond(require(f, "cond", lineno), lineno);
        e.source_anchor = optional_field(f, "src");
        catalog.put(std::move(e));
      } else {
        throw ParseError(lineno, "unknown row kind '" + kind + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(lineno, e.what());
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      if (msg.starts_with("line ")) throw;
      throw ValidationError("line " + std::to_string(lineno) + ": " + msg);
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header line");
  return catalog;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open catalog file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace jmb
