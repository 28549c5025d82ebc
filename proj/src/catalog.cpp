#include "jmb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jmb/errors.hpp"

namespace jmb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Characteristic::Characteristic(std::uint64_t l) : l_(static_cast<unsigned>(l)) {
  if (l > 0xFFFFFFFFu || !is_prime(l)) {
    throw ValidationError("characteristic " + std::to_string(l) + " is not prime");
  }
}

// ---------------------------------------------------------------------------
// CharCondition

CharCondition::CharCondition(Kind k, std::vector<unsigned> primes)
    : kind_(k), primes_(std::move(primes)) {
  for (unsigned p : primes_) {
    if (!is_prime(p)) {
      throw ValidationError("condition lists non-prime " + std::to_string(p));
    }
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  if (primes_.empty()) throw ValidationError("condition needs at least one prime");
}

CharCondition CharCondition::in(std::vector<unsigned> primes) {
  return CharCondition(Kind::In, std::move(primes));
}

CharCondition CharCondition::not_in(std::vector<unsigned> primes) {
  return CharCondition(Kind::NotIn, std::move(primes));
}

CharCondition CharCondition::parse(std::string_view text) {
  if (text == "any") return any();
  Kind kind;
  std::string_view rest;
  if (text.starts_with("in:")) {
    kind = Kind::In;
    rest = text.substr(3);
  } else if (text.starts_with("notin:")) {
    kind = Kind::NotIn;
    rest = text.substr(6);
  } else {
    throw ParseError(0, "bad condition '" + std::string(text) + "'");
  }
  std::vector<unsigned> primes;
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t comma = std::min(rest.find(',', pos), rest.size());
    const std::string_view item = rest.substr(pos, comma - pos);
    if (item.empty() || item.size() > 9 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError(0, "bad prime list in condition '" + std::string(text) + "'");
    }
    primes.push_back(static_cast<unsigned>(std::stoul(std::string(item))));
    pos = comma + 1;
  }
  return CharCondition(kind, std::move(primes));
}

bool CharCondition::matches(Characteristic l) const {
  const bool listed = std::binary_search(primes_.begin(), primes_.end(), l.value());
  switch (kind_) {
    case Kind::Any: return true;
    case Kind::In: return listed;
    case Kind::NotIn: return !listed;
  }
  return false;
}

bool CharCondition::overlaps(const CharCondition& other) const {
  if (kind_ == Kind::Any || other.kind_ == Kind::Any) return true;
  // Two co-finite sets always meet.
  if (kind_ == Kind::NotIn && other.kind_ == Kind::NotIn) return true;
  const CharCondition& finite = kind_ == Kind::In ? *this : other;
  const CharCondition& rest = kind_ == Kind::In ? other : *this;
  return std::any_of(finite.primes_.begin(), finite.primes_.end(),
                     [&](unsigned p) { return rest.matches(Characteristic(p)); });
}

std::string CharCondition::to_string() const {
  if (kind_ == Kind::Any) return "any";
  std::string s = kind_ == Kind::In ? "in:" : "notin:";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(primes_[i]);
  }
  return s;
}

std::string_view to_string(ConstituentKind k) {
  switch (k) {
    case ConstituentKind::Trivial: return "trivial";
    case ConstituentKind::Table: return "table";
    case ConstituentKind::Symmetric: return "symmetric";
  }
  return "?";
}

std::string_view to_string(CatalogMode m) {
  switch (m) {
    case CatalogMode::PaperVerbatim: return "paper-verbatim";
    case CatalogMode::Corrected: return "corrected";
    case CatalogMode::Permissive: return "permissive";
  }
  return "?";
}

CatalogMode parse_catalog_mode(std::string_view text) {
  if (text == "paper-verbatim") return CatalogMode::PaperVerbatim;
  if (text == "corrected") return CatalogMode::Corrected;
  if (text == "permissive") return CatalogMode::Permissive;
  throw ValidationError("unknown catalog mode '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Entries

unsigned ComponentEntry::inertia(Characteristic l) const {
  for (const auto& [p, v] : inertia_exceptions) {
    if (p == l.value()) return v;
  }
  return inertia_generic;
}

Nat ComponentEntry::contribution(Characteristic l) const {
  return index_E * Nat(inertia(l));
}

LieTypeDescriptor LieTypeDescriptor::make(unsigned a, unsigned lambda,
                                          unsigned min_fund_degree, unsigned diag_bound) {
  if (a < 1 || a > 3) throw ValidationError("a must be 1, 2 or 3");
  if (lambda != 1 && lambda != 2 && lambda != 6) {
    throw ValidationError("lambda must be 1, 2 or 6");
  }
  if (min_fund_degree < 2) throw ValidationError("minimal fundamental degree must be >= 2");
  if (lambda == 6 && min_fund_degree < 8) {
    throw ValidationError("lambda = 6 (D4) requires minimal fundamental degree >= 8");
  }
  if (a > 1 && lambda != 1) throw ValidationError("twisted types (a > 1) have lambda = 1");
  if (a == 3 && min_fund_degree < 8) {
    throw ValidationError("a = 3 (triality twist) requires minimal fundamental degree >= 8");
  }
  return LieTypeDescriptor{a, lambda, min_fund_degree, diag_bound};
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

template <typename Row, typename KeyEq>
void put_row(std::vector<Row>& rows, Row row, KeyEq same_slot, const char* what) {
  for (auto& existing : rows) {
    if (!same_slot(existing, row)) continue;
    if (existing.cond == row.cond) {
      existing = std::move(row);
      return;
    }
    if (existing.cond.overlaps(row.cond)) {
      throw ValidationError(std::string(what) + " row with condition " + row.cond.to_string() +
                            " overlaps existing condition " + existing.cond.to_string());
    }
  }
  rows.push_back(std::move(row));
}

ConstituentEntry trivial_entry() {
  return ConstituentEntry{1, Nat(1), "1", 1, ConstituentKind::Trivial, "trivial"};
}

ConstituentEntry symmetric_entry(unsigned m, unsigned k) {
  return ConstituentEntry{m, factorial(k), "S" + std::to_string(k), 1,
                          ConstituentKind::Symmetric, "symmetric-rule"};
}

CharCondition in(std::initializer_list<unsigned> p) { return CharCondition::in(p); }
CharCondition notin(std::initializer_list<unsigned> p) { return CharCondition::not_in(p); }

}  // namespace

void Catalog::put(PrimitiveRow row) {
  put_row(primitive_, std::move(row),
          [](const PrimitiveRow& a, const PrimitiveRow& b) { return a.degree == b.degree; },
          "primitive");
}

void Catalog::put(ConstituentRow row) {
  const auto& e = row.entry;
  if (e.degree < 1) throw ValidationError("constituent degree must be >= 1");
  if (e.index.is_zero()) throw ValidationError("constituent index must be >= 1");
  if (e.label.empty()) throw ValidationError("constituent label must be nonempty");
  const bool trivial_shape = e.degree == 1 && e.index == Nat(1);
  if ((e.kind == ConstituentKind::Trivial) != trivial_shape) {
    throw ValidationError("kind 'trivial' is exactly degree 1 with index 1");
  }
  put_row(constituents_, std::move(row),
          [](const ConstituentRow& a, const ConstituentRow& b) {
            return a.entry.degree == b.entry.degree;
          },
          "constituent");
}

void Catalog::put(ComponentEntry row) {
  if (row.index_E < Nat(60)) throw ValidationError("component [E:Z(E)] must be >= 60");
  if (row.inertia_generic < 1) throw ValidationError("inertia values must be >= 1");
  for (const auto& [p, v] : row.inertia_exceptions) {
    if (!is_prime(p)) throw ValidationError("inertia exception at non-prime " + std::to_string(p));
    if (v < 1) throw ValidationError("inertia values must be >= 1");
  }
  put_row(components_, std::move(row),
          [](const ComponentEntry& a, const ComponentEntry& b) {
            return a.degree == b.degree && a.name == b.name;
          },
          "component");
}

void Catalog::put(QuasicomponentEntry row) {
  if (!is_prime(row.p)) throw ValidationError("quasicomponent p must be prime");
  if (row.m < 1) throw ValidationError("quasicomponent m must be >= 1");
  if (Nat(row.degree) != power(Nat(row.p), row.m)) {
    throw ValidationError("quasicomponent degree must equal p^m");
  }
  if (row.bound != sp_normalizer_bound(row.p, row.m)) {
    throw ValidationError("quasicomponent bound must equal p^(2m)|Sp_2m(p)|");
  }
  put_row(quasicomponents_, std::move(row),
          [](const QuasicomponentEntry& a, const QuasicomponentEntry& b) {
            return a.p == b.p && a.m == b.m;
          },
          "quasicomponent");
}

Catalog Catalog::builtin(CatalogMode mode) {
  Catalog c;
  c.mode_ = mode;
  const bool corrected = mode == CatalogMode::Corrected;

  // [E:Z(E)] for 2.O8+(2) and 2.A10: printed digits vs. order formulas.
  const Nat o8_index = corrected ? orthogonal_plus_simple_order(4, 2) : Nat(174184400);
  const Nat o8_row = corrected ? o8_index * Nat(2) : Nat(348368800);
  const Nat a10_index = corrected ? Nat(factorial(10).to_u64() / 2) : Nat(1818400);

  // Primitive-group bounds by degree.
  const auto prim = [&](unsigned n, CharCondition cond, Nat bound, const char* label) {
    c.put(PrimitiveRow{n, std::move(cond), std::move(bound), label,
                       "primitive-bounds:" + std::to_string(n)});
  };
  prim(2, notin({2, 5}), Nat(60), "2.A5");
  prim(2, in({5}), Nat(24), "2.S4");
  prim(3, notin({2, 3, 5}), Nat(360), "3.A6");
  prim(3, in({2}), Nat(216), "3^(1+2).SL2(3)");
  prim(3, in({3}), Nat(168), "L2(7)");
  prim(3, in({5}), Nat(2520), "3.A7");
  prim(4, notin({2, 3}), Nat(25920), "Sp4(3)");
  prim(4, in({2}), Nat(2520), "A7");
  prim(4, in({3}), Nat(40320), "4_2.(L3(4).2_2)");
  prim(5, notin({2, 3}), Nat(25920), "PSp4(3)");
  prim(5, in({2}), Nat(3000), "5^(1+2).SL2(5)");
  prim(5, in({3}), Nat(7920), "M11");
  prim(6, notin({2, 3}), Nat(6531840), "6_1.(U4(3).2_2)");
  prim(6, in({2}), Nat(6531840), "3_1.(U4(3).2_2)");
  prim(6, in({3}), Nat(604800), "2.J2");
  prim(7, notin({2}), Nat(1451520), "Sp6(2)");
  prim(8, notin({2}), o8_row, "2.(O8+(2).2)");
  prim(9, notin({2, 3, 5}), Nat(4199040), "3^(1+4).Sp4(3)");
  prim(9, in({2}), Nat(50232960), "3.J3");
  prim(9, in({5}), Nat(12700800), "(3.A7 o 3.A7)Z2");
  prim(12, notin({2, 3}), Nat(448345497600ULL), "6.Suz");
  prim(12, in({2}), Nat(448345497600ULL), "3.Suz");
  prim(12, in({3}), Nat(896690995200ULL), "2.(Suz.2)");

  // Constituents: the primitive rows minus the degrees that are always
  // beaten by a decomposable replacement.
  const auto con = [&](unsigned m, CharCondition cond, Nat index, const char* label,
                       unsigned center) {
    c.put(ConstituentRow{std::move(cond),
                         ConstituentEntry{m, std::move(index), label, center,
                                          ConstituentKind::Table,
                                          "constituent-list:" + std::to_string(m)}});
  };
  con(2, notin({2, 5}), Nat(60), "2.A5", 2);
  con(2, in({5}), Nat(24), "2.S4", 2);
  con(3, notin({2, 3, 5}), Nat(360), "3.A6", 3);
  con(3, in({2}), Nat(216), "3^(1+2).SL2(3)", 3);
  con(3, in({3}), Nat(168), "L2(7)", 1);
  con(3, in({5}), Nat(2520), "3.A7", 3);
  con(4, notin({2, 3}), Nat(25920), "Sp4(3)", 2);
  con(4, in({2}), Nat(2520), "A7", 1);
  con(4, in({3}), Nat(40320), "4_2.(L3(4).2_2)", 4);
  con(5, in({2}), Nat(3000), "5^(1+2).SL2(5)", 5);
  con(6, notin({2, 3}), Nat(6531840), "6_1.(U4(3).2_2)", 6);
  con(6, in({2}), Nat(6531840), "3_1.(U4(3).2_2)", 3);
  con(6, in({3}), Nat(604800), "2.J2", 2);
  con(7, in({3}), Nat(1451520), "Sp6(2)", 1);
  con(8, notin({2}), o8_row, "2.(O8+(2).2)", 2);
  con(9, in({2}), Nat(50232960), "3.J3", 3);
  con(12, notin({2, 3}), Nat(448345497600ULL), "6.Suz", 6);
  con(12, in({2}), Nat(448345497600ULL), "3.Suz", 3);
  con(12, in({3}), Nat(896690995200ULL), "2.(Suz.2)", 2);

  if (mode == CatalogMode::Permissive) {
    // Known primitive groups that never beat a decomposable alternative.
    con(7, in({2}), Nat(16464), "7^(1+2).SL2(7)", 7);
    con(11, in({2}), Nat(244823040), "M24", 1);
    con(5, notin({2, 3}), Nat(25920), "PSp4(3)", 1);
    con(7, notin({2, 3}), Nat(1451520), "Sp6(2)", 1);
    con(9, in({3}), factorial(10), "S10", 1);
    con(8, in({2}), factorial(10), "S10", 1);
  }

  // Quasisimple components.
  const auto comp = [&](unsigned n, const char* name, unsigned inertia, Nat index,
                        std::vector<std::pair<unsigned, unsigned>> exc, CharCondition cond,
                        char part) {
    c.put(ComponentEntry{name, n, std::move(index), inertia, std::move(exc), std::move(cond),
                         part, std::string("component-table(") + part + "):" +
                                   std::to_string(n)});
  };
  comp(2, "2.A5", 1, Nat(60), {}, notin({2, 5}), 'a');
  comp(3, "3.A6", 1, Nat(360), {{5, 2}}, notin({2, 3}), 'a');
  comp(3, "A5", 1, Nat(60), {}, notin({2, 5}), 'a');
  comp(3, "L3(2)", 1, Nat(168), {}, notin({2, 7}), 'a');
  comp(4, "2.PSp4(3)", 1, Nat(25920), {}, notin({2, 3}), 'a');
  comp(4, "2.L3(2)", 1, Nat(168), {}, notin({2, 7}), 'a');
  comp(4, "2.A6", 1, Nat(360), {{5, 2}}, notin({2, 3}), 'a');
  comp(4, "2.A7", 1, Nat(2520), {{7, 2}}, CharCondition::any(), 'a');
  comp(5, "PSp4(3)", 1, Nat(25920), {}, notin({2, 3}), 'a');
  comp(6, "6_1.U4(3)", 2, Nat(3265920), {}, notin({3}), 'a');
  comp(6, "U3(3)", 2, Nat(6048), {}, notin({2, 3}), 'a');
  comp(6, "6.L3(4)", 2, Nat(20160), {}, notin({2, 3}), 'a');
  comp(6, "PSp4(3)", 2, Nat(25920), {}, notin({2, 3}), 'a');
  comp(6, "2.J2", 1, Nat(604800), {{5, 2}}, CharCondition::any(), 'a');
  comp(7, "Sp6(2)", 1, Nat(1451520), {}, notin({2}), 'a');
  comp(8, "2.O8+(2)", 2, o8_index, {}, notin({2}), 'a');
  comp(8, "2.Sp6(2)", 1, Nat(1451520), {}, notin({2}), 'a');
  comp(12, "6.Suz", 1, Nat(448345497600ULL), {}, notin({3}), 'a');
  comp(3, "3.A7", 1, Nat(2520), {}, in({5}), 'c');
  comp(4, "4_2.L3(4)", 2, Nat(20160), {}, in({3}), 'c');
  comp(5, "M11", 1, Nat(7920), {}, in({3}), 'c');
  comp(6, "2.L3(4)", 4, Nat(20160), {}, in({3}), 'c');
  comp(6, "3.M22", 1, Nat(443520), {}, in({2}), 'c');
  comp(6, "2.M12", 1, Nat(95040), {}, in({3}), 'c');
  comp(7, "J1", 1, Nat(175560), {}, in({11}), 'c');
  comp(8, "2.A10", 1, a10_index, {}, in({5}), 'c');
  comp(9, "3.J3", 1, Nat(50232960), {}, in({2}), 'c');
  comp(12, "2.Suz", 2, Nat(448345497600ULL), {}, in({3}), 'c');

  // Extraspecial normalisers that beat every component in their degree.
  const auto quasi = [&](unsigned p, unsigned m, CharCondition cond, const char* label) {
    const unsigned degree = static_cast<unsigned>(power(Nat(p), m).to_u64());
    c.put(QuasicomponentEntry{p, m, degree, sp_normalizer_bound(p, m), label, std::move(cond),
                              "quasicomponent-table:" + std::to_string(degree)});
  };
  quasi(2, 1, in({5}), "GL(2,3)");
  quasi(3, 1, in({2}), "3^(1+2).SL2(3)");
  quasi(5, 1, in({2}), "5^(1+2).SL2(5)");
  quasi(3, 2, notin({3}), "3^(1+4).Sp4(3)");

  return c;
}

const Catalog& Catalog::paper() {
  static const Catalog instance = builtin(CatalogMode::PaperVerbatim);
  return instance;
}

bool is_table_degree(unsigned m) noexcept { return (m >= 2 && m <= 9) || m == 12; }

std::optional<ConstituentEntry> Catalog::constituent(Characteristic l, unsigned m) const {
  if (m == 0) throw DomainError("subdegree must be >= 1");
  if (m == 1) return trivial_entry();
  for (const auto& row : constituents_) {
    if (row.entry.degree == m && row.cond.matches(l)) return row.entry;
  }
  if (is_table_degree(m)) return std::nullopt;
  if (l.divides(m + 1)) return std::nullopt;
  if (l.divides(m + 2)) return symmetric_entry(m, m + 2);
  return symmetric_entry(m, m + 1);
}

std::vector<ConstituentEntry> Catalog::constituents(Characteristic l, unsigned m) const {
  auto e = constituent(l, m);
  if (!e) return {};
  return {std::move(*e)};
}

std::optional<PrimitiveRow> Catalog::primitive_row(unsigned r, Characteristic l) const {
  for (const auto& row : primitive_) {
    if (row.degree == r && row.cond.matches(l)) return row;
  }
  return std::nullopt;
}

Nat Catalog::N_bound(unsigned r, Characteristic l) const {
  if (r < 2) throw DomainError("N_bound needs r >= 2");
  const bool symmetric_exception = r >= 8 && r != 12 && l.divides(r + 2);
  const Nat generic = factorial(symmetric_exception ? r + 2 : r + 1);
  const auto row = primitive_row(r, l);
  if (!row) return generic;
  // A tabulated row and the S_{r+2} exception can both apply (r = 9, l = 11).
  if (symmetric_exception && generic > row->bound) return generic;
  return row->bound;
}

// ---------------------------------------------------------------------------
// Closed-form rules

Nat symplectic_order(unsigned p, unsigned m) {
  Nat order = power(Nat(p), static_cast<std::uint64_t>(m) * m);
  for (unsigned i = 1; i <= m; ++i) {
    mpz_class f = power(Nat(p), 2 * i).mpz() - 1;
    order *= Nat(f);
  }
  return order;
}

Nat sp_normalizer_bound(unsigned p, unsigned m) {
  if (!is_prime(p)) throw DomainError("sp_normalizer_bound: p must be prime");
  if (m < 1) throw DomainError("sp_normalizer_bound: m must be >= 1");
  return power(Nat(p), 2 * m) * symplectic_order(p, m);
}

Nat orthogonal_plus_simple_order(unsigned m, unsigned q) {
  if (m < 2 || q < 2) throw DomainError("orthogonal order needs m >= 2, q >= 2");
  mpz_class order = power(Nat(q), static_cast<std::uint64_t>(m) * (m - 1)).mpz();
  const mpz_class qm1 = power(Nat(q), m).mpz() - 1;
  order *= qm1;
  for (unsigned i = 1; i < m; ++i) order *= power(Nat(q), 2 * i).mpz() - 1;
  mpz_class g;
  mpz_class four = 4;
  mpz_gcd(g.get_mpz_t(), four.get_mpz_t(), qm1.get_mpz_t());
  order /= g;
  return Nat(order);
}

Nat lie_component_bound(unsigned d) {
  if (d < 1) throw DomainError("lie_component_bound: d must be >= 1");
  return Nat(static_cast<std::uint64_t>(d) * (d + 1));
}

Nat inertia_bound(const LieTypeDescriptor& desc, unsigned n) {
  if (n < 2) throw DomainError("inertia_bound: n must be >= 2");
  const std::uint64_t m = desc.min_fund_degree;
  const std::uint64_t scale = static_cast<std::uint64_t>(desc.lambda) * desc.a * n;
  if (n < m) return Nat(scale);

  // Exact when n is a power of m.
  std::uint64_t k = 0;
  std::uint64_t x = n;
  while (x % m == 0) {
    x /= m;
    ++k;
  }
  if (x == 1) return Nat(scale * k);

  const long double log_ratio = std::log(static_cast<long double>(n)) /
                                std::log(static_cast<long double>(m));
  return Nat(static_cast<std::uint64_t>(std::ceil(static_cast<long double>(scale) * log_ratio)));
}

unsigned alternating_min_degree(unsigned m, Characteristic l) {
  if (m < 9) throw DomainError("alternating_min_degree is stated for m >= 9");
  return l.divides(m) ? m - 2 : m - 1;
}

unsigned dyadic_weight(unsigned m) {
  if (m < 1) throw DomainError("dyadic_weight: m must be >= 1");
  return static_cast<unsigned>(__builtin_popcount(m));
}

Nat spin_degree_divisor(unsigned m) {
  if (m < 8) throw DomainError("spin_degree_divisor: m must be >= 8");
  return power(Nat(2), (m - dyadic_weight(m) - 1) / 2);
}

Nat generic_bound(unsigned n, Characteristic l) {
  return factorial(l.divides(n + 2) ? n + 2 : n + 1);
}

}  // namespace jmb
