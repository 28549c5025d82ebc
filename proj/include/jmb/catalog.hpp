#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jmb/exactnum.hpp"

namespace jmb {

/// Deterministic primality check (trial division; inputs here are small).
bool is_prime(std::uint64_t n);

/// The field characteristic. Always a prime.
class Characteristic {
 public:
  /// Throws ValidationError when `l` is not prime.
  explicit Characteristic(std::uint64_t l);

  unsigned value() const noexcept { return l_; }
  bool divides(std::uint64_t x) const noexcept { return x % l_ == 0; }

  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;

 private:
  unsigned l_;
};

/// A condition on the characteristic, restricted to `any`, `in:p,...` and
/// `notin:p,...`. Divisibility conditions are engine rules, not data.
class CharCondition {
 public:
  enum class Kind { Any, In, NotIn };

  CharCondition() = default;
  static CharCondition any() { return {}; }
  static CharCondition in(std::vector<unsigned> primes);
  static CharCondition not_in(std::vector<unsigned> primes);

  /// Throws ParseError on bad syntax, ValidationError on a non-prime.
  static CharCondition parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const std::vector<unsigned>& primes() const noexcept { return primes_; }

  bool matches(Characteristic l) const;
  /// True when some prime satisfies both conditions.
  bool overlaps(const CharCondition& other) const;
  std::string to_string() const;

  friend bool operator==(const CharCondition&, const CharCondition&) = default;

 private:
  CharCondition(Kind k, std::vector<unsigned> primes);

  Kind kind_ = Kind::Any;
  std::vector<unsigned> primes_;  // sorted, unique
};

enum class ConstituentKind { Trivial, Table, Symmetric };

std::string_view to_string(ConstituentKind k);

/// A primitive constituent of a given subdegree, with its index
/// [P : Z(P) E_l(P)].
struct ConstituentEntry {
  unsigned degree = 1;
  Nat index{1};
  std::string label;
  unsigned center_order = 1;
  ConstituentKind kind = ConstituentKind::Trivial;
  std::string source_anchor;

  friend bool operator==(const ConstituentEntry&, const ConstituentEntry&) = default;
};

/// Catalog row for a constituent: the entry applies when `cond` matches.
struct ConstituentRow {
  CharCondition cond;
  ConstituentEntry entry;

  friend bool operator==(const ConstituentRow&, const ConstituentRow&) = default;
};

/// Primitive-group bound row: degree, condition, printed index bound.
struct PrimitiveRow {
  unsigned degree = 0;
  CharCondition cond;
  Nat bound;
  std::string label;
  std::string source_anchor;

  friend bool operator==(const PrimitiveRow&, const PrimitiveRow&) = default;
};

/// Quasisimple component E with a faithful degree-n representation.
struct ComponentEntry {
  std::string name;
  unsigned degree = 0;
  Nat index_E;  // [E : Z(E)]
  unsigned inertia_generic = 1;
  std::vector<std::pair<unsigned, unsigned>> inertia_exceptions;  // (l, |I|)
  CharCondition cond;
  char table_part = 'a';
  std::string source_anchor;

  unsigned inertia(Characteristic l) const;
  /// [E : Z(E)] * |I(rho)| in characteristic l.
  Nat contribution(Characteristic l) const;

  friend bool operator==(const ComponentEntry&, const ComponentEntry&) = default;
};

/// Normaliser of an extraspecial p-group of order p^(2m+1) acting in
/// degree p^m.
struct QuasicomponentEntry {
  unsigned p = 0;
  unsigned m = 0;
  unsigned degree = 0;  // p^m
  Nat bound;            // p^(2m) |Sp_2m(p)|
  std::string label;
  CharCondition cond;
  std::string source_anchor;

  friend bool operator==(const QuasicomponentEntry&, const QuasicomponentEntry&) = default;
};

/// Parameters of a group of Lie type entering the inertia estimate.
struct LieTypeDescriptor {
  unsigned a = 1;                // field-automorphism cycling factor: 1, 2 or 3
  unsigned lambda = 2;           // graph-automorphism factor: 1, 2 or 6
  unsigned min_fund_degree = 2;  // m
  unsigned diag_bound = 1;       // |D|

  /// Throws ValidationError on an impossible combination.
  static LieTypeDescriptor make(unsigned a, unsigned lambda, unsigned min_fund_degree,
                                unsigned diag_bound = 1);
};

enum class CatalogMode { PaperVerbatim, Corrected, Permissive };

std::string_view to_string(CatalogMode m);
/// Accepts "paper-verbatim", "corrected", "permissive".
CatalogMode parse_catalog_mode(std::string_view text);

/// Immutable-after-construction store of all tabulated data plus the
/// closed-form rules that extend it.
class Catalog {
 public:
  static Catalog builtin(CatalogMode mode = CatalogMode::PaperVerbatim);
  /// Shared paper-verbatim instance.
  static const Catalog& paper();

  CatalogMode mode() const noexcept { return mode_; }
  const std::string& version() const noexcept { return version_; }

  /// Possible constituents of subdegree m (length 0 or 1).
  std::vector<ConstituentEntry> constituents(Characteristic l, unsigned m) const;
  std::optional<ConstituentEntry> constituent(Characteristic l, unsigned m) const;

  /// Per-degree primitive bound N_{r,l}.
  Nat N_bound(unsigned r, Characteristic l) const;
  std::optional<PrimitiveRow> primitive_row(unsigned r, Characteristic l) const;

  std::span<const PrimitiveRow> primitive_rows() const noexcept { return primitive_; }
  std::span<const ConstituentRow> constituent_rows() const noexcept { return constituents_; }
  std::span<const ComponentEntry> components() const noexcept { return components_; }
  std::span<const QuasicomponentEntry> quasicomponents() const noexcept {
    return quasicomponents_;
  }

  // Row insertion. A row with the same (degree, condition) key replaces the
  // existing one; a new row overlapping an existing condition at the same
  // degree is rejected with ValidationError.
  void put(PrimitiveRow row);
  void put(ConstituentRow row);
  void put(ComponentEntry row);
  void put(QuasicomponentEntry row);

  void set_mode(CatalogMode m) noexcept { mode_ = m; }

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  CatalogMode mode_ = CatalogMode::PaperVerbatim;
  std::string version_ = "1";
  std::vector<PrimitiveRow> primitive_;
  std::vector<ConstituentRow> constituents_;
  std::vector<ComponentEntry> components_;
  std::vector<QuasicomponentEntry> quasicomponents_;
};

/// True for subdegrees whose constituents come only from tabulated rows
/// (2..9 and 12); other degrees >= 10 follow the symmetric-group rule.
bool is_table_degree(unsigned m) noexcept;

/// |Sp_2m(p)| = p^(m^2) prod_{i=1..m} (p^(2i) - 1).
Nat symplectic_order(unsigned p, unsigned m);
/// p^(2m) |Sp_2m(p)|.
Nat sp_normalizer_bound(unsigned p, unsigned m);
/// Order of the simple group O^+_{2m}(q), q a prime power.
Nat orthogonal_plus_simple_order(unsigned m, unsigned q);

/// d (d + 1): contribution cap for a Lie-type component in its own
/// characteristic.
Nat lie_component_bound(unsigned d);

/// ceil(lambda a n log_m n), log factor clamped below at 1.
Nat inertia_bound(const LieTypeDescriptor& desc, unsigned n);

/// Minimal faithful degree of A_m (m >= 9): m - 2 if l | m, else m - 1.
unsigned alternating_min_degree(unsigned m, Characteristic l);

/// Number of ones in the binary expansion of m.
unsigned dyadic_weight(unsigned m);

/// 2^floor((m - s - 1) / 2), s = dyadic_weight(m); m >= 8.
Nat spin_degree_divisor(unsigned m);

/// (n + 2)! when l | n + 2, else (n + 1)!.
Nat generic_bound(unsigned n, Characteristic l);

}  // namespace jmb
