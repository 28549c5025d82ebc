#pragma once

#include <string>
#include <vector>

#include "jmb/catalog.hpp"

namespace jmb {

/// One tensor factor: subdegree r taken with multiplicity l.
struct TensorFactor {
  unsigned r = 2;
  unsigned l = 1;

  friend auto operator<=>(const TensorFactor&, const TensorFactor&) = default;
};

/// Distinct subdegrees with multiplicities whose product r_1^l_1 ... divides
/// n. Factors are kept sorted by descending r.
struct TensorConfig {
  std::vector<TensorFactor> factors;

  /// The product of r^l over all factors.
  std::uint64_t dimension() const;
  /// e.g. "{(3,2)}", "{}" for the empty config.
  std::string to_string() const;

  friend auto operator<=>(const TensorConfig&, const TensorConfig&) = default;
};

inline constexpr unsigned kMaxTensorDegree = 200;

/// Every config for degree n, each once, in canonical (lexicographic) order.
/// Throws DomainError unless 1 <= n <= 200.
std::vector<TensorConfig> enumerate_tensor_configs(unsigned n);

/// prod N_{r,l}^{l_j} l_j!.
Nat tensor_value(const TensorConfig& config, Characteristic l,
                 const Catalog& catalog = Catalog::paper());

struct PrimitiveResult {
  unsigned n = 0;
  unsigned l = 0;
  Nat value;
  std::vector<TensorConfig> argmax;
  std::vector<std::string> flags;
};

/// Maximum of tensor_value over all configs of degree n, 2 <= n <= 200.
/// Flags `attainability=unknown` when l divides n + 1.
PrimitiveResult primitive_bound(unsigned n, Characteristic l,
                                const Catalog& catalog = Catalog::paper());

}  // namespace jmb
