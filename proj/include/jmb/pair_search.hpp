#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmb/catalog.hpp"

namespace jmb {

/// A primitive constituent repeated t times (wreath product with S_t).
struct Block {
  ConstituentEntry entry;
  unsigned t = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Sum of wreath products of primitive constituents. Blocks are sorted by
/// descending subdegree and subdegrees are pairwise distinct.
struct SaturatedPair {
  unsigned n = 0;
  unsigned l = 0;
  std::vector<Block> blocks;

  /// Canonical shape string, e.g. "P6^(5)+P3" or "P71~S72".
  std::string shape() const;

  friend bool operator==(const SaturatedPair&, const SaturatedPair&) = default;
};

/// prod index_i^t_i * t_i!.
Nat pair_value(const SaturatedPair& pair);

/// Checks distinct subdegrees, sum m_i t_i = n and that every entry is the
/// catalog constituent for (l, m_i). Throws ValidationError otherwise.
void validate_pair(const SaturatedPair& pair, const Catalog& catalog = Catalog::paper());

inline constexpr unsigned kMaxPairDegree = 200;
inline constexpr std::size_t kTieCap = 16;

struct BoundResult {
  unsigned n = 0;
  unsigned l = 0;
  Nat value;
  SciApprox value_sci;
  std::vector<SaturatedPair> argmax;  // at most kTieCap entries
  std::uint64_t tie_count = 0;        // true number of maximisers (saturating)
  std::vector<std::string> flags;

  std::vector<std::string> shapes() const;
};

/// Dynamic program over (largest subdegree used, dimension) for one
/// characteristic, answering best_pair for every n <= n_max.
class PairSolver {
 public:
  PairSolver(Characteristic l, unsigned n_max, const Catalog& catalog = Catalog::paper());

  unsigned n_max() const noexcept { return n_max_; }
  Characteristic characteristic() const noexcept { return l_; }

  const Nat& value(unsigned n) const;
  std::uint64_t tie_count(unsigned n) const;
  BoundResult result(unsigned n, unsigned sig = 3) const;

 private:
  void collect(unsigned m, unsigned rest, std::vector<Block>& path,
               std::vector<SaturatedPair>& out, unsigned n) const;

  Characteristic l_;
  unsigned n_max_;
  std::vector<std::optional<ConstituentEntry>> entries_;  // by subdegree
  // best_[m][r]: max value with subdegrees <= m summing to r (0 = none).
  std::vector<std::vector<Nat>> best_;
  std::vector<std::vector<std::uint64_t>> count_;
};

/// f(n, l). Throws DomainError unless 1 <= n <= 200.
BoundResult best_pair(unsigned n, Characteristic l, const Catalog& catalog = Catalog::paper(),
                      unsigned sig = 3);

std::vector<BoundResult> bound_table(Characteristic l, unsigned n_from, unsigned n_to,
                                     const Catalog& catalog = Catalog::paper(),
                                     unsigned sig = 3);

struct ThresholdResult {
  unsigned l = 0;
  unsigned n0 = 0;
  unsigned window_end = 0;
  /// Largest n below n0 where f(n, l) exceeds the generic bound.
  std::optional<BoundResult> last_failure;
};

/// Least n0 with f(n, l) equal to the generic bound for all n in
/// [n0, window_end]. Throws NotFoundError when even window_end fails.
ThresholdResult threshold(Characteristic l, unsigned window_end = 150,
                          const Catalog& catalog = Catalog::paper());

}  // namespace jmb
