#include "jmb/pair_search.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "jmb/errors.hpp"
#include "jmb/shape.hpp"

namespace jmb {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

Nat block_value(const Nat& index, unsigned t) { return power(index, t) * factorial(t); }

}  // namespace

std::string SaturatedPair::shape() const { return format_shape(*this); }

Nat pair_value(const SaturatedPair& pair) {
  Nat v(1);
  for (const auto& b : pair.blocks) v *= block_value(b.entry.index, b.t);
  return v;
}

void validate_pair(const SaturatedPair& pair, const Catalog& catalog) {
  const Characteristic l(pair.l);
  std::set<unsigned> seen;
  std::uint64_t dim = 0;
  for (const auto& b : pair.blocks) {
    if (b.t < 1) throw ValidationError("block multiplicity must be >= 1");
    if (!seen.insert(b.entry.degree).second) {
      throw ValidationError("subdegree " + std::to_string(b.entry.degree) + " repeated");
    }
    const auto expected = catalog.constituent(l, b.entry.degree);
    if (!expected) {
      throw ValidationError("no constituent of subdegree " + std::to_string(b.entry.degree) +
                            " in characteristic " + std::to_string(pair.l));
    }
    if (!(*expected == b.entry)) {
      throw ValidationError("block of subdegree " + std::to_string(b.entry.degree) +
                            " does not match the catalog entry " + expected->label);
    }
    dim += static_cast<std::uint64_t>(b.entry.degree) * b.t;
  }
  if (dim != pair.n) {
    throw ValidationError("blocks sum to " + std::to_string(dim) + ", expected " +
                          std::to_string(pair.n));
  }
}

std::vector<std::string> BoundResult::shapes() const {
  std::vector<std::string> out;
  for (const auto& p : argmax) out.push_back(p.shape());
  return out;
}

PairSolver::PairSolver(Characteristic l, unsigned n_max, const Catalog& catalog)
    : l_(l), n_max_(n_max) {
  if (n_max < 1 || n_max > kMaxPairDegree) {
    throw DomainError("pair search degree must be in 1..200, got " + std::to_string(n_max));
  }
  entries_.resize(n_max + 1);
  best_.assign(n_max + 1, std::vector<Nat>(n_max + 1, Nat(0)));
  count_.assign(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
  best_[0][0] = Nat(1);
  count_[0][0] = 1;

  for (unsigned m = 1; m <= n_max; ++m) {
    entries_[m] = catalog.constituent(l, m);
    auto& cur = best_[m];
    auto& cnt = count_[m];
    cur = best_[m - 1];
    cnt = count_[m - 1];
    if (!entries_[m]) continue;
    const Nat& index = entries_[m]->index;
    for (unsigned t = 1; t * m <= n_max; ++t) {
      const Nat factor = block_value(index, t);
      for (unsigned r = t * m; r <= n_max; ++r) {
        const Nat& prev = best_[m - 1][r - t * m];
        if (prev.is_zero()) continue;
        const Nat v = prev * factor;
        if (v > cur[r]) {
          cur[r] = v;
          cnt[r] = count_[m - 1][r - t * m];
        } else if (v == cur[r]) {
          cnt[r] = saturating_add(cnt[r], count_[m - 1][r - t * m]);
        }
      }
    }
  }
}

const Nat& PairSolver::value(unsigned n) const {
  if (n < 1 || n > n_max_) throw DomainError("degree outside solver window");
  return best_[n_max_][n];
}

std::uint64_t PairSolver::tie_count(unsigned n) const {
  if (n < 1 || n > n_max_) throw DomainError("degree outside solver window");
  return count_[n_max_][n];
}

void PairSolver::collect(unsigned m, unsigned rest, std::vector<Block>& path,
                         std::vector<SaturatedPair>& out, unsigned n) const {
  if (out.size() >= kTieCap) return;
  if (m == 0) {
    if (rest == 0) out.push_back(SaturatedPair{n, l_.value(), path});
    return;
  }
  const Nat& target = best_[m][rest];
  if (entries_[m]) {
    for (unsigned t = rest / m; t >= 1; --t) {
      const Nat& prev = best_[m - 1][rest - t * m];
      if (prev.is_zero() || prev * block_value(entries_[m]->index, t) != target) continue;
      path.push_back(Block{*entries_[m], t});
      collect(m - 1, rest - t * m, path, out, n);
      path.pop_back();
    }
  }
  if (best_[m - 1][rest] == target) collect(m - 1, rest, path, out, n);
}

BoundResult PairSolver::result(unsigned n, unsigned sig) const {
  BoundResult r;
  r.n = n;
  r.l = l_.value();
  r.value = value(n);
  r.value_sci = sci_string(r.value, sig);
  r.tie_count = tie_count(n);
  std::vector<Block> path;
  // Only subdegrees <= n can appear.
  collect(n, n, path, r.argmax, n);
  if (r.value == generic_bound(n, l_)) r.flags.push_back("generic");
  if (r.tie_count > 1) r.flags.push_back("ties=" + std::to_string(r.tie_count));
  if (r.tie_count > r.argmax.size()) r.flags.push_back("argmax-truncated");
  return r;
}

BoundResult best_pair(unsigned n, Characteristic l, const Catalog& catalog, unsigned sig) {
  if (n < 1 || n > kMaxPairDegree) {
    throw DomainError("degree must be in 1..200, got " + std::to_string(n));
  }
  return PairSolver(l, n, catalog).result(n, sig);
}

std::vector<BoundResult> bound_table(Characteristic l, unsigned n_from, unsigned n_to,
                                     const Catalog& catalog, unsigned sig) {
  if (n_from < 1 || n_from > n_to || n_to > kMaxPairDegree) {
    throw DomainError("table range must satisfy 1 <= from <= to <= 200");
  }
  const PairSolver solver(l, n_to, catalog);
  std::vector<BoundResult> rows;
  for (unsigned n = n_from; n <= n_to; ++n) rows.push_back(solver.result(n, sig));
  return rows;
}

ThresholdResult threshold(Characteristic l, unsigned window_end, const Catalog& catalog) {
  if (window_end < 1 || window_end > kMaxPairDegree) {
    throw DomainError("threshold window must end in 1..200");
  }
  const PairSolver solver(l, window_end, catalog);
  unsigned last_bad = 0;
  for (unsigned n = window_end; n >= 1; --n) {
    if (solver.value(n) != generic_bound(n, l)) {
      last_bad = n;
      break;
    }
  }
  if (last_bad == window_end) {
    throw NotFoundError("no threshold for characteristic " + std::to_string(l.value()) +
                        " within window ending at " + std::to_string(window_end));
  }
  ThresholdResult out;
  out.l = l.value();
  out.n0 = last_bad + 1;
  out.window_end = window_end;
  if (last_bad > 0) out.last_failure = solver.result(last_bad);
  return out;
}

}  // namespace jmb
