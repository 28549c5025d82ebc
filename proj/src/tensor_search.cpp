#include "jmb/tensor_search.hpp"

#include <algorithm>

#include "jmb/errors.hpp"

namespace jmb {

namespace {

// Factors are added with strictly increasing r, so each set is produced once.
void extend(unsigned min_r, unsigned rest, std::vector<TensorFactor>& current,
            std::vector<TensorConfig>& out) {
  TensorConfig config;
  config.factors.assign(current.rbegin(), current.rend());
  out.push_back(std::move(config));
  for (unsigned r = min_r; r <= rest; ++r) {
    if (rest % r != 0) continue;
    unsigned l = 1;
    for (unsigned q = r; rest % q == 0; q *= r, ++l) {
      current.push_back({r, l});
      extend(r + 1, rest / q, current, out);
      current.pop_back();
      if (q > rest / r) break;
    }
  }
}

}  // namespace

std::uint64_t TensorConfig::dimension() const {
  std::uint64_t d = 1;
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.l; ++i) d *= f.r;
  }
  return d;
}

std::string TensorConfig::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ',';
    s += "(" + std::to_string(factors[i].r) + "," + std::to_string(factors[i].l) + ")";
  }
  return s + "}";
}

std::vector<TensorConfig> enumerate_tensor_configs(unsigned n) {
  if (n < 1 || n > kMaxTensorDegree) {
    throw DomainError("tensor search degree must be in 1..200, got " + std::to_string(n));
  }
  std::vector<TensorConfig> out;
  std::vector<TensorFactor> current;
  extend(2, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Nat tensor_value(const TensorConfig& config, Characteristic l, const Catalog& catalog) {
  Nat v(1);
  for (const auto& f : config.factors) {
    v *= power(catalog.N_bound(f.r, l), f.l) * factorial(f.l);
  }
  return v;
}

PrimitiveResult primitive_bound(unsigned n, Characteristic l, const Catalog& catalog) {
  if (n < 2) throw DomainError("primitive_bound needs n >= 2");
  PrimitiveResult result;
  result.n = n;
  result.l = l.value();
  result.value = Nat(0);
  for (auto& config : enumerate_tensor_configs(n)) {
    const Nat v = tensor_value(config, l, catalog);
    if (v > result.value) {
      result.value = v;
      result.argmax.clear();
    }
    if (v == result.value) result.argmax.push_back(std::move(config));
  }
  if (l.divides(n + 1)) result.flags.push_back("attainability=unknown");
  return result;
}

}  // namespace jmb
