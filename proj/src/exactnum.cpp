#include "jmb/exactnum.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "jmb/errors.hpp"

namespace jmb {

namespace {

// Memo window: every factorial the verification grids touch directly.
constexpr unsigned kMemoLimit = 160;

const std::array<mpz_class, kMemoLimit + 1>& factorial_memo() {
  static const auto memo = [] {
    std::array<mpz_class, kMemoLimit + 1> m;
    m[0] = 1;
    for (unsigned i = 1; i <= kMemoLimit; ++i) m[i] = m[i - 1] * i;
    return m;
  }();
  return memo;
}

}  // namespace

Nat::Nat(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}

Nat::Nat(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw DomainError("Nat cannot hold a negative value");
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty()) throw ParseError(0, "empty number");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw ParseError(0, "not a decimal natural: '" + std::string(decimal) + "'");
    }
  }
  return Nat(mpz_class(std::string(decimal), 10));
}

bool Nat::fits_u64() const noexcept { return v_.fits_ulong_p(); }

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw DomainError("value does not fit in 64 bits");
  return v_.get_ui();
}

std::size_t Nat::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t Nat::decimal_digits() const { return to_string().size(); }

std::string Nat::to_string() const { return v_.get_str(10); }

Nat factorial(std::uint64_t n) {
  if (n > kFactorialCap) {
    throw ResourceError("factorial argument " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kFactorialCap));
  }
  if (n <= kMemoLimit) return Nat(factorial_memo()[n]);
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Nat(std::move(r));
}

Nat power(const Nat& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), static_cast<unsigned long>(exp));
  return Nat(std::move(r));
}

std::strong_ordering compare_with_factorial(const Nat& x, std::uint64_t k) {
  if (k <= kFactorialCap) return x <=> factorial(k);
  mpz_class acc = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    acc *= static_cast<unsigned long>(i);
    if (cmp(acc, x.mpz()) > 0) return std::strong_ordering::less;
  }
  return x <=> Nat(acc);
}

SciApprox sci_string(const Nat& x, unsigned sig) {
  if (x.is_zero()) throw DomainError("sci_string: x must be >= 1");
  if (sig == 0) throw DomainError("sci_string: need at least one significant digit");
  const std::string digits = x.to_string();
  int exponent = static_cast<int>(digits.size()) - 1;

  std::string kept;
  if (digits.size() <= sig) {
    kept = digits + std::string(sig - digits.size(), '0');
  } else {
    kept = digits.substr(0, sig);
    if (digits[sig] >= '5') {
      int i = static_cast<int>(sig) - 1;
      for (; i >= 0; --i) {
        if (kept[i] == '9') {
          kept[i] = '0';
        } else {
          ++kept[i];
          break;
        }
      }
      if (i < 0) {  // 9.99 -> 10.0
        kept = "1" + kept.substr(0, sig - 1);
        ++exponent;
      }
    }
  }

  SciApprox out;
  out.mantissa = kept.substr(0, 1);
  if (sig > 1) out.mantissa += "." + kept.substr(1);
  out.exponent10 = exponent;
  return out;
}

double log_nat(const Nat& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double lead = mpz_get_d_2exp(&exp2, x.mpz().get_mpz_t());
  return std::log(lead) + static_cast<double>(exp2) * std::log(2.0);
}

double alpha_exponent(const Nat& f, unsigned n) {
  if (f.is_zero()) throw DomainError("alpha_exponent: f must be >= 1");
  if (n < 2) throw DomainError("alpha_exponent: n must be >= 2");
  return (log_nat(f) - log_nat(factorial(n + 2))) / std::log(static_cast<double>(n));
}

}  // namespace jmb
