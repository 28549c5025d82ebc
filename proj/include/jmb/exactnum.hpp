#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jmb {

/// Arbitrary-precision natural number. Every bound value in the engine is a
/// Nat; there is no rounding anywhere on the computation path.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Nat(mpz_class v);

  /// Parses a plain decimal string (digits only).
  static Nat parse(std::string_view decimal);

  const mpz_class& mpz() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;
  std::size_t bit_length() const noexcept;
  std::size_t decimal_digits() const;
  std::string to_string() const;

  Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
  Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
  friend Nat operator+(Nat a, const Nat& b) { a += b; return a; }
  friend Nat operator*(Nat a, const Nat& b) { a *= b; return a; }

  friend bool operator==(const Nat& a, const Nat& b) noexcept { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) noexcept {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.to_string(); }

/// Largest argument `factorial` accepts.
inline constexpr unsigned kFactorialCap = 10000;

/// Exact n!. Throws ResourceError above kFactorialCap.
Nat factorial(std::uint64_t n);

/// Exact base^exp with 0^0 = 1.
Nat power(const Nat& base, std::uint64_t exp);

/// Orders x against k! without materialising k! when k is large: the
/// running product stops as soon as it passes x. Works for any k.
std::strong_ordering compare_with_factorial(const Nat& x, std::uint64_t k);

/// Scientific approximation with round-half-up at the last kept digit.
struct SciApprox {
  std::string mantissa;  // "d.dd", sig significant digits
  int exponent10 = 0;

  std::string str() const { return mantissa + "e" + std::to_string(exponent10); }
  friend bool operator==(const SciApprox&, const SciApprox&) = default;
};

/// x >= 1, sig >= 1. Throws DomainError for x = 0.
SciApprox sci_string(const Nat& x, unsigned sig = 3);

/// Natural log of x, accurate to double precision for any size.
double log_nat(const Nat& x);

/// alpha with f = n^alpha (n+2)!. f >= 1, n >= 2.
double alpha_exponent(const Nat& f, unsigned n);

}  // namespace jmb
