#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ame {

// Exact fraction over int64 with normalized sign and gcd; the proof
// arithmetic stays tiny, the 128-bit intermediate products are plenty.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t value) : num(value), den(1) {}  // NOLINT(runtime/explicit)
  Rational(int64_t n, int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mul64(a.num, b.den) + mul64(b.num, a.den),
                    mul64(a.den, b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mul64(a.num, b.den) - mul64(b.num, a.den),
                    mul64(a.den, b.den));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mul64(a.num, b.num), mul64(a.den, b.den));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return Rational(mul64(a.num, b.den), mul64(a.den, b.num));
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  static int64_t mul64(int64_t a, int64_t b) {
    __int128 wide = static_cast<__int128>(a) * b;
    if (wide > INT64_MAX || wide < INT64_MIN) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<int64_t>(wide);
  }
};

// 2^e as an exact fraction, e may be negative.
inline Rational pow2_rational(int e) {
  if (e >= 0) {
    if (e > 62) throw std::overflow_error("2^e too large");
    return Rational(int64_t{1} << e);
  }
  if (e < -62) throw std::overflow_error("2^e too small");
  return Rational(1, int64_t{1} << (-e));
}

inline int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace ame
