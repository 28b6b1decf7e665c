#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "metric_lines/rational.hpp"

namespace metric_lines {

struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("64-bit rational overflow") {}
};

// Exact rational on 64-bit integers. Every operation that would overflow
// throws RationalOverflow instead of wrapping, so results are either exact or
// absent.
class SmallRational {
 public:
  constexpr SmallRational() = default;
  constexpr SmallRational(std::int64_t value) : num_(value) {}  // NOLINT: implicit like int -> mpq

  static SmallRational from(const Rational& value) {
    if (!value.get_num().fits_slong_p() || !value.get_den().fits_slong_p()) throw RationalOverflow();
    return make(value.get_num().get_si(), value.get_den().get_si());
  }

  Rational to_rational() const {
    Rational out(static_cast<long>(num_), static_cast<unsigned long>(den_));
    out.canonicalize();
    return out;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend int sgn(const SmallRational& a) { return (a.num_ > 0) - (a.num_ < 0); }

  friend SmallRational operator-(const SmallRational& a) {
    if (a.num_ == INT64_MIN) throw RationalOverflow();
    return raw(-a.num_, a.den_);
  }

  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t bd = b.den_ / g;
    std::int64_t left, right, num, den;
    if (__builtin_mul_overflow(a.num_, bd, &left) || __builtin_mul_overflow(b.num_, a.den_ / g, &right) ||
        __builtin_add_overflow(left, right, &num) || __builtin_mul_overflow(a.den_, bd, &den))
      throw RationalOverflow();
    return make(num, den);
  }

  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) { return a + (-b); }

  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    if (a.num_ == 0 || b.num_ == 0) return {};
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    std::int64_t num, den;
    if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &num) ||
        __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &den))
      throw RationalOverflow();
    return raw(num, den);
  }

  SmallRational inverse() const {
    if (num_ == 0) throw std::domain_error("division by zero");
    if (num_ == INT64_MIN) throw RationalOverflow();
    return num_ > 0 ? raw(den_, num_) : raw(-den_, -num_);
  }

  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) { return a * b.inverse(); }

  SmallRational& operator+=(const SmallRational& b) { return *this = *this + b; }
  SmallRational& operator-=(const SmallRational& b) { return *this = *this - b; }
  SmallRational& operator*=(const SmallRational& b) { return *this = *this * b; }

  friend bool operator==(const SmallRational&, const SmallRational&) = default;

  friend bool operator<(const SmallRational& a, const SmallRational& b) {
    __int128 left = static_cast<__int128>(a.num_) * b.den_;
    __int128 right = static_cast<__int128>(b.num_) * a.den_;
    return left < right;
  }
  friend bool operator>(const SmallRational& a, const SmallRational& b) { return b < a; }
  friend bool operator<=(const SmallRational& a, const SmallRational& b) { return !(b < a); }
  friend bool operator>=(const SmallRational& a, const SmallRational& b) { return !(a < b); }

 private:
  static constexpr SmallRational raw(std::int64_t num, std::int64_t den) {
    SmallRational out;
    out.num_ = num;
    out.den_ = den;
    return out;
  }

  static SmallRational make(std::int64_t num, std::int64_t den) {
    if (den < 0) {
      if (num == INT64_MIN || den == INT64_MIN) throw RationalOverflow();
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return g > 1 ? raw(num / g, den / g) : raw(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace metric_lines
