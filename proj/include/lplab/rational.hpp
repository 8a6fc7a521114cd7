#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "lplab/errors.hpp"

namespace lplab {

// Exact fraction with a positive denominator in lowest terms.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
  }
  constexpr std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
  }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Rational max(Rational a, Rational b) { return a < b ? b : a; }

}  // namespace lplab
