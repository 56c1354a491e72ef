#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace gradorder {

using Integer = boost::multiprecision::cpp_int;

/// Exponent of a prime in a (fractional) ideal.
using Exponent = std::int64_t;

/// Element re + im*i of Z[i] over an exact integer type.
template <class Int>
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Int re, Int im = Int(0)) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(int re) : re_(re), im_(0) {}

  static Gaussian unit_i() { return Gaussian(Int(0), Int(1)); }

  const Int& re() const { return re_; }
  const Int& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Int norm() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Int r = re_ * o.re_ - im_ * o.im_;
    Int i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic on (re, im); only used for deterministic containers.
  friend bool operator<(const Gaussian& a, const Gaussian& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Int re_{0};
  Int im_{0};
};

using GaussInt = Gaussian<Integer>;

template <class Int>
Gaussian<Int> pow(Gaussian<Int> base, unsigned long exp) {
  Gaussian<Int> result(1);
  while (exp > 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

/// Nearest-integer rounding of num/den, ties toward +infinity.
Integer round_div(const Integer& num, const Integer& den);

/// Euclidean quotient in Z[i] (rounded to the nearest lattice point).
GaussInt gauss_quotient(const GaussInt& a, const GaussInt& b);
GaussInt gauss_remainder(const GaussInt& a, const GaussInt& b);

/// True iff b divides a in Z[i]. b must be nonzero.
bool gauss_divides(const GaussInt& b, const GaussInt& a);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
GaussInt gauss_exact_div(const GaussInt& a, const GaussInt& b);

GaussInt gauss_gcd(GaussInt a, GaussInt b);

Integer norm(const GaussInt& x);

/// A unit of Z[i] is an element of norm one.
bool is_unit(const GaussInt& x);

/// "a+bi", "a-bi", "a", "bi" with no spaces; coefficient 1 is elided ("i", "-i", "2-i").
std::string to_string(const GaussInt& x);

std::ostream& operator<<(std::ostream& os, const GaussInt& x);

}  // namespace gradorder
