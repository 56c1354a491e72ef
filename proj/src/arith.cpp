#include "gradorder/arith.hpp"

#include <sstream>
#include <stdexcept>

namespace gradorder {

Integer round_div(const Integer& num, const Integer& den) {
  // floor((2*num + den) / (2*den)) for den > 0
  Integer n = num;
  Integer d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Integer twice = 2 * n + d;
  Integer q = twice / (2 * d);
  if (twice % (2 * d) != 0 && twice < 0) q -= 1;
  return q;
}

GaussInt gauss_quotient(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
  GaussInt num = a * b.conj();
  Integer den = b.norm();
  return GaussInt(round_div(num.re(), den), round_div(num.im(), den));
}

GaussInt gauss_remainder(const GaussInt& a, const GaussInt& b) {
  return a - gauss_quotient(a, b) * b;
}

bool gauss_divides(const GaussInt& b, const GaussInt& a) {
  if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
  GaussInt num = a * b.conj();
  Integer den = b.norm();
  return num.re() % den == 0 && num.im() % den == 0;
}

GaussInt gauss_exact_div(const GaussInt& a, const GaussInt& b) {
  if (!gauss_divides(b, a)) {
    throw std::domain_error(to_string(b) + " does not divide " + to_string(a));
  }
  GaussInt num = a * b.conj();
  Integer den = b.norm();
  return GaussInt(num.re() / den, num.im() / den);
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = gauss_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Integer norm(const GaussInt& x) { return x.norm(); }

bool is_unit(const GaussInt& x) { return x.norm() == 1; }

std::string to_string(const GaussInt& x) {
  std::ostringstream os;
  const Integer& re = x.re();
  const Integer& im = x.im();
  if (im == 0) {
    os << re;
    return os.str();
  }
  if (re != 0) os << re;
  if (im > 0 && re != 0) os << '+';
  if (im == -1) {
    os << '-';
  } else if (im != 1) {
    os << im;
  }
  os << 'i';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& x) { return os << to_string(x); }

}  // namespace gradorder
