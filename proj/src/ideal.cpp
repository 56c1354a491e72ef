#include "gradorder/ideal.hpp"

#include <stdexcept>
#include <vector>

namespace gradorder {

std::string to_string(BaseRing ring) { return ring == BaseRing::Z ? "Z" : "ZI"; }

std::string to_string(Automorphism f) { return f == Automorphism::identity ? "id" : "conj"; }

Automorphism compose(Automorphism f, Automorphism g) {
  return f == g ? Automorphism::identity : Automorphism::conjugation;
}

GaussInt apply_automorphism(Automorphism f, const GaussInt& x) {
  return f == Automorphism::identity ? x : x.conj();
}

AssociateForm canonical_associate(const GaussInt& x, BaseRing ring) {
  if (x.is_zero()) throw std::invalid_argument("zero has no associate class");
  if (ring == BaseRing::Z) {
    if (!x.is_real()) throw std::invalid_argument("non-real element " + to_string(x) + " over Z");
    return x.re() > 0 ? AssociateForm{GaussInt(1), x} : AssociateForm{GaussInt(-1), -x};
  }
  const GaussInt units[4] = {GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)};
  for (const auto& u : units) {
    GaussInt c = u * x;
    if (c.re() > 0 && c.im() >= 0) return {u, c};
  }
  throw std::logic_error("no canonical associate for " + to_string(x));
}

PrimeIdeal::PrimeIdeal(BaseRing ring, const GaussInt& generator)
    : ring_(ring), generator_(canonical_associate(generator, ring).canonical) {
  norm_ = ring == BaseRing::Z ? generator_.re() : generator_.norm();
}

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
  if (a.norm_ != b.norm_) return a.norm_ < b.norm_;
  return a.generator_ < b.generator_;
}

std::string to_string(const PrimeIdeal& p) { return "<" + to_string(p.generator()) + ">"; }

GaussInt IdealFactorization::expand() const {
  GaussInt acc = unit;
  for (const auto& [prime, e] : exponents) acc *= pow(prime.generator(), static_cast<unsigned long>(e));
  return acc;
}

namespace {

std::vector<std::pair<Integer, int>> factor_integer(Integer m) {
  std::vector<std::pair<Integer, int>> out;
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// t with t^2 = -1 mod p, for a prime p = 1 mod 4
Integer sqrt_minus_one(const Integer& p) {
  for (Integer c = 2; c < p; ++c) {
    if (boost::multiprecision::powm(c, (p - 1) / 2, p) == p - 1) {
      return boost::multiprecision::powm(c, (p - 1) / 4, p);
    }
  }
  throw std::logic_error("no quadratic non-residue found");
}

Exponent strip(GaussInt& x, const GaussInt& pi) {
  Exponent e = 0;
  while (gauss_divides(pi, x)) {
    x = gauss_exact_div(x, pi);
    ++e;
  }
  return e;
}

}  // namespace

IdealFactorization factor_principal(const GaussInt& x, BaseRing ring) {
  if (x.is_zero()) throw std::invalid_argument("zero has no prime factorization");
  IdealFactorization out;
  GaussInt rest = x;

  if (ring == BaseRing::Z) {
    if (!x.is_real()) throw std::invalid_argument("non-real element " + to_string(x) + " over Z");
    Integer m = abs(x.re());
    for (const auto& [p, e] : factor_integer(m)) out.exponents[PrimeIdeal(ring, GaussInt(p))] = e;
    out.unit = GaussInt(x.re() > 0 ? 1 : -1);
    return out;
  }

  for (const auto& [p, e] : factor_integer(x.norm())) {
    std::vector<GaussInt> pis;
    if (p == 2) {
      pis.emplace_back(1, 1);
    } else if (p % 4 == 3) {
      pis.emplace_back(p);
    } else {
      GaussInt pi = canonical_associate(gauss_gcd(GaussInt(p), GaussInt(sqrt_minus_one(p), 1))).canonical;
      pis.push_back(pi);
      pis.push_back(canonical_associate(pi.conj()).canonical);
    }
    for (const auto& pi : pis) {
      Exponent k = strip(rest, pi);
      if (k > 0) out.exponents[PrimeIdeal(ring, pi)] = k;
    }
  }
  if (!is_unit(rest)) throw std::logic_error("incomplete factorization of " + to_string(x));
  out.unit = rest;
  return out;
}

PrimeIdeal act_on_prime(const PrimeIdeal& p, Automorphism f) {
  // both automorphisms are involutions, so f^-1 = f
  return PrimeIdeal(p.ring(), apply_automorphism(f, p.generator()));
}

bool is_unit(const GaussInt& x, BaseRing ring) {
  if (ring == BaseRing::Z) return x.is_real() && abs(x.re()) == 1;
  return is_unit(x);
}

}  // namespace gradorder
