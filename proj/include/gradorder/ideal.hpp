#pragma once

#include "gradorder/arith.hpp"

#include <map>
#include <string>
#include <utility>

namespace gradorder {

/// Coefficient ring D of the crystalline graded ring.
enum class BaseRing { Z, ZI };

/// Automorphisms of D supported by the input format.
enum class Automorphism { identity, conjugation };

std::string to_string(BaseRing ring);
std::string to_string(Automorphism f);

Automorphism compose(Automorphism f, Automorphism g);

GaussInt apply_automorphism(Automorphism f, const GaussInt& x);

/// Nonzero prime ideal of D, stored by its canonical generator.
///
/// For Z[i] the generator has re > 0 and im >= 0; for Z it is a positive
/// rational prime. Two PrimeIdeals are equal iff their generators are.
class PrimeIdeal {
 public:
  PrimeIdeal() = default;

  /// Canonicalises `generator`; does not test primality.
  PrimeIdeal(BaseRing ring, const GaussInt& generator);

  const GaussInt& generator() const { return generator_; }
  BaseRing ring() const { return ring_; }

  /// Cardinality of D/P.
  const Integer& norm() const { return norm_; }

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.ring_ == b.ring_ && a.generator_ == b.generator_;
  }

  /// Order by (norm, re, im) of the canonical generator.
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

 private:
  BaseRing ring_ = BaseRing::ZI;
  GaussInt generator_;
  Integer norm_{0};
};

/// "<a+bi>" using the canonical generator.
std::string to_string(const PrimeIdeal& p);

struct AssociateForm {
  GaussInt unit;
  GaussInt canonical;
};

/// canonical = unit * x with the canonical-associate rule of `ring`.
/// Throws std::invalid_argument for x = 0.
AssociateForm canonical_associate(const GaussInt& x, BaseRing ring = BaseRing::ZI);

struct IdealFactorization {
  std::map<PrimeIdeal, Exponent> exponents;
  GaussInt unit{1};

  /// unit * prod generator^exponent
  GaussInt expand() const;
};

/// Factor the principal ideal generated by x into canonical prime ideals.
/// Throws std::invalid_argument for x = 0 or a non-real x over Z.
IdealFactorization factor_principal(const GaussInt& x, BaseRing ring = BaseRing::ZI);

/// Right action of an automorphism on Spec D: P.f is generated by f^-1(gen P).
/// Both supported automorphisms are involutions.
PrimeIdeal act_on_prime(const PrimeIdeal& p, Automorphism f);

bool is_unit(const GaussInt& x, BaseRing ring);

}  // namespace gradorder
