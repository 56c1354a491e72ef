#pragma once

#include "gradorder/cocycle.hpp"

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace gradorder {

using Rational = boost::rational<Exponent>;

/// Element (a, g) of n^-1 Z x G; a is kept as its numerator over the fixed denominator n.
struct StgElement {
  Exponent numerator = 0;
  Elem g = 0;

  friend bool operator==(const StgElement&, const StgElement&) = default;
};

/// The spectrally twisted group n^-1 Z x G with one product M_P per relevant
/// prime, together with the multiplicative maps psi_P built from a fixed gamma.
class StgContext {
 public:
  StgContext(KTable k, GammaTable gamma);

  const KTable& k() const { return k_; }
  const GammaTable& gamma() const { return gamma_; }
  const MaternalPowers& a() const { return a_; }
  const RelevantPrimes& primes() const { return k_.primes(); }
  const FiniteGroup& group() const { return k_.primes().group; }
  Exponent n() const { return k_.primes().n(); }

  StgElement make(Rational a, Elem g) const;

  /// i(a) = (a, e)
  StgElement embed(Rational a) const { return make(a, group().identity()); }
  Elem theta(const StgElement& x) const { return x.g; }
  Rational value(const StgElement& x) const { return Rational(x.numerator, n()); }

  /// M_P[(a,g),(b,h)] = (a + b + k_P(g,h), gh)
  StgElement multiply(int p, const StgElement& x, const StgElement& y) const;

  /// (^P x, x)_P = e
  StgElement left_inverse(int p, const StgElement& x) const;
  /// (x, x^P)_P = e
  StgElement right_inverse(int p, const StgElement& x) const;

  /// psi_P(a,g) = a + gamma_P(g)/n
  Rational psi(int p, const StgElement& x) const;

  /// s_P(g) = (a_P(g), g), the unique lift with 0 <= psi_P < 1.
  StgElement section(int p, Elem g) const;

  /// ((s_P(g), s_{Pg}(h))_P, s_P(gh)^P)_P, which must land on (m_P(g,h), e).
  Exponent m_via_stg(int p, Elem g, Elem h) const;

  /// Every element with a in [-bound, bound] (step 1/n), for law checks.
  std::vector<StgElement> sample(int bound) const;

 private:
  KTable k_;
  GammaTable gamma_;
  MaternalPowers a_;
};

struct LawResult {
  std::string law;
  bool pass;
  long cases;
  std::string counterexample;
};

/// Runs the STG and STMM identities over relevant primes x G x a in [-bound, bound].
std::vector<LawResult> check_stg_laws(const StgContext& ctx, int bound = 3);

}  // namespace gradorder
