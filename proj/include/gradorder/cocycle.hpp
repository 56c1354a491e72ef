#pragma once

#include "gradorder/group.hpp"
#include "gradorder/ideal.hpp"
#include "gradorder/spec_model.hpp"

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradorder {

using ExponentMatrix = Eigen::Matrix<Exponent, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when a computed quantity contradicts a proven identity
/// (e.g. a maternal 2-cocycle value outside {0,1}).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite set of primes closed under the right action P.g of G.
///
/// `ideals` is empty for synthetic (exponent-level) instances; everything
/// downstream of k only needs the action table.
struct RelevantPrimes {
  FiniteGroup group;
  std::vector<PrimeIdeal> ideals;
  std::vector<std::string> names;    // "P1" or "<2+i>"
  std::vector<std::string> written;  // generator as the user wrote it, e.g. "1-2i"
  std::vector<std::vector<int>> action;  // action[p][g] = index of p.g

  int size() const { return static_cast<int>(action.size()); }
  int n() const { return group.order(); }
  int act(int p, Elem g) const { return action[p][g]; }

  /// True when every prime is fixed by every group element.
  bool action_is_trivial() const;

  /// Throws std::invalid_argument unless `action` is a right action of `group`.
  void check_action() const;
};

using PrimesPtr = std::shared_ptr<const RelevantPrimes>;

/// Map (P, g) -> exponent, stored as a primes x |G| matrix.
class PrimeFunction {
 public:
  PrimeFunction() = default;
  explicit PrimeFunction(PrimesPtr primes)
      : primes_(std::move(primes)), values_(ExponentMatrix::Zero(primes_->size(), primes_->n())) {}
  PrimeFunction(PrimesPtr primes, ExponentMatrix values);

  Exponent operator()(int p, Elem g) const { return values_(p, g); }
  Exponent& operator()(int p, Elem g) { return values_(p, g); }

  const ExponentMatrix& values() const { return values_; }
  ExponentMatrix& values() { return values_; }
  const RelevantPrimes& primes() const { return *primes_; }
  const PrimesPtr& primes_ptr() const { return primes_; }

  friend bool operator==(const PrimeFunction& a, const PrimeFunction& b) { return a.values_ == b.values_; }
  friend bool operator<(const PrimeFunction& a, const PrimeFunction& b);

 private:
  PrimesPtr primes_;
  ExponentMatrix values_;
};

/// Map (P, g, h) -> exponent, one |G| x |G| matrix per prime (rows = g).
class CocycleTable {
 public:
  CocycleTable() = default;
  explicit CocycleTable(PrimesPtr primes);

  Exponent operator()(int p, Elem g, Elem h) const { return tables_[p](g, h); }
  Exponent& operator()(int p, Elem g, Elem h) { return tables_[p](g, h); }

  const ExponentMatrix& matrix(int p) const { return tables_[p]; }
  const RelevantPrimes& primes() const { return *primes_; }
  const PrimesPtr& primes_ptr() const { return primes_; }

  friend bool operator==(const CocycleTable& a, const CocycleTable& b) { return a.tables_ == b.tables_; }

 private:
  PrimesPtr primes_;
  std::vector<ExponentMatrix> tables_;
};

using KTable = CocycleTable;
using MTable = CocycleTable;
using GammaTable = PrimeFunction;
using MaternalPowers = PrimeFunction;

/// Primes dividing some alpha(g,h), closed under the action, sorted by (norm, re, im).
PrimesPtr relevant_primes(const CGRSpec& spec);

/// k_P(g,h) = exponent of P in the principal ideal D alpha(g,h).
KTable k_table(const CGRSpec& spec);
KTable k_table(const CGRSpec& spec, PrimesPtr primes);

/// First (P,g,h,t) violating k_P(g,h) + k_P(gh,t) = k_{Pg}(h,t) + k_P(g,ht).
struct CocycleViolation {
  int p;
  Elem g, h, t;
};
std::optional<CocycleViolation> find_cocycle_violation(const CocycleTable& k);
bool validate_k(const CocycleTable& k);

/// (delta f)_P(g,h) = f_P(g) + f_{Pg}(h) - f_P(gh).
CocycleTable coboundary(const PrimeFunction& f);

/// n k = delta gamma, gamma_P(e) = 0, 0 <= gamma_P(g) <= n k_P(g,g^-1).
bool is_admissible_gamma(const KTable& k, const GammaTable& gamma);

/// gamma_P(g) = sum_t k_P(g,t).
GammaTable gamma_rowsum(const KTable& k);

/// Every admissible gamma, in lexicographic order of (prime, element).
std::vector<GammaTable> gamma_enumerate(const KTable& k);

/// a_P(g) = -floor(gamma_P(g) / n).
MaternalPowers maternal_powers(const GammaTable& gamma);

/// m_P(g,h) = a_P(g) + a_{Pg}(h) - a_P(gh) + k_P(g,h). Throws ConsistencyError
/// if a value falls outside {0,1}.
MTable m_table(const KTable& k, const MaternalPowers& a);

/// k'_P(g,h) + lambda_P(gh) = k_P(g,h) + lambda_P(g) + lambda_{Pg}(h) for all P,g,h.
bool is_equivalence_witness(const CocycleTable& k, const CocycleTable& kprime, const PrimeFunction& lambda);

/// For a trivial prime action the witness l with
/// m'(g,h) + l(gh) = m(g,h) + l(g) + l(h) is unique; returns it when it exists.
std::optional<PrimeFunction> solve_invariant_witness(const CocycleTable& mprime, const CocycleTable& m);

}  // namespace gradorder
