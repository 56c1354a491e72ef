#pragma once

#include "gradorder/cocycle.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gradorder {

/// Graded order T = (+)_g I_g u_g with I_g = prod_P P^{r_P(g)}, stored as its
/// exponent table r over the relevant primes (every other prime has exponent 0).
class GradedOrder {
 public:
  GradedOrder(KTable k, PrimeFunction r);

  const KTable& k() const { return k_; }
  const PrimeFunction& r() const { return r_; }
  Exponent r(int p, Elem g) const { return r_(p, g); }
  const RelevantPrimes& primes() const { return k_.primes(); }

  /// t_P(g,h) = r_P(g) + r_{Pg}(h) - r_P(gh) + k_P(g,h)
  Exponent t(int p, Elem g, Elem h) const;
  CocycleTable t_table() const;

  friend bool operator==(const GradedOrder& a, const GradedOrder& b) { return a.r_ == b.r_; }
  friend bool operator<(const GradedOrder& a, const GradedOrder& b) { return a.r_ < b.r_; }

 private:
  KTable k_;
  PrimeFunction r_;
};

struct OrderPredicates {
  bool is_order;
  bool is_unital;
  bool contains_A;
};

OrderPredicates predicates(const GradedOrder& T);

/// t_P(g,g^-1) = 0 for every P, g.
bool is_strongly_graded(const GradedOrder& T);

/// A itself: r = 0.
GradedOrder trivial_order(const KTable& k);

/// r = a.
GradedOrder maternal_order(const KTable& k, const MaternalPowers& a);

/// T1 is contained in T2, i.e. r2 <= r1 pointwise. Throws std::invalid_argument
/// if the orders belong to different rings.
bool leq(const GradedOrder& t1, const GradedOrder& t2);

/// gamma_P(x) = sum_z t_P(x,z) - n r_P(x). Requires T unital and containing A.
GammaTable gamma_from_order(const GradedOrder& T);

/// Deduplicated orders in canonical (lexicographic r-table) order.
class OrderSet {
 public:
  OrderSet() = default;
  explicit OrderSet(std::vector<GradedOrder> orders);

  void insert(const GradedOrder& T);
  void merge(const OrderSet& other);

  const std::vector<GradedOrder>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  bool contains(const GradedOrder& T) const;
  const GradedOrder& operator[](std::size_t i) const { return orders_[i]; }

  friend bool operator==(const OrderSet& a, const OrderSet& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<GradedOrder> orders_;
};

/// Maximal elements under inclusion.
OrderSet maximal_elements(const OrderSet& set);

/// A distinct maternal order with every gamma producing it.
struct MaternalEntry {
  GradedOrder order;
  std::vector<GammaTable> gammas;
  MTable m;
};

/// Maternal orders over all admissible gamma, deduplicated, canonical order.
std::vector<MaternalEntry> maternal_orders(const KTable& k);

/// Maximal graded orders containing A: the maximal maternal orders.
OrderSet maximal_via_gamma(const KTable& k);
OrderSet maximal_via_gamma(const CGRSpec& spec);

/// Brute force over r_P(g) in {a_P(g)-1, a_P(g)} above a maternal order.
OrderSet maximal_oracle(const GradedOrder& maternal);

/// Couple (P, g), the unit of the reduction search.
struct Couple {
  int p;
  Elem g;
  friend bool operator==(const Couple&, const Couple&) = default;
  friend auto operator<=>(const Couple&, const Couple&) = default;
};

/// Committed state of the reduction search above a maternal order M:
/// U couples get r = a - 1, V couples keep r = a.
class RefinementState {
 public:
  explicit RefinementState(const GradedOrder& maternal);

  const GradedOrder& maternal() const { return maternal_; }
  const MTable& m() const { return m_; }

  bool in_U(Couple c) const { return status_[index(c)] == 1; }
  bool in_V(Couple c) const { return status_[index(c)] == 2; }
  void add_U(Couple c) { status_[index(c)] = 1; }
  void add_V(Couple c) { status_[index(c)] = 2; }

  /// Couples in neither U nor V.
  std::vector<Couple> open() const;
  std::vector<Couple> U() const;

  GradedOrder order() const;

  const std::vector<char>& key() const { return status_; }

 private:
  int index(Couple c) const { return c.p * maternal_.primes().n() + c.g; }

  GradedOrder maternal_;
  MTable m_;
  std::vector<char> status_;  // 0 open, 1 U, 2 V
};

/// Result of investigating one candidate: the union of the U, V and W sets of
/// its full tree, and the couples where they collide.
struct Investigation {
  Couple candidate;
  std::vector<Couple> U;
  std::vector<Couple> V;
  std::vector<Couple> W;
  std::vector<Couple> conflicts;

  bool accepted() const { return conflicts.empty(); }
};

Investigation investigate(const RefinementState& state, Couple candidate);

/// Commits an accepted investigation (or puts a rejected candidate into V).
void apply(RefinementState& state, const Investigation& inv);

/// The U/V/W reduction search above a maternal order, branching over every
/// order in which candidates can be committed.
OrderSet maximal_via_refinement(const GradedOrder& maternal);

/// When every relevant prime is fixed by G, the maternal order (independent of
/// gamma) is the unique maximal order containing A. nullopt otherwise.
std::optional<GradedOrder> invariant_case(const KTable& k);

/// Psi_g(T) = u_g T u_g^-1:
/// r~_P(x) = r_{Pg}(g^-1 x g) + k_P(g, g^-1 x g) - k_P(x, g).
GradedOrder conjugate_order(const GradedOrder& T, Elem g);

struct OrbitEntry {
  Elem by;
  GradedOrder order;
  bool contains_A;
};

/// Psi_g(T) for every g.
std::vector<OrbitEntry> conjugation_orbit(const GradedOrder& T);

/// Orders reachable from T by at most `depth` conjugations, with edges
/// node --Psi_g--> node. Composites Psi_h Psi_g differ from Psi_hg by the scalar
/// alpha(h,g), so the full closure can be infinite; the walk is depth-bounded.
struct OrbitGraph {
  std::vector<GradedOrder> nodes;
  std::vector<bool> contains_A;
  struct Edge {
    int from;
    Elem by;
    int to;
  };
  std::vector<Edge> edges;
};

OrbitGraph orbit_walk(const GradedOrder& T, int depth = 2);

}  // namespace gradorder
