#include "gradorder/orders.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gradorder {

GradedOrder::GradedOrder(KTable k, PrimeFunction r) : k_(std::move(k)), r_(std::move(r)) {
  for (int p = 0; p < primes().size(); ++p) {
    if (r_(p, 0) != 0) throw std::invalid_argument("r_P(e) must be 0");
  }
}

Exponent GradedOrder::t(int p, Elem g, Elem h) const {
  const auto& R = primes();
  return r_(p, g) + r_(R.act(p, g), h) - r_(p, R.group.mul(g, h)) + k_(p, g, h);
}

CocycleTable GradedOrder::t_table() const {
  CocycleTable out = coboundary(r_);
  for (int p = 0; p < primes().size(); ++p) {
    for (Elem g = 0; g < primes().n(); ++g) {
      for (Elem h = 0; h < primes().n(); ++h) out(p, g, h) += k_(p, g, h);
    }
  }
  return out;
}

OrderPredicates predicates(const GradedOrder& T) {
  OrderPredicates out{true, true, (T.r().values().array() <= 0).all()};
  const auto t = T.t_table();
  for (int p = 0; p < T.primes().size(); ++p) {
    const auto& tp = t.matrix(p);
    out.is_order = out.is_order && (tp.array() >= 0).all();
    out.is_unital = out.is_unital && (tp.array() >= 0).all() && (tp.array() <= 1).all();
  }
  return out;
}

bool is_strongly_graded(const GradedOrder& T) {
  const auto& R = T.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      if (T.t(p, g, R.group.inv(g)) != 0) return false;
    }
  }
  return true;
}

GradedOrder trivial_order(const KTable& k) { return GradedOrder(k, PrimeFunction(k.primes_ptr())); }

GradedOrder maternal_order(const KTable& k, const MaternalPowers& a) { return GradedOrder(k, a); }

bool leq(const GradedOrder& t1, const GradedOrder& t2) {
  if (!(t1.k() == t2.k()) || t1.primes().ideals != t2.primes().ideals) {
    throw std::invalid_argument("orders belong to different rings");
  }
  return (t2.r().values().array() <= t1.r().values().array()).all();
}

GammaTable gamma_from_order(const GradedOrder& T) {
  auto pred = predicates(T);
  if (!pred.is_unital || !pred.contains_A) {
    throw std::invalid_argument("gamma_from_order needs a unital order containing A");
  }
  const auto& R = T.primes();
  const auto t = T.t_table();
  ExponentMatrix gamma(R.size(), R.n());
  for (int p = 0; p < R.size(); ++p) {
    gamma.row(p) = t.matrix(p).rowwise().sum().transpose() - R.n() * T.r().values().row(p);
  }
  return GammaTable(T.r().primes_ptr(), std::move(gamma));
}

OrderSet::OrderSet(std::vector<GradedOrder> orders) {
  for (auto& T : orders) insert(T);
}

void OrderSet::insert(const GradedOrder& T) {
  auto it = std::lower_bound(orders_.begin(), orders_.end(), T);
  if (it != orders_.end() && *it == T) return;
  orders_.insert(it, T);
}

void OrderSet::merge(const OrderSet& other) {
  for (const auto& T : other.orders_) insert(T);
}

bool OrderSet::contains(const GradedOrder& T) const {
  return std::binary_search(orders_.begin(), orders_.end(), T);
}

OrderSet maximal_elements(const OrderSet& set) {
  OrderSet out;
  for (const auto& T : set.orders()) {
    bool dominated = std::any_of(set.orders().begin(), set.orders().end(),
                                 [&](const GradedOrder& S) { return !(S == T) && leq(T, S); });
    if (!dominated) out.insert(T);
  }
  return out;
}

std::vector<MaternalEntry> maternal_orders(const KTable& k) {
  std::vector<MaternalEntry> out;
  for (const auto& gamma : gamma_enumerate(k)) {
    auto a = maternal_powers(gamma);
    GradedOrder M = maternal_order(k, a);
    auto it = std::lower_bound(out.begin(), out.end(), M,
                               [](const MaternalEntry& e, const GradedOrder& T) { return e.order < T; });
    if (it != out.end() && it->order == M) {
      it->gammas.push_back(gamma);
      continue;
    }
    out.insert(it, MaternalEntry{M, {gamma}, m_table(k, a)});
  }
  return out;
}

OrderSet maximal_via_gamma(const KTable& k) {
  OrderSet maternal;
  for (const auto& entry : maternal_orders(k)) maternal.insert(entry.order);
  return maximal_elements(maternal);
}

OrderSet maximal_via_gamma(const CGRSpec& spec) { return maximal_via_gamma(k_table(spec)); }

OrderSet maximal_oracle(const GradedOrder& maternal) {
  const auto& R = maternal.primes();
  std::vector<Couple> kappa;
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 1; g < R.n(); ++g) kappa.push_back({p, g});
  }
  if (kappa.size() > 24) throw std::invalid_argument("reduction box too large for exhaustive search");

  OrderSet orders;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kappa.size()); ++mask) {
    PrimeFunction r = maternal.r();
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      if (mask >> i & 1U) r(kappa[i].p, kappa[i].g) -= 1;
    }
    GradedOrder T(maternal.k(), std::move(r));
    if (predicates(T).is_order) orders.insert(T);
  }
  return maximal_elements(orders);
}

RefinementState::RefinementState(const GradedOrder& maternal)
    : maternal_(maternal), m_(maternal.t_table()), status_(maternal.primes().size() * maternal.primes().n(), 0) {
  if (!predicates(maternal).is_unital) throw std::invalid_argument("refinement starts from a unital order");
  const auto& R = maternal.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      if (m_(p, g, R.group.inv(g)) == 0) add_V({p, g});
    }
  }
}

std::vector<Couple> RefinementState::open() const {
  std::vector<Couple> out;
  const int n = maternal_.primes().n();
  for (int i = 0; i < static_cast<int>(status_.size()); ++i) {
    if (status_[i] == 0) out.push_back({i / n, i % n});
  }
  return out;
}

std::vector<Couple> RefinementState::U() const {
  std::vector<Couple> out;
  const int n = maternal_.primes().n();
  for (int i = 0; i < static_cast<int>(status_.size()); ++i) {
    if (status_[i] == 1) out.push_back({i / n, i % n});
  }
  return out;
}

GradedOrder RefinementState::order() const {
  PrimeFunction r = maternal_.r();
  for (const auto& c : U()) r(c.p, c.g) -= 1;
  return GradedOrder(maternal_.k(), std::move(r));
}

Investigation investigate(const RefinementState& state, Couple candidate) {
  const auto& R = state.maternal().primes();
  const auto& G = R.group;
  const auto& m = state.m();

  std::set<Couple> U;
  std::set<Couple> V;
  std::set<Couple> W;
  for (const auto& c : state.U()) U.insert(c);
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      if (state.in_V({p, g})) V.insert({p, g});
    }
  }

  std::deque<Couple> pending{candidate};
  std::set<Couple> done;
  while (!pending.empty()) {
    Couple x = pending.front();
    pending.pop_front();
    if (!done.insert(x).second) continue;
    const auto [P, g] = x;
    U.insert(x);
    // its partner in t_P(g, g^-1) can no longer be reduced
    V.insert({R.act(P, g), G.inv(g)});

    auto want = [&](Couple w) {
      W.insert(w);
      if (!done.count(w)) pending.push_back(w);
    };
    // (P,g) as second factor: t_Q(h,g) with Q = P.h^-1
    for (Elem h = 0; h < R.n(); ++h) {
      const int Q = R.act(P, G.inv(h));
      const Couple first{Q, h};
      const Couple product{Q, G.mul(h, g)};
      if (m(Q, h, g) == 1) {
        if (U.count(first)) want(product);
      } else {
        V.insert(first);
        want(product);
      }
    }
    // (P,g) as first factor: t_P(g,h)
    for (Elem h = 0; h < R.n(); ++h) {
      const Couple second{R.act(P, g), h};
      const Couple product{P, G.mul(g, h)};
      if (m(P, g, h) == 1) {
        if (U.count(second)) want(product);
      } else {
        V.insert(second);
        want(product);
      }
    }
  }

  Investigation inv{candidate, {U.begin(), U.end()}, {V.begin(), V.end()}, {W.begin(), W.end()}, {}};
  for (const auto& c : U) {
    if (V.count(c)) inv.conflicts.push_back(c);
  }
  for (const auto& c : W) {
    if (V.count(c) && !U.count(c)) inv.conflicts.push_back(c);
  }
  return inv;
}

void apply(RefinementState& state, const Investigation& inv) {
  if (!inv.accepted()) {
    state.add_V(inv.candidate);
    return;
  }
  for (const auto& c : inv.U) state.add_U(c);
  for (const auto& c : inv.W) state.add_U(c);
  for (const auto& c : inv.V) state.add_V(c);
}

OrderSet maximal_via_refinement(const GradedOrder& maternal) {
  OrderSet out;
  std::set<std::vector<char>> seen;

  auto explore = [&](auto&& self, RefinementState state) -> void {
    std::vector<Investigation> accepted;
    for (const auto& c : state.open()) {
      auto inv = investigate(state, c);
      if (inv.accepted()) {
        accepted.push_back(std::move(inv));
      } else {
        // rejection only depends on couples already committed, so it holds in every branch below
        apply(state, inv);
      }
    }
    if (!seen.insert(state.key()).second) return;
    if (accepted.empty()) {
      out.insert(state.order());
      return;
    }
    for (const auto& inv : accepted) {
      RefinementState next = state;
      apply(next, inv);
      self(self, std::move(next));
    }
  };
  explore(explore, RefinementState(maternal));
  return out;
}

std::optional<GradedOrder> invariant_case(const KTable& k) {
  if (!k.primes().action_is_trivial()) return std::nullopt;
  auto entries = maternal_orders(k);
  if (entries.size() != 1) {
    throw ConsistencyError("invariant prime action but " + std::to_string(entries.size()) + " maternal orders");
  }
  return entries.front().order;
}

GradedOrder conjugate_order(const GradedOrder& T, Elem g) {
  const auto& R = T.primes();
  const auto& G = R.group;
  const auto& k = T.k();
  PrimeFunction r(T.r().primes_ptr());
  for (int p = 0; p < R.size(); ++p) {
    for (Elem x = 0; x < R.n(); ++x) {
      const Elem y = G.conj_by(g, x);
      r(p, x) = T.r(R.act(p, g), y) + k(p, g, y) - k(p, x, g);
    }
  }
  return GradedOrder(k, std::move(r));
}

std::vector<OrbitEntry> conjugation_orbit(const GradedOrder& T) {
  std::vector<OrbitEntry> out;
  for (Elem g = 0; g < T.primes().n(); ++g) {
    GradedOrder C = conjugate_order(T, g);
    bool contains = predicates(C).contains_A;
    out.push_back({g, std::move(C), contains});
  }
  return out;
}

OrbitGraph orbit_walk(const GradedOrder& T, int depth) {
  OrbitGraph graph;
  std::vector<int> level;
  auto node_of = [&](const GradedOrder& S, int d) {
    auto it = std::find(graph.nodes.begin(), graph.nodes.end(), S);
    if (it != graph.nodes.end()) return static_cast<int>(it - graph.nodes.begin());
    graph.nodes.push_back(S);
    graph.contains_A.push_back(predicates(S).contains_A);
    level.push_back(d);
    return static_cast<int>(graph.nodes.size()) - 1;
  };
  node_of(T, 0);
  for (int i = 0; i < static_cast<int>(graph.nodes.size()); ++i) {
    if (level[i] >= depth) continue;
    for (Elem g = 0; g < T.primes().n(); ++g) {
      GradedOrder image = conjugate_order(graph.nodes[i], g);
      int j = node_of(image, level[i] + 1);
      graph.edges.push_back({i, g, j});
    }
  }
  return graph;
}

}  // namespace gradorder
