#include "gradorder/orders.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gradorder;
using gradorder::testkit::InstanceGenerator;

namespace {

std::string fixture(const std::string& name) { return std::string(GRADORDER_FIXTURE_DIR) + "/" + name; }

int prime_index(const RelevantPrimes& R, const std::string& name) {
  auto it = std::find(R.names.begin(), R.names.end(), name);
  if (it == R.names.end()) throw std::out_of_range("no prime " + name);
  return static_cast<int>(it - R.names.begin());
}

/// Order from r rows given for P1, P2, P3.
GradedOrder order_p123(const KTable& k, std::initializer_list<std::initializer_list<Exponent>> rows) {
  PrimeFunction r(k.primes_ptr());
  const char* names[] = {"P1", "P2", "P3"};
  int i = 0;
  for (const auto& row : rows) {
    const int p = prime_index(k.primes(), names[i++]);
    Elem g = 0;
    for (Exponent v : row) r(p, g++) = v;
  }
  return GradedOrder(k, r);
}

OrderSet refine_all(const KTable& k) {
  OrderSet out;
  for (const auto& e : maternal_orders(k)) out.merge(maximal_via_refinement(e.order));
  return maximal_elements(out);
}

OrderSet oracle_all(const KTable& k) {
  OrderSet out;
  for (const auto& e : maternal_orders(k)) out.merge(maximal_oracle(e.order));
  return maximal_elements(out);
}

struct Example3 {
  KTable k = k_table(load_spec(fixture("ex3.cgr")));
  GradedOrder MA = order_p123(k, {{0, -1, -1, -1}, {0, 0, -1, -1}, {0, -2, -1, -2}});
  GradedOrder MB = order_p123(k, {{0, 0, -1, 0}, {0, -1, -1, -2}, {0, -2, -1, -2}});
  GradedOrder L = order_p123(k, {{0, 0, -1, 0}, {0, 0, -1, -1}, {0, -2, -1, -2}});
};

}  // namespace

TEST(GradedOrder, RequiresTrivialIdentityComponent) {
  KTable k = k_table(load_spec(fixture("ex2.cgr")));
  PrimeFunction r(k.primes_ptr());
  r(0, 0) = -1;
  EXPECT_THROW(GradedOrder(k, r), std::invalid_argument);
}

TEST(GradedOrder, PredicatesOfA) {
  KTable k = k_table(load_spec(fixture("ex1.cgr")));
  auto pred = predicates(trivial_order(k));
  EXPECT_TRUE(pred.is_order);
  EXPECT_TRUE(pred.contains_A);
  EXPECT_FALSE(pred.is_unital);  // k_P3(1,1) = 2
}

TEST(GradedOrder, TTableMatchesPointwiseFormula) {
  Example3 ex;
  auto t = ex.MA.t_table();
  const auto& R = ex.k.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < 4; ++g) {
      for (Elem h = 0; h < 4; ++h) EXPECT_EQ(t(p, g, h), ex.MA.t(p, g, h));
    }
  }
}

TEST(Leq, InclusionReversesExponents) {
  Example3 ex;
  EXPECT_TRUE(leq(ex.L, ex.MA));
  EXPECT_TRUE(leq(ex.L, ex.MB));
  EXPECT_FALSE(leq(ex.MA, ex.L));
  EXPECT_FALSE(leq(ex.MA, ex.MB));
  EXPECT_FALSE(leq(ex.MB, ex.MA));
  EXPECT_TRUE(leq(trivial_order(ex.k), ex.L));
  EXPECT_TRUE(leq(ex.MA, ex.MA));
}

TEST(Leq, DifferentRingsAreIncomparable) {
  KTable k1 = k_table(load_spec(fixture("ex1.cgr")));
  KTable k3 = k_table(load_spec(fixture("ex3.cgr")));
  EXPECT_THROW(leq(trivial_order(k1), trivial_order(k3)), std::invalid_argument);
}

TEST(OrderSet, DeduplicatesAndSorts) {
  Example3 ex;
  OrderSet s({ex.L, ex.MB, ex.MA, ex.L});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(std::is_sorted(s.orders().begin(), s.orders().end()));
  EXPECT_TRUE(s.contains(ex.MB));
  EXPECT_EQ(maximal_elements(s), OrderSet({ex.MA, ex.MB}));
}

TEST(Maternal, Example1) {
  KTable k = k_table(load_spec(fixture("ex1.cgr")));
  auto entries = maternal_orders(k);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].order, order_p123(k, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, -1}}));
  EXPECT_TRUE(predicates(entries[0].order).is_unital);
}

TEST(Maternal, Example2HasThreeOrders) {
  KTable k = k_table(load_spec(fixture("ex2.cgr")));
  EXPECT_EQ(maternal_orders(k).size(), 3u);
}

TEST(Maternal, Example3CollapsesFiveGammas) {
  Example3 ex;
  auto entries = maternal_orders(ex.k);
  ASSERT_EQ(entries.size(), 3u);
  std::vector<GradedOrder> orders;
  std::size_t gamma_total = 0;
  for (const auto& e : entries) {
    orders.push_back(e.order);
    gamma_total += e.gammas.size();
    if (e.order == ex.L) EXPECT_EQ(e.gammas.size(), 3u);
  }
  EXPECT_EQ(gamma_total, 5u);
  EXPECT_EQ(OrderSet(orders), OrderSet({ex.MA, ex.MB, ex.L}));
}

TEST(Maximal, Example1MaternalOrderIsMaximal) {
  KTable k = k_table(load_spec(fixture("ex1.cgr")));
  OrderSet expected({maternal_orders(k).front().order});
  EXPECT_EQ(maximal_via_gamma(k), expected);
  EXPECT_EQ(refine_all(k), expected);
  EXPECT_EQ(oracle_all(k), expected);
}

TEST(Maximal, Example2GivesTwoStronglyGradedOrders) {
  KTable k = k_table(load_spec(fixture("ex2.cgr")));
  const auto& R = k.primes();
  PrimeFunction r1(k.primes_ptr()), r2(k.primes_ptr());
  r1(prime_index(R, "P1"), 1) = -1;
  r2(prime_index(R, "P2"), 1) = -1;
  OrderSet expected({GradedOrder(k, r1), GradedOrder(k, r2)});
  EXPECT_EQ(maximal_via_gamma(k), expected);
  EXPECT_EQ(refine_all(k), expected);
  EXPECT_EQ(oracle_all(k), expected);
  for (const auto& T : expected.orders()) EXPECT_TRUE(is_strongly_graded(T));
}

TEST(Maximal, Example3) {
  Example3 ex;
  OrderSet expected({ex.MA, ex.MB});
  EXPECT_EQ(maximal_via_gamma(ex.k), expected);
  EXPECT_EQ(refine_all(ex.k), expected);
  EXPECT_EQ(oracle_all(ex.k), expected);
  // refinement above L reaches both
  EXPECT_EQ(maximal_via_refinement(ex.L), expected);
}

TEST(Maximal, AgreesWithExhaustiveSearchOverAllOrdersContainingA) {
  for (const char* name : {"ex1.cgr", "ex2.cgr", "ex3.cgr", "invariant_z2.cgr", "trivial_zi.cgr"}) {
    KTable k = k_table(load_spec(fixture(name)));
    auto all = testkit::orders_containing_A(k);
    ASSERT_TRUE(all.has_value()) << name;
    EXPECT_EQ(maximal_elements(*all), maximal_via_gamma(k)) << name;
  }
  InstanceGenerator gen(404);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    auto inst = gen.next();
    auto all = testkit::orders_containing_A(inst.k, 20000);
    if (!all) continue;
    ++checked;
    EXPECT_EQ(maximal_elements(*all), maximal_via_gamma(inst.k)) << inst.description;
  }
  EXPECT_GT(checked, 60);
}

TEST(Maximal, IdealsAreClosedOnGaussianIntegers) {
  for (const char* name : {"ex1.cgr", "ex2.cgr", "ex3.cgr", "invariant_z2.cgr"}) {
    CGRSpec spec = load_spec(fixture(name));
    KTable k = k_table(spec);
    for (const auto& e : maternal_orders(k)) {
      auto failure = testkit::ideal_closure_failure(spec, e.order);
      EXPECT_FALSE(failure.has_value()) << name << ": " << failure.value_or("");
    }
    for (const OrderSet maximal = maximal_via_gamma(k); const auto& T : maximal.orders()) {
      EXPECT_FALSE(testkit::ideal_closure_failure(spec, T).has_value()) << name;
    }
  }
}

TEST(Maximal, OverReducedOrderIsNotClosed) {
  CGRSpec spec = load_spec(fixture("ex2.cgr"));
  KTable k = k_table(spec);
  PrimeFunction r(k.primes_ptr());
  r(0, 1) = -1;
  r(1, 1) = -1;
  GradedOrder T(k, r);
  EXPECT_FALSE(predicates(T).is_order);
  EXPECT_TRUE(testkit::ideal_closure_failure(spec, T).has_value());
}

TEST(Refinement, Example1CandidateConflictsAtP2Of2) {
  KTable k = k_table(load_spec(fixture("ex1.cgr")));
  RefinementState state(maternal_orders(k).front().order);
  const auto& R = k.primes();
  const int p1 = prime_index(R, "P1");
  const int p2 = prime_index(R, "P2");
  const int p3 = prime_index(R, "P3");
  // V starts as the couples with m_P(g,g^-1) = 0
  for (Elem g = 0; g < 4; ++g) EXPECT_TRUE(state.in_V({p3, g}));
  EXPECT_TRUE(state.in_V({p1, 1}));
  EXPECT_FALSE(state.in_V({p1, 2}));
  EXPECT_FALSE(state.in_V({p2, 2}));
  Investigation inv = investigate(state, {p1, 3});
  EXPECT_FALSE(inv.accepted());
  EXPECT_NE(std::find(inv.conflicts.begin(), inv.conflicts.end(), Couple{p2, 2}), inv.conflicts.end());
  apply(state, inv);
  EXPECT_TRUE(state.in_V({p1, 3}));
}

TEST(Refinement, Example2FirstChoiceBlocksTheOther) {
  KTable k = k_table(load_spec(fixture("ex2.cgr")));
  const auto entries = maternal_orders(k);
  // the maternal order with a = 0 is the published one
  auto it = std::find_if(entries.begin(), entries.end(),
                         [](const MaternalEntry& e) { return (e.order.r().values().array() == 0).all(); });
  ASSERT_NE(it, entries.end());
  RefinementState state(it->order);
  Investigation inv = investigate(state, {0, 1});
  ASSERT_TRUE(inv.accepted());
  apply(state, inv);
  EXPECT_TRUE(state.in_U({0, 1}));
  EXPECT_TRUE(state.in_V({1, 1}));
  EXPECT_TRUE(state.open().empty());
}

TEST(Refinement, MethodsAgreeOnRandomInstances) {
  InstanceGenerator gen(8080);
  for (int i = 0; i < 120; ++i) {
    auto inst = gen.next();
    OrderSet g = maximal_via_gamma(inst.k);
    EXPECT_EQ(refine_all(inst.k), g) << inst.description;
    EXPECT_EQ(oracle_all(inst.k), g) << inst.description;
  }
}

TEST(GammaFromOrder, RoundTripsOnMaximalOrders) {
  auto check = [](const KTable& k, const std::string& what) {
    for (const OrderSet maximal = maximal_via_gamma(k); const auto& T : maximal.orders()) {
      ASSERT_TRUE(predicates(T).is_unital) << what;
      GammaTable gamma = gamma_from_order(T);
      EXPECT_TRUE(is_admissible_gamma(k, gamma)) << what;
      EXPECT_EQ(maternal_powers(gamma), T.r()) << what;
    }
  };
  for (const char* name : {"ex1.cgr", "ex2.cgr", "ex3.cgr", "invariant_z2.cgr", "trivial_zi.cgr"}) {
    check(k_table(load_spec(fixture(name))), name);
  }
  InstanceGenerator gen(17);
  for (int i = 0; i < 100; ++i) {
    auto inst = gen.next();
    check(inst.k, inst.description);
  }
}

TEST(GammaFromOrder, Example2Values) {
  KTable k = k_table(load_spec(fixture("ex2.cgr")));
  PrimeFunction r(k.primes_ptr());
  r(prime_index(k.primes(), "P1"), 1) = -1;
  GammaTable gamma = gamma_from_order(GradedOrder(k, r));
  EXPECT_EQ(gamma(prime_index(k.primes(), "P1"), 1), 2);
  EXPECT_EQ(gamma(prime_index(k.primes(), "P2"), 1), 0);
}

TEST(GammaFromOrder, RejectsOrdersNotContainingA) {
  Example3 ex;
  GradedOrder far = conjugate_order(conjugate_order(ex.MA, 1), 3);
  ASSERT_FALSE(predicates(far).contains_A);
  EXPECT_THROW(gamma_from_order(far), std::invalid_argument);
}

TEST(Invariant, FixtureHasOneMaximalOrder) {
  KTable k = k_table(load_spec(fixture("invariant_z2.cgr")));
  auto shortcut = invariant_case(k);
  ASSERT_TRUE(shortcut.has_value());
  EXPECT_EQ(shortcut->r(0, 1), -1);
  OrderSet expected({*shortcut});
  EXPECT_EQ(maximal_via_gamma(k), expected);
  EXPECT_EQ(refine_all(k), expected);
  EXPECT_EQ(oracle_all(k), expected);
}

TEST(Invariant, NotApplicableWhenPrimesMove) {
  EXPECT_FALSE(invariant_case(k_table(load_spec(fixture("ex1.cgr")))).has_value());
}

TEST(Invariant, ShortcutMatchesPipeline) {
  InstanceGenerator gen(55);
  for (int i = 0; i < 80; ++i) {
    auto inst = gen.next_invariant();
    auto shortcut = invariant_case(inst.k);
    ASSERT_TRUE(shortcut.has_value()) << inst.description;
    EXPECT_EQ(OrderSet({*shortcut}), maximal_via_gamma(inst.k)) << inst.description;
    EXPECT_EQ(OrderSet({*shortcut}), refine_all(inst.k)) << inst.description;
  }
}

TEST(Conjugation, Example3Identities) {
  Example3 ex;
  EXPECT_EQ(conjugate_order(ex.MA, 0), ex.MA);
  EXPECT_EQ(conjugate_order(ex.MA, 3), ex.MA);
  EXPECT_EQ(conjugate_order(ex.MA, 1), ex.MB);
  EXPECT_EQ(conjugate_order(ex.MB, 1), ex.MA);
  GradedOrder far = conjugate_order(conjugate_order(ex.MA, 1), 3);
  EXPECT_FALSE(predicates(far).contains_A);
  EXPECT_TRUE(predicates(far).is_order);
}

TEST(Conjugation, InvolutionsOnEveryOrderContainingA) {
  Example3 ex;
  auto all = testkit::orders_containing_A(ex.k);
  ASSERT_TRUE(all.has_value());
  for (const auto& T : all->orders()) {
    EXPECT_EQ(conjugate_order(conjugate_order(T, 1), 1), T);
    EXPECT_EQ(conjugate_order(conjugate_order(T, 3), 3), T);
    EXPECT_TRUE(predicates(conjugate_order(T, 1)).is_order);
  }
}

TEST(Conjugation, PreservesMaximality) {
  // Psi_g is an automorphism of the ambient algebra, so maximal orders map to
  // maximal orders; those still containing A must be in the maximal set.
  for (const char* name : {"ex1.cgr", "ex2.cgr", "ex3.cgr"}) {
    KTable k = k_table(load_spec(fixture(name)));
    OrderSet maximal = maximal_via_gamma(k);
    for (const auto& T : maximal.orders()) {
      for (Elem g = 0; g < k.primes().n(); ++g) {
        GradedOrder C = conjugate_order(T, g);
        if (predicates(C).contains_A) EXPECT_TRUE(maximal.contains(C)) << name;
      }
    }
  }
}

TEST(Conjugation, OrbitWalkLeavesA) {
  Example3 ex;
  OrbitGraph graph = orbit_walk(ex.MA, 2);
  ASSERT_GE(graph.nodes.size(), 3u);
  EXPECT_EQ(graph.nodes[0], ex.MA);
  EXPECT_NE(std::find(graph.contains_A.begin(), graph.contains_A.end(), false), graph.contains_A.end());
  EXPECT_EQ(orbit_walk(ex.MA, 0).nodes.size(), 1u);
  auto orbit = conjugation_orbit(ex.MA);
  ASSERT_EQ(orbit.size(), 4u);
  EXPECT_EQ(orbit[1].order, ex.MB);
  EXPECT_TRUE(orbit[1].contains_A);
}
