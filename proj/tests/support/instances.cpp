#include "support/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gradorder::testkit {

const std::vector<FiniteGroup>& small_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> out;
    for (int n = 1; n <= 4; ++n) out.push_back(FiniteGroup::cyclic(n));
    out.push_back(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    return out;
  }();
  return groups;
}

std::vector<std::vector<std::vector<int>>> right_actions(const FiniteGroup& G, int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int n = G.order();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> choice(n, 0);  // choice[g] indexes perms; perms[0] is the identity
  while (true) {
    std::vector<std::vector<int>> action(m, std::vector<int>(n));
    for (int p = 0; p < m; ++p) {
      for (Elem g = 0; g < n; ++g) action[p][g] = perms[choice[g]][p];
    }
    bool ok = choice[0] == 0;
    for (int p = 0; p < m && ok; ++p) {
      for (Elem g = 0; g < n && ok; ++g) {
        for (Elem h = 0; h < n && ok; ++h) ok = action[action[p][g]][h] == action[p][G.mul(g, h)];
      }
    }
    if (ok) out.push_back(std::move(action));

    int i = 1;
    while (i < n && ++choice[i] == static_cast<int>(perms.size())) choice[i++] = 0;
    if (i >= n) break;
  }
  return out;
}

PrimesPtr synthetic_primes(const FiniteGroup& G, std::vector<std::vector<int>> action) {
  auto R = std::make_shared<RelevantPrimes>();
  R->group = G;
  R->action = std::move(action);
  for (int p = 0; p < R->size(); ++p) {
    R->names.push_back("Q" + std::to_string(p));
    R->written.push_back("Q" + std::to_string(p));
  }
  R->check_action();
  return R;
}

ExponentMatrix carry_cocycle(const FiniteGroup& G) {
  const int n = G.order();
  ExponentMatrix c = ExponentMatrix::Zero(n, n);
  if (G.is_cyclic_form()) {
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) c(g, h) = g + h >= n ? 1 : 0;
    }
  } else if (n == 4) {
    // Z2 x Z2 in lexicographic order: first coordinate is g / 2
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) c(g, h) = (g / 2 == 1 && h / 2 == 1) ? 1 : 0;
    }
  }
  return c;
}

namespace {

std::vector<int> orbit_ids(const RelevantPrimes& R) {
  std::vector<int> id(R.size(), -1);
  int next = 0;
  for (int p = 0; p < R.size(); ++p) {
    if (id[p] >= 0) continue;
    for (Elem g = 0; g < R.n(); ++g) id[R.act(p, g)] = next;
    ++next;
  }
  return id;
}

const std::vector<std::vector<std::vector<int>>>& cached_actions(int group_index, int m) {
  static std::map<std::pair<int, int>, std::vector<std::vector<std::vector<int>>>> cache;
  auto key = std::make_pair(group_index, m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, right_actions(small_groups()[group_index], m)).first;
  return it->second;
}

}  // namespace

SyntheticInstance InstanceGenerator::next() { return draw(false); }
SyntheticInstance InstanceGenerator::next_invariant() { return draw(true); }

SyntheticInstance InstanceGenerator::draw(bool invariant) {
  const auto& groups = small_groups();
  while (true) {
    const int gi = uniform(invariant ? 1 : 0, static_cast<int>(groups.size()) - 1);
    const FiniteGroup& G = groups[gi];
    const int m = uniform(1, 3);
    std::vector<std::vector<int>> action;
    if (invariant) {
      action.assign(m, std::vector<int>(G.order()));
      for (int p = 0; p < m; ++p) std::fill(action[p].begin(), action[p].end(), p);
    } else {
      const auto& all = cached_actions(gi, m);
      action = all[uniform(0, static_cast<int>(all.size()) - 1)];
    }
    PrimesPtr R = synthetic_primes(G, action);

    PrimeFunction f(R);
    for (int p = 0; p < R->size(); ++p) {
      for (Elem g = 1; g < G.order(); ++g) f(p, g) = uniform(-2, 2);
    }
    KTable k = coboundary(f);
    const auto orbit = orbit_ids(*R);
    std::vector<int> c(R->size());
    for (auto& x : c) x = uniform(0, 3);
    const ExponentMatrix carry = carry_cocycle(G);
    bool nonnegative = true;
    for (int p = 0; p < R->size(); ++p) {
      for (Elem g = 0; g < G.order(); ++g) {
        for (Elem h = 0; h < G.order(); ++h) {
          k(p, g, h) += c[orbit[p]] * carry(g, h);
          nonnegative = nonnegative && k(p, g, h) >= 0;
        }
      }
    }
    if (!nonnegative) continue;

    std::string desc = "|G|=" + std::to_string(G.order()) + (G.is_cyclic_form() ? " cyclic" : " klein") +
                       " primes=" + std::to_string(m) + " action=";
    for (const auto& row : action) {
      desc += "[";
      for (int x : row) desc += std::to_string(x);
      desc += "]";
    }
    return {std::move(k), std::move(desc)};
  }
}

}  // namespace gradorder::testkit
