#include "gradorder/cocycle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gradorder {

bool RelevantPrimes::action_is_trivial() const {
  for (int p = 0; p < size(); ++p) {
    for (Elem g = 0; g < n(); ++g) {
      if (act(p, g) != p) return false;
    }
  }
  return true;
}

void RelevantPrimes::check_action() const {
  for (int p = 0; p < size(); ++p) {
    if (static_cast<int>(action[p].size()) != n()) throw std::invalid_argument("action row has wrong length");
    if (act(p, group.identity()) != p) throw std::invalid_argument("identity does not fix every prime");
    for (Elem g = 0; g < n(); ++g) {
      for (Elem h = 0; h < n(); ++h) {
        if (act(act(p, g), h) != act(p, group.mul(g, h))) {
          throw std::invalid_argument("prime action is not a right action");
        }
      }
    }
  }
}

PrimeFunction::PrimeFunction(PrimesPtr primes, ExponentMatrix values)
    : primes_(std::move(primes)), values_(std::move(values)) {
  if (values_.rows() != primes_->size() || values_.cols() != primes_->n()) {
    throw std::invalid_argument("PrimeFunction has wrong shape");
  }
}

bool operator<(const PrimeFunction& a, const PrimeFunction& b) {
  const auto& x = a.values_;
  const auto& y = b.values_;
  for (Eigen::Index p = 0; p < x.rows(); ++p) {
    for (Eigen::Index g = 0; g < x.cols(); ++g) {
      if (x(p, g) != y(p, g)) return x(p, g) < y(p, g);
    }
  }
  return false;
}

CocycleTable::CocycleTable(PrimesPtr primes)
    : primes_(std::move(primes)),
      tables_(primes_->size(), ExponentMatrix::Zero(primes_->n(), primes_->n())) {}

PrimesPtr relevant_primes(const CGRSpec& spec) {
  const auto& G = spec.group;
  const int n = spec.n();
  std::set<PrimeIdeal> found;
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      for (const auto& [prime, e] : factor_principal(spec.a(g, h), spec.ring).exponents) found.insert(prime);
    }
  }
  // close under the action; with sigma a homomorphism one pass suffices
  std::set<PrimeIdeal> closed = found;
  for (const auto& p : found) {
    for (Elem g = 0; g < n; ++g) closed.insert(act_on_prime(p, spec.sigma[g]));
  }

  auto out = std::make_shared<RelevantPrimes>();
  out->group = G;
  out->ideals.assign(closed.begin(), closed.end());
  for (const auto& ideal : out->ideals) {
    auto label = std::find_if(spec.prime_labels.begin(), spec.prime_labels.end(),
                              [&](const PrimeLabel& l) { return l.ideal == ideal; });
    if (label != spec.prime_labels.end()) {
      out->names.push_back(label->name);
      out->written.push_back(to_string(label->written));
    } else {
      out->names.push_back(to_string(ideal));
      out->written.push_back(to_string(ideal.generator()));
    }
  }
  for (const auto& ideal : out->ideals) {
    std::vector<int> row;
    for (Elem g = 0; g < n; ++g) {
      // P.g is generated by sigma_g^-1 (gen P)
      PrimeIdeal image = act_on_prime(ideal, spec.sigma[g]);
      auto it = std::lower_bound(out->ideals.begin(), out->ideals.end(), image);
      row.push_back(static_cast<int>(it - out->ideals.begin()));
    }
    out->action.push_back(std::move(row));
  }
  out->check_action();
  return out;
}

KTable k_table(const CGRSpec& spec) { return k_table(spec, relevant_primes(spec)); }

KTable k_table(const CGRSpec& spec, PrimesPtr primes) {
  KTable k(primes);
  const int n = spec.n();
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      for (const auto& [prime, e] : factor_principal(spec.a(g, h), spec.ring).exponents) {
        auto it = std::lower_bound(primes->ideals.begin(), primes->ideals.end(), prime);
        k(static_cast<int>(it - primes->ideals.begin()), g, h) = e;
      }
    }
  }
  return k;
}

std::optional<CocycleViolation> find_cocycle_violation(const CocycleTable& k) {
  const auto& R = k.primes();
  const auto& G = R.group;
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      for (Elem h = 0; h < R.n(); ++h) {
        for (Elem t = 0; t < R.n(); ++t) {
          Exponent lhs = k(p, g, h) + k(p, G.mul(g, h), t);
          Exponent rhs = k(R.act(p, g), h, t) + k(p, g, G.mul(h, t));
          if (lhs != rhs) return CocycleViolation{p, g, h, t};
        }
      }
    }
  }
  return std::nullopt;
}

bool validate_k(const CocycleTable& k) { return !find_cocycle_violation(k).has_value(); }

CocycleTable coboundary(const PrimeFunction& f) {
  CocycleTable out(f.primes_ptr());
  const auto& R = f.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      for (Elem h = 0; h < R.n(); ++h) {
        out(p, g, h) = f(p, g) + f(R.act(p, g), h) - f(p, R.group.mul(g, h));
      }
    }
  }
  return out;
}

bool is_admissible_gamma(const KTable& k, const GammaTable& gamma) {
  const auto& R = k.primes();
  const Exponent n = R.n();
  const auto d = coboundary(gamma);
  for (int p = 0; p < R.size(); ++p) {
    if (gamma(p, 0) != 0) return false;
    for (Elem g = 0; g < R.n(); ++g) {
      if (gamma(p, g) < 0 || gamma(p, g) > n * k(p, g, R.group.inv(g))) return false;
      for (Elem h = 0; h < R.n(); ++h) {
        if (d(p, g, h) != n * k(p, g, h)) return false;
      }
    }
  }
  return true;
}

GammaTable gamma_rowsum(const KTable& k) {
  const auto& R = k.primes();
  ExponentMatrix values(R.size(), R.n());
  for (int p = 0; p < R.size(); ++p) values.row(p) = k.matrix(p).rowwise().sum().transpose();
  return GammaTable(k.primes_ptr(), std::move(values));
}

namespace {

// sum coef * x_var = rhs over the gamma variables
struct LinearConstraint {
  std::vector<std::pair<int, Exponent>> terms;
  Exponent rhs;
};

}  // namespace

std::vector<GammaTable> gamma_enumerate(const KTable& k) {
  const auto& R = k.primes();
  const auto& G = R.group;
  const int n = R.n();
  const int vars = R.size() * n;  // var id = p * n + g; g = e is the constant 0
  auto var = [n](int p, Elem g) { return p * n + g; };

  std::vector<Exponent> upper(vars, 0);
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 1; g < n; ++g) upper[var(p, g)] = n * k(p, g, G.inv(g));
  }

  // bucket each constraint at the last variable (in enumeration order) it mentions
  std::vector<std::vector<LinearConstraint>> due(vars);
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 1; g < n; ++g) {
      for (Elem h = 1; h < n; ++h) {
        std::map<int, Exponent> coef;
        coef[var(p, g)] += 1;
        coef[var(R.act(p, g), h)] += 1;
        if (G.mul(g, h) != 0) coef[var(p, G.mul(g, h))] -= 1;
        LinearConstraint c{{}, n * k(p, g, h)};
        int last = 0;
        for (const auto& [v, a] : coef) {
          if (a == 0) continue;
          c.terms.emplace_back(v, a);
          last = std::max(last, v);
        }
        if (c.terms.empty()) {
          if (c.rhs != 0) return {};
          continue;
        }
        due[last].push_back(std::move(c));
      }
    }
  }

  std::vector<GammaTable> out;
  std::vector<Exponent> x(vars, 0);

  auto search = [&](auto&& self, int v) -> void {
    if (v == vars) {
      ExponentMatrix values(R.size(), n);
      for (int p = 0; p < R.size(); ++p) {
        for (Elem g = 0; g < n; ++g) values(p, g) = x[var(p, g)];
      }
      out.emplace_back(k.primes_ptr(), std::move(values));
      return;
    }
    if (v % n == 0) {  // identity column
      x[v] = 0;
      self(self, v + 1);
      return;
    }
    // constraints completed by v either force its value or only check it
    std::optional<Exponent> forced;
    for (const auto& c : due[v]) {
      Exponent rest = 0;
      Exponent own = 0;
      for (const auto& [w, a] : c.terms) {
        if (w == v) {
          own = a;
        } else {
          rest += a * x[w];
        }
      }
      if (own == 0) continue;
      Exponent num = c.rhs - rest;
      if (num % own != 0) return;
      Exponent value = num / own;
      if (forced && *forced != value) return;
      forced = value;
    }
    auto consistent = [&](Exponent value) {
      x[v] = value;
      for (const auto& c : due[v]) {
        Exponent sum = 0;
        for (const auto& [w, a] : c.terms) sum += a * x[w];
        if (sum != c.rhs) return false;
      }
      return true;
    };
    if (forced) {
      if (*forced >= 0 && *forced <= upper[v] && consistent(*forced)) self(self, v + 1);
      return;
    }
    for (Exponent value = 0; value <= upper[v]; ++value) {
      if (consistent(value)) self(self, v + 1);
    }
  };
  search(search, 0);
  return out;
}

MaternalPowers maternal_powers(const GammaTable& gamma) {
  const Exponent n = gamma.primes().n();
  ExponentMatrix a = gamma.values().unaryExpr([n](Exponent g) {
    Exponent q = g / n;
    if (g % n != 0 && g < 0) --q;  // floor
    return -q;
  });
  return MaternalPowers(gamma.primes_ptr(), std::move(a));
}

MTable m_table(const KTable& k, const MaternalPowers& a) {
  MTable m = coboundary(a);
  const auto& R = k.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      for (Elem h = 0; h < R.n(); ++h) {
        m(p, g, h) += k(p, g, h);
        if (m(p, g, h) != 0 && m(p, g, h) != 1) {
          throw ConsistencyError("maternal 2-cocycle value " + std::to_string(m(p, g, h)) + " at (" + R.names[p] +
                                 "," + R.group.label(g) + "," + R.group.label(h) + ") is not in {0,1}");
        }
      }
    }
  }
  return m;
}

bool is_equivalence_witness(const CocycleTable& k, const CocycleTable& kprime, const PrimeFunction& lambda) {
  const auto& R = k.primes();
  for (int p = 0; p < R.size(); ++p) {
    for (Elem g = 0; g < R.n(); ++g) {
      for (Elem h = 0; h < R.n(); ++h) {
        Exponent lhs = kprime(p, g, h) + lambda(p, R.group.mul(g, h));
        Exponent rhs = k(p, g, h) + lambda(p, g) + lambda(R.act(p, g), h);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::optional<PrimeFunction> solve_invariant_witness(const CocycleTable& mprime, const CocycleTable& m) {
  const auto& R = m.primes();
  if (!R.action_is_trivial()) throw std::invalid_argument("solve_invariant_witness needs a trivial prime action");
  const Exponent n = R.n();
  PrimeFunction l(m.primes_ptr());
  for (int p = 0; p < R.size(); ++p) {
    // summing the relation over h gives n l(g) = sum_h (m' - m)(g,h)
    Eigen::Matrix<Exponent, Eigen::Dynamic, 1> sums = (mprime.matrix(p) - m.matrix(p)).rowwise().sum();
    for (Elem g = 0; g < R.n(); ++g) {
      if (sums(g) % n != 0) return std::nullopt;
      l(p, g) = sums(g) / n;
    }
  }
  if (!is_equivalence_witness(m, mprime, l)) return std::nullopt;
  return l;
}

}  // namespace gradorder
