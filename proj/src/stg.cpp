#include "gradorder/stg.hpp"

#include <sstream>

namespace gradorder {

StgContext::StgContext(KTable k, GammaTable gamma)
    : k_(std::move(k)), gamma_(std::move(gamma)), a_(maternal_powers(gamma_)) {}

StgElement StgContext::make(Rational a, Elem g) const {
  Rational scaled = a * n();
  if (scaled.denominator() != 1) throw std::invalid_argument("component is not in n^-1 Z");
  return {scaled.numerator(), g};
}

StgElement StgContext::multiply(int p, const StgElement& x, const StgElement& y) const {
  return {x.numerator + y.numerator + n() * k_(p, x.g, y.g), group().mul(x.g, y.g)};
}

StgElement StgContext::left_inverse(int p, const StgElement& x) const {
  const Elem gi = group().inv(x.g);
  return {-x.numerator - n() * k_(primes().act(p, gi), x.g, gi), gi};
}

StgElement StgContext::right_inverse(int p, const StgElement& x) const {
  const Elem gi = group().inv(x.g);
  return {-x.numerator - n() * k_(p, x.g, gi), gi};
}

Rational StgContext::psi(int p, const StgElement& x) const { return Rational(x.numerator + gamma_(p, x.g), n()); }

StgElement StgContext::section(int p, Elem g) const { return {n() * a_(p, g), g}; }

Exponent StgContext::m_via_stg(int p, Elem g, Elem h) const {
  const int pg = primes().act(p, g);
  StgElement upper = multiply(p, section(p, g), section(pg, h));
  StgElement result = multiply(p, upper, right_inverse(p, section(p, group().mul(g, h))));
  if (result.g != group().identity() || result.numerator % n() != 0) {
    throw ConsistencyError("section composite is not an integer on the identity component");
  }
  return result.numerator / n();
}

std::vector<StgElement> StgContext::sample(int bound) const {
  std::vector<StgElement> out;
  for (Elem g = 0; g < group().order(); ++g) {
    for (Exponent num = -bound * n(); num <= bound * n(); ++num) out.push_back({num, g});
  }
  return out;
}

namespace {

class LawTally {
 public:
  LawTally(std::string name, const StgContext& ctx) : result_{std::move(name), true, 0, {}}, ctx_(ctx) {}

  void check(bool ok, int p, std::initializer_list<StgElement> xs) {
    ++result_.cases;
    if (ok || !result_.pass) {
      result_.pass = result_.pass && ok;
      return;
    }
    result_.pass = false;
    std::ostringstream os;
    os << "P=" << ctx_.primes().names[p];
    for (const auto& x : xs) os << " (" << ctx_.value(x) << "," << ctx_.group().label(x.g) << ")";
    result_.counterexample = os.str();
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
  const StgContext& ctx_;
};

}  // namespace

std::vector<LawResult> check_stg_laws(const StgContext& ctx, int bound) {
  const auto& R = ctx.primes();
  const auto& G = ctx.group();
  const auto xs = ctx.sample(bound);
  const StgElement e{0, G.identity()};
  std::vector<LawResult> out;

  {
    LawTally assoc("twisted associativity", ctx);
    LawTally theta("theta multiplicativity", ctx);
    for (int p = 0; p < R.size(); ++p) {
      for (const auto& x : xs) {
        for (const auto& y : xs) {
          StgElement xy = ctx.multiply(p, x, y);
          theta.check(ctx.theta(xy) == G.mul(x.g, y.g), p, {x, y});
          for (const auto& z : xs) {
            StgElement lhs = ctx.multiply(p, xy, z);
            StgElement rhs = ctx.multiply(p, x, ctx.multiply(R.act(p, x.g), y, z));
            assoc.check(lhs == rhs, p, {x, y, z});
          }
        }
      }
    }
    out.push_back(assoc.take());
    out.push_back(theta.take());
  }

  {
    LawTally neutral("identity element", ctx);
    LawTally unique_e("identity uniqueness", ctx);
    for (const auto& cand : xs) {
      bool two_sided = true;
      for (int p = 0; p < R.size() && two_sided; ++p) {
        for (const auto& x : xs) {
          if (!(ctx.multiply(p, cand, x) == x && ctx.multiply(p, x, cand) == x)) {
            two_sided = false;
            break;
          }
        }
      }
      if (cand == e) {
        neutral.check(two_sided || R.size() == 0, 0, {cand});
      } else {
        unique_e.check(!two_sided || R.size() == 0, 0, {cand});
      }
    }
    out.push_back(neutral.take());
    out.push_back(unique_e.take());
  }

  {
    LawTally inverses("left and right inverses", ctx);
    LawTally theta_inv("theta of inverses", ctx);
    LawTally left_is_right("left inverse = right inverse at P.theta_x^-1", ctx);
    LawTally unique("inverse uniqueness", ctx);
    for (int p = 0; p < R.size(); ++p) {
      for (const auto& x : xs) {
        StgElement l = ctx.left_inverse(p, x);
        StgElement r = ctx.right_inverse(p, x);
        inverses.check(ctx.multiply(p, l, x) == e && ctx.multiply(p, x, r) == e, p, {x});
        theta_inv.check(l.g == G.inv(x.g) && r.g == G.inv(x.g), p, {x});
        left_is_right.check(l == ctx.right_inverse(R.act(p, G.inv(x.g)), x), p, {x});
        for (const auto& y : xs) {
          if (ctx.multiply(p, y, x) == e) unique.check(y == l, p, {x, y});
          if (ctx.multiply(p, x, y) == e) unique.check(y == r, p, {x, y});
        }
      }
    }
    out.push_back(inverses.take());
    out.push_back(theta_inv.take());
    out.push_back(left_is_right.take());
    out.push_back(unique.take());
  }

  {
    LawTally stmm("STMM additivity", ctx);
    LawTally psi_e("psi of identity", ctx);
    LawTally psi_right("psi of right inverse", ctx);
    LawTally psi_left("psi of left inverse", ctx);
    LawTally inv_lemma("psi_{Pg} of (a,g)^-1 = -psi_P(a,g)", ctx);
    LawTally embed("psi o i = id", ctx);
    for (int p = 0; p < R.size(); ++p) {
      psi_e.check(ctx.psi(p, e) == Rational(0), p, {e});
      for (const auto& x : xs) {
        Rational px = ctx.psi(p, x);
        psi_right.check(ctx.psi(R.act(p, x.g), ctx.right_inverse(p, x)) == -px, p, {x});
        psi_left.check(ctx.psi(p, ctx.left_inverse(p, x)) == -ctx.psi(R.act(p, G.inv(x.g)), x), p, {x});
        if (x.numerator % ctx.n() == 0) {
          inv_lemma.check(ctx.psi(R.act(p, x.g), ctx.right_inverse(p, x)) == -px, p, {x});
        }
        if (x.g == G.identity()) embed.check(ctx.psi(p, ctx.embed(ctx.value(x))) == ctx.value(x), p, {x});
        for (const auto& y : xs) {
          stmm.check(ctx.psi(p, ctx.multiply(p, x, y)) == px + ctx.psi(R.act(p, x.g), y), p, {x, y});
        }
      }
    }
    out.push_back(stmm.take());
    out.push_back(psi_e.take());
    out.push_back(psi_right.take());
    out.push_back(psi_left.take());
    out.push_back(inv_lemma.take());
    out.push_back(embed.take());
  }

  {
    LawTally sections("sections land in [0,1)", ctx);
    LawTally m_match("m via sections = m table", ctx);
    MTable m = m_table(ctx.k(), ctx.a());
    for (int p = 0; p < R.size(); ++p) {
      sections.check(ctx.section(p, G.identity()) == e, p, {e});
      for (Elem g = 0; g < G.order(); ++g) {
        StgElement s = ctx.section(p, g);
        Rational v = ctx.psi(p, s);
        sections.check(v >= Rational(0) && v < Rational(1), p, {s});
        for (Elem h = 0; h < G.order(); ++h) {
          bool ok = false;
          try {
            ok = ctx.m_via_stg(p, g, h) == m(p, g, h);
          } catch (const ConsistencyError&) {
            ok = false;
          }
          m_match.check(ok, p, {ctx.section(p, g), ctx.section(R.act(p, g), h)});
        }
      }
    }
    out.push_back(sections.take());
    out.push_back(m_match.take());
  }
  return out;
}

}  // namespace gradorder
