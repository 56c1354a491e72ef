#pragma once

#include "gradorder/group.hpp"
#include "gradorder/ideal.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gradorder {

/// Malformed input document. line/column are 1-based; column 0 means "whole line".
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Display name for a prime, e.g. P2 written as 1-2i although the ideal is <2+i>.
struct PrimeLabel {
  std::string name;
  GaussInt written;
  PrimeIdeal ideal;

  friend bool operator==(const PrimeLabel&, const PrimeLabel&) = default;
};

/// Full description of A = D <>_{sigma,alpha} G.
struct CGRSpec {
  BaseRing ring = BaseRing::ZI;
  FiniteGroup group;
  std::vector<Automorphism> sigma;          // sigma[g]
  std::vector<std::vector<GaussInt>> alpha;  // alpha[g][h]
  std::vector<PrimeLabel> prime_labels;

  int n() const { return group.order(); }
  const GaussInt& a(Elem g, Elem h) const { return alpha[g][h]; }

  friend bool operator==(const CGRSpec&, const CGRSpec&) = default;
};

CGRSpec parse_spec(std::string_view text);
CGRSpec load_spec(const std::string& path);

/// Writes the document form accepted by parse_spec.
std::string serialize_spec(const CGRSpec& spec);

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct TripleResult {
  Elem g, h, t;
  bool holds;
};

struct ValidationReport {
  std::vector<TripleResult> triples;  // cocycle identity, every (g,h,t)
  std::vector<CheckFailure> failures;
  int checks_run = 0;

  bool ok() const { return failures.empty(); }
};

/// Cocycle identity alpha(g,h) alpha(gh,t) = sigma_g(alpha(h,t)) alpha(g,ht),
/// normalisation, alpha(g,g^-1) = sigma_g(alpha(g^-1,g)), sigma a homomorphism.
ValidationReport validate_spec(const CGRSpec& spec);

/// H = { h : alpha(h,h^-1) is a unit }, sorted. Throws std::logic_error if H is
/// not closed (which a valid alpha rules out).
std::vector<Elem> compute_H(const CGRSpec& spec);

/// For h,h' in H and x,y in G: <alpha(hx,yh')> = <sigma_h(alpha(x,y))>, and
/// alpha(x,h), alpha(h,x) are units.
ValidationReport check_h_properties(const CGRSpec& spec);

/// Same ideal in D.
bool same_ideal(const GaussInt& a, const GaussInt& b, BaseRing ring);

}  // namespace gradorder
