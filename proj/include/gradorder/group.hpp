#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gradorder {

/// Group element, as an index into FiniteGroup's labels.
using Elem = int;

/// Finite group given by its Cayley table. Index 0 is always the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Throws std::invalid_argument unless the table defines a group with
  /// identity at index 0.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<Elem>> table);

  static FiniteGroup cyclic(int n);

  /// Direct product with lexicographic element order; labels "(a,b)".
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(labels_.size()); }
  Elem identity() const { return 0; }
  Elem mul(Elem g, Elem h) const { return table_[g][h]; }
  Elem inv(Elem g) const { return inverse_[g]; }
  Elem conj_by(Elem g, Elem x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

  const std::string& label(Elem g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(const std::string& label) const;

  /// Set when built by cyclic(); lets the serializer round-trip the short form.
  bool is_cyclic_form() const { return cyclic_form_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inverse_;
  bool cyclic_form_ = false;
};

}  // namespace gradorder
