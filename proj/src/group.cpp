#include "gradorder/group.hpp"

#include <set>
#include <stdexcept>

namespace gradorder {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<Elem>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group must be nonempty");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw std::invalid_argument("duplicate group labels");
  }
  if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("Cayley table has wrong row count");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cayley table has wrong column count");
    for (Elem x : row) {
      if (x < 0 || x >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
  }
  for (Elem g = 0; g < n; ++g) {
    if (table_[0][g] != g || table_[g][0] != g) {
      throw std::invalid_argument("first element '" + labels_[0] + "' is not the identity");
    }
  }
  inverse_.assign(n, -1);
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      if (table_[g][h] == 0 && table_[h][g] == 0) inverse_[g] = h;
    }
    if (inverse_[g] < 0) throw std::invalid_argument("element '" + labels_[g] + "' has no inverse");
  }
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      for (Elem t = 0; t < n; ++t) {
        if (mul(mul(g, h), t) != mul(g, mul(h, t))) {
          throw std::invalid_argument("Cayley table is not associative at (" + labels_[g] + "," + labels_[h] +
                                      "," + labels_[t] + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int g = 0; g < n; ++g) {
    labels.push_back(std::to_string(g));
    for (int h = 0; h < n; ++h) table[g][h] = (g + h) % n;
  }
  FiniteGroup out(std::move(labels), std::move(table));
  out.cyclic_form_ = true;
  return out;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> table(na * nb, std::vector<Elem>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y) {
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

std::optional<Elem> FiniteGroup::find(const std::string& label) const {
  for (Elem g = 0; g < order(); ++g) {
    if (labels_[g] == label) return g;
  }
  return std::nullopt;
}

}  // namespace gradorder
