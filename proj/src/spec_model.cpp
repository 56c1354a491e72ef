#include "gradorder/spec_model.hpp"

#include "gradorder/expression.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace gradorder {

SpecError::SpecError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (!tokens.empty()) lines.push_back({number, raw, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int parse_count(const Line& line, const Token& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok.text, &used);
    if (used != tok.text.size() || v < 1) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw SpecError(line.number, tok.column, "expected a positive integer, got '" + tok.text + "'");
  }
}

// Expression text after '=' on a line of the form "<kw> ... = <expr>".
GaussInt parse_rhs(const Line& line, std::size_t eq_token) {
  const Token& eq = line.tokens[eq_token];
  if (eq.text != "=") throw SpecError(line.number, eq.column, "expected '='");
  if (eq_token + 1 >= line.tokens.size()) throw SpecError(line.number, eq.column, "missing expression after '='");
  std::size_t start = line.tokens[eq_token + 1].column - 1;
  try {
    return evaluate_expression(std::string_view(line.text).substr(start));
  } catch (const ExpressionError& e) {
    throw SpecError(line.number, start + e.column(), e.what());
  }
}

Elem lookup(const FiniteGroup& group, const Line& line, const Token& tok) {
  auto g = group.find(tok.text);
  if (!g) throw SpecError(line.number, tok.column, "unknown group element '" + tok.text + "'");
  return *g;
}

}  // namespace

CGRSpec parse_spec(std::string_view text) {
  auto lines = split_lines(text);
  CGRSpec spec;
  std::optional<BaseRing> ring;
  bool have_group = false;
  std::vector<const Line*> sigma_lines, alpha_lines, prime_lines;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tk = line.tokens;
    const std::string& kw = tk[0].text;
    if (kw == "ring") {
      if (tk.size() != 2) throw SpecError(line.number, 0, "expected 'ring Z' or 'ring ZI'");
      if (ring) throw SpecError(line.number, tk[0].column, "duplicate ring declaration");
      if (tk[1].text == "Z") {
        ring = BaseRing::Z;
      } else if (tk[1].text == "ZI") {
        ring = BaseRing::ZI;
      } else {
        throw SpecError(line.number, tk[1].column, "unknown ring '" + tk[1].text + "'");
      }
    } else if (kw == "group") {
      if (have_group) throw SpecError(line.number, tk[0].column, "duplicate group declaration");
      if (tk.size() != 3) throw SpecError(line.number, 0, "expected 'group cyclic <n>' or 'group table <n>'");
      int n = parse_count(line, tk[2]);
      if (tk[1].text == "cyclic") {
        spec.group = FiniteGroup::cyclic(n);
      } else if (tk[1].text == "table") {
        if (li + n >= lines.size()) throw SpecError(line.number, 0, "group table needs " + std::to_string(n) + " rows");
        std::vector<std::string> labels;
        for (const auto& t : lines[li + 1].tokens) labels.push_back(t.text);
        if (static_cast<int>(labels.size()) != n) {
          throw SpecError(lines[li + 1].number, 0, "table row must have " + std::to_string(n) + " labels");
        }
        std::map<std::string, Elem> index;
        for (int g = 0; g < n; ++g) index[labels[g]] = g;
        std::vector<std::vector<Elem>> table;
        for (int r = 0; r < n; ++r) {
          const Line& row = lines[li + 1 + r];
          if (static_cast<int>(row.tokens.size()) != n) {
            throw SpecError(row.number, 0, "table row must have " + std::to_string(n) + " labels");
          }
          std::vector<Elem> entries;
          for (const auto& t : row.tokens) {
            auto it = index.find(t.text);
            if (it == index.end()) throw SpecError(row.number, t.column, "unknown group element '" + t.text + "'");
            entries.push_back(it->second);
          }
          table.push_back(std::move(entries));
        }
        try {
          spec.group = FiniteGroup(std::move(labels), std::move(table));
        } catch (const std::invalid_argument& e) {
          throw SpecError(line.number, 0, e.what());
        }
        li += n;
      } else {
        throw SpecError(line.number, tk[1].column, "unknown group form '" + tk[1].text + "'");
      }
      have_group = true;
    } else if (kw == "sigma") {
      sigma_lines.push_back(&line);
    } else if (kw == "alpha") {
      alpha_lines.push_back(&line);
    } else if (kw == "prime") {
      prime_lines.push_back(&line);
    } else {
      throw SpecError(line.number, tk[0].column, "unknown directive '" + kw + "'");
    }
  }

  if (!ring) throw SpecError(lines.empty() ? 1 : lines.back().number, 0, "missing ring declaration");
  if (!have_group) throw SpecError(lines.empty() ? 1 : lines.back().number, 0, "missing group declaration");
  spec.ring = *ring;
  const int n = spec.group.order();

  spec.sigma.assign(n, Automorphism::identity);
  std::vector<bool> sigma_seen(n, false);
  for (const Line* line : sigma_lines) {
    const auto& tk = line->tokens;
    if (tk.size() != 3) throw SpecError(line->number, 0, "expected 'sigma <g> id|conj'");
    Elem g = lookup(spec.group, *line, tk[1]);
    if (sigma_seen[g]) throw SpecError(line->number, tk[1].column, "duplicate sigma for '" + tk[1].text + "'");
    sigma_seen[g] = true;
    if (tk[2].text == "id") {
      spec.sigma[g] = Automorphism::identity;
    } else if (tk[2].text == "conj") {
      if (spec.ring == BaseRing::Z) throw SpecError(line->number, tk[2].column, "conjugation requires ring ZI");
      spec.sigma[g] = Automorphism::conjugation;
    } else {
      throw SpecError(line->number, tk[2].column, "unknown automorphism '" + tk[2].text + "'");
    }
  }

  std::vector<std::vector<std::optional<GaussInt>>> alpha(n, std::vector<std::optional<GaussInt>>(n));
  for (const Line* line : alpha_lines) {
    const auto& tk = line->tokens;
    if (tk.size() < 5) throw SpecError(line->number, 0, "expected 'alpha <g> <h> = <expression>'");
    Elem g = lookup(spec.group, *line, tk[1]);
    Elem h = lookup(spec.group, *line, tk[2]);
    if (alpha[g][h]) throw SpecError(line->number, tk[1].column, "duplicate alpha entry");
    GaussInt v = parse_rhs(*line, 3);
    if (v.is_zero()) throw SpecError(line->number, tk[4].column, "alpha must be nonzero");
    if (spec.ring == BaseRing::Z && !v.is_real()) {
      throw SpecError(line->number, tk[4].column, "alpha value " + to_string(v) + " is not in Z");
    }
    alpha[g][h] = v;
  }
  spec.alpha.assign(n, std::vector<GaussInt>(n, GaussInt(1)));
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      if (alpha[g][h]) {
        spec.alpha[g][h] = *alpha[g][h];
      } else if (g != 0 && h != 0) {
        throw SpecError(lines.empty() ? 1 : lines.back().number, 0,
                        "missing alpha entry (" + spec.group.label(g) + "," + spec.group.label(h) + ")");
      }
    }
  }

  for (const Line* line : prime_lines) {
    const auto& tk = line->tokens;
    if (tk.size() < 4) throw SpecError(line->number, 0, "expected 'prime <name> = <expression>'");
    GaussInt v = parse_rhs(*line, 2);
    auto f = v.is_zero() ? IdealFactorization{} : factor_principal(v, spec.ring);
    if (f.exponents.size() != 1 || f.exponents.begin()->second != 1) {
      throw SpecError(line->number, tk[3].column, to_string(v) + " is not a prime of " + to_string(spec.ring));
    }
    spec.prime_labels.push_back({tk[1].text, v, f.exponents.begin()->first});
  }
  return spec;
}

CGRSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string serialize_spec(const CGRSpec& spec) {
  std::ostringstream os;
  const auto& G = spec.group;
  const int n = spec.n();
  os << "ring " << to_string(spec.ring) << '\n';
  if (G.is_cyclic_form()) {
    os << "group cyclic " << n << '\n';
  } else {
    os << "group table " << n << '\n';
    for (Elem g = 0; g < n; ++g) {
      for (Elem h = 0; h < n; ++h) os << (h ? " " : "") << G.label(G.mul(g, h));
      os << '\n';
    }
  }
  for (Elem g = 1; g < n; ++g) os << "sigma " << G.label(g) << ' ' << to_string(spec.sigma[g]) << '\n';
  for (Elem g = 1; g < n; ++g) {
    for (Elem h = 1; h < n; ++h) {
      os << "alpha " << G.label(g) << ' ' << G.label(h) << " = " << to_string(spec.alpha[g][h]) << '\n';
    }
  }
  for (const auto& p : spec.prime_labels) os << "prime " << p.name << " = " << to_string(p.written) << '\n';
  return os.str();
}

bool same_ideal(const GaussInt& a, const GaussInt& b, BaseRing ring) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (ring == BaseRing::Z) return abs(a.re()) == abs(b.re());
  return gauss_divides(a, b) && gauss_divides(b, a);
}

ValidationReport validate_spec(const CGRSpec& spec) {
  ValidationReport rep;
  const auto& G = spec.group;
  const int n = spec.n();
  auto tuple = [&](std::initializer_list<Elem> xs) {
    std::string s = "(";
    bool first = true;
    for (Elem x : xs) {
      s += (first ? "" : ",") + G.label(x);
      first = false;
    }
    return s + ")";
  };

  ++rep.checks_run;
  if (spec.sigma[0] != Automorphism::identity) rep.failures.push_back({"sigma_e", "sigma of the identity is not id"});
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      ++rep.checks_run;
      if (compose(spec.sigma[g], spec.sigma[h]) != spec.sigma[G.mul(g, h)]) {
        rep.failures.push_back({"sigma_homomorphism", "sigma_g sigma_h != sigma_gh at " + tuple({g, h})});
      }
      ++rep.checks_run;
      if (spec.a(g, h).is_zero()) rep.failures.push_back({"nonzero", "alpha" + tuple({g, h}) + " = 0"});
    }
  }
  for (Elem g = 0; g < n; ++g) {
    ++rep.checks_run;
    if (spec.a(g, 0) != GaussInt(1) || spec.a(0, g) != GaussInt(1)) {
      rep.failures.push_back({"normalization", "alpha(g,e) or alpha(e,g) != 1 at g = " + G.label(g)});
    }
    ++rep.checks_run;
    Elem gi = G.inv(g);
    if (spec.a(g, gi) != apply_automorphism(spec.sigma[g], spec.a(gi, g))) {
      rep.failures.push_back({"inverse_pair", "alpha(g,g^-1) != sigma_g(alpha(g^-1,g)) at g = " + G.label(g)});
    }
  }
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      for (Elem t = 0; t < n; ++t) {
        ++rep.checks_run;
        GaussInt lhs = spec.a(g, h) * spec.a(G.mul(g, h), t);
        GaussInt rhs = apply_automorphism(spec.sigma[g], spec.a(h, t)) * spec.a(g, G.mul(h, t));
        bool holds = lhs == rhs;
        rep.triples.push_back({g, h, t, holds});
        if (!holds) {
          rep.failures.push_back({"cocycle", "triple " + tuple({g, h, t}) + ": " + to_string(lhs) +
                                                 " != " + to_string(rhs)});
        }
      }
    }
  }
  return rep;
}

std::vector<Elem> compute_H(const CGRSpec& spec) {
  const auto& G = spec.group;
  std::vector<Elem> H;
  std::vector<bool> in(spec.n(), false);
  for (Elem g = 0; g < spec.n(); ++g) {
    if (is_unit(spec.a(g, G.inv(g)), spec.ring)) {
      H.push_back(g);
      in[g] = true;
    }
  }
  for (Elem x : H) {
    if (!in[G.inv(x)]) throw std::logic_error("H is not closed under inverses");
    for (Elem y : H) {
      if (!in[G.mul(x, y)]) throw std::logic_error("H is not closed under products");
    }
  }
  if (!in[0]) throw std::logic_error("H does not contain the identity");
  return H;
}

ValidationReport check_h_properties(const CGRSpec& spec) {
  ValidationReport rep;
  const auto& G = spec.group;
  const auto H = compute_H(spec);
  for (Elem h : H) {
    for (Elem x = 0; x < spec.n(); ++x) {
      ++rep.checks_run;
      if (!is_unit(spec.a(x, h), spec.ring) || !is_unit(spec.a(h, x), spec.ring)) {
        rep.failures.push_back({"h_units", "alpha(x,h) or alpha(h,x) not a unit at h = " + G.label(h) +
                                               ", x = " + G.label(x)});
      }
    }
  }
  for (Elem h : H) {
    for (Elem hp : H) {
      for (Elem x = 0; x < spec.n(); ++x) {
        for (Elem y = 0; y < spec.n(); ++y) {
          ++rep.checks_run;
          const GaussInt& lhs = spec.a(G.mul(h, x), G.mul(y, hp));
          GaussInt rhs = apply_automorphism(spec.sigma[h], spec.a(x, y));
          if (!same_ideal(lhs, rhs, spec.ring)) {
            rep.failures.push_back({"h_ideal", "<alpha(hx,yh')> != <sigma_h(alpha(x,y))> at h=" + G.label(h) +
                                                   " h'=" + G.label(hp) + " x=" + G.label(x) +
                                                   " y=" + G.label(y)});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace gradorder
