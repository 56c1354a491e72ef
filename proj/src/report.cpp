#include "gradorder/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gradorder {

using nlohmann::json;

void Report::section(const std::string& title) {
  if (!text_.empty()) text_.emplace_back();
  text_.push_back("== " + title + " ==");
}

void Report::line(const std::string& text) { text_.push_back(text); }

void Report::table(const std::string& title, const std::vector<std::string>& row_labels,
                   const std::vector<std::string>& col_labels, const ExponentMatrix& cells) {
  std::size_t width = 1;
  for (const auto& l : col_labels) width = std::max(width, l.size());
  for (Eigen::Index i = 0; i < cells.size(); ++i) width = std::max(width, std::to_string(cells(i)).size());
  std::size_t head = 0;
  for (const auto& l : row_labels) head = std::max(head, l.size());

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  text_.push_back(title);
  std::string header = "  " + std::string(head, ' ') + " |";
  for (const auto& l : col_labels) header += " " + pad(l, width);
  text_.push_back(header);
  for (Eigen::Index r = 0; r < cells.rows(); ++r) {
    std::string row = "  " + pad(row_labels[r], head) + " |";
    for (Eigen::Index c = 0; c < cells.cols(); ++c) row += " " + pad(std::to_string(cells(r, c)), width);
    text_.push_back(row);
  }
}

std::string Report::render(Format format) const {
  if (format == Format::json) return data_.dump(2) + "\n";
  std::string out;
  for (const auto& l : text_) out += l + "\n";
  return out;
}

std::vector<int> display_order(const RelevantPrimes& primes) {
  std::vector<int> order(primes.size());
  for (int p = 0; p < primes.size(); ++p) order[p] = p;
  bool labelled = std::none_of(primes.names.begin(), primes.names.end(),
                               [](const std::string& s) { return s.empty() || s.front() == '<'; });
  if (labelled) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& x = primes.names[a];
      const auto& y = primes.names[b];
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
  }
  return order;
}

std::string prime_key(const RelevantPrimes& primes, int p) {
  if (p < static_cast<int>(primes.ideals.size())) return to_string(primes.ideals[p].generator());
  return primes.names[p];
}

namespace {

std::string written_of(const RelevantPrimes& R, int p) {
  if (p < static_cast<int>(R.written.size()) && !R.written[p].empty()) return R.written[p];
  return R.names[p];
}

std::string prime_heading(const RelevantPrimes& R, int p) {
  std::string s = R.names[p];
  if (p < static_cast<int>(R.ideals.size())) {
    const std::string ideal = to_string(R.ideals[p]);
    if (s != ideal) s += " = " + ideal;
    const std::string canonical = to_string(R.ideals[p].generator());
    if (R.written[p] != canonical) s += " (written " + R.written[p] + ")";
  }
  return s;
}

std::vector<std::string> labels_of(const FiniteGroup& G) { return G.labels(); }

}  // namespace

std::string render_ideal(const GradedOrder& T, Elem g) {
  const auto& R = T.primes();
  std::string out;
  for (int p : display_order(R)) {
    const Exponent e = T.r(p, g);
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += "(" + written_of(R, p) + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "(1)" : out;
}

json order_to_json(const GradedOrder& T) {
  const auto& R = T.primes();
  json out = json::object();
  for (Elem g = 0; g < R.n(); ++g) {
    json entry = json::object();
    for (int p : display_order(R)) {
      if (T.r(p, g) != 0) entry[prime_key(R, p)] = T.r(p, g);
    }
    out[R.group.label(g)] = std::move(entry);
  }
  return out;
}

json table_to_json(const CocycleTable& t) {
  const auto& R = t.primes();
  json out = json::object();
  for (int p : display_order(R)) {
    for (Elem g = 0; g < R.n(); ++g) {
      for (Elem h = 0; h < R.n(); ++h) {
        out[prime_key(R, p) + "|" + R.group.label(g) + "|" + R.group.label(h)] = t(p, g, h);
      }
    }
  }
  return out;
}

json function_to_json(const PrimeFunction& f) {
  const auto& R = f.primes();
  json out = json::object();
  for (int p : display_order(R)) {
    for (Elem g = 0; g < R.n(); ++g) out[prime_key(R, p) + "|" + R.group.label(g)] = f(p, g);
  }
  return out;
}

namespace {

void describe_spec(Report& rep, const CGRSpec& spec) {
  rep.section("spec");
  rep.line("ring " + to_string(spec.ring) + ", |G| = " + std::to_string(spec.n()));
  std::string sigma = "sigma:";
  for (Elem g = 0; g < spec.n(); ++g) sigma += " " + spec.group.label(g) + "->" + to_string(spec.sigma[g]);
  rep.line(sigma);
  rep.data()["ring"] = to_string(spec.ring);
  rep.data()["group"] = spec.group.labels();
}

void describe_primes(Report& rep, const RelevantPrimes& R) {
  rep.section("relevant primes");
  json primes = json::array();
  for (int p : display_order(R)) {
    std::string orbit;
    for (Elem g = 0; g < R.n(); ++g) orbit += (g ? " " : "") + R.names[R.act(p, g)];
    rep.line(prime_heading(R, p) + "   orbit: " + orbit);
    primes.push_back({{"name", R.names[p]}, {"generator", prime_key(R, p)}, {"written", written_of(R, p)}});
  }
  rep.data()["primes"] = std::move(primes);
}

void cocycle_tables(Report& rep, const std::string& symbol, const CocycleTable& t) {
  const auto& R = t.primes();
  for (int p : display_order(R)) {
    rep.table(symbol + "_" + R.names[p] + "(g,h)", labels_of(R.group), labels_of(R.group), t.matrix(p));
  }
}

void function_table(Report& rep, const std::string& title, const PrimeFunction& f) {
  const auto& R = f.primes();
  std::vector<std::string> rows;
  const auto order = display_order(R);
  ExponentMatrix cells(R.size(), R.n());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rows.push_back(R.names[order[i]]);
    cells.row(static_cast<Eigen::Index>(i)) = f.values().row(order[i]);
  }
  rep.table(title, rows, labels_of(R.group), cells);
}

std::string gamma_inline(const GammaTable& gamma) {
  const auto& R = gamma.primes();
  std::string out;
  for (int p : display_order(R)) {
    if (!out.empty()) out += " ";
    out += R.names[p] + ":(";
    for (Elem g = 0; g < R.n(); ++g) out += (g ? "," : "") + std::to_string(gamma(p, g));
    out += ")";
  }
  return out.empty() ? "(no relevant primes)" : out;
}

void describe_order(Report& rep, const std::string& name, const GradedOrder& T) {
  const auto& G = T.primes().group;
  const auto pred = predicates(T);
  rep.line(name + ":");
  for (Elem g = 0; g < G.order(); ++g) rep.line("  I_" + G.label(g) + " = " + render_ideal(T, g));
  rep.line(std::string("  unital: ") + (pred.is_unital ? "yes" : "no") +
           ", contains A: " + (pred.contains_A ? "yes" : "no") +
           ", strongly graded: " + (is_strongly_graded(T) ? "yes" : "no"));
}

json order_record(const std::string& name, const GradedOrder& T) {
  const auto pred = predicates(T);
  return {{"name", name},
          {"order", order_to_json(T)},
          {"is_order", pred.is_order},
          {"unital", pred.is_unital},
          {"contains_A", pred.contains_A},
          {"strongly_graded", is_strongly_graded(T)}};
}

CommandResult finish(const Report& rep, const CommandOptions& opt, int code) {
  return {code, rep.render(opt.format)};
}

CommandResult failure(const CommandOptions& opt, int code, const std::string& message) {
  Report rep;
  rep.line("error: " + message);
  rep.data()["error"] = message;
  rep.data()["exit_code"] = code;
  return finish(rep, opt, code);
}

/// Names every order in the maternal and maximal lists that equals T.
std::vector<std::string> known_names(const KTable& k, const GradedOrder& T) {
  std::vector<std::string> out;
  if (T == trivial_order(k)) out.push_back("A");
  const auto maternal = maternal_orders(k);
  for (std::size_t i = 0; i < maternal.size(); ++i) {
    if (maternal[i].order == T) out.push_back("maternal:" + std::to_string(i));
  }
  const auto maximal = maximal_via_gamma(k);
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (maximal[i] == T) out.push_back("maximal:" + std::to_string(i));
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

/// Non-validate commands need a well-formed cocycle.
std::optional<CommandResult> require_valid(const CGRSpec& spec, const CommandOptions& opt) {
  auto report = validate_spec(spec);
  if (report.ok()) return std::nullopt;
  return failure(opt, kValidationFailure,
                 "spec fails validation (" + report.failures.front().check + ": " + report.failures.front().detail +
                     "); run validate for details");
}

OrderSet union_over_maternal(const KTable& k, OrderSet (*method)(const GradedOrder&)) {
  OrderSet all;
  for (const auto& entry : maternal_orders(k)) all.merge(method(entry.order));
  return maximal_elements(all);
}

}  // namespace

GradedOrder select_order(const KTable& k, const std::string& selector) {
  if (selector == "A") return trivial_order(k);
  const auto colon = selector.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown order selector '" + selector + "'");
  const std::string kind = selector.substr(0, colon);
  const std::string idx = selector.substr(colon + 1);
  if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      idx.size() > 6) {
    throw std::invalid_argument("bad index in selector '" + selector + "'");
  }
  const std::size_t i = std::stoul(idx);
  if (kind == "maternal") {
    auto entries = maternal_orders(k);
    if (i < entries.size()) return entries[i].order;
  } else if (kind == "maximal") {
    auto orders = maximal_via_gamma(k);
    if (i < orders.size()) return orders[i];
  } else {
    throw std::invalid_argument("unknown order selector '" + selector + "'");
  }
  throw std::invalid_argument("selector '" + selector + "' is out of range");
}

CommandResult cmd_validate(const CGRSpec& spec, const CommandOptions& opt) {
  Report rep;
  describe_spec(rep, spec);
  auto report = validate_spec(spec);

  rep.section("cocycle identity");
  int holding = 0;
  json failing = json::array();
  for (const auto& t : report.triples) {
    if (t.holds) {
      ++holding;
      continue;
    }
    const std::string triple =
        "(" + spec.group.label(t.g) + "," + spec.group.label(t.h) + "," + spec.group.label(t.t) + ")";
    rep.line("fails at " + triple);
    failing.push_back(triple);
  }
  rep.line(std::to_string(holding) + "/" + std::to_string(report.triples.size()) + " triples hold");

  rep.section("checks");
  json failures = json::array();
  for (const auto& f : report.failures) {
    rep.line("FAIL " + f.check + ": " + f.detail);
    failures.push_back({{"check", f.check}, {"detail", f.detail}});
  }
  rep.line(std::to_string(report.checks_run) + " checks run, " + std::to_string(report.failures.size()) +
           " failed");

  rep.data()["triples_holding"] = holding;
  rep.data()["triples_total"] = report.triples.size();
  rep.data()["failing_triples"] = failing;
  rep.data()["failures"] = failures;

  if (report.ok()) {
    rep.section("H");
    try {
      auto H = compute_H(spec);
      std::vector<std::string> labels;
      for (Elem h : H) labels.push_back(spec.group.label(h));
      rep.line("H = {" + join(labels, ", ") + "}");
      rep.data()["H"] = labels;
      auto hp = check_h_properties(spec);
      rep.line(std::string("H properties: ") + (hp.ok() ? "hold" : "FAIL"));
      for (const auto& f : hp.failures) {
        rep.line("FAIL " + f.check + ": " + f.detail);
        failures.push_back({{"check", f.check}, {"detail", f.detail}});
      }
      rep.data()["failures"] = failures;
      rep.data()["h_properties"] = hp.ok();
      if (!hp.ok()) return finish(rep, opt, kConsistencyFailure);

      KTable k = k_table(spec);
      const bool k_ok = validate_k(k);
      rep.line(std::string("k cocycle law: ") + (k_ok ? "holds" : "FAIL"));
      rep.data()["k_valid"] = k_ok;
      if (!k_ok) return finish(rep, opt, kConsistencyFailure);
    } catch (const std::logic_error& e) {
      rep.line(std::string("internal inconsistency: ") + e.what());
      rep.data()["internal_error"] = e.what();
      return finish(rep, opt, kConsistencyFailure);
    }
  }
  rep.data()["ok"] = report.ok();
  return finish(rep, opt, report.ok() ? kOk : kValidationFailure);
}

CommandResult cmd_maternal(const CGRSpec& spec, const CommandOptions& opt) {
  if (auto bad = require_valid(spec, opt)) return *bad;
  Report rep;
  KTable k = k_table(spec);
  describe_primes(rep, k.primes());

  rep.section("k");
  cocycle_tables(rep, "k", k);
  rep.data()["k"] = table_to_json(k);

  const auto gammas = gamma_enumerate(k);
  rep.section("gamma (" + std::to_string(gammas.size()) + " solutions)");
  json gj = json::array();
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    rep.line("gamma " + std::to_string(i) + ": " + gamma_inline(gammas[i]));
    gj.push_back(function_to_json(gammas[i]));
  }
  rep.data()["gamma"] = std::move(gj);

  std::vector<MaternalEntry> entries;
  try {
    entries = maternal_orders(k);
  } catch (const ConsistencyError& e) {
    rep.section("error");
    rep.line(e.what());
    rep.data()["error"] = e.what();
    return finish(rep, opt, kConsistencyFailure);
  }

  rep.section("maternal orders (" + std::to_string(entries.size()) + " distinct)");
  json mj = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    const std::string name = "maternal:" + std::to_string(i);
    std::vector<std::string> from;
    for (const auto& gamma : entry.gammas) {
      auto it = std::find(gammas.begin(), gammas.end(), gamma);
      from.push_back(std::to_string(it - gammas.begin()));
    }
    if (i) rep.line("");
    describe_order(rep, name, entry.order);
    rep.line("  from gamma " + join(from, ", "));
    function_table(rep, "  a_P(g)", entry.order.r());
    cocycle_tables(rep, "  m", entry.m);
    json record = order_record(name, entry.order);
    record["gammas"] = from;
    record["a"] = function_to_json(entry.order.r());
    record["m"] = table_to_json(entry.m);
    mj.push_back(std::move(record));
  }
  rep.data()["maternal"] = std::move(mj);
  return finish(rep, opt, kOk);
}

CommandResult cmd_maximal(const CGRSpec& spec, const CommandOptions& opt) {
  static const std::vector<std::string> kMethods{"gamma", "refine", "oracle"};
  if (opt.method != "all" && std::find(kMethods.begin(), kMethods.end(), opt.method) == kMethods.end()) {
    return failure(opt, kInputError, "unknown method '" + opt.method + "'");
  }
  if (auto bad = require_valid(spec, opt)) return *bad;
  Report rep;
  KTable k = k_table(spec);

  std::vector<std::pair<std::string, OrderSet>> results;
  try {
    for (const auto& method : kMethods) {
      if (opt.method != "all" && opt.method != method) continue;
      if (method == "gamma") results.emplace_back(method, maximal_via_gamma(k));
      if (method == "refine") results.emplace_back(method, union_over_maternal(k, maximal_via_refinement));
      if (method == "oracle") results.emplace_back(method, union_over_maternal(k, maximal_oracle));
    }
  } catch (const ConsistencyError& e) {
    return failure(opt, kConsistencyFailure, e.what());
  } catch (const std::invalid_argument& e) {
    return failure(opt, kInputError, e.what());
  }

  const OrderSet& orders = results.front().second;
  bool agree = true;
  rep.section("methods");
  json methods = json::object();
  for (const auto& [name, set] : results) {
    const bool same = set == orders;
    agree = agree && same;
    rep.line(name + ": " + std::to_string(set.size()) + " orders" + (same ? "" : "  DISAGREES"));
    methods[name] = set.size();
  }
  rep.data()["methods"] = methods;
  rep.data()["agree"] = agree;

  rep.section("maximal graded orders containing A (" + std::to_string(orders.size()) + ")");
  json list = json::array();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) rep.line("");
    const std::string name = "maximal:" + std::to_string(i);
    describe_order(rep, name, orders[i]);
    list.push_back(order_record(name, orders[i]));
  }
  rep.data()["maximal"] = std::move(list);

  if (!agree) {
    for (const auto& [name, set] : results) {
      if (set == orders) continue;
      rep.section(name + " result");
      for (std::size_t i = 0; i < set.size(); ++i) describe_order(rep, name + ":" + std::to_string(i), set[i]);
    }
    return finish(rep, opt, kConsistencyFailure);
  }
  return finish(rep, opt, kOk);
}

CommandResult cmd_conjugate(const CGRSpec& spec, const CommandOptions& opt) {
  if (auto bad = require_valid(spec, opt)) return *bad;
  KTable k = k_table(spec);
  auto g = spec.group.find(opt.by);
  if (opt.by.empty() || !g) return failure(opt, kInputError, "--by needs a group element label");
  GradedOrder T = [&] { return select_order(k, opt.order); }();

  Report rep;
  GradedOrder image = conjugate_order(T, *g);
  rep.section("Psi_" + spec.group.label(*g) + "(" + opt.order + ")");
  describe_order(rep, opt.order, T);
  rep.line("");
  describe_order(rep, "image", image);
  const auto names = known_names(k, image);
  rep.line("  fixed point: " + std::string(image == T ? "yes" : "no"));
  if (!names.empty()) rep.line("  equals " + join(names, ", "));
  rep.data()["source"] = order_record(opt.order, T);
  rep.data()["by"] = spec.group.label(*g);
  rep.data()["image"] = order_record("image", image);
  rep.data()["fixed_point"] = image == T;
  rep.data()["equals"] = names;
  return finish(rep, opt, kOk);
}

CommandResult cmd_orbit(const CGRSpec& spec, const CommandOptions& opt) {
  if (auto bad = require_valid(spec, opt)) return *bad;
  KTable k = k_table(spec);
  GradedOrder T = select_order(k, opt.order);
  OrbitGraph graph = orbit_walk(T, opt.depth);

  Report rep;
  rep.section("conjugation walk from " + opt.order + " (depth " + std::to_string(opt.depth) + ")");
  json nodes = json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const std::string name = "n" + std::to_string(i);
    if (i) rep.line("");
    describe_order(rep, name, graph.nodes[i]);
    const auto names = known_names(k, graph.nodes[i]);
    if (!names.empty()) rep.line("  equals " + join(names, ", "));
    json record = order_record(name, graph.nodes[i]);
    record["equals"] = names;
    nodes.push_back(std::move(record));
  }
  rep.section("edges");
  json edges = json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    std::vector<std::string> out;
    for (const auto& e : graph.edges) {
      if (e.from != static_cast<int>(i)) continue;
      out.push_back(spec.group.label(e.by) + "->n" + std::to_string(e.to));
      edges.push_back({{"from", e.from}, {"by", spec.group.label(e.by)}, {"to", e.to}});
    }
    if (!out.empty()) rep.line("n" + std::to_string(i) + ": " + join(out, " "));
  }
  const bool escapes = std::find(graph.contains_A.begin(), graph.contains_A.end(), false) != graph.contains_A.end();
  rep.line(std::string("walk leaves the orders containing A: ") + (escapes ? "yes" : "no"));
  rep.data()["nodes"] = std::move(nodes);
  rep.data()["edges"] = std::move(edges);
  rep.data()["leaves_A"] = escapes;
  return finish(rep, opt, kOk);
}

CommandResult cmd_stg_check(const CGRSpec& spec, const CommandOptions& opt) {
  if (auto bad = require_valid(spec, opt)) return *bad;
  KTable k = k_table(spec);
  Report rep;
  bool all_pass = validate_k(k);
  rep.section("k");
  rep.line(std::string("cocycle law: ") + (all_pass ? "pass" : "FAIL"));
  json runs = json::array();
  const auto gammas = gamma_enumerate(k);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    StgContext ctx(k, gammas[i]);
    rep.section("gamma " + std::to_string(i) + ": " + gamma_inline(gammas[i]));
    json laws = json::array();
    for (const auto& law : check_stg_laws(ctx)) {
      all_pass = all_pass && law.pass;
      std::string l = (law.pass ? "pass " : "FAIL ") + law.law + " (" + std::to_string(law.cases) + " cases)";
      if (!law.pass) l += ": " + law.counterexample;
      rep.line(l);
      laws.push_back({{"law", law.law}, {"pass", law.pass}, {"cases", law.cases}, {"counterexample", law.counterexample}});
    }
    runs.push_back({{"gamma", function_to_json(gammas[i])}, {"laws", std::move(laws)}});
  }
  rep.data()["runs"] = std::move(runs);
  rep.data()["pass"] = all_pass;
  return finish(rep, opt, all_pass ? kOk : kConsistencyFailure);
}

CommandResult run_command(const std::string& command, const std::string& path, const CommandOptions& opt) {
  CGRSpec spec;
  try {
    spec = load_spec(path);
  } catch (const SpecError& e) {
    return failure(opt, kInputError, path + ": " + e.what());
  } catch (const std::exception& e) {
    return failure(opt, kInputError, e.what());
  }
  try {
    if (command == "validate") return cmd_validate(spec, opt);
    if (command == "maternal") return cmd_maternal(spec, opt);
    if (command == "maximal") return cmd_maximal(spec, opt);
    if (command == "conjugate") return cmd_conjugate(spec, opt);
    if (command == "orbit") return cmd_orbit(spec, opt);
    if (command == "stg-check") return cmd_stg_check(spec, opt);
    return failure(opt, kInputError, "unknown command '" + command + "'");
  } catch (const ConsistencyError& e) {
    return failure(opt, kConsistencyFailure, e.what());
  } catch (const std::invalid_argument& e) {
    return failure(opt, kInputError, e.what());
  }
}

}  // namespace gradorder
