// selfsim: command-line front end for the G_n library.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 budget refusal.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "selfsim/selfsim.hpp"

using namespace selfsim;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  unsigned lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  if (text.empty()) throw UsageError("missing --n");
  Range r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(text, &used));
      if (used != text.size()) throw UsageError("bad --n value: " + text);
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = static_cast<unsigned>(std::stoul(a, &used));
      if (used != a.size()) throw UsageError("bad --n value: " + text);
      r.hi = static_cast<unsigned>(std::stoul(b, &used));
      if (used != b.size()) throw UsageError("bad --n value: " + text);
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad --n value: " + text);
  }
  return r;
}

unsigned single_n(const std::string& text) {
  const auto r = parse_range(text);
  if (r.lo != r.hi) throw UsageError("this subcommand takes a single --n");
  if (r.lo < 3) throw UsageError("--n must be at least 3");
  return r.lo;
}

struct Settings {
  std::string n;
  std::string word;
  std::string u, v;
  std::string format = "text";
  std::string report;
  unsigned levels = 0;
  unsigned depth = 2;
  std::uint64_t bound = 0;
  std::uint64_t seed = kDefaultSeed;
  bool randomize = false;
  std::size_t budget_degree = QuotientBudget{}.max_degree;
  int precision_digits = 50;
  std::size_t epsilon_samples = VerifyOptions{}.epsilon_samples;
  std::size_t contraction_samples = VerifyOptions{}.contraction_samples;
  std::size_t parity_samples = VerifyOptions{}.parity_samples;
};

// Rendering --------------------------------------------------------------------

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

std::string csv_cell(const json& j) {
  std::string s = scalar_text(j);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

// Objects print as "key: value" lines; a "rows" array prints as a table.
void render(const json& out, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << out.dump(2) << "\n";
    return;
  }
  const bool tabular = out.contains("rows") && out["rows"].is_array();
  if (format == "csv") {
    const json rows = tabular ? out["rows"] : json::array({out});
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << keys[k];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << csv_cell(row.value(keys[k], json()));
      os << "\n";
    }
    return;
  }
  for (auto it = out.begin(); it != out.end(); ++it) {
    if (it.key() == "rows") continue;
    os << it.key() << ": " << scalar_text(it.value()) << "\n";
  }
  if (tabular) {
    for (const auto& row : out["rows"]) {
      std::string line;
      for (auto it = row.begin(); it != row.end(); ++it) line += (line.empty() ? "" : "  ") + it.key() + "=" + scalar_text(it.value());
      os << line << "\n";
    }
  }
}

// Subcommands --------------------------------------------------------------------

GeneratorWord need_word(unsigned n, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_word(n, text);
}

json cmd_wp(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto w = need_word(n, s.word, "--word");
  return {{"n", n}, {"word", to_string(w)}, {"canonical", to_string(w.canonical())}, {"trivial", is_identity(w)}};
}

json cmd_eq(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto u = need_word(n, s.u, "--u"), v = need_word(n, s.v, "--v");
  return {{"n", n}, {"u", to_string(u)}, {"v", to_string(v)}, {"equal", are_equal(u, v)}};
}

json cmd_order(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto w = need_word(n, s.word, "--word");
  const std::uint64_t bound = s.bound ? s.bound : default_order_bound(n);
  const auto o = element_order(w, bound);
  return {{"n", n}, {"word", to_string(w)}, {"order", o ? json(*o) : json(nullptr)}, {"bound", bound}};
}

json cmd_decompose(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto w = need_word(n, s.word, "--word");
  const auto d = decompose(w);
  json states = json::array(), factors = json::array();
  for (const auto& st : d.states) states.push_back(to_string(st.canonical()));
  for (const auto& syl : w.syllables()) factors.push_back(to_cycle_string(pow(sigma(n, syl.gen), syl.exp)));
  return {{"n", n}, {"word", to_string(w)}, {"states", states}, {"root", to_cycle_string(d.root)}, {"root_factors", factors}};
}

json cmd_portrait(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto w = need_word(n, s.word, "--word");
  if (s.depth == 0) throw UsageError("--depth must be positive");
  std::size_t vertices = 0, level_size = 1;
  for (unsigned l = 0; l < s.depth; ++l, level_size *= n) vertices += level_size;
  if (vertices > s.budget_degree) throw BudgetExceeded(vertices, s.budget_degree);
  const auto p = portrait(w, s.depth);
  json rows = json::array();
  level_size = 1;
  for (unsigned l = 0; l < s.depth; ++l, level_size *= n)
    for (std::size_t i = 0; i < level_size; ++i) {
      const auto& label = p.label(l, i);
      if (label.is_identity()) continue;
      const auto v = l == 0 ? Vertex{} : vertex_at(i, n, l);
      rows.push_back({{"vertex", l == 0 ? std::string("root") : to_string(v, n)}, {"label", to_cycle_string(label)}});
    }
  return {{"n", n}, {"word", to_string(w)}, {"depth", s.depth}, {"trivial", p.is_trivial()}, {"rows", rows}};
}

json cmd_invariants(const Settings& s) {
  const unsigned n = single_n(s.n);
  const auto w = need_word(n, s.word, "--word");
  json out = {{"n", n},
              {"word", to_string(w)},
              {"abelianization", abelianize(w).entries},
              {"epsilon", epsilon(w)},
              {"epsilon1", epsilon1(w)},
              {"in_commutator", in_commutator(w)},
              {"fixes_first_level", fixes_first_level(w)}};
  if (n == 4) {
    out["chi4"] = chi4(w);
    out["in_K4"] = in_K4(w);
  }
  if (n >= 5 && n % 2 == 1) out["in_Kn"] = in_Kn_odd(w);
  json h = json::object();
  for (unsigned d : rigid_kernel_moduli(n)) h[std::to_string(d)] = in_Hnd(w, d);
  out["in_H"] = h;
  return out;
}

json cmd_quotients(const Settings& s) {
  const unsigned n = single_n(s.n);
  const unsigned levels = s.levels ? s.levels : 2;
  const QuotientBudget budget{s.budget_degree};
  const auto table = index_table(n, levels, budget);
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"level", r.level},
                    {"order", to_string(r.order)},
                    {"index", to_string(r.index)},
                    {"formula_index", to_string(r.formula_index)},
                    {"matches", r.index == r.formula_index},
                    {"partial_ratio", to_string(r.partial_ratio, s.precision_digits)}});
  return {{"n", n}, {"rows", rows}};
}

json cmd_hausdorff(const Settings& s) {
  const auto range = parse_range(s.n);
  if (range.lo < 3 || range.hi < range.lo) throw UsageError("--n range must satisfy 3 <= lo <= hi");
  const unsigned levels = s.levels ? s.levels : 2;
  const QuotientBudget budget{s.budget_degree};
  for (unsigned n = range.lo; n <= range.hi; ++n) check_budget(n, levels, budget);
  json rows = json::array();
  for (unsigned n = range.lo; n <= range.hi; ++n) {
    json row = {{"n", n}, {"closed_form", to_string(hausdorff_closed_form(n), s.precision_digits)}};
    const auto empirical = hausdorff_empirical(n, levels, budget);
    for (unsigned m = 1; m <= levels; ++m) {
      row["empirical_m" + std::to_string(m)] = to_string(empirical[m - 1], s.precision_digits);
      row["formula_m" + std::to_string(m)] = to_string(hausdorff_formula_partial(n, m), s.precision_digits);
    }
    rows.push_back(row);
  }
  return {{"levels", levels}, {"rows", rows}};
}

int cmd_verify(const Settings& s, std::ostream& os) {
  const auto range = parse_range(s.n);
  VerifyOptions opt;
  opt.seed = s.seed;
  opt.budget.max_degree = s.budget_degree;
  opt.epsilon_samples = s.epsilon_samples;
  opt.contraction_samples = s.contraction_samples;
  opt.parity_samples = s.parity_samples;
  const auto report = run_all(range.lo, range.hi, opt);
  const json j = report.to_json();
  if (!s.report.empty()) {
    std::ofstream f(s.report);
    if (!f) throw UsageError("cannot write report to " + s.report);
    f << j.dump(2) << "\n";
  }
  if (s.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    json rows = json::array();
    for (const auto& c : report.checks)
      rows.push_back({{"claim_id", c.claim_id}, {"status", to_string(c.status)}, {"millis", c.millis}});
    render({{"n_min", report.n_min}, {"n_max", report.n_max}, {"summary", scalar_text(j["summary"].dump())}, {"rows", rows}},
           s.format, os);
  }
  return report.any_failed() ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the self-similar groups G_n = <a_1, ..., a_n>"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with default option values");
  Settings s;

  auto common = [&](CLI::App* sub, bool range_ok) {
    sub->add_option("--n", s.n, range_ok ? "alphabet size or range lo..hi" : "alphabet size");
    sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--seed", s.seed, "seed for random samples");
    sub->add_flag("--randomize", s.randomize, "draw a fresh seed");
    sub->add_option("--budget-degree", s.budget_degree, "largest level-action degree n^m to compute");
    sub->add_option("--precision-digits", s.precision_digits, "digits printed for real values")->check(CLI::Range(1, 90));
  };
  auto* wp = app.add_subcommand("wp", "decide whether a word is trivial");
  common(wp, false);
  wp->add_option("--word", s.word, "word such as a1*a2^-1");
  auto* eq = app.add_subcommand("eq", "decide whether two words are equal");
  common(eq, false);
  eq->add_option("--u", s.u, "first word");
  eq->add_option("--v", s.v, "second word");
  auto* order = app.add_subcommand("order", "element order up to a bound");
  common(order, false);
  order->add_option("--word", s.word, "word");
  order->add_option("--bound", s.bound, "largest order tried (default 4(n-1)^2)");
  auto* dec = app.add_subcommand("decompose", "first-level states and root permutation");
  common(dec, false);
  dec->add_option("--word", s.word, "word");
  auto* por = app.add_subcommand("portrait", "nontrivial vertex labels to a depth");
  common(por, false);
  por->add_option("--word", s.word, "word");
  por->add_option("--depth", s.depth, "number of levels");
  auto* inv = app.add_subcommand("invariants", "abelianization and exponent-sum memberships");
  common(inv, false);
  inv->add_option("--word", s.word, "word");
  auto* quo = app.add_subcommand("quotients", "orders and indices of level quotients");
  common(quo, false);
  quo->add_option("--levels", s.levels, "largest level (default 2)");
  auto* hau = app.add_subcommand("hausdorff", "closed-form and empirical Hausdorff dimension");
  common(hau, true);
  hau->add_option("--levels", s.levels, "largest level (default 2)");
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  common(ver, true);
  ver->add_option("--report", s.report, "write the JSON report here");
  ver->add_option("--epsilon-samples", s.epsilon_samples, "random words per n for the epsilon check");
  ver->add_option("--contraction-samples", s.contraction_samples, "random words per n for the contraction check");
  ver->add_option("--parity-samples", s.parity_samples, "random words per n for the parity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (ver->parsed() && s.n.empty()) s.n = "3..8";
  if (s.randomize) s.seed = std::random_device{}() ^ (static_cast<std::uint64_t>(std::random_device{}()) << 32);

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") return cmd_verify(s, std::cout);
    json out;
    if (name == "wp") out = cmd_wp(s);
    else if (name == "eq") out = cmd_eq(s);
    else if (name == "order") out = cmd_order(s);
    else if (name == "decompose") out = cmd_decompose(s);
    else if (name == "portrait") out = cmd_portrait(s);
    else if (name == "invariants") out = cmd_invariants(s);
    else if (name == "quotients") out = cmd_quotients(s);
    else if (name == "hausdorff") out = cmd_hausdorff(s);
    render(out, s.format, std::cout);
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << " (raise --budget-degree to allow it)\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const WordParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
