// ygraph: command-line front end for the younggraph library.
//
// Exit codes: 0 = finished and every checked statement holds, 2 = a
// counterexample was found, 1 = usage or internal error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

using namespace younggraph;
using ygraph::ordered_json;

namespace {

struct Globals {
  std::string out;
  std::string csv;
  std::string json;
  std::uint64_t seed = 42;
  unsigned threads = default_threads();
  std::optional<int> limit;
  bool timing = false;
};

Globals g;

void emit_json(const ordered_json& j) {
  ygraph::write_text(g.json.empty() ? g.out : g.json, j.dump(2) + "\n");
}

void emit_csv(const std::string& text) { ygraph::write_text(g.csv.empty() ? g.out : g.csv, text); }

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

class Stopwatch {
 public:
  void stamp(ygraph::VerdictReport& report) const {
    if (!g.timing) return;
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    report.set("wall_time_s", dt.count());
  }
  void stamp(ordered_json& j) const {
    if (!g.timing) return;
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    j["wall_time_s"] = dt.count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<MoveQuadruple> quadruples_up_to(int n_min, int n_max) {
  std::vector<MoveQuadruple> out;
  for (int n = std::max(1, n_min); n <= n_max; ++n)
    for (auto& q : enumerate_move_quadruples(n)) out.push_back(std::move(q));
  return out;
}

int finish(const ygraph::VerdictReport& report, bool extra_failure = false) {
  emit_json(report.json());
  return report.any_failure() || extra_failure ? 2 : 0;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::string kind = "partitions";
};

int run_enumerate(const EnumerateArgs& a) {
  ordered_json out = {{"command", "enumerate"}, {"n", a.n}, {"kind", a.kind}};
  ordered_json items = ordered_json::array();
  if (a.kind == "partitions") {
    for (const auto& p : enumerate_partitions(a.n)) items.push_back(p.str());
  } else if (a.kind == "quadruples") {
    for (const auto& q : enumerate_move_quadruples(a.n)) items.push_back(ygraph::quadruple_json(q));
  } else if (a.kind == "covers") {
    for (const auto& lambda : enumerate_partitions(a.n))
      for (const auto& [hat, move] : covers(lambda))
        items.push_back({{"lambda", lambda.str()}, {"lambda_hat", hat.str()}, {"move", to_string(move)}});
  } else {
    for (const auto& set : upper_sets(a.n, g.limit.value_or(kDefaultUpperSetLimit))) {
      ordered_json members = ordered_json::array();
      for (const auto& p : set) members.push_back(p.str());
      items.push_back(members);
    }
  }
  out["count"] = items.size();
  out["items"] = items;
  emit_json(out);
  return 0;
}

// ---- dim ----------------------------------------------------------------

struct DimArgs {
  std::string lambda;
  std::optional<std::string> mu;
  std::string method = "hook";
};

int run_dim(const DimArgs& a) {
  Partition lambda = Partition::parse(a.lambda);
  BigInt value;
  if (a.mu) value = skew_dim(lambda, Partition::parse(*a.mu));
  else if (a.method == "paths") value = dim_paths(lambda, g.limit.value_or(kDefaultPathLimit));
  else value = dim_hook(lambda);
  ygraph::write_text(g.out, value.get_str() + "\n");
  return 0;
}

// ---- project / dominates ------------------------------------------------

struct ProjectArgs {
  std::optional<std::string> lambda;
  std::optional<std::string> measure;
  int to = 0;
};

int run_project(const ProjectArgs& a) {
  if (a.lambda.has_value() == a.measure.has_value())
    throw std::invalid_argument("project: give exactly one of --lambda or --measure");
  Measure m = a.lambda ? Measure::atom(Partition::parse(*a.lambda)) : ygraph::read_measure(*a.measure);
  emit_json(ygraph::measure_json(project_to(m, a.to)));
  return 0;
}

struct DominatesArgs {
  std::string rho, rho_hat;
  std::string method = "flow";
};

int run_dominates(const DominatesArgs& a) {
  Measure rho = ygraph::read_measure(a.rho), rho_hat = ygraph::read_measure(a.rho_hat);
  ordered_json out = {{"command", "dominates"}, {"method", a.method}};
  if (a.method == "flow" || a.method == "both") {
    auto result = dominates_flow(rho, rho_hat);
    out["dominates"] = result.dominates;
    if (result.coupling) {
      ordered_json edges = ordered_json::array();
      for (const auto& e : *result.coupling)
        edges.push_back({{"source", e.source.str()}, {"target", e.target.str()}, {"mass", to_string(e.mass)}});
      out["coupling"] = edges;
    } else {
      out["coupling"] = nullptr;
    }
  }
  if (a.method == "upperset" || a.method == "both") {
    bool verdict = dominates_upperset(rho, rho_hat, g.limit.value_or(kDefaultUpperSetLimit));
    out["dominates_upperset"] = verdict;
    if (!out.contains("dominates")) out["dominates"] = verdict;
    if (a.method == "both" && out["dominates"] != verdict)
      throw std::logic_error("dominates: flow and upper-set deciders disagree");
  }
  emit_json(out);
  return 0;
}

// ---- verify -------------------------------------------------------------

struct SweepArgs {
  int n_min = 1;
  int n_max = 5;
  int vars = 0;  // N; 0 means the command default
  std::string t_list = "0,1/4,1/2,3/4,1";
  int n = 5;
  int p = 2;
  int max_p = JordanLimits{}.max_p;
};

int run_prop22(const SweepArgs& a) {
  Stopwatch clock;
  const int n_vars = a.vars ? a.vars : 10;
  ygraph::VerdictReport report("verify prop22", {{"n_min", a.n_min}, {"n_max", a.n_max}, {"N_max", n_vars}});
  struct Item {
    MoveQuadruple q;
    int vars;
  };
  std::vector<Item> items;
  for (auto& q : quadruples_up_to(a.n_min, a.n_max))
    for (int v = q.lambda_hat.length(); v <= n_vars; ++v) items.push_back({q, v});
  auto checks = parallel_map(items, [](const Item& it) { return check_prop22(it.q, it.vars); }, g.threads);
  long disagreements = 0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    ordered_json row = ygraph::check_json(items[k].q, checks[k].direct);
    row["N"] = items[k].vars;
    row["x"] = checks[k].x;
    row["y"] = checks[k].y;
    row["reduced_verdict"] = to_string(checks[k].reduced);
    row["reduced_agrees"] = checks[k].agrees;
    disagreements += checks[k].agrees ? 0 : 1;
    report.add(std::move(row));
  }
  report.add_summary("reduced_disagreements", disagreements);
  clock.stamp(report);
  return finish(report, disagreements > 0);
}

int run_cor23(const SweepArgs& a) {
  Stopwatch clock;
  ygraph::VerdictReport report("verify cor23", {{"n_min", a.n_min}, {"n_max", a.n_max}});
  auto qs = quadruples_up_to(a.n_min, a.n_max);
  auto checks = parallel_map(qs, [](const MoveQuadruple& q) { return check_cor23(q); }, g.threads);
  for (std::size_t k = 0; k < qs.size(); ++k) report.add(ygraph::check_json(qs[k], checks[k]));
  clock.stamp(report);
  return finish(report);
}

int run_conj_monomial(const SweepArgs& a) {
  Stopwatch clock;
  ygraph::VerdictReport report("verify conj-monomial", {{"n_min", a.n_min}, {"n_max", a.n_max}});
  for (int n = std::max(1, a.n_min); n <= a.n_max; ++n) {
    auto qs = enumerate_move_quadruples(n);
    if (qs.empty()) continue;
    const KostkaTable table(2 * n - 1);
    auto checks = parallel_map(qs, [&](const MoveQuadruple& q) { return check_conj22(q, table); }, g.threads);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      ordered_json row = ygraph::quadruple_json(qs[k]);
      row["variables"] = 2 * n - 1;
      row["verdict"] = to_string(checks[k].verdict);
      row["min_coefficient"] = checks[k].min_coefficient.get_str();
      if (checks[k].first_failing) {
        row["first_failing_monomial"] = checks[k].first_failing->str();
        row["failing_coefficient"] = checks[k].failing_coefficient.get_str();
      }
      report.add(std::move(row));
    }
  }
  clock.stamp(report);
  return finish(report);
}

int run_conj_hl(const SweepArgs& a) {
  Stopwatch clock;
  const int n_vars = a.vars ? a.vars : 4;
  auto ts = parse_rational_list(a.t_list);
  if (ts.empty()) throw std::invalid_argument("verify conj-hl: --t needs at least one value");
  ordered_json t_strings = ordered_json::array();
  for (const auto& t : ts) {
    t_strings.push_back(to_string(t));
    if (t < 0 || t > 1)
      std::cerr << "warning: t = " << to_string(t) << " lies outside [0,1]; the inequality is only claimed there\n";
  }
  ygraph::VerdictReport report("verify conj-hl",
                               {{"n_min", a.n_min}, {"n_max", a.n_max}, {"N_max", n_vars}, {"t", t_strings}});
  struct Item {
    MoveQuadruple q;
    int vars;
  };
  std::vector<Item> items;
  for (auto& q : quadruples_up_to(a.n_min, a.n_max))
    for (int v = q.lambda_hat.length(); v <= n_vars; ++v) items.push_back({q, v});
  auto checks = parallel_map(
      items,
      [&](const Item& it) {
        HallLittlewoodOnes hl;
        std::vector<Conj24Check> out;
        for (const auto& t : ts) out.push_back(check_conj24(it.q, it.vars, t, hl));
        return out;
      },
      g.threads);
  long unequal_at_one = 0;
  for (std::size_t k = 0; k < items.size(); ++k)
    for (std::size_t s = 0; s < ts.size(); ++s) {
      const auto& c = checks[k][s];
      ordered_json row = ygraph::check_json(items[k].q, c.check);
      row["N"] = items[k].vars;
      row["t"] = to_string(ts[s]);
      row["prefactor_vanishes"] = c.prefactor_vanishes;
      row["limit_taken"] = c.limit_taken;
      if (ts[s] == 1 && items[k].q.tag != CaseTag::between && !c.check.equality) ++unequal_at_one;
      report.add(std::move(row));
    }
  report.add_summary("non_equalities_at_t1", unequal_at_one);
  clock.stamp(report);
  return finish(report);
}

int run_conj_jordan(const SweepArgs& a) {
  Stopwatch clock;
  JordanLimits limits;
  if (g.limit) limits.max_n = *g.limit;
  limits.max_p = a.max_p;
  auto counts = enumerate_jordan_counts(a.n, a.p, limits, g.threads);
  ygraph::VerdictReport report("verify conj-jordan", {{"n", a.n}, {"p", a.p}});
  report.set("n", a.n);
  report.set("p", a.p);
  ordered_json dims = ordered_json::object();
  BigInt total = 0;
  for (const auto& [lambda, count] : counts.by_type) {
    dims[lambda.str()] = count.get_str();
    total += count;
  }
  report.set("dim_t", dims);
  for (const auto& q : enumerate_move_quadruples(a.n)) report.add(ygraph::check_json(q, check_conj14(q, counts)));
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(a.p), UnipotentMatrix::free_entries(a.n));
  report.add_summary("matrices", total.get_str());
  report.add_summary("total_matches_group_order", total == expected);
  clock.stamp(report);
  return finish(report, total != expected);
}

// ---- Thoma experiments --------------------------------------------------

struct ThomaArgs {
  std::string alpha;
  std::string beta;
  int n = 8;
  int trials = 50;
  std::string arithmetic = "float";
  int r = 2;
  std::string k_list = "50,100,200,400";
};

int run_sample_lln(const ThomaArgs& a) {
  auto params = ThomaParams::parse(a.alpha, a.beta);
  const Arithmetic mode = a.arithmetic == "exact" ? Arithmetic::exact : Arithmetic::floating;
  std::cerr << "sample-lln: " << a.arithmetic << " arithmetic, " << a.trials << " trials, seeds " << g.seed << ".."
            << g.seed + static_cast<std::uint64_t>(a.trials) - 1 << "\n";
  auto rows = lln_experiment(params, a.n, a.trials, g.seed, mode, g.threads);
  std::ostringstream out;
  out << "trial,n,kind,index,value\n";
  for (const auto& row : rows)
    out << row.trial << ',' << row.n << ',' << row.kind << ',' << row.index << ',' << decimal(row.value) << '\n';
  emit_csv(out.str());
  return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed integer \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

int run_thoma_converge(const ThomaArgs& a) {
  auto params = ThomaParams::parse(a.alpha, a.beta);
  auto rows = convergence_experiment(params, a.r, parse_int_list(a.k_list));
  std::ostringstream out;
  out << "k,r,tv,tv_exact\n";
  for (const auto& row : rows) out << row.k << ',' << row.r << ',' << decimal(row.tv.get_d()) << ',' << to_string(row.tv) << '\n';
  emit_csv(out.str());
  return 0;
}

int run_coherence(const ThomaArgs& a) {
  Stopwatch clock;
  auto params = ThomaParams::parse(a.alpha, a.beta);
  Specialization spec(params);
  ordered_json levels = ordered_json::array();
  bool all = true;
  Measure previous = extreme_measure(0, spec);
  for (int n = 1; n <= a.n; ++n) {
    Measure current = extreme_measure(n, spec);
    bool holds = project_one(current) == previous;
    all = all && holds;
    levels.push_back({{"n", n}, {"total_mass", to_string(current.total_mass())}, {"projection_matches", holds}});
    previous = std::move(current);
  }
  ordered_json out = {{"command", "coherence"},
                      {"parameters", {{"alpha", a.alpha}, {"beta", a.beta}, {"n", a.n}}},
                      {"levels", levels},
                      {"summary", {{"all_hold", all}}}};
  clock.stamp(out);
  emit_json(out);
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the Young graph: dimensions, projections of measures, "
               "stochastic dominance, Schur and Hall-Littlewood checks, Thoma measures."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", g.out, "Write the main output here instead of stdout");
  app.add_option("--csv", g.csv, "Write CSV output here");
  app.add_option("--json", g.json, "Write the JSON report here");
  app.add_option("--seed", g.seed, "Base seed; trial t uses seed + t");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit", g.limit, "Override the size guard of the enumeration the command uses");
  app.add_flag("--timing", g.timing, "Add wall time to JSON reports (makes them run-dependent)");

  int code = 0;

  EnumerateArgs en;
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "List the level Y_n: partitions in decreasing lexicographic order, box-move quadruples with "
                   "their case tags, covers (immediate dominance neighbours), or upper sets of the dominance order");
  cmd_enum->add_option("--n", en.n, "Level")->required()->check(CLI::NonNegativeNumber);
  cmd_enum->add_option("--kind", en.kind)->check(CLI::IsMember({"partitions", "quadruples", "covers", "upper-sets"}));
  cmd_enum->callback([&] { code = run_enumerate(en); });

  DimArgs dm;
  auto* cmd_dim = app.add_subcommand(
      "dim", "Number of increasing paths from the empty diagram to lambda (hook-length formula, or path "
             "recursion with --method paths); with --mu, the number of paths mu -> lambda");
  cmd_dim->add_option("--lambda", dm.lambda, "Partition, e.g. 3,1")->required();
  cmd_dim->add_option("--mu", dm.mu, "Inner partition for skew dimension");
  cmd_dim->add_option("--method", dm.method)->check(CLI::IsMember({"hook", "paths"}));
  cmd_dim->callback([&] { code = run_dim(dm); });

  ProjectArgs pj;
  auto* cmd_project = app.add_subcommand(
      "project", "Push a measure on Y_n down to Y_k: mass at lambda moves to each mu below it with weight "
                 "dim(mu)/dim(lambda), iterated level by level");
  cmd_project->add_option("--lambda", pj.lambda, "Project the unit atom at this partition");
  cmd_project->add_option("--measure", pj.measure, "Project a measure read from JSON");
  cmd_project->add_option("--to", pj.to, "Target level")->required();
  cmd_project->callback([&] { code = run_project(pj); });

  DominatesArgs dom;
  auto* cmd_dom = app.add_subcommand(
      "dominates", "Decide stochastic dominance of two equal-mass measures in the dominance order: an exact "
                   "max-flow coupling search (returns the coupling) or comparison of masses of all upper sets");
  cmd_dom->add_option("--rho", dom.rho, "Upper measure (JSON)")->required();
  cmd_dom->add_option("--rho-hat", dom.rho_hat, "Lower measure (JSON)")->required();
  cmd_dom->add_option("--method", dom.method)->check(CLI::IsMember({"flow", "upperset", "both"}));
  cmd_dom->callback([&] { code = run_dominates(dom); });

  auto* cmd_verify = app.add_subcommand("verify", "Sweep the elementary monotonicity inequality and its variants");
  cmd_verify->require_subcommand(1);
  cmd_verify->fallthrough();
  SweepArgs sw_prop, sw_cor, sw_mono, sw_hl, sw_jordan;
  auto add_range = [&](CLI::App* c, SweepArgs& sw, int default_max) {
    sw.n_max = default_max;
    c->add_option("--n-min", sw.n_min, "Smallest level")->capture_default_str();
    c->add_option("--n-max", sw.n_max, "Largest level")->capture_default_str();
  };

  auto* v_prop = cmd_verify->add_subcommand(
      "prop22", "Schur functions at 1^N: s_lambda s_mu_hat >= s_lambda_hat s_mu when the removed box lies above "
                "the moved box (<= when below), for every N from l(lambda_hat) to --N; also checks that the "
                "reduced form x^2(y^2-1) vs (x^2-1)y^2 gives the same sign");
  add_range(v_prop, sw_prop, 8);
  v_prop->add_option("--N", sw_prop.vars, "Largest number of variables (default 10)");
  v_prop->callback([&] { code = run_prop22(sw_prop); });

  auto* v_cor = cmd_verify->add_subcommand(
      "cor23", "Dimension ratios: dim(mu_hat)/dim(lambda_hat) >= dim(mu)/dim(lambda) when the removed box lies "
               "above the moved box (<= when below)");
  add_range(v_cor, sw_cor, 8);
  v_cor->callback([&] { code = run_cor23(sw_cor); });

  auto* v_mono = cmd_verify->add_subcommand(
      "conj-monomial", "Conjectured monomial positivity of s_lambda s_mu_hat - s_lambda_hat s_mu (reversed when "
                       "the removed box lies below), decided on all monomials of degree 2n-1");
  add_range(v_mono, sw_mono, 6);
  v_mono->callback([&] { code = run_conj_monomial(sw_mono); });

  auto* v_hl = cmd_verify->add_subcommand(
      "conj-hl", "Conjectured Hall-Littlewood version: (1-t^a) Q_mu_hat/Q_lambda_hat against (1-t^b) Q_mu/Q_lambda "
                 "at 1^N, a and b the column-height drops at the removed box, for each t in --t and each N up to --N");
  add_range(v_hl, sw_hl, 5);
  v_hl->add_option("--N", sw_hl.vars, "Largest number of variables (default 4)");
  v_hl->add_option("--t", sw_hl.t_list, "Comma-separated rationals in [0,1]")->capture_default_str();
  v_hl->callback([&] { code = run_conj_hl(sw_hl); });

  auto* v_jordan = cmd_verify->add_subcommand(
      "conj-jordan", "Conjectured finite-field version: the dimension counts are numbers of unipotent "
                     "upper-triangular matrices over F_p with given Jordan type (and given type of the top-left "
                     "corner), found by full enumeration");
  v_jordan->add_option("--n", sw_jordan.n, "Matrix size")->required();
  v_jordan->add_option("--p", sw_jordan.p, "Prime field size")->required();
  v_jordan->add_option("--max-p", sw_jordan.max_p, "Guard on p")->capture_default_str();
  v_jordan->callback([&] { code = run_conj_jordan(sw_jordan); });

  ThomaArgs th;
  auto* cmd_lln = app.add_subcommand(
      "sample-lln", "Grow random diagrams lambda(n) from the extreme measure with parameters (alpha, beta) and "
                    "report lambda_i/n and lambda'_j/n, which tend to alpha_i and beta_j; CSV columns "
                    "trial,n,kind,index,value");
  cmd_lln->add_option("--alpha", th.alpha, "Comma-separated rationals, strictly decreasing; omit for none");
  cmd_lln->add_option("--beta", th.beta, "Comma-separated rationals, strictly decreasing; omit for none");
  cmd_lln->add_option("--n", th.n, "Diagram size")->required()->check(CLI::PositiveNumber);
  cmd_lln->add_option("--trials", th.trials)->capture_default_str()->check(CLI::PositiveNumber);
  cmd_lln->add_option("--arithmetic", th.arithmetic, "float (long chains) or exact")
      ->capture_default_str()
      ->check(CLI::IsMember({"float", "exact"}));
  cmd_lln->callback([&] { code = run_sample_lln(th); });

  auto* cmd_conv = app.add_subcommand(
      "thoma-converge", "Total variation between the projection to level r of the atom at a deterministic "
                        "diagram with row/column frequencies (alpha, beta) and the extreme measure at level r; "
                        "CSV columns k,r,tv,tv_exact");
  cmd_conv->add_option("--alpha", th.alpha, "Comma-separated rationals; omit for none");
  cmd_conv->add_option("--beta", th.beta, "Comma-separated rationals; omit for none");
  cmd_conv->add_option("--r", th.r)->capture_default_str();
  cmd_conv->add_option("--k", th.k_list, "Comma-separated sizes")->capture_default_str();
  cmd_conv->callback([&] { code = run_thoma_converge(th); });

  auto* cmd_coh = app.add_subcommand(
      "coherence", "Check that the extreme measures dim(lambda) s_lambda(alpha, beta) on consecutive levels are "
                   "related by the projection, exactly, up to level --n");
  cmd_coh->add_option("--alpha", th.alpha, "Comma-separated rationals; omit for none");
  cmd_coh->add_option("--beta", th.beta, "Comma-separated rationals; omit for none");
  cmd_coh->add_option("--n", th.n)->capture_default_str();
  cmd_coh->callback([&] { code = run_coherence(th); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
