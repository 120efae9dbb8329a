#include "indset/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "indset/annealing.hpp"
#include "indset/edge_list.hpp"
#include "indset/exact_oracle.hpp"
#include "indset/glauber.hpp"
#include "indset/ising.hpp"
#include "indset/reduction.hpp"
#include "indset/sample_k.hpp"
#include "indset/thresholds.hpp"

namespace indset::cli {

namespace {

using json = nlohmann::ordered_json;

json config_json(const RunConfig& rc) {
  return json{{"seed", rc.seed},
              {"threads", rc.threads},
              {"format", rc.format},
              {"c_mix", rc.c_mix},
              {"c_loop", rc.c_loop},
              {"c_samples", rc.c_samples},
              {"c_anneal", rc.c_anneal},
              {"c_reduction", rc.c_reduction},
              {"exact_limit", rc.exact_limit},
              {"ising_exact_limit", rc.ising_exact_limit},
              {"degree_cap", rc.degree_cap},
              {"time_budget_s", rc.time_budget_s},
              {"n_samples_override", rc.n_samples_override}};
}

SamplerConfig sampler_config(const RunConfig& rc) {
  SamplerConfig cfg;
  cfg.seed = rc.seed;
  cfg.mixing.c_mix = rc.c_mix;
  cfg.c_loop = rc.c_loop;
  cfg.c_samples = rc.c_samples;
  cfg.n_samples_override = rc.n_samples_override;
  cfg.threads = rc.threads;
  if (rc.time_budget_s > 0)
    cfg.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(rc.time_budget_s));
  return cfg;
}

// Decimal scientific string for a value given as its natural log; stays
// finite where exp() would overflow.
std::string decimal_from_log(double ln_x) {
  if (ln_x == -HUGE_VAL) return "0";
  double log10_x = ln_x / std::log(10.0);
  double int_part = std::floor(log10_x);
  double mantissa = std::pow(10.0, log10_x - int_part);
  if (mantissa >= 10.0) {  // rounding overflow at the boundary
    mantissa /= 10.0;
    int_part += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9fe%+d", mantissa,
                static_cast<int>(int_part));
  return buf;
}

json trace_json(const SearchTrace& trace) {
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    const char* branch = it.branch == SearchBranch::halt ? "halt"
                         : it.branch == SearchBranch::up ? "up"
                                                         : "down";
    iterations.push_back(json{{"lambda", it.lambda},
                              {"kappa", it.kappa},
                              {"branch", branch},
                              {"grid_remaining", it.grid_remaining}});
  }
  return json{{"outcome", trace.outcome == SearchOutcome::found ? "found" : "fallback"},
              {"guarantee_valid", trace.guarantee_valid},
              {"initial_grid_size", trace.initial_grid_size},
              {"loop_length", trace.loop_length},
              {"n_per_iteration", trace.n_per_iteration},
              {"eps_prime", trace.eps_prime},
              {"iterations", iterations}};
}

void emit_trace_lines(const SearchTrace& trace, std::ostream& err) {
  for (const auto& it : trace.iterations) {
    const char* branch = it.branch == SearchBranch::halt ? "halt"
                         : it.branch == SearchBranch::up ? "up"
                                                         : "down";
    err << json{{"lambda", it.lambda},
                {"kappa", it.kappa},
                {"branch", branch},
                {"grid_remaining", it.grid_remaining}}
               .dump()
        << '\n';
  }
}

void print_table(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_table(value, out, name);
    } else {
      out << name << '\t' << (value.is_string() ? value.get<std::string>()
                                                : value.dump())
          << '\n';
    }
  }
}

void emit(const json& j, const RunConfig& rc, std::ostream& out) {
  if (rc.format == "table")
    print_table(j, out);
  else
    out << j.dump(2) << '\n';
}

json vertex_set_json(const VertexSet& s) {
  json arr = json::array();
  for (uint32_t v : s.to_sorted()) arr.push_back(v);
  return arr;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_thresholds(const RunConfig& rc, uint32_t delta, double alpha,
                   bool has_alpha, std::ostream& out) {
  json j{{"version", 1},
         {"command", "thresholds"},
         {"delta", delta},
         {"lambda_c", lambda_c(delta)},
         {"alpha_c", alpha_c(delta)},
         {"lambda_star_triangle_free", lambda_star_triangle_free(delta)}};
  if (has_alpha) {
    j["alpha"] = alpha;
    j["lambda_star"] = lambda_star(alpha, delta);
  }
  j["config"] = config_json(rc);
  emit(j, rc, out);
  return 0;
}

int cmd_poly(const RunConfig& rc, const std::string& path, std::ostream& out) {
  Graph g = read_edge_list_file(path);
  auto poly = independence_polynomial(g, rc.exact_limit);
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
  json j{{"version", 1},
         {"command", "poly"},
         {"n", g.vertex_count()},
         {"m", g.edge_count()},
         {"max_degree", g.max_degree()},
         {"degree", poly.degree()},
         {"coefficients", coeffs},
         {"config", config_json(rc)}};
  emit(j, rc, out);
  return 0;
}

int cmd_sample_hc(const RunConfig& rc, const std::string& path, double lambda,
                  double eps, uint32_t n_samples, std::ostream& out) {
  Graph g = read_edge_list_file(path);
  MixingSchedule schedule{rc.c_mix};
  auto sets = sample_batch(g, lambda, eps, n_samples, schedule, Rng(rc.seed),
                           rc.threads);
  if (rc.format == "json") {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(vertex_set_json(s));
    json j{{"version", 1},
           {"command", "sample-hc"},
           {"lambda", lambda},
           {"eps", eps},
           {"n_samples", n_samples},
           {"guarantee_valid", hardcore_guarantee(g, lambda)},
           {"steps_per_sample", schedule.steps(g.vertex_count(), eps)},
           {"samples", arr},
           {"config", config_json(rc)}};
    emit(j, rc, out);
  } else {
    // One sample per line, sorted vertex ids.
    for (const auto& s : sets) {
      bool first = true;
      for (uint32_t v : s.to_sorted()) {
        if (!first) out << ' ';
        out << v;
        first = false;
      }
      out << '\n';
    }
  }
  return 0;
}

int cmd_sample_k(const RunConfig& rc, const std::string& path, uint32_t k,
                 double alpha, double eps, bool triangle_free, bool trace,
                 std::ostream& out, std::ostream& err) {
  Graph g = read_edge_list_file(path);
  SamplerConfig cfg = sampler_config(rc);
  cfg.epsilon = eps;
  cfg.mode = triangle_free ? SampleMode::triangle_free : SampleMode::general;
  SampleKResult res = sample_k(g, k, alpha, cfg);
  if (trace) emit_trace_lines(res.trace, err);
  json j{{"version", 1},
         {"command", "sample-k"},
         {"k", k},
         {"alpha", alpha},
         {"eps", eps},
         {"mode", triangle_free ? "triangle_free" : "general"},
         {"set", vertex_set_json(res.set)},
         {"trace", trace_json(res.trace)},
         {"config", config_json(rc)}};
  emit(j, rc, out);
  return 0;
}

int cmd_count_ik(const RunConfig& rc, const std::string& path, uint32_t k,
                 double alpha, double eps, std::ostream& out) {
  Graph g = read_edge_list_file(path);
  SamplerConfig cfg = sampler_config(rc);
  CountEstimate est = count_ik(g, k, alpha, eps, cfg, rc.c_anneal, rc.exact_limit);
  json j{{"version", 1},
         {"command", "count-ik"},
         {"k", k},
         {"alpha", alpha},
         {"eps", eps},
         {"estimate", decimal_from_log(est.log_estimate)},
         {"log_estimate", est.log_estimate},
         {"levels", est.levels},
         {"guarantee_valid", est.guarantee_valid},
         {"config", config_json(rc)}};
  emit(j, rc, out);
  return 0;
}

int cmd_reduce(const RunConfig& rc, const std::string& path, double alpha,
               double eps, uint64_t r_override, const std::string& out_graph,
               const std::string& out_sidecar, std::ostream& out) {
  Graph g = read_edge_list_file(path);
  ReductionInstance inst = build_instance(g, alpha, eps, rc.c_reduction, r_override);
  if (!out_graph.empty()) write_edge_list_file(out_graph, inst.g_prime);
  json sidecar{{"version", 1},
               {"a", inst.gadget.a},
               {"b", inst.gadget.b},
               {"delta", inst.gadget.delta},
               {"lambda", inst.gadget.lambda},
               {"alpha", inst.gadget.alpha},
               {"n_h", inst.gadget.n_h},
               {"r", inst.r},
               {"k", inst.k},
               {"n_total", inst.n_total},
               {"eps", inst.epsilon}};
  if (!out_sidecar.empty()) {
    std::ofstream f(out_sidecar);
    if (!f) throw precondition_error("cannot open sidecar path: " + out_sidecar);
    f << sidecar.dump(2) << '\n';
  }
  json j{{"version", 1},
         {"command", "reduce"},
         {"gadget", sidecar},
         {"g_prime_vertices", inst.g_prime.vertex_count()},
         {"g_prime_edges", inst.g_prime.edge_count()},
         {"graph_out", out_graph},
         {"sidecar_out", out_sidecar},
         {"config", config_json(rc)}};
  emit(j, rc, out);
  return 0;
}

int cmd_verify_reduction(const RunConfig& rc, const std::string& path,
                         const std::string& sidecar_path, std::ostream& out) {
  Graph g = read_edge_list_file(path);
  std::ifstream f(sidecar_path);
  if (!f) throw precondition_error("cannot open sidecar: " + sidecar_path);
  json sidecar = json::parse(f, nullptr, true);
  ReductionInstance inst;
  inst.gadget.a = sidecar.at("a").get<uint32_t>();
  inst.gadget.b = sidecar.at("b").get<uint32_t>();
  inst.gadget.delta = sidecar.at("delta").get<uint32_t>();
  inst.gadget.lambda = sidecar.at("lambda").get<double>();
  inst.gadget.alpha = sidecar.at("alpha").get<double>();
  inst.gadget.n_h = sidecar.at("n_h").get<uint32_t>();
  inst.r = sidecar.at("r").get<uint64_t>();
  inst.k = sidecar.at("k").get<uint64_t>();
  inst.n_total = sidecar.at("n_total").get<uint64_t>();
  inst.epsilon = sidecar.at("eps").get<double>();
  ReductionReport rep = verify_reduction(g, inst, rc.exact_limit, rc.degree_cap);
  double variance = gadget_variance_floor(inst.gadget);
  json j{{"version", 1},
         {"command", "verify-reduction"},
         {"ln_ratio", rep.ln_ratio},
         {"within_eps", rep.within_eps},
         {"log_ik_g_prime", rep.log_ik_g_prime},
         {"log_ik_rh", rep.log_ik_rh},
         {"log_z_g", rep.log_z_g},
         {"per_size_within", rep.per_size_within},
         {"per_size_log_error", rep.per_size_log_error},
         {"gadget_variance", variance},
         {"variance_floor", 0.00384 / inst.gadget.delta},
         {"config", config_json(rc)}};
  emit(j, rc, out);
  return 0;
}

int cmd_ising_count(const RunConfig& rc, const std::string& path, double b,
                    uint32_t k, double alpha, double eps, double lambda_max,
                    std::ostream& out) {
  Graph g = read_edge_list_file(path);
  SamplerConfig cfg = sampler_config(rc);
  CountEstimate est = count_coefficient(g, k, alpha, b, lambda_max, eps, cfg,
                                        rc.c_anneal, rc.ising_exact_limit);
  uint32_t delta = effective_delta(g.max_degree());
  json j{{"version", 1},
         {"command", "ising-count"},
         {"b", b},
         {"k", k},
         {"alpha", alpha},
         {"eps", eps},
         {"lambda_max", lambda_max},
         {"b_c", IsingParams{b, lambda_max, delta}.b_c()},
         {"estimate", decimal_from_log(est.log_estimate)},
         {"log_estimate", est.log_estimate},
         {"levels", est.levels},
         {"guarantee_valid", est.guarantee_valid}};
  // Conjectured threshold density: clique occupancy at the user ceiling.
  // No theorem backs this value; it is reported for orientation only.
  if (delta + 1 <= 24)
    j["alpha_clique_conjecture"] =
        ising_clique_occupancy_conjecture(delta, b, lambda_max);
  else
    j["alpha_clique_conjecture"] = nullptr;
  j["config"] = config_json(rc);
  emit(j, rc, out);
  return 0;
}

int cmd_bench(const RunConfig& rc, const std::string& suite,
              std::vector<uint32_t> ladder, std::ostream& out,
              std::ostream& err) {
  if (ladder.empty()) ladder = {50, 100, 200, 400};
  using clock = std::chrono::steady_clock;
  if (suite == "glauber") {
    out << "suite,n,steps,seconds,steps_per_sec\n";
    for (uint32_t n : ladder) {
      Graph g = gen_random_regular(n, 3, rc.seed);
      ChainState chain(g, Rng(rc.seed).child(1));
      uint64_t steps = 2'000'000;
      auto start = clock::now();
      chain.run(steps, 1.0);
      double secs = std::chrono::duration<double>(clock::now() - start).count();
      out << "glauber," << n << ',' << steps << ',' << secs << ','
          << static_cast<double>(steps) / secs << '\n';
    }
    return 0;
  }
  if (suite == "sample-k") {
    out << "suite,n,runs,total_seconds,seconds_per_run\n";
    for (uint32_t n : ladder) {
      Graph g = gen_random_regular(n, 3, rc.seed);
      SamplerConfig cfg = sampler_config(rc);
      cfg.epsilon = 0.5;
      if (cfg.n_samples_override == 0) cfg.n_samples_override = 64;
      uint32_t k = std::max<uint32_t>(1, n / 10);
      int runs = 3;
      auto start = clock::now();
      for (int i = 0; i < runs; ++i) {
        cfg.seed = rc.seed + i;
        sample_k(g, k, 0.2, cfg);
      }
      double secs = std::chrono::duration<double>(clock::now() - start).count();
      out << "sample-k," << n << ',' << runs << ',' << secs << ','
          << secs / runs << '\n';
    }
    return 0;
  }
  err << nlohmann::ordered_json{
             {"error",
              {{"class", "usage"},
               {"message", "unknown bench suite: '" + suite +
                               "'; available suites: glauber, sample-k"}}}}
             .dump()
      << '\n';
  return 2;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"hard-core model sampling and counting toolkit"};
  app.require_subcommand(1);

  RunConfig rc;
  app.add_option("--seed", rc.seed, "master RNG seed")->envname("INDSET_SEED");
  app.add_option("--threads", rc.threads, "worker pool size (0 = cores)")
      ->envname("INDSET_THREADS");
  app.add_option("--format", rc.format, "output format: json | table")
      ->check(CLI::IsMember({"json", "table"}))
      ->envname("INDSET_FORMAT");
  app.add_option("--c-mix", rc.c_mix, "mixing schedule constant")
      ->envname("INDSET_C_MIX");
  app.add_option("--c-loop", rc.c_loop, "search loop length constant")
      ->envname("INDSET_C_LOOP");
  app.add_option("--c-samples", rc.c_samples, "per-iteration sample constant")
      ->envname("INDSET_C_SAMPLES");
  app.add_option("--c-anneal", rc.c_anneal, "per-level sample constant")
      ->envname("INDSET_C_ANNEAL");
  app.add_option("--c-reduction", rc.c_reduction, "replication constant")
      ->envname("INDSET_C_REDUCTION");
  app.add_option("--exact-limit", rc.exact_limit, "exact-oracle vertex cap")
      ->envname("INDSET_EXACT_LIMIT");
  app.add_option("--ising-exact-limit", rc.ising_exact_limit,
                 "Ising oracle vertex cap")
      ->envname("INDSET_ISING_EXACT_LIMIT");
  app.add_option("--degree-cap", rc.degree_cap, "poly_power degree cap")
      ->envname("INDSET_DEGREE_CAP");
  app.add_option("--time-budget", rc.time_budget_s,
                 "wall-clock budget in seconds (0 = unlimited)")
      ->envname("INDSET_TIME_BUDGET");
  app.add_option("--n-samples-override", rc.n_samples_override,
                 "replace the theoretical per-iteration N (clears guarantees)")
      ->envname("INDSET_N_SAMPLES_OVERRIDE");

  // thresholds
  uint32_t delta = 3;
  double alpha = 0.0;
  auto* sub_thresholds = app.add_subcommand("thresholds", "threshold formulas");
  sub_thresholds->add_option("--delta", delta, "maximum degree")->required();
  auto* alpha_opt = sub_thresholds->add_option("--alpha", alpha, "target density");

  // poly
  std::string graph_path;
  auto* sub_poly = app.add_subcommand("poly", "exact independence polynomial");
  sub_poly->add_option("--graph", graph_path, "edge-list file")->required();

  // sample-hc
  double lambda = 1.0, eps = 0.05;
  uint32_t n_samples = 1;
  auto* sub_hc = app.add_subcommand("sample-hc", "hard-core Glauber samples");
  sub_hc->add_option("--graph", graph_path, "edge-list file")->required();
  sub_hc->add_option("--lambda", lambda, "fugacity")->required();
  sub_hc->add_option("--eps", eps, "target TV distance");
  sub_hc->add_option("--n-samples", n_samples, "number of samples");

  // sample-k
  uint32_t k = 0;
  bool triangle_free = false, trace = false;
  auto* sub_k = app.add_subcommand("sample-k", "fixed-size independent set");
  sub_k->add_option("--graph", graph_path, "edge-list file")->required();
  sub_k->add_option("--k", k, "target size")->required();
  sub_k->add_option("--alpha", alpha, "density bound")->required();
  sub_k->add_option("--eps", eps, "target TV distance");
  sub_k->add_flag("--triangle-free", triangle_free, "triangle-free regime");
  sub_k->add_flag("--trace", trace, "emit per-iteration JSON lines on stderr");

  // count-ik
  auto* sub_count = app.add_subcommand("count-ik", "estimate i_k(G)");
  sub_count->add_option("--graph", graph_path, "edge-list file")->required();
  sub_count->add_option("--k", k, "target size")->required();
  sub_count->add_option("--alpha", alpha, "density bound")->required();
  sub_count->add_option("--eps", eps, "relative error target");

  // reduce
  uint64_t r_override = 0;
  std::string out_graph, out_sidecar;
  auto* sub_reduce = app.add_subcommand("reduce", "build hardness instance");
  sub_reduce->add_option("--graph", graph_path, "edge-list file")->required();
  sub_reduce->add_option("--alpha", alpha, "target density")->required();
  sub_reduce->add_option("--eps", eps, "target accuracy")->required();
  sub_reduce->add_option("--r", r_override, "replication override");
  sub_reduce->add_option("--out-graph", out_graph, "G' edge-list output path");
  sub_reduce->add_option("--out-sidecar", out_sidecar, "instance JSON output path");

  // verify-reduction
  std::string sidecar_path;
  auto* sub_verify = app.add_subcommand("verify-reduction",
                                        "exact reduction-equation check");
  sub_verify->add_option("--graph", graph_path, "edge-list file")->required();
  sub_verify->add_option("--sidecar", sidecar_path, "instance JSON")->required();

  // ising-count
  double b = 0.5, lambda_max = 1.0;
  auto* sub_ising = app.add_subcommand("ising-count", "estimate c_k(G,B)");
  sub_ising->add_option("--graph", graph_path, "edge-list file")->required();
  sub_ising->add_option("--B", b, "edge weight in (0,1]")->required();
  sub_ising->add_option("--k", k, "target magnetization")->required();
  sub_ising->add_option("--alpha", alpha, "density bound")->required();
  sub_ising->add_option("--eps", eps, "relative error target");
  sub_ising->add_option("--lambda-max", lambda_max, "fugacity grid ceiling");

  // bench
  std::string suite;
  std::vector<uint32_t> ladder;
  auto* sub_bench = app.add_subcommand("bench", "timing suites");
  sub_bench->add_option("--suite", suite, "suite name")->required();
  sub_bench->add_option("--ladder", ladder, "vertex-count ladder");

  // Global options may appear after the subcommand name.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<std::string> cli_args = args;
  std::vector<char*> argv;
  std::string prog = "indset";
  argv.push_back(prog.data());
  for (auto& a : cli_args) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << json{{"error", {{"class", "usage"}, {"message", e.what()}}}}.dump()
        << '\n';
    return 2;
  }

  if (rc.threads == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    rc.threads = hw == 0 ? 1 : hw;
  }

  try {
    if (*sub_thresholds)
      return cmd_thresholds(rc, delta, alpha, alpha_opt->count() > 0, out);
    if (*sub_poly) return cmd_poly(rc, graph_path, out);
    if (*sub_hc) return cmd_sample_hc(rc, graph_path, lambda, eps, n_samples, out);
    if (*sub_k)
      return cmd_sample_k(rc, graph_path, k, alpha, eps, triangle_free, trace,
                          out, err);
    if (*sub_count) return cmd_count_ik(rc, graph_path, k, alpha, eps, out);
    if (*sub_reduce)
      return cmd_reduce(rc, graph_path, alpha, eps, r_override, out_graph,
                        out_sidecar, out);
    if (*sub_verify) return cmd_verify_reduction(rc, graph_path, sidecar_path, out);
    if (*sub_ising)
      return cmd_ising_count(rc, graph_path, b, k, alpha, eps, lambda_max, out);
    if (*sub_bench) return cmd_bench(rc, suite, ladder, out, err);
  } catch (const precondition_error& e) {
    err << json{{"error", {{"class", "precondition"}, {"message", e.what()}}}}.dump()
        << '\n';
    return 3;
  } catch (const resource_error& e) {
    err << json{{"error", {{"class", "resource"}, {"message", e.what()}}}}.dump()
        << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << json{{"error", {{"class", "internal"}, {"message", e.what()}}}}.dump()
        << '\n';
    return 1;
  }
  err << json{{"error", {{"class", "usage"}, {"message", "no subcommand"}}}}.dump()
      << '\n';
  return 2;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace indset::cli
