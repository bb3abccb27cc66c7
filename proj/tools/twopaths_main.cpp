// Command-line front end: solve / oracle / gen / compose / verify / bench.
// Exit codes: 0 = yes (or valid), 1 = no (or invalid), 2 = unsupported case,
// 3 = usage or runtime error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twopaths/derand.hpp"
#include "twopaths/gadgets.hpp"
#include "twopaths/instance_gen.hpp"
#include "twopaths/oracle.hpp"
#include "twopaths/partition.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::string join_vertices(const twopaths::Path& p) {
  std::string line;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(p.vertices()[i]);
  }
  return line;
}

twopaths::LengthConstraint constraint_arg(const std::string& text, const char* flag) {
  auto c = twopaths::LengthConstraint::from_text(text);
  if (!c) {
    throw CLI::ValidationError(flag, "expected 'le k', 'eq k', 'ge k', or 'inf'");
  }
  return *c;
}

// Shared by solve and oracle: print the answer, map it to the exit code.
int report_answer(const std::optional<twopaths::Solution>& sol) {
  if (!sol) {
    std::cout << "NO\n";
    return 1;
  }
  std::cout << "YES\n" << join_vertices(sol->p1) << "\n" << join_vertices(sol->p2) << "\n";
  return 0;
}

int run_solve(const std::string& instance_path, const twopaths::SolveConfig& config) {
  auto inst = twopaths::parse_instance(read_file(instance_path));
  auto result = twopaths::solve(inst, config);
  if (result.status == twopaths::SolveStatus::Unsupported) {
    const char* what = result.case_id.kind == twopaths::CaseKind::Unconstrained
                           ? "unconstrained case"
                           : "open case";
    std::cout << "UNSUPPORTED: " << what << "; use `oracle`\n";
    return 2;
  }
  return report_answer(result.solution);
}

int run_oracle(const std::string& instance_path, const twopaths::OracleLimits& limits) {
  auto inst = twopaths::parse_instance(read_file(instance_path));
  return report_answer(twopaths::oracle_solve(inst, limits));
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  auto inst = twopaths::parse_instance(read_file(instance_path));
  auto sol = twopaths::parse_solution(inst.graph, read_file(solution_path));
  if (!sol) throw std::runtime_error("solution file says NO; nothing to verify");
  auto verdict = twopaths::verify_solution(inst, sol->p1, sol->p2);
  if (verdict.valid()) {
    std::cout << "VALID\n";
    return 0;
  }
  std::cout << "INVALID\n";
  for (const auto& v : verdict.violations) std::cout << v.describe() << "\n";
  return 1;
}

int run_compose(const std::vector<std::string>& input_paths, const std::string& out_path,
                const std::string& report_path) {
  std::vector<twopaths::ProblemInstance> inputs;
  inputs.reserve(input_paths.size());
  for (const auto& p : input_paths) inputs.push_back(twopaths::parse_instance(read_file(p)));
  auto [composed, report] = twopaths::or_compose_many(inputs);
  write_file(out_path, twopaths::serialize_instance(composed));
  emit(report_path, report.to_key_values());
  return 0;
}

int run_bench(const std::vector<std::string>& case_names, int k1, int k2, int extra_n,
              int extra_m, std::uint64_t seed, int repeat,
              const twopaths::SolveConfig& config) {
  std::cout << "case\tn\tm\tk1\tk2\ttrials\twall_ms\n";
  for (const auto& name : case_names) {
    auto kind = twopaths::case_from_name(name);
    if (!kind || !twopaths::case_supported(*kind)) {
      throw std::runtime_error("bench needs a supported case, got '" + name + "'");
    }
    twopaths::PlantedShape shape{*kind, k1, k2, extra_n, extra_m};
    for (int rep = 0; rep < repeat; ++rep) {
      auto [inst, cert] = twopaths::gen_planted(shape, seed + (std::uint64_t)rep);
      auto start = std::chrono::steady_clock::now();
      auto result = twopaths::solve(inst, config);
      auto wall = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      if (result.status != twopaths::SolveStatus::Found) {
        throw std::runtime_error("planted " + name + " instance came back unsolved");
      }
      // Trials actually run before the early exit, not the planned total.
      std::uint64_t trials = (std::uint64_t)(result.winning_trial + 1);
      std::ostringstream row;
      row << name << '\t' << inst.graph.vertex_count() << '\t' << inst.graph.edge_count()
          << '\t' << k1 << '\t' << k2 << '\t' << trials << '\t';
      row.setf(std::ios::fixed);
      row.precision(3);
      row << wall << '\n';
      std::cout << row.str();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two edge-disjoint paths under per-path length constraints"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, out_path, report_path, certificate_path;
  twopaths::SolveConfig config;
  std::string mode_name = "random";
  twopaths::OracleLimits oracle_limits;

  auto* solve_cmd =
      app.add_subcommand("solve", "Solve an instance with the randomized partition solver");
  solve_cmd->add_option("instance", instance_path, "instance file")->required();
  solve_cmd->add_option("--delta", config.delta, "failure probability bound")
      ->capture_default_str();
  solve_cmd->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  solve_cmd->add_option("--mode", mode_name, "random | universal")
      ->check(CLI::IsMember({"random", "universal"}))
      ->capture_default_str();
  solve_cmd->add_option("--threads", config.threads, "worker threads for trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "Solve exhaustively (any constraint shape)");
  oracle_cmd->add_option("instance", instance_path, "instance file")->required();
  oracle_cmd->add_option("--max-n", oracle_limits.max_vertices, "vertex-count guard")
      ->capture_default_str();
  oracle_cmd->add_option("--max-steps", oracle_limits.max_steps, "search-step guard")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
  verify_cmd->add_option("instance", instance_path, "instance file")->required();
  verify_cmd->add_option("solution", solution_path, "solution file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  std::uint64_t gen_seed = 0;
  auto* random_cmd = gen_cmd->add_subcommand("random", "Uniform random graph + terminals");
  int gen_n = 8, gen_m = 12;
  std::string rule_name = "distinct", c1_text = "le 3", c2_text = "inf";
  random_cmd->add_option("--n", gen_n, "vertices")->capture_default_str();
  random_cmd->add_option("--m", gen_m, "edges")->capture_default_str();
  random_cmd->add_option("--terminals", rule_name, "distinct | coincident | crossing")
      ->check(CLI::IsMember({"distinct", "coincident", "crossing"}))
      ->capture_default_str();
  random_cmd->add_option("--c1", c1_text, "first constraint, e.g. 'le 3'")
      ->capture_default_str();
  random_cmd->add_option("--c2", c2_text, "second constraint")->capture_default_str();
  random_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  random_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* planted_cmd = gen_cmd->add_subcommand("planted", "Instance with an embedded solution");
  std::string planted_case = "short_short";
  twopaths::PlantedShape shape;
  planted_cmd->add_option("--case", planted_case, "supported case name, e.g. short_short")
      ->capture_default_str();
  planted_cmd->add_option("--k1", shape.k1, "first bound")->capture_default_str();
  planted_cmd->add_option("--k2", shape.k2, "second bound")->capture_default_str();
  planted_cmd->add_option("--extra-n", shape.extra_n, "decoy vertices")->capture_default_str();
  planted_cmd->add_option("--extra-m", shape.extra_m, "decoy edges")->capture_default_str();
  planted_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  planted_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  planted_cmd->add_option("--certificate", certificate_path,
                          "also write the planted solution here");

  auto* compose_cmd =
      app.add_subcommand("compose", "OR-compose instances into one (yes iff any input is yes)");
  std::vector<std::string> compose_inputs;
  compose_cmd->add_option("inputs", compose_inputs, "instance files")->required();
  compose_cmd->add_option("-o,--output", out_path, "composed instance file")->required();
  compose_cmd->add_option("--report", report_path, "key=value report (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on planted instances (TSV)");
  std::vector<std::string> bench_cases = {"short_short"};
  int bench_k1 = 2, bench_k2 = 2, bench_extra_n = 0, bench_extra_m = 0, bench_repeat = 1;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--case", bench_cases, "supported case names")->capture_default_str();
  bench_cmd->add_option("--k1", bench_k1, "first bound")->capture_default_str();
  bench_cmd->add_option("--k2", bench_k2, "second bound")->capture_default_str();
  bench_cmd->add_option("--extra-n", bench_extra_n, "decoy vertices")->capture_default_str();
  bench_cmd->add_option("--extra-m", bench_extra_m, "decoy edges")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "base RNG seed")->capture_default_str();
  bench_cmd->add_option("--repeat", bench_repeat, "instances per case")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--delta", config.delta, "failure probability bound")
      ->capture_default_str();
  bench_cmd->add_option("--threads", config.threads, "worker threads for trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  }

  try {
    config.mode = mode_name == "universal" ? twopaths::SolveConfig::Mode::Universal
                                           : twopaths::SolveConfig::Mode::Random;
    if (solve_cmd->parsed()) return run_solve(instance_path, config);
    if (oracle_cmd->parsed()) return run_oracle(instance_path, oracle_limits);
    if (verify_cmd->parsed()) return run_verify(instance_path, solution_path);
    if (gen_cmd->parsed()) {
      if (random_cmd->parsed()) {
        twopaths::TerminalRule rule = twopaths::TerminalRule::Distinct;
        if (rule_name == "coincident") rule = twopaths::TerminalRule::Coincident;
        if (rule_name == "crossing") rule = twopaths::TerminalRule::CrossingCycle;
        auto inst = twopaths::gen_random(gen_n, gen_m, rule, constraint_arg(c1_text, "--c1"),
                                         constraint_arg(c2_text, "--c2"), gen_seed);
        emit(out_path, twopaths::serialize_instance(inst));
      } else {
        auto kind = twopaths::case_from_name(planted_case);
        if (!kind || !twopaths::case_supported(*kind)) {
          throw std::runtime_error("planted generation needs a supported case, got '" +
                                   planted_case + "'");
        }
        shape.kind = *kind;
        auto [inst, cert] = twopaths::gen_planted(shape, gen_seed);
        emit(out_path, twopaths::serialize_instance(inst));
        if (!certificate_path.empty()) {
          write_file(certificate_path, twopaths::serialize_solution(cert));
        }
      }
      return 0;
    }
    if (compose_cmd->parsed()) return run_compose(compose_inputs, out_path, report_path);
    if (bench_cmd->parsed()) {
      return run_bench(bench_cases, bench_k1, bench_k2, bench_extra_n, bench_extra_m,
                       bench_seed, bench_repeat, config);
    }
    throw std::runtime_error("no subcommand selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
