// Command-line front end: vertex enumeration, optimization, counting and
// brute-force cross-checking of shaped partition problems.

#include "spp/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Flags {
  std::string problem_path;
  std::string output_path;
  std::string format = "json";
  bool with_partitions = false;
  unsigned threads = 1;
  std::size_t max_candidates = spp::PolytopeOptions{}.max_candidates;
  std::uint64_t max_assembly_nodes = spp::EnumerationLimits{}.max_assembly_nodes;
  std::size_t max_two_partitions = spp::EnumerationLimits{}.max_two_partitions;
  std::uint64_t caratheodory_budget = spp::PolytopeOptions{}.caratheodory_budget;
  bool force = false;
  std::uint64_t seed = 1;
  std::size_t random = 0;
};

spp::CommandOptions to_options(const Flags& f) {
  spp::CommandOptions o;
  o.format = f.format == "csv" ? spp::OutputFormat::csv : spp::OutputFormat::json;
  o.with_partitions = f.with_partitions;
  o.polytope.enumeration.threads = std::max(1u, f.threads);
  o.polytope.enumeration.max_assembly_nodes = f.max_assembly_nodes;
  o.polytope.enumeration.max_two_partitions = f.max_two_partitions;
  o.polytope.max_candidates = f.max_candidates;
  o.polytope.caratheodory_budget = f.caratheodory_budget;
  o.brute.force = f.force;
  o.seed = f.seed;
  o.random_count = f.random;
  return o;
}

void add_common(CLI::App* cmd, Flags& f, bool needs_problem) {
  auto* path = cmd->add_option("problem", f.problem_path, "Problem file (JSON)");
  if (needs_problem) path->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", f.output_path, "Write the report to PATH instead of stdout");
  cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--max-candidates", f.max_candidates, "Cap on distinct candidate matrices");
  cmd->add_option("--max-assembly-nodes", f.max_assembly_nodes, "Cap on partition-assembly search nodes");
  cmd->add_option("--max-two-partitions", f.max_two_partitions, "Cap on generic 2-partitions");
  cmd->add_option("--caratheodory-budget", f.caratheodory_budget,
                  "Affine bases the exhaustive vertex test may try before switching to simplex");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex enumeration and convex maximization over shaped partition polytopes"};
  app.require_subcommand(1);
  Flags flags;

  auto* vertices = app.add_subcommand("vertices", "Enumerate the vertices of the polytope");
  add_common(vertices, flags, true);
  vertices->add_flag("--with-partitions", flags.with_partitions, "List every generating partition per vertex");

  auto* solve = app.add_subcommand("solve", "Maximize the problem's objective over admissible partitions");
  add_common(solve, flags, true);

  auto* count = app.add_subcommand("count", "Print partition, candidate and vertex counts");
  add_common(count, flags, true);

  auto* check = app.add_subcommand("check", "Compare against the brute-force reference");
  add_common(check, flags, false);
  check->add_flag("--force", flags.force, "Lift the brute-force size guards");
  check->add_option("--random", flags.random, "Check N generated instances instead of a problem file");
  check->add_option("--seed", flags.seed, "Seed of the first generated instance");

  auto* generate = app.add_subcommand("generate", "Write a random problem file");
  generate->add_option("-o,--output", flags.output_path, "Write the problem to PATH instead of stdout");
  generate->add_option("--seed", flags.seed, "Instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : spp::exit_code::input;
  }

  const spp::CommandOptions options = to_options(flags);
  auto run_on_file = [&](auto command) {
    return spp::guarded([&] { return command(spp::load_problem(flags.problem_path), options); });
  };

  spp::CommandResult result;
  if (vertices->parsed()) {
    result = run_on_file(spp::run_vertices);
  } else if (solve->parsed()) {
    result = run_on_file(spp::run_solve);
  } else if (count->parsed()) {
    result = run_on_file(spp::run_count);
  } else if (check->parsed()) {
    if (flags.random > 0 && !flags.problem_path.empty()) {
      std::cerr << "check: pass either a problem file or --random, not both\n";
      return spp::exit_code::input;
    }
    if (flags.random > 0) {
      result = spp::guarded([&] { return spp::run_check_random(options); });
    } else if (flags.problem_path.empty()) {
      std::cerr << "check: a problem file or --random N is required\n";
      return spp::exit_code::input;
    } else {
      result = run_on_file(spp::run_check);
    }
  } else {
    result = spp::guarded([&] { return spp::run_generate(options); });
  }

  if (!result.message.empty()) std::cerr << result.message << '\n';
  if (!result.output.empty()) {
    if (flags.output_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(flags.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << flags.output_path << "'\n";
        return spp::exit_code::input;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}
