#pragma once

// Subcommand bodies shared by the command-line tool and the test suites.
// Each returns the exact bytes the tool writes, so determinism checks can
// compare outputs without spawning processes.

#include "spp/problem.hpp"
#include "spp/reference.hpp"
#include "spp/vertices.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace spp {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input = 2;
inline constexpr int capacity = 3;
inline constexpr int oracle = 4;
inline constexpr int mismatch = 5;
}  // namespace exit_code

enum class OutputFormat { json, csv };

struct CommandOptions {
  OutputFormat format = OutputFormat::json;
  bool with_partitions = false;
  PolytopeOptions polytope;  // also carries the thread count
  BruteForceLimits brute;
  std::uint64_t seed = 1;
  std::size_t random_count = 0;  // check: number of generated instances
};

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string output;   // report, destined for stdout or --output
  std::string message;  // diagnostics, destined for stderr
};

CommandResult run_vertices(const Problem& problem, const CommandOptions& options);
CommandResult run_solve(const Problem& problem, const CommandOptions& options);
CommandResult run_count(const Problem& problem, const CommandOptions& options);
// Compares the fast path with the brute-force reference on one problem.
CommandResult run_check(const Problem& problem, const CommandOptions& options);
// Same, on options.random_count generated instances seeded from options.seed.
CommandResult run_check_random(const CommandOptions& options);
// Writes one generated problem document for options.seed.
CommandResult run_generate(const CommandOptions& options);

// Maps library exceptions onto exit codes.
CommandResult guarded(const std::function<CommandResult()>& body);

struct ObjectiveCheck {
  std::string kind;
  Rational fast;
  Rational brute;
  bool match = false;
};

struct InstanceCheck {
  EnumerationCounts counts;
  std::vector<PartitionMatrix> fast_vertices;
  std::vector<PartitionMatrix> brute_vertices;
  std::vector<PartitionMatrix> missing;  // brute-force vertices the fast path lacks
  std::vector<PartitionMatrix> extra;    // fast-path vertices brute force rejects
  bool vertices_match = false;
  bool candidates_cover_vertices = false;  // brute vertices among pre-filter candidates
  std::size_t all_partitions = 0;
  std::vector<ObjectiveCheck> objectives;

  bool ok() const;
};

InstanceCheck check_instance(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                             const std::vector<Objective>& objectives, const CommandOptions& options);

Json counts_to_json(const EnumerationCounts& counts);
Json instance_check_to_json(const InstanceCheck& check);

}  // namespace spp
