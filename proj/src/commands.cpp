#include "spp/commands.hpp"

#include "spp/errors.hpp"
#include "spp/parallel.hpp"
#include "spp/solver.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace spp {
namespace {

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json header(const Problem& problem) {
  return {{"k", problem.matrix.rows()}, {"n", problem.matrix.cols()}, {"p", problem.p}};
}

std::string csv_row(const Matrix& m) {
  std::string line;
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    if (i > 0) line += ',';
    line += to_string(m.entries()[i]);
  }
  return line + "\n";
}

}  // namespace

Json counts_to_json(const EnumerationCounts& counts) {
  return {{"two_partitions", counts.two_partitions},
          {"generic_partitions", counts.generic_partitions},
          {"admissible_partitions", counts.admissible_partitions},
          {"candidates", counts.candidates},
          {"vertices", counts.vertices}};
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {exit_code::input, "", std::string("input error: ") + e.what()};
  } catch (const DimensionError& e) {
    return {exit_code::input, "", std::string("input error: ") + e.what()};
  } catch (const CapacityError& e) {
    return {exit_code::capacity, "", std::string("capacity exceeded: ") + e.what()};
  } catch (const OracleError& e) {
    return {exit_code::oracle, "", std::string("oracle failure: ") + e.what()};
  }
}

CommandResult run_vertices(const Problem& problem, const CommandOptions& options) {
  VertexReport report = enumerate_vertices(problem.matrix, problem.p, problem.shapes, options.polytope);
  CommandResult result;
  if (options.format == OutputFormat::csv) {
    for (const auto& v : report.vertices) result.output += csv_row(v);
    return result;
  }
  Json doc = header(problem);
  doc["counts"] = counts_to_json(report.counts);
  doc["vertices"] = Json::array();
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    Json entry = {{"matrix", matrix_to_json(report.vertices[i])}};
    if (options.with_partitions) {
      entry["partitions"] = Json::array();
      for (const auto& w : report.witnesses[i]) entry["partitions"].push_back(partition_to_json(w));
    }
    doc["vertices"].push_back(std::move(entry));
  }
  result.output = dump(doc);
  return result;
}

CommandResult run_solve(const Problem& problem, const CommandOptions& options) {
  if (!problem.objective) throw ParseError("solve needs an \"objective\" in the problem file");
  if (options.format != OutputFormat::json) throw ParseError("solve reports are JSON only");
  SolveReport report =
      solve(problem.matrix, problem.p, problem.shapes, *problem.objective, options.polytope.enumeration);
  Json doc = header(problem);
  doc["objective"] = problem.objective->kind();
  doc["value"] = rational_to_json(report.best_value);
  doc["partition"] = partition_to_json(report.best_partition);
  doc["matrix"] = matrix_to_json(report.best_matrix);
  doc["evaluations"] = report.evaluations;
  doc["counts"] = {{"two_partitions", report.counts.two_partitions},
                   {"generic_partitions", report.counts.generic_partitions},
                   {"admissible_partitions", report.counts.admissible_partitions}};
  return {exit_code::ok, dump(doc), ""};
}

CommandResult run_count(const Problem& problem, const CommandOptions& options) {
  VertexReport report = enumerate_vertices(problem.matrix, problem.p, problem.shapes, options.polytope);
  const EnumerationCounts& c = report.counts;
  if (options.format == OutputFormat::csv) {
    std::ostringstream out;
    out << "two_partitions,generic_partitions,admissible_partitions,candidates,vertices\n"
        << c.two_partitions << ',' << c.generic_partitions << ',' << c.admissible_partitions << ','
        << c.candidates << ',' << c.vertices << '\n';
    return {exit_code::ok, out.str(), ""};
  }
  Json doc = header(problem);
  doc["counts"] = counts_to_json(c);
  return {exit_code::ok, dump(doc), ""};
}

bool InstanceCheck::ok() const {
  return vertices_match && candidates_cover_vertices &&
         std::all_of(objectives.begin(), objectives.end(), [](const ObjectiveCheck& o) { return o.match; });
}

InstanceCheck check_instance(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                             const std::vector<Objective>& objectives, const CommandOptions& options) {
  require_brute_force_scale(a.cols(), p, options.brute);
  InstanceCheck check;

  CandidateSet candidates = candidate_vertices(a, p, shapes, options.polytope);
  const std::vector<bool> keep = vertex_flags(candidates, options.polytope);
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) check.fast_vertices.push_back(candidates.members[i]);
  check.counts = candidates.counts;
  check.counts.vertices = check.fast_vertices.size();

  BruteResult brute = brute_force(a, p, shapes, objectives, options.brute);
  check.all_partitions = brute.all_partitions;
  check.brute_vertices = std::move(brute.vertex_set);

  std::set_difference(check.brute_vertices.begin(), check.brute_vertices.end(), check.fast_vertices.begin(),
                      check.fast_vertices.end(), std::back_inserter(check.missing));
  std::set_difference(check.fast_vertices.begin(), check.fast_vertices.end(), check.brute_vertices.begin(),
                      check.brute_vertices.end(), std::back_inserter(check.extra));
  check.vertices_match = check.missing.empty() && check.extra.empty();
  check.candidates_cover_vertices =
      std::includes(candidates.members.begin(), candidates.members.end(), check.brute_vertices.begin(),
                    check.brute_vertices.end());

  for (std::size_t i = 0; i < objectives.size(); ++i) {
    SolveReport fast = solve(a, p, shapes, objectives[i], options.polytope.enumeration);
    ObjectiveCheck oc{objectives[i].kind(), fast.best_value, brute.best_values[i], false};
    oc.match = oc.fast == oc.brute;
    check.objectives.push_back(std::move(oc));
  }
  return check;
}

Json instance_check_to_json(const InstanceCheck& check) {
  auto matrices = [](const std::vector<PartitionMatrix>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(matrix_to_json(m));
    return arr;
  };
  Json doc;
  doc["counts"] = counts_to_json(check.counts);
  doc["all_partitions"] = check.all_partitions;
  doc["brute_force_vertices"] = check.brute_vertices.size();
  doc["vertex_sets_match"] = check.vertices_match;
  doc["candidates_cover_vertices"] = check.candidates_cover_vertices;
  if (!check.missing.empty()) doc["missing_vertices"] = matrices(check.missing);
  if (!check.extra.empty()) doc["extra_vertices"] = matrices(check.extra);
  doc["objectives"] = Json::array();
  for (const auto& o : check.objectives)
    doc["objectives"].push_back({{"type", o.kind},
                                 {"fast", rational_to_json(o.fast)},
                                 {"brute_force", rational_to_json(o.brute)},
                                 {"match", o.match}});
  doc["ok"] = check.ok();
  return doc;
}

namespace {

CommandResult finish_check(Json instances, bool all_ok) {
  Json doc = {{"instances", std::move(instances)}, {"all_match", all_ok}};
  CommandResult result{all_ok ? exit_code::ok : exit_code::mismatch, dump(doc), ""};
  if (!all_ok) result.message = "self-check mismatch between the fast path and the brute-force reference";
  return result;
}

}  // namespace

CommandResult run_check(const Problem& problem, const CommandOptions& options) {
  std::vector<Objective> objectives;
  if (problem.objective) objectives.push_back(*problem.objective);
  InstanceCheck check = check_instance(problem.matrix, problem.p, problem.shapes, objectives, options);
  Json entry = header(problem);
  entry.update(instance_check_to_json(check));
  return finish_check(Json::array({entry}), check.ok());
}

CommandResult run_check_random(const CommandOptions& options) {
  Json instances = Json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < options.random_count; ++i) {
    const std::uint64_t seed = options.seed + i;
    RandomInstance inst = random_instance(seed);
    InstanceCheck check =
        check_instance(inst.problem.matrix, inst.problem.p, inst.problem.shapes, inst.objectives, options);
    Json entry = header(inst.problem);
    entry["seed"] = seed;
    entry.update(instance_check_to_json(check));
    instances.push_back(std::move(entry));
    all_ok = all_ok && check.ok();
  }
  return finish_check(std::move(instances), all_ok);
}

CommandResult run_generate(const CommandOptions& options) {
  return {exit_code::ok, dump(problem_to_json(random_instance(options.seed).problem)), ""};
}

}  // namespace spp
