#pragma once

#include "spp/json_io.hpp"
#include "spp/objective.hpp"
#include "spp/partition.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace spp {

struct Problem {
  AttributeMatrix matrix;
  std::size_t p = 0;
  ShapeFamily shapes = ShapeFamily::all(1, 1);
  std::optional<Objective> objective;
};

// Problem document:
//   {"matrix": [[...], ...], "p": 2,
//    "shapes": {"type": "all"} | {"type": "list", "shapes": [[...], ...]}
//            | {"type": "bounds", "lower": [...], "upper": [...]},
//    "objective": {...}}            // optional
// Throws ParseError or DimensionError.
Problem problem_from_json(const Json& doc);
Problem load_problem(const std::filesystem::path& path);

Json shapes_to_json(const ShapeFamily& shapes);
Json problem_to_json(const Problem& problem);

struct RandomProblemSpec {
  std::size_t max_k = 2;
  std::size_t max_n = 7;
  std::size_t max_p = 3;
  int min_entry = -5;
  int max_entry = 5;
};

struct RandomInstance {
  Problem problem;  // problem.objective is objectives.front()
  std::vector<Objective> objectives;
};

// Deterministic for a given seed: integer entries, a shape family of a
// randomly chosen kind, a linear and a sum_column_norm_pow objective.
RandomInstance random_instance(std::uint64_t seed, const RandomProblemSpec& spec = {});

}  // namespace spp
