#include "spp/problem.hpp"

#include "spp/errors.hpp"

#include <fstream>
#include <random>
#include <set>

namespace spp {
namespace {

std::size_t count_from(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> counts_from(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of nonnegative integers");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(count_from(x, what));
  return out;
}

ShapeFamily shapes_from_json(const Json& d, std::size_t n, std::size_t p) {
  if (!d.is_object() || !d.contains("type") || !d["type"].is_string())
    throw ParseError("\"shapes\" must be an object with a \"type\"");
  const std::string type = d["type"].get<std::string>();
  if (type == "all") return ShapeFamily::all(n, p);
  if (type == "list") {
    if (!d.contains("shapes") || !d["shapes"].is_array()) throw ParseError("shape list needs \"shapes\"");
    std::vector<Shape> shapes;
    for (const auto& s : d["shapes"]) shapes.push_back(Shape{counts_from(s, "shape entry")});
    return ShapeFamily::explicit_list(n, p, shapes);
  }
  if (type == "bounds") {
    if (!d.contains("lower") || !d.contains("upper")) throw ParseError("shape bounds need \"lower\" and \"upper\"");
    return ShapeFamily::bounds(n, p, counts_from(d["lower"], "lower bound"), counts_from(d["upper"], "upper bound"));
  }
  throw ParseError("unknown shapes type '" + type + "'");
}

}  // namespace

Problem problem_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
  static const std::set<std::string> known = {"matrix", "p", "shapes", "objective", "name", "description"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw ParseError("unknown problem key \"" + key + "\"");
  for (const char* key : {"matrix", "p", "shapes"})
    if (!doc.contains(key)) throw ParseError(std::string("problem is missing \"") + key + "\"");

  Problem problem;
  problem.matrix = matrix_from_json(doc["matrix"]);
  problem.p = count_from(doc["p"], "\"p\"");
  if (problem.p == 0) throw ParseError("\"p\" must be positive");
  problem.shapes = shapes_from_json(doc["shapes"], problem.matrix.cols(), problem.p);
  if (doc.contains("objective") && !doc["objective"].is_null()) {
    problem.objective = objective_from_json(doc["objective"]);
    problem.objective->require_compatible(problem.matrix, problem.p);
  }
  return problem;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path.string() + "'");
  return problem_from_json(parse_json_exact(in));
}

Json shapes_to_json(const ShapeFamily& shapes) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ShapeFamily::All>) {
          return {{"type", "all"}};
        } else if constexpr (std::is_same_v<T, ShapeFamily::Explicit>) {
          Json list = Json::array();
          for (const auto& s : v.shapes) list.push_back(s.counts);
          return {{"type", "list"}, {"shapes", list}};
        } else if constexpr (std::is_same_v<T, ShapeFamily::Bounds>) {
          return {{"type", "bounds"}, {"lower", v.lower}, {"upper", v.upper}};
        } else {
          throw DimensionError("predicate shape families cannot be serialized");
        }
      },
      shapes.variant());
}

Json problem_to_json(const Problem& problem) {
  Json doc;
  doc["matrix"] = Json::array();
  for (std::size_t r = 0; r < problem.matrix.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : problem.matrix.row(r)) row.push_back(rational_to_wire(x));
    doc["matrix"].push_back(std::move(row));
  }
  doc["p"] = problem.p;
  doc["shapes"] = shapes_to_json(problem.shapes);
  if (problem.objective) doc["objective"] = objective_to_json(*problem.objective);
  return doc;
}

namespace {

// Portable draws: std::uniform_int_distribution differs between standard
// libraries, which would change seeded instances across platforms.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 rng_;
};

Shape random_shape(Draw& draw, std::size_t n, std::size_t p) {
  Shape s{std::vector<std::size_t>(p, 0)};
  for (std::size_t i = 0; i < n; ++i) ++s.counts[draw.below(p)];
  return s;
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomProblemSpec& spec) {
  Draw draw(seed);
  const std::size_t k = 1 + draw.below(spec.max_k);
  const std::size_t n = 2 + draw.below(spec.max_n - 1);
  const std::size_t p = 1 + draw.below(spec.max_p);

  RandomInstance inst;
  Problem& problem = inst.problem;
  problem.matrix = Matrix(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) problem.matrix(r, c) = draw.range(spec.min_entry, spec.max_entry);
  problem.p = p;

  switch (draw.below(3)) {
    case 0:
      problem.shapes = ShapeFamily::all(n, p);
      break;
    case 1: {
      std::vector<Shape> shapes;
      const std::size_t count = 1 + draw.below(3);
      for (std::size_t i = 0; i < count; ++i) shapes.push_back(random_shape(draw, n, p));
      problem.shapes = ShapeFamily::explicit_list(n, p, shapes);
      break;
    }
    default: {
      Shape centre = random_shape(draw, n, p);
      std::vector<std::size_t> lower(p), upper(p);
      for (std::size_t j = 0; j < p; ++j) {
        std::size_t down = draw.below(2), up = draw.below(3);
        lower[j] = centre.counts[j] >= down ? centre.counts[j] - down : 0;
        upper[j] = centre.counts[j] + up;
      }
      problem.shapes = ShapeFamily::bounds(n, p, lower, upper);
      break;
    }
  }

  Matrix cost(k, p);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < p; ++c) cost(r, c) = draw.range(-5, 5);
  inst.objectives.push_back(Objective::linear(std::move(cost)));
  inst.objectives.push_back(Objective::sum_column_norm_pow(draw.below(2) == 0 ? 2u : 4u));
  problem.objective = inst.objectives.front();
  return inst;
}

}  // namespace spp
