// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "spp/commands.hpp"
#include "spp/json_io.hpp"
#include "spp/problem.hpp"
#include "spp/reference.hpp"
#include "spp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace spp;

namespace {

const std::string data_dir = SPP_TEST_DATA_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure reasons for one criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool report(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  const bool ok = v.failures.empty();
  std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
  for (std::size_t i = 0; i < v.failures.size() && i < 10; ++i) std::printf("    - %s\n", v.failures[i].c_str());
  std::fflush(stdout);
  return ok;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

Integer power(const Integer& base, std::uint64_t e) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

Problem cube(std::size_t n) { return Problem{Matrix::identity(n), 2, ShapeFamily::all(n, 2), std::nullopt}; }

Problem permutohedron(std::size_t n) {
  Matrix a(1, n);
  for (std::size_t i = 0; i < n; ++i) a(0, i) = static_cast<long>(i + 1);
  return Problem{a, n, ShapeFamily::explicit_list(n, n, {Shape{std::vector<std::size_t>(n, 1)}}), std::nullopt};
}

// n x 2 matrices with a single 1 per row.
std::vector<Matrix> indicator_matrices(std::size_t n) {
  std::vector<Matrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Matrix m(n, 2);
    for (std::size_t r = 0; r < n; ++r) m(r, (mask >> r) & 1) = 1;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matrix> permutation_rows(std::size_t n) {
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 1L);
  std::vector<Matrix> out;
  do {
    Matrix m(1, n);
    for (std::size_t i = 0; i < n; ++i) m(0, i) = order[i];
    out.push_back(std::move(m));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matrix> vertices_from_output(const std::string& output) {
  std::vector<Matrix> out;
  const Json doc = parse_json_exact(output);
  for (const auto& v : doc["vertices"]) out.push_back(matrix_from_json(v["matrix"]));
  return out;
}

std::string shape_kind(const ShapeFamily& shapes) { return shapes_to_json(shapes)["type"].get<std::string>(); }

std::vector<Partition> generic_set(const Matrix& a, std::size_t p) {
  return enumerate_generic_p_partitions(PerturbedMatrix(lift(a)), p).partitions;
}

Matrix permute_columns(const Matrix& a, const std::vector<std::size_t>& order) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, order[c]);
  return out;
}

constexpr std::uint64_t first_seed = 1;
constexpr std::size_t instance_count = 50;

// Output of the 50-instance check, shared with the determinism criterion.
std::string random_check_output;

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "cube polytopes have exactly the 2^n indicator vertices", [](Verdict& v) {
    for (std::size_t n : {2, 3, 4}) {
      const auto start = Clock::now();
      CommandResult r = run_vertices(cube(n), {});
      const double secs = seconds_since(start);
      v.expect(r.exit_code == exit_code::ok, "n=" + std::to_string(n) + " exit code");
      const auto got = vertices_from_output(r.output);
      v.expect(got.size() == (std::size_t{1} << n), "n=" + std::to_string(n) + " vertex count " + std::to_string(got.size()));
      v.expect(got == indicator_matrices(n), "n=" + std::to_string(n) + " vertex set differs");
      v.expect(secs < 10, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
      char line[96];
      std::snprintf(line, sizeof line, "n=%zu: %zu vertices in %.3f s", n, got.size(), secs);
      v.notes.push_back(line);
    }
  });

  all &= report(2, "permutohedron vertices are the n! permutations", [](Verdict& v) {
    for (std::size_t n : {3, 4}) {
      const auto start = Clock::now();
      CommandResult r = run_vertices(permutohedron(n), {});
      const double secs = seconds_since(start);
      const auto got = vertices_from_output(r.output);
      v.expect(got == permutation_rows(n), "n=" + std::to_string(n) + " vertex set differs");
      v.expect(secs < (n == 3 ? 10 : 600), "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
      char line[96];
      std::snprintf(line, sizeof line, "n=%zu: %zu vertices in %.3f s", n, got.size(), secs);
      v.notes.push_back(line);
    }
  });

  std::vector<RandomInstance> instances;
  for (std::uint64_t s = first_seed; s < first_seed + instance_count; ++s) instances.push_back(random_instance(s));

  all &= report(3, "50 random instances match the brute-force reference", [&](Verdict& v) {
    std::set<std::string> kinds;
    for (const auto& inst : instances) {
      const Problem& p = inst.problem;
      const std::string tag = "seed " + std::to_string(&inst - instances.data() + first_seed);
      v.expect(p.matrix.rows() >= 1 && p.matrix.rows() <= 2 && p.matrix.cols() <= 7 && p.p <= 3, tag + " out of range");
      for (const auto& x : p.matrix.entries()) v.expect(x >= -5 && x <= 5 && is_integer(x), tag + " entry out of range");
      v.expect(inst.objectives.size() == 2 && inst.objectives[0].kind() == "linear" &&
                   inst.objectives[1].kind() == "sum_column_norm_pow",
               tag + " objectives");
      kinds.insert(shape_kind(p.shapes));
    }
    v.expect(kinds == std::set<std::string>{"all", "bounds", "list"}, "not every shape family kind was drawn");

    CommandOptions options;
    options.seed = first_seed;
    options.random_count = instance_count;
    const auto start = Clock::now();
    CommandResult r = guarded([&] { return run_check_random(options); });
    const double secs = seconds_since(start);
    random_check_output = r.output;
    v.expect(r.exit_code == exit_code::ok, "check exit code " + std::to_string(r.exit_code) + " " + r.message);
    const Json doc = parse_json_exact(r.output);
    v.expect(doc["instances"].size() == instance_count, "instance count");
    std::size_t vertices = 0;
    for (const auto& e : doc["instances"]) {
      const std::string tag = "seed " + std::to_string(e["seed"].get<std::uint64_t>());
      v.expect(e["ok"].get<bool>() && e["vertex_sets_match"].get<bool>(), tag + " mismatch");
      v.expect(e["objectives"].size() == 2, tag + " objective count");
      for (const auto& o : e["objectives"]) v.expect(o["fast"] == o["brute_force"], tag + " optimum differs");
      vertices += e["brute_force_vertices"].get<std::size_t>();
    }
    v.expect(secs < 600, "took " + std::to_string(secs) + " s");
    char line[96];
    std::snprintf(line, sizeof line, "%zu instances, %zu vertices in total, %.2f s", doc["instances"].size(), vertices,
                  secs);
    v.notes.push_back(line);
  });

  all &= report(4, "partition and vertex counts respect the bounds", [&](Verdict& v) {
    for (const auto& inst : instances) {
      const Problem& p = inst.problem;
      const std::size_t k = p.matrix.rows(), n = p.matrix.cols();
      const std::string tag = "seed " + std::to_string(&inst - instances.data() + first_seed);
      const std::size_t two = enumerate_generic_2partitions(PerturbedMatrix(lift(p.matrix))).size();
      if (n > k + 1)
        v.expect(two <= (std::uint64_t{1} << (k + 2)) * binomial(n, k + 1), tag + " two-partition bound");
      else
        v.expect(two == (std::size_t{1} << n), tag + " two-partition count is not 2^n");
      VertexReport rep = enumerate_vertices(p.matrix, p.p, p.shapes);
      v.expect(Integer(rep.counts.generic_partitions) <= power(Integer(two), binomial(p.p, 2)),
               tag + " p-partition bound");
      v.expect(rep.counts.vertices <= rep.counts.generic_partitions, tag + " vertex bound");
    }
  });

  all &= report(5, "splitting example maximum is 17/20", [](Verdict& v) {
    const Problem problem = load_problem(data_dir + "/splitting.json");
    const Matrix expected{{Rational(3, 5), Rational(3, 10)}, {Rational(2, 5), Rational(7, 10)}};
    v.expect(problem.matrix == expected, "problem file matrix");
    const auto start = Clock::now();
    CommandResult r = run_solve(problem, {});
    const double secs = seconds_since(start);
    const Json doc = parse_json_exact(r.output);
    v.expect(rational_from_json(doc["value"]) == Rational(17, 20), "value " + doc["value"].dump());
    // the only admissible alternative is the swapped assignment
    const Rational other = expected(0, 1) * expected(0, 1) + expected(1, 0) * expected(1, 0);
    const Rational kept = expected(0, 0) * expected(0, 0) + expected(1, 1) * expected(1, 1);
    v.expect(std::max(kept, other) == Rational(17, 20), "hand enumeration disagrees");
    v.expect(secs < 1, "took " + std::to_string(secs) + " s");
  });

  all &= report(6, "permutation, translation and scaling invariance", [](Verdict& v) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 1001; seed < 1021; ++seed) {
      const Problem p = random_instance(seed).problem;
      const std::size_t k = p.matrix.rows(), n = p.matrix.cols();
      const std::string tag = "seed " + std::to_string(seed);
      const std::vector<Matrix> base = enumerate_vertices(p.matrix, p.p, p.shapes).vertices;

      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      v.expect(enumerate_vertices(permute_columns(p.matrix, order), p.p, p.shapes).vertices == base,
               tag + " column permutation");

      std::vector<Rational> t(k);
      for (auto& x : t) x = Rational(static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 4) + 1);
      Matrix moved = p.matrix, scaled = p.matrix;
      const Rational c(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < n; ++i) {
          moved(r, i) += t[r];
          scaled(r, i) *= c;
        }
      const std::vector<Partition> generic = generic_set(p.matrix, p.p);
      v.expect(generic_set(moved, p.p) == generic, tag + " translation changes the generic partitions");
      v.expect(generic_set(scaled, p.p) == generic, tag + " scaling changes the generic partitions");

      std::vector<std::size_t> counts(p.p, 0);
      for (std::size_t i = 0; i < n; ++i) ++counts[rng() % p.p];
      const ShapeFamily single = ShapeFamily::explicit_list(n, p.p, {Shape{counts}});
      std::vector<Matrix> expected;
      for (Matrix x : enumerate_vertices(p.matrix, p.p, single).vertices) {
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t j = 0; j < p.p; ++j) x(r, j) += static_cast<long>(counts[j]) * t[r];
        expected.push_back(std::move(x));
      }
      std::sort(expected.begin(), expected.end());
      v.expect(enumerate_vertices(moved, p.p, single).vertices == expected, tag + " single-shape covariance");
    }
  });

  all &= report(7, "brute-force vertices lie among the unfiltered candidates", [&](Verdict& v) {
    for (const auto& inst : instances) {
      const Problem& p = inst.problem;
      const std::string tag = "seed " + std::to_string(&inst - instances.data() + first_seed);
      CandidateSet candidates = candidate_vertices(p.matrix, p.p, p.shapes);
      const std::vector<Matrix> brute = brute_vertices(p.matrix, p.p, p.shapes);
      v.expect(std::includes(candidates.members.begin(), candidates.members.end(), brute.begin(), brute.end()),
               tag + " candidate set misses a vertex");
    }
  });

  all &= report(8, "outputs are byte-identical across runs and thread counts", [&](Verdict& v) {
    struct Case {
      std::string name;
      std::function<CommandResult(const CommandOptions&)> run;
    };
    std::vector<Case> cases;
    for (std::size_t n : {2, 3, 4})
      cases.push_back({"cube " + std::to_string(n), [n](const CommandOptions& o) { return run_vertices(cube(n), o); }});
    for (std::size_t n : {3, 4})
      cases.push_back({"permutohedron " + std::to_string(n),
                       [n](const CommandOptions& o) { return run_vertices(permutohedron(n), o); }});
    cases.push_back({"splitting", [](const CommandOptions& o) {
                       return run_solve(load_problem(data_dir + "/splitting.json"), o);
                     }});
    cases.push_back({"random check", [](const CommandOptions& o) {
                       CommandOptions batch = o;
                       batch.seed = first_seed;
                       batch.random_count = instance_count;
                       return run_check_random(batch);
                     }});
    for (const auto& c : cases) {
      CommandOptions serial, threaded;
      serial.with_partitions = threaded.with_partitions = true;
      threaded.polytope.enumeration.threads = 4;
      const std::string first = c.run(serial).output;
      v.expect(!first.empty(), c.name + " produced no output");
      v.expect(c.run(serial).output == first, c.name + " differs between runs");
      v.expect(c.run(threaded).output == first, c.name + " differs with 4 threads");
      if (c.name == "random check") v.expect(first == random_check_output, "random check differs from criterion 3");
    }
  });

  return all ? 0 : 1;
}
