#include "spp/convexity.hpp"

#include "spp/errors.hpp"
#include "spp/matrix.hpp"
#include "spp/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

namespace spp {
namespace {

std::size_t common_dimension(std::span<const Point> points, const char* what) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  for (const auto& v : points)
    if (v.size() != dim) throw DimensionError(std::string(what) + ": points of different dimensions");
  return dim;
}

std::vector<Rational> lifted(std::span<const Rational> u) {
  std::vector<Rational> out(u.size() + 1);
  out[0] = 1;
  std::copy(u.begin(), u.end(), out.begin() + 1);
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// Exact points plus a floating-point copy made once.
struct Cloud {
  std::span<const Point> points;
  std::size_t dim;
  std::vector<double> approx;

  Cloud(std::span<const Point> pts, std::size_t d) : points(pts), dim(d), approx(pts.size() * d) {
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t r = 0; r < d; ++r) approx[j * d + r] = pts[j][r].convert_to<double>();
  }

  const Point& operator[](std::size_t j) const { return points[j]; }
  double at(std::size_t j, std::size_t r) const { return approx[j * dim + r]; }
};

using Indices = std::vector<std::size_t>;

Indices all_indices(std::size_t m) {
  Indices idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

Matrix lifted_columns(const Cloud& cloud, const Indices& idx) {
  Matrix m(cloud.dim + 1, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    m(0, j) = 1;
    for (std::size_t r = 0; r < cloud.dim; ++r) m(r + 1, j) = cloud[idx[j]][r];
  }
  return m;
}

// Whether C(|idx|, rank) <= budget for the lifted columns. Builds an
// echelon basis column by column and stops once the count of bases is
// already known to exceed the budget.
bool caratheodory_within_budget(const Cloud& cloud, const Indices& idx, std::uint64_t budget) {
  const std::size_t m = idx.size(), dim = cloud.dim;
  const bool monotone = m >= 2 * (dim + 1);  // C(m, r) grows with r up to dim + 1
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t j : idx) {
    std::vector<Rational> col = lifted(cloud[j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (col[pivots[b]] == 0) continue;
      const Rational f = col[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t r = 0; r <= dim; ++r)
        if (basis[b][r] != 0) col[r] -= f * basis[b][r];
    }
    auto lead = std::find_if(col.begin(), col.end(), [](const Rational& x) { return x != 0; });
    if (lead == col.end()) continue;
    pivots.push_back(static_cast<std::size_t>(lead - col.begin()));
    basis.push_back(std::move(col));
    if (monotone && binomial_saturating(m, basis.size()) > budget) return false;
    if (basis.size() == dim + 1) break;
  }
  return binomial_saturating(m, basis.size()) <= budget;
}

bool caratheodory(std::span<const Rational> u, const Cloud& cloud, const Indices& idx) {
  Matrix all = lifted_columns(cloud, idx);
  const std::size_t d = rank(all);
  const std::vector<Rational> target = lifted(u);
  const std::size_t m = idx.size(), rows = cloud.dim + 1;

  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  Matrix basis(rows, d);
  while (true) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < rows; ++r) basis(r, j) = all(r, pick[j]);
    LinearSolution sol = solve_linear(basis, target);
    if (sol.status == LinearSolution::Status::inconsistent) return false;  // u is off the affine hull
    if (sol.has_solution() && std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& c) { return c >= 0; }))
      return true;

    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Phase-one simplex for { lambda >= 0 : sum_j lambda_j (1, v_j) = (1, u) }.
bool simplex_feasible(std::span<const Rational> u, const Cloud& cloud, const Indices& idx) {
  const std::size_t dim = cloud.dim, rows = dim + 1, m = idx.size();
  const std::size_t cols = m + rows;  // structural + artificial
  const std::size_t rhs = cols;
  const std::size_t width = cols + 1;
  std::vector<Rational> t(rows * width);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return t[r * width + c]; };

  std::vector<Rational> b = lifted(u);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < m; ++j) {
      Rational v = r == 0 ? Rational(1) : cloud[idx[j]][r - 1];
      at(r, j) = flip ? Rational(-v) : v;
    }
    at(r, m + r) = 1;
    at(r, rhs) = flip ? Rational(-b[r]) : b[r];
  }
  std::vector<std::size_t> basic(rows);
  for (std::size_t r = 0; r < rows; ++r) basic[r] = m + r;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> reduced(cols + 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < m; ++c) reduced[c] -= at(r, c);
  Rational objective = 0;
  for (std::size_t r = 0; r < rows; ++r) objective += at(r, rhs);

  while (objective != 0) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (reduced[c] < 0) {
        enter = c;
        break;
      }
    if (enter == cols) return false;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (at(r, enter) <= 0) continue;
      Rational ratio = at(r, rhs) / at(r, enter);
      if (leave == rows || ratio < best || (ratio == best && basic[r] < basic[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == rows) throw InternalError("phase-one simplex reported an unbounded direction");

    const Rational pivot = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c)
      if (at(leave, c) != 0) at(leave, c) /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || at(r, enter) == 0) continue;
      const Rational f = at(r, enter);
      for (std::size_t c = 0; c < width; ++c)
        if (at(leave, c) != 0) at(r, c) -= f * at(leave, c);
    }
    const Rational f = reduced[enter];
    for (std::size_t c = 0; c < cols; ++c)
      if (at(leave, c) != 0) reduced[c] -= f * at(leave, c);
    objective += f * at(leave, rhs);
    basic[leave] = enter;
  }
  return true;
}

// Floating-point phase one on the same system. The answer is only a hint:
// callers confirm it with an exact certificate.
struct FloatHint {
  bool feasible = false;
  Indices support;                // cloud indices of the final basis
  std::vector<double> direction;  // separating functional when infeasible
};

std::optional<FloatHint> float_phase_one(std::span<const Rational> u, const Cloud& cloud, const Indices& idx) {
  constexpr double tol = 1e-9;
  const std::size_t dim = cloud.dim, rows = dim + 1, m = idx.size();
  const std::size_t cols = m + rows;
  const std::size_t rhs = cols;
  const std::size_t width = cols + 1;
  std::vector<double> t(rows * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * width + c]; };

  std::vector<double> b(rows);
  b[0] = 1.0;
  for (std::size_t r = 0; r < dim; ++r) b[r + 1] = u[r].convert_to<double>();
  std::vector<double> sign(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    sign[r] = b[r] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < m; ++j) at(r, j) = sign[r] * (r == 0 ? 1.0 : cloud.at(idx[j], r - 1));
    at(r, m + r) = 1.0;
    at(r, rhs) = sign[r] * b[r];
  }
  std::vector<std::size_t> basic(rows);
  for (std::size_t r = 0; r < rows; ++r) basic[r] = m + r;
  std::vector<double> reduced(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < m; ++c) reduced[c] -= at(r, c);
  double objective = 0;
  for (std::size_t r = 0; r < rows; ++r) objective += at(r, rhs);

  const std::size_t max_iterations = 20 * (cols + rows);
  for (std::size_t iteration = 0; objective > tol; ++iteration) {
    if (iteration == max_iterations) return std::nullopt;
    std::size_t enter = cols;
    double steepest = -tol;
    for (std::size_t c = 0; c < cols; ++c)
      if (reduced[c] < steepest) {
        enter = c;
        steepest = reduced[c];
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    double best = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (at(r, enter) <= tol) continue;
      const double ratio = at(r, rhs) / at(r, enter);
      if (leave == rows || ratio < best - tol || (ratio <= best + tol && basic[r] < basic[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) return std::nullopt;
    const double pivot = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    const double f = reduced[enter];
    for (std::size_t c = 0; c < cols; ++c) reduced[c] -= f * at(leave, c);
    objective += f * at(leave, rhs);
    basic[leave] = enter;
  }

  FloatHint hint;
  hint.feasible = objective <= tol;
  if (hint.feasible) {
    for (std::size_t r = 0; r < rows; ++r)
      if (basic[r] < m) hint.support.push_back(idx[basic[r]]);
    std::sort(hint.support.begin(), hint.support.end());
  } else {
    // Dual of artificial r is 1 - reduced cost; the constant row drops out.
    hint.direction.resize(dim);
    for (std::size_t r = 1; r < rows; ++r) hint.direction[r - 1] = (1.0 - reduced[m + r]) * sign[r];
  }
  return hint;
}

// True when u is exactly a nonnegative combination of the support points.
bool confirms_inside(std::span<const Rational> u, const Cloud& cloud, const Indices& support) {
  if (support.empty()) return false;
  LinearSolution sol = solve_linear(lifted_columns(cloud, support), lifted(u));
  return sol.has_solution() &&
         std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& c) { return c >= 0; });
}

// True when c.u > c.v exactly for every indexed v.
bool confirms_outside(std::span<const Rational> u, const Cloud& cloud, const Indices& idx,
                      const std::vector<double>& direction) {
  std::vector<Rational> c(cloud.dim);
  bool nonzero = false;
  for (std::size_t r = 0; r < cloud.dim; ++r) {
    if (!std::isfinite(direction[r])) return false;
    c[r] = Rational(direction[r]);
    nonzero = nonzero || c[r] != 0;
  }
  if (!nonzero) return false;
  auto value = [&](std::span<const Rational> v) {
    Rational s = 0;
    for (std::size_t r = 0; r < cloud.dim; ++r)
      if (c[r] != 0) s += c[r] * v[r];
    return s;
  };
  const Rational top = value(u);
  return std::all_of(idx.begin(), idx.end(), [&](std::size_t j) { return value(cloud[j]) < top; });
}

// Exact answer, using the floating-point run only to pick a certificate.
bool guided_feasible(std::span<const Rational> u, const Cloud& cloud, const Indices& idx) {
  if (std::optional<FloatHint> hint = float_phase_one(u, cloud, idx)) {
    if (hint->feasible && confirms_inside(u, cloud, hint->support)) return true;
    if (!hint->feasible && confirms_outside(u, cloud, idx, hint->direction)) return false;
  }
  return simplex_feasible(u, cloud, idx);
}

bool inside(std::span<const Rational> u, const Cloud& cloud, const Indices& idx, HullMethod method,
            std::uint64_t budget) {
  if (idx.empty()) return false;
  if (method == HullMethod::automatic)
    method = caratheodory_within_budget(cloud, idx, budget) ? HullMethod::caratheodory : HullMethod::simplex;
  return method == HullMethod::caratheodory ? caratheodory(u, cloud, idx) : guided_feasible(u, cloud, idx);
}

}  // namespace

std::uint64_t affine_basis_trials(std::span<const Point> others) {
  if (others.empty()) return 0;
  const Cloud cloud(others, common_dimension(others, "affine_basis_trials"));
  return binomial_saturating(others.size(), rank(lifted_columns(cloud, all_indices(others.size()))));
}

bool in_convex_hull(std::span<const Rational> u, std::span<const Point> others, HullMethod method,
                    std::uint64_t caratheodory_budget) {
  const std::size_t dim = common_dimension(others, "convex hull test");
  if (others.empty()) return false;
  if (u.size() != dim) throw DimensionError("convex hull test: points of different dimensions");
  const Cloud cloud(others, dim);
  return inside(u, cloud, all_indices(others.size()), method, caratheodory_budget);
}

std::vector<bool> certified_vertices(std::span<const Point> points) {
  const std::size_t m = points.size();
  std::vector<bool> sure(m, false);
  if (m == 0) return sure;
  const std::size_t dim = common_dimension(points, "certified_vertices");
  if (m == 1) {
    sure[0] = true;
    return sure;
  }

  std::vector<std::vector<int>> directions;
  for (std::size_t j = 0; j < dim; ++j)
    for (int s : {1, -1}) {
      std::vector<int> d(dim, 0);
      d[j] = s;
      directions.push_back(std::move(d));
    }
  std::mt19937_64 rng(0x5eed);
  for (int k = 0; k < 48; ++k) {
    std::vector<int> d(dim);
    for (auto& x : d) x = static_cast<int>(rng() % 15) - 7;
    directions.push_back(std::move(d));
  }
  for (const auto& d : directions) {
    std::size_t best = 0, ties = 0;
    Rational best_value;
    for (std::size_t i = 0; i < m; ++i) {
      Rational v = 0;
      for (std::size_t j = 0; j < dim; ++j)
        if (d[j] != 0) v += d[j] * points[i][j];
      if (i == 0 || v > best_value) {
        best = i;
        best_value = std::move(v);
        ties = 1;
      } else if (v == best_value) {
        ++ties;
      }
    }
    if (ties == 1) sure[best] = true;
  }
  return sure;
}

std::vector<bool> extreme_points(std::span<const Point> points, unsigned threads, std::uint64_t caratheodory_budget) {
  const std::size_t m = points.size();
  const std::size_t dim = common_dimension(points, "extreme_points");
  const Cloud cloud(points, dim);

  enum class Status : char { unknown, vertex, interior };
  std::vector<Status> status(m, Status::unknown);
  const std::vector<bool> sure = certified_vertices(points);
  Indices certified;
  for (std::size_t i = 0; i < m; ++i)
    if (sure[i]) {
      status[i] = Status::vertex;
      certified.push_back(i);
    }

  // Anything inside the hull of known vertices is not a vertex.
  parallel_for(m, threads, [&](std::size_t i) {
    if (status[i] == Status::unknown && inside(points[i], cloud, certified, HullMethod::simplex, 0))
      status[i] = Status::interior;
  });

  // Interior points lie in the hull of the certified vertices, so dropping
  // them never changes the hull of the others.
  Indices open;
  for (std::size_t i = 0; i < m; ++i)
    if (status[i] != Status::interior) open.push_back(i);
  std::vector<Status> decided = status;
  parallel_for(m, threads, [&](std::size_t i) {
    if (status[i] != Status::unknown) return;
    Indices others;
    others.reserve(open.size() - 1);
    for (std::size_t j : open)
      if (j != i) others.push_back(j);
    decided[i] = inside(points[i], cloud, others, HullMethod::automatic, caratheodory_budget) ? Status::interior
                                                                                                : Status::vertex;
  });

  std::vector<bool> extreme(m);
  for (std::size_t i = 0; i < m; ++i) extreme[i] = decided[i] == Status::vertex;
  return extreme;
}

}  // namespace spp
