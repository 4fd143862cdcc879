#include "spp/objective.hpp"

#include "spp/errors.hpp"
#include "spp/subprocess.hpp"

#include <string>

namespace spp {

ExternalOracle::ExternalOracle(std::vector<std::string> command, std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
  if (command_.empty()) throw DimensionError("external oracle command is empty");
}

ExternalOracle::~ExternalOracle() = default;

Rational ExternalOracle::query(const PartitionMatrix& x) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : x.row(r)) row.push_back(rational_to_wire(v));
    rows.push_back(std::move(row));
  }

  std::lock_guard lock(mutex_);
  if (!process_) process_ = std::make_unique<LineProcess>(command_);
  std::string reply = process_->exchange(rows.dump(), timeout_);
  try {
    Json value;
    try {
      value = parse_json_exact(reply);
    } catch (const ParseError&) {
      return parse_rational(reply);  // bare "a/b"
    }
    return rational_from_json(value);
  } catch (const ParseError& e) {
    throw OracleError("malformed reply from external oracle '" + command_.front() + "': '" + reply + "' (" +
                      e.what() + ")");
  }
}

Objective Objective::linear(Matrix cost) { return Objective(Linear{std::move(cost)}); }

Objective Objective::sum_diag_pow(unsigned q) {
  if (q < 1) throw DimensionError("sum_diag_pow needs q >= 1");
  return Objective(SumDiagPow{q});
}

Objective Objective::sum_column_norm_pow(unsigned q) {
  if (q < 2 || q % 2 != 0) throw DimensionError("sum_column_norm_pow needs a positive even q");
  return Objective(SumColumnNormPow{q});
}

Objective Objective::max_cut(std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1) throw DimensionError("max_cut edge endpoints are 1-based");
    if (u == v) throw DimensionError("max_cut edges must join distinct vertices");
  }
  return Objective(MaxCut{std::move(edges)});
}

Objective Objective::external(std::vector<std::string> command, std::chrono::milliseconds timeout) {
  return Objective(External{std::make_shared<ExternalOracle>(std::move(command), timeout)});
}

std::string Objective::kind() const {
  static const char* names[] = {"linear", "sum_diag_pow", "sum_column_norm_pow", "max_cut", "external"};
  return names[variant_.index()];
}

void Objective::require_compatible(const AttributeMatrix& a, std::size_t p) const {
  const std::size_t k = a.rows(), n = a.cols();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Linear>) {
          if (o.cost.rows() != k || o.cost.cols() != p)
            throw DimensionError("linear cost must be " + std::to_string(k) + "x" + std::to_string(p) + ", got " +
                                 std::to_string(o.cost.rows()) + "x" + std::to_string(o.cost.cols()));
        } else if constexpr (std::is_same_v<T, SumDiagPow>) {
          if (k != p) throw DimensionError("sum_diag_pow needs as many attribute rows as parts");
        } else if constexpr (std::is_same_v<T, MaxCut>) {
          if (p != 2 || !(a == Matrix::identity(n)))
            throw DimensionError("max_cut needs the n x n identity attribute matrix and p = 2");
          for (auto [u, v] : o.edges)
            if (u > n || v > n) throw DimensionError("max_cut edge endpoint exceeds n = " + std::to_string(n));
        }
      },
      variant_);
}

Rational Objective::evaluate(const PartitionMatrix& x) const {
  return std::visit(
      [&](const auto& o) -> Rational {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Linear>) {
          if (o.cost.rows() != x.rows() || o.cost.cols() != x.cols())
            throw DimensionError("linear cost and queried matrix differ in shape");
          Rational sum = 0;
          for (std::size_t i = 0; i < x.entries().size(); ++i) sum += o.cost.entries()[i] * x.entries()[i];
          return sum;
        } else if constexpr (std::is_same_v<T, SumDiagPow>) {
          if (!x.is_square()) throw DimensionError("sum_diag_pow needs a square matrix");
          Rational sum = 0;
          for (std::size_t i = 0; i < x.rows(); ++i) sum += power(abs(x(i, i)), o.q);
          return sum;
        } else if constexpr (std::is_same_v<T, SumColumnNormPow>) {
          Rational sum = 0;
          for (const auto& v : x.entries()) sum += power(abs(v), o.q);
          return sum;
        } else if constexpr (std::is_same_v<T, MaxCut>) {
          if (x.cols() != 2) throw DimensionError("max_cut needs an n x 2 matrix");
          for (std::size_t i = 0; i < x.rows(); ++i) {
            bool first = x(i, 0) == 1 && x(i, 1) == 0, second = x(i, 0) == 0 && x(i, 1) == 1;
            if (!first && !second) throw DimensionError("max_cut needs a 0/1 matrix with unit row sums");
          }
          std::size_t cut = 0;
          for (auto [u, v] : o.edges) {
            if (u > x.rows() || v > x.rows()) throw DimensionError("max_cut edge endpoint out of range");
            if ((x(u - 1, 0) == 1) != (x(v - 1, 0) == 1)) ++cut;
          }
          return Rational(cut);
        } else {
          return o.oracle->query(x);
        }
      },
      variant_);
}

namespace {

unsigned exponent_from(const Json& d) {
  if (!d.contains("q") || !d["q"].is_number_integer() || d["q"].get<long long>() < 0)
    throw ParseError("objective needs a nonnegative integer \"q\"");
  return static_cast<unsigned>(d["q"].get<long long>());
}

}  // namespace

Objective objective_from_json(const Json& d) {
  if (!d.is_object() || !d.contains("type") || !d["type"].is_string())
    throw ParseError("objective descriptor must be an object with a \"type\"");
  const std::string type = d["type"].get<std::string>();
  if (type == "linear") {
    if (!d.contains("cost")) throw ParseError("linear objective needs \"cost\"");
    return Objective::linear(matrix_from_json(d["cost"]));
  }
  if (type == "sum_diag_pow") return Objective::sum_diag_pow(exponent_from(d));
  if (type == "sum_column_norm_pow") return Objective::sum_column_norm_pow(exponent_from(d));
  if (type == "max_cut") {
    if (!d.contains("edges") || !d["edges"].is_array()) throw ParseError("max_cut objective needs \"edges\"");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : d["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<long long>() < 1 || e[1].get<long long>() < 1)
        throw ParseError("max_cut edges must be pairs of positive integers");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Objective::max_cut(std::move(edges));
  }
  if (type == "external") {
    if (!d.contains("cmd") || !d["cmd"].is_array() || d["cmd"].empty())
      throw ParseError("external objective needs a nonempty \"cmd\" array");
    std::vector<std::string> cmd;
    for (const auto& a : d["cmd"]) {
      if (!a.is_string()) throw ParseError("external objective \"cmd\" entries must be strings");
      cmd.push_back(a.get<std::string>());
    }
    std::chrono::milliseconds timeout(30'000);
    if (d.contains("timeout_ms")) {
      if (!d["timeout_ms"].is_number_integer() || d["timeout_ms"].get<long long>() <= 0)
        throw ParseError("\"timeout_ms\" must be a positive integer");
      timeout = std::chrono::milliseconds(d["timeout_ms"].get<long long>());
    }
    return Objective::external(std::move(cmd), timeout);
  }
  throw ParseError("unknown objective type '" + type + "'");
}

Json objective_to_json(const Objective& objective) {
  return std::visit(
      [](const auto& o) -> Json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Objective::Linear>) {
          return {{"type", "linear"}, {"cost", matrix_to_json(o.cost)}};
        } else if constexpr (std::is_same_v<T, Objective::SumDiagPow>) {
          return {{"type", "sum_diag_pow"}, {"q", o.q}};
        } else if constexpr (std::is_same_v<T, Objective::SumColumnNormPow>) {
          return {{"type", "sum_column_norm_pow"}, {"q", o.q}};
        } else if constexpr (std::is_same_v<T, Objective::MaxCut>) {
          Json edges = Json::array();
          for (auto [u, v] : o.edges) edges.push_back({u, v});
          return {{"type", "max_cut"}, {"edges", edges}};
        } else {
          return {{"type", "external"},
                  {"cmd", o.oracle->command()},
                  {"timeout_ms", o.oracle->timeout().count()}};
        }
      },
      objective.variant());
}

}  // namespace spp
