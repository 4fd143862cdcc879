#pragma once

#include "spp/json_io.hpp"
#include "spp/partition.hpp"
#include "spp/rational.hpp"

#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace spp {

class LineProcess;

// Queries a subprocess: one JSON matrix line out, one scalar line back.
// Queries are serialized; the process is started on first use.
class ExternalOracle {
 public:
  ExternalOracle(std::vector<std::string> command, std::chrono::milliseconds timeout);
  ~ExternalOracle();

  const std::vector<std::string>& command() const { return command_; }
  std::chrono::milliseconds timeout() const { return timeout_; }

  // Throws OracleError on process failure or a malformed reply.
  Rational query(const PartitionMatrix& x);

 private:
  std::vector<std::string> command_;
  std::chrono::milliseconds timeout_;
  std::mutex mutex_;
  std::unique_ptr<LineProcess> process_;
};

// The convex functional C, evaluated only at part-sum matrices.
class Objective {
 public:
  struct Linear {
    Matrix cost;
  };
  // sum_i |X_ii|^q on a square X.
  struct SumDiagPow {
    unsigned q = 1;
  };
  // sum over all entries |X_ij|^q, q even.
  struct SumColumnNormPow {
    unsigned q = 2;
  };
  // Number of edges cut by the first column of an n x 2 indicator matrix.
  struct MaxCut {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };
  struct External {
    std::shared_ptr<ExternalOracle> oracle;
  };
  using Variant = std::variant<Linear, SumDiagPow, SumColumnNormPow, MaxCut, External>;

  static Objective linear(Matrix cost);
  static Objective sum_diag_pow(unsigned q);
  static Objective sum_column_norm_pow(unsigned q);
  static Objective max_cut(std::vector<std::pair<std::size_t, std::size_t>> edges);
  static Objective external(std::vector<std::string> command,
                            std::chrono::milliseconds timeout = std::chrono::milliseconds(30'000));

  const Variant& variant() const { return variant_; }
  bool is_external() const { return std::holds_alternative<External>(variant_); }
  std::string kind() const;

  // Throws DimensionError when the objective cannot be evaluated on the
  // part-sum matrices of (a, p).
  void require_compatible(const AttributeMatrix& a, std::size_t p) const;

  Rational evaluate(const PartitionMatrix& x) const;

 private:
  explicit Objective(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

inline Rational evaluate(const Objective& objective, const PartitionMatrix& x) { return objective.evaluate(x); }

// Descriptor round trip for problem files. Throws ParseError / DimensionError.
Objective objective_from_json(const Json& descriptor);
Json objective_to_json(const Objective& objective);

}  // namespace spp
