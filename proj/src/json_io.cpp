#include "spp/json_io.hpp"

#include "spp/errors.hpp"

#include <iterator>
#include <limits>
#include <string>

namespace spp {
namespace {

class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  explicit ExactNumberSax(Json& root) : Base(root, false) {}

  bool number_float(Json::number_float_t, const Json::string_t& text) {
    Json::string_t copy = text;
    return Base::string(copy);
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
};

}  // namespace

Json parse_json_exact(std::string_view text) {
  Json root;
  ExactNumberSax sax(root);
  Json::sax_parse(text.begin(), text.end(), &sax);
  return root;
}

Json parse_json_exact(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_json_exact(text);
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(Integer(value.get<std::uint64_t>()));
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError("expected a scalar (integer, decimal or \"a/b\" string), got " + value.dump());
}

Json rational_to_json(const Rational& value) { return to_string(value); }

Json rational_to_wire(const Rational& value) {
  if (is_integer(value)) {
    const Integer& num = numerator(value);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return num.convert_to<std::int64_t>();
  }
  return to_string(value);
}

Matrix matrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    if (!data.empty() && r.size() != data.front().size()) throw ParseError("matrix rows have different lengths");
    data.push_back(std::move(r));
  }
  if (data.front().empty()) throw ParseError("matrix rows are empty");
  return Matrix::from_rows(data);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(rational_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json partition_to_json(const Partition& partition) {
  Json blocks = Json::array();
  for (const auto& b : partition.blocks()) blocks.push_back(b);
  return blocks;
}

}  // namespace spp
