#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "nccomb/cumulants.hpp"
#include "nccomb/functional.hpp"
#include "nccomb/matrix.hpp"
#include "nccomb/poly.hpp"
#include "nccomb/rational.hpp"

namespace nccomb {

using Json = nlohmann::ordered_json;

/// Bad input file; the message starts with the offending field path.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Domain { Rational, Poly, Matrix };
std::string_view domain_name(Domain d);

// Rational "p/q"; Poly [{"coeff": "p/q", "monomial": {"m_a": 2}}]; matrix
// rows of "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const RatMatrix& m);

Rational rational_from_json(const Json& j, const std::string& field);
Poly poly_from_json(const Json& j, const std::string& field);
RatMatrix matrix_from_json(const Json& j, const std::string& field);

struct MomentProblem {
  Domain domain = Domain::Rational;
  Alphabet alphabet;
  Weight weight = Weight::indicator(Family::NonCrossing);
  int max_order = 4;
  std::variant<Functional<Rational>, Functional<Poly>, MatrixModel> functional;
};

/// {domain, alphabet, moments: [{word, value}], weight, max_order}; the matrix
/// domain takes {generators: {symbol: rows}, constant: rows} instead of
/// moments. A poly problem without moments is the generic functional.
MomentProblem parse_moment_problem(const Json& j);
MomentProblem load_moment_problem(const std::filesystem::path& path);

template <class S>
Json cumulant_table_json(const CumulantTable<S>& table) {
  Json out;
  out["weight"] = table.weight.name();
  out["max_order"] = table.max_order;
  out["alphabet"] = Json::array();
  for (Letter l = 1; l <= table.alphabet.size(); ++l) out["alphabet"].push_back(std::string(table.alphabet.name(l)));
  Json entries = Json::array();
  for (const auto& [word, value] : table.entries) {
    entries.push_back({{"word", table.alphabet.format(word)}, {"order", word.size()}, {"value", to_json(value)}});
  }
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace nccomb
