#include "nccomb/io.hpp"

#include <fstream>

namespace nccomb {

namespace {

std::string join(const std::string& field, const char* key) { return field.empty() ? key : field + "." + key; }

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw SchemaError(field.empty() ? "(root)" : field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(field, key), "missing");
  return *it;
}
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

Word parse_word(const Alphabet& alphabet, const Json& j, const std::string& field) {
  if (!j.is_string()) throw SchemaError(field, "expected a word string");
  try {
    return alphabet.parse(j.get<std::string>());
  } catch (const UnknownSymbolError& e) {
    throw SchemaError(field, e.what());
  }
}

}  // namespace

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::Rational: return "rational";
    case Domain::Poly: return "poly";
    case Domain::Matrix: return "matrix";
  }
  return "?";
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [coeff, monomial] : p.named_terms()) {
    Json m = Json::object();
    for (const auto& [name, exponent] : monomial) m[name] = exponent;
    out.push_back({{"coeff", to_string(coeff)}, {"monomial", std::move(m)}});
  }
  return out;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(field, "expected an exact rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(field, e.what());
  }
}

Poly poly_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) return Poly(rational_from_json(j, field));
  Poly out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = at(field, i);
    Poly term(rational_from_json(require(j[i], "coeff", f), join(f, "coeff")));
    if (auto it = j[i].find("monomial"); it != j[i].end()) {
      if (!it->is_object()) throw SchemaError(join(f, "monomial"), "expected {variable: exponent}");
      for (const auto& [name, exponent] : it->items()) {
        if (!exponent.is_number_unsigned()) throw SchemaError(join(f, "monomial") + "." + name, "expected a natural exponent");
        const Poly v = Poly::variable(name);
        for (unsigned e = 0; e < exponent.get<unsigned>(); ++e) term *= v;
      }
    }
    out += term;
  }
  return out;
}

RatMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw SchemaError(field, "expected a nonempty array of rows");
  const std::size_t dim = j.size();
  std::vector<Rational> entries;
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) throw SchemaError(at(field, r), "expected a row of length " + std::to_string(dim));
    for (std::size_t c = 0; c < dim; ++c) entries.push_back(rational_from_json(j[r][c], at(at(field, r), c)));
  }
  return RatMatrix(dim, std::move(entries));
}

MomentProblem parse_moment_problem(const Json& j) {
  if (!j.is_object()) throw SchemaError("(root)", "expected an object");
  MomentProblem out;
  const Json& domain = require(j, "domain", "");
  if (domain == "rational") {
    out.domain = Domain::Rational;
  } else if (domain == "poly") {
    out.domain = Domain::Poly;
  } else if (domain == "matrix") {
    out.domain = Domain::Matrix;
  } else {
    throw SchemaError("domain", "expected one of rational, poly, matrix");
  }

  const Json& alphabet = require(j, "alphabet", "");
  if (!alphabet.is_array() || alphabet.empty()) throw SchemaError("alphabet", "expected a nonempty array of symbol names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!alphabet[i].is_string()) throw SchemaError(at("alphabet", i), "expected a string");
    names.push_back(alphabet[i].get<std::string>());
  }
  try {
    out.alphabet = Alphabet(names);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("alphabet", e.what());
  }

  if (auto it = j.find("weight"); it != j.end()) {
    if (!it->is_string()) throw SchemaError("weight", "expected a weight name");
    try {
      out.weight = Weight::parse(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError("weight", e.what());
    }
  }
  if (auto it = j.find("max_order"); it != j.end()) {
    if (!it->is_number_integer() || it->get<int>() < 1) throw SchemaError("max_order", "expected a positive integer");
    out.max_order = it->get<int>();
  }

  if (out.domain == Domain::Matrix) {
    const Json& gens = require(j, "generators", "");
    if (!gens.is_object()) throw SchemaError("generators", "expected {symbol: rows}");
    MatrixModel model{out.alphabet, {}, {}};
    for (Letter l = 1; l <= out.alphabet.size(); ++l) {
      const std::string name(out.alphabet.name(l));
      auto it = gens.find(name);
      if (it == gens.end()) throw SchemaError("generators." + name, "missing");
      model.generators.push_back(matrix_from_json(*it, "generators." + name));
    }
    for (const auto& [name, value] : gens.items()) {
      if (!out.alphabet.find(name)) throw SchemaError("generators." + name, "unknown symbol '" + name + "'");
    }
    const std::size_t dim = model.generators.front().dim();
    for (Letter l = 1; l <= out.alphabet.size(); ++l) {
      if (model.generators[l - 1].dim() != dim) {
        throw SchemaError("generators." + std::string(out.alphabet.name(l)), "dimension differs from the first generator");
      }
    }
    if (auto it = j.find("constant"); it != j.end()) {
      model.constant = matrix_from_json(*it, "constant");
      if (model.constant.dim() != dim) throw SchemaError("constant", "dimension differs from the generators");
      if (!model.constant.is_diagonal()) throw SchemaError("constant", "must be diagonal");
    } else {
      model.constant = RatMatrix::identity(dim);
    }
    out.functional = std::move(model);
    return out;
  }

  auto moments = j.find("moments");
  if (moments == j.end()) {
    if (out.domain != Domain::Poly) throw SchemaError("moments", "missing (only a poly problem may omit it)");
    out.functional = generic_functional(out.alphabet);
    return out;
  }
  if (!moments->is_array()) throw SchemaError("moments", "expected an array of {word, value}");
  std::map<Word, Rational> rational_values;
  std::map<Word, Poly> poly_values;
  for (std::size_t i = 0; i < moments->size(); ++i) {
    const std::string f = at("moments", i);
    const Json& entry = (*moments)[i];
    Word w = strip_constants(parse_word(out.alphabet, require(entry, "word", f), join(f, "word")));
    if (w.empty()) throw SchemaError(join(f, "word"), "the empty word has moment 1 by definition");
    const Json& value = require(entry, "value", f);
    const bool fresh = out.domain == Domain::Rational
                           ? rational_values.emplace(w, rational_from_json(value, join(f, "value"))).second
                           : poly_values.emplace(w, poly_from_json(value, join(f, "value"))).second;
    if (!fresh) throw SchemaError(join(f, "word"), "duplicate word '" + out.alphabet.format(w) + "'");
  }
  if (out.domain == Domain::Rational) {
    out.functional = Functional<Rational>::table(out.alphabet, std::move(rational_values));
  } else {
    out.functional = Functional<Poly>::table(out.alphabet, std::move(poly_values));
  }
  return out;
}

MomentProblem load_moment_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string(), std::string("invalid JSON: ") + e.what());
  }
  return parse_moment_problem(j);
}

}  // namespace nccomb
