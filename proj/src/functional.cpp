#include "nccomb/functional.hpp"

namespace nccomb {

std::string moment_variable_name(const Alphabet& alphabet, const Word& w) {
  std::string name = "m_";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && alphabet.name(w[i]).size() > 1) name += '.';
    name += alphabet.name(w[i]);
  }
  return name;
}

Functional<Poly> generic_functional(const Alphabet& alphabet) {
  return Functional<Poly>(alphabet, [alphabet](const Word& w) {
    return Poly::variable(moment_variable_name(alphabet, w));
  });
}

Functional<Rational> moment_sequence_functional(const std::vector<Rational>& moments, const std::string& symbol) {
  Alphabet alphabet({symbol});
  std::map<Word, Rational> values;
  for (std::size_t k = 0; k < moments.size(); ++k) values.emplace(Word(k + 1, 1), moments[k]);
  return Functional<Rational>::table(std::move(alphabet), std::move(values));
}

std::vector<Rational> discrete_moments(const std::vector<Rational>& atoms, const std::vector<Rational>& probabilities,
                                       int max_order) {
  if (atoms.size() != probabilities.size()) throw std::invalid_argument("atoms and probabilities differ in length");
  Rational total = 0;
  for (const auto& p : probabilities) {
    if (sgn(p) < 0) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("probabilities sum to " + to_string(total) + ", not 1");
  std::vector<Rational> out;
  for (int k = 1; k <= max_order; ++k) {
    Rational m = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) m += probabilities[i] * pow(atoms[i], k);
    out.push_back(m);
  }
  return out;
}

Functional<Rational> finite_space_functional(const Alphabet& alphabet, const std::vector<Rational>& probabilities,
                                             const std::vector<std::vector<Rational>>& values) {
  if (values.size() != alphabet.size()) throw std::invalid_argument("one value row per symbol required");
  for (const auto& row : values) {
    if (row.size() != probabilities.size()) throw std::invalid_argument("value row length differs from sample space");
  }
  return Functional<Rational>(alphabet, [probabilities, values](const Word& w) {
    Rational sum = 0;
    for (std::size_t s = 0; s < probabilities.size(); ++s) {
      Rational term = probabilities[s];
      for (Letter l : w) term *= values[l - 1][s];
      sum += term;
    }
    return sum;
  });
}

std::vector<RatMatrix> MatrixModel::arguments(const Word& w) const {
  std::vector<RatMatrix> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back((*this)[l]);
  return out;
}

RatMatrix MatrixModel::moment(const Word& w) const { return matrix_moment(arguments(w)); }

RatMatrix matrix_moment(const std::vector<RatMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("moment of the empty word has no dimension");
  RatMatrix product = args.front();
  for (std::size_t i = 1; i < args.size(); ++i) product = product * args[i];
  return diag_projection(product);
}

}  // namespace nccomb
