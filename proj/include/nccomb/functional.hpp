#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nccomb/matrix.hpp"
#include "nccomb/poly.hpp"
#include "nccomb/rational.hpp"
#include "nccomb/words.hpp"

namespace nccomb {

class MissingMomentError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr const char* domain = "rational";
  static Rational one() { return 1; }
  static Rational zero() { return 0; }
  static std::string str(const Rational& v) { return to_string(v); }
};

template <>
struct ScalarTraits<Poly> {
  static constexpr const char* domain = "poly";
  static Poly one() { return Poly(1); }
  static Poly zero() { return Poly(); }
  static std::string str(const Poly& v) { return v.to_string(); }
};

/// A unital functional on words over a finite alphabet with values in a
/// commutative scalar domain. The constant symbol is the unit: it is deleted
/// before evaluation, and the empty word evaluates to 1. The evaluator only
/// ever sees non-empty constant-free words; its results are memoized.
template <class S>
class Functional {
 public:
  using Evaluator = std::function<S(const Word&)>;

  Functional() = default;
  Functional(Alphabet alphabet, Evaluator eval)
      : alphabet_(std::move(alphabet)), eval_(std::move(eval)), memo_(std::make_shared<Memo>()) {}

  /// Explicit values; a missing word is an error at evaluation time.
  static Functional table(Alphabet alphabet, std::map<Word, S> values) {
    auto shared = std::make_shared<const std::map<Word, S>>(std::move(values));
    Alphabet names = alphabet;
    return Functional(std::move(alphabet), [shared, names](const Word& w) -> S {
      auto it = shared->find(w);
      if (it == shared->end()) throw MissingMomentError("no moment given for word '" + names.format(w) + "'");
      return it->second;
    });
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  S operator()(const Word& w) const {
    Word reduced = strip_constants(w);
    if (reduced.empty()) return ScalarTraits<S>::one();
    for (Letter l : reduced) {
      if (l > alphabet_.size()) throw UnknownSymbolError("letter index " + std::to_string(l) + " outside alphabet");
    }
    {
      std::lock_guard lock(memo_->mutex);
      if (auto it = memo_->values.find(reduced); it != memo_->values.end()) return it->second;
    }
    S value = eval_(reduced);
    std::lock_guard lock(memo_->mutex);
    return memo_->values.emplace(std::move(reduced), std::move(value)).first->second;
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<Word, S> values;
  };

  Alphabet alphabet_;
  Evaluator eval_;
  std::shared_ptr<Memo> memo_;
};

/// Every constant-free word w is its own indeterminate m_w.
Functional<Poly> generic_functional(const Alphabet& alphabet);
std::string moment_variable_name(const Alphabet& alphabet, const Word& w);

/// One symbol x with F(x^k) = moments[k-1]. Longer words are missing.
Functional<Rational> moment_sequence_functional(const std::vector<Rational>& moments,
                                                const std::string& symbol = "x");

/// Moments 1..max_order of a finitely supported law.
std::vector<Rational> discrete_moments(const std::vector<Rational>& atoms, const std::vector<Rational>& probabilities,
                                       int max_order);

/// Classical random variables on a common finite probability space: F(w) =
/// sum_s p_s * prod_i value(w_i, s). Commutative and tracial, so a useful
/// "random" functional.
Functional<Rational> finite_space_functional(const Alphabet& alphabet, const std::vector<Rational>& probabilities,
                                             const std::vector<std::vector<Rational>>& values);

/// Generators and a constant in the matrix domain; F = diag_projection of the
/// product.
struct MatrixModel {
  Alphabet alphabet;
  std::vector<RatMatrix> generators;  // one per symbol
  RatMatrix constant;                 // diagonal, substituted for "1"

  std::size_t dim() const { return constant.dim(); }
  const RatMatrix& operator[](Letter l) const { return l == kConstant ? constant : generators.at(l - 1); }
  std::vector<RatMatrix> arguments(const Word& w) const;
  RatMatrix moment(const Word& w) const;
};

RatMatrix matrix_moment(const std::vector<RatMatrix>& args);

}  // namespace nccomb
