#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nccomb/rational.hpp"

namespace nccomb {

enum class CltKind { Boolean, FermiBoolean };

std::string_view clt_kind_name(CltKind kind);
CltKind parse_clt_kind(std::string_view name);

class NonCenteredError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a + b / sqrt(N).
struct ScaledMoment {
  Rational rational;
  Rational inverse_sqrt_coefficient;

  bool exact() const { return sgn(inverse_sqrt_coefficient) == 0; }
  long double approx(const Integer& n) const;
  std::string to_string() const;  // "a" or "a + b/sqrt(N)"
};

/// Moments of the normalized sum of N independent copies as polynomials in
/// t = N^(-1/2): the first cumulant is kept, the order-k cumulant of the sum
/// (N times the marginal one) is scaled by N^(-k/2), i.e. multiplied by t^(k-2).
struct CltSeries {
  CltKind kind;
  std::vector<Rational> marginal_moments;
  std::vector<Rational> marginal_cumulants;     // boolean or Fermi-boolean, orders 1..max
  std::vector<std::vector<Rational>> moments;  // moments[k-1][j] = coefficient of t^j in m_k

  int max_order() const { return static_cast<int>(moments.size()); }
  ScaledMoment at(int k, const Integer& n) const;
  /// t -> 0.
  Rational limit(int k) const;
};

/// Boolean sums require a centered marginal unless allow_noncentered.
CltSeries clt_series(CltKind kind, const std::vector<Rational>& marginal_moments, int max_order,
                     bool allow_noncentered = false);

std::vector<ScaledMoment> clt_moments(CltKind kind, const std::vector<Rational>& marginal_moments,
                                      const Integer& n, int max_order, bool allow_noncentered = false);

/// Moments 1..max_order of mean + sqrt(variance) * (+-1 with probability 1/2):
/// sum over even i of C(j, i) mean^(j-i) variance^(i/2).
std::vector<Rational> shifted_bernoulli_moments(const Rational& mean, const Rational& variance, int max_order);

}  // namespace nccomb
