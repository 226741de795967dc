#include "nccomb/clt.hpp"

#include <cmath>

#include "nccomb/cumulants.hpp"
#include "nccomb/functional.hpp"

namespace nccomb {

std::string_view clt_kind_name(CltKind kind) {
  return kind == CltKind::Boolean ? "boolean" : "fermi-boolean";
}

CltKind parse_clt_kind(std::string_view name) {
  if (name == "boolean") return CltKind::Boolean;
  if (name == "fermi-boolean" || name == "fb") return CltKind::FermiBoolean;
  throw std::invalid_argument("unknown CLT kind '" + std::string(name) + "' (boolean, fermi-boolean)");
}

long double ScaledMoment::approx(const Integer& n) const {
  const long double root = std::sqrt(static_cast<long double>(n.get_d()));
  return static_cast<long double>(rational.get_d()) + static_cast<long double>(inverse_sqrt_coefficient.get_d()) / root;
}

std::string ScaledMoment::to_string() const {
  if (exact()) return nccomb::to_string(rational);
  return nccomb::to_string(rational) + " + " + nccomb::to_string(inverse_sqrt_coefficient) + "/sqrt(N)";
}

ScaledMoment CltSeries::at(int k, const Integer& n) const {
  if (k < 1 || k > max_order()) throw std::out_of_range("moment order out of range");
  if (sgn(n) <= 0) throw std::invalid_argument("N must be positive");
  ScaledMoment out;
  const Rational inv_n(Integer(1), n);
  Rational power = 1;  // N^(-floor(j/2))
  const auto& c = moments[k - 1];
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0 && j % 2 == 0) power *= inv_n;
    if (j % 2 == 0) {
      out.rational += c[j] * power;
    } else {
      out.inverse_sqrt_coefficient += c[j] * power;
    }
  }
  return out;
}

Rational CltSeries::limit(int k) const {
  if (k < 1 || k > max_order()) throw std::out_of_range("moment order out of range");
  return moments[k - 1].empty() ? Rational(0) : moments[k - 1][0];
}

CltSeries clt_series(CltKind kind, const std::vector<Rational>& marginal_moments, int max_order,
                     bool allow_noncentered) {
  if (max_order < 1) throw std::invalid_argument("max order must be positive");
  if (static_cast<int>(marginal_moments.size()) < max_order) {
    throw std::invalid_argument("need marginal moments up to order " + std::to_string(max_order));
  }
  if (kind == CltKind::Boolean && sgn(marginal_moments[0]) != 0 && !allow_noncentered) {
    throw NonCenteredError("boolean CLT expects a centered marginal (mean " + to_string(marginal_moments[0]) +
                           "); pass the non-centered flag to override");
  }
  const Family family = kind == CltKind::Boolean ? Family::Interval : Family::AlmostInterval;
  CltSeries series;
  series.kind = kind;
  series.marginal_moments.assign(marginal_moments.begin(), marginal_moments.begin() + max_order);
  CumulantSolver<Rational> solver(moment_sequence_functional(series.marginal_moments), Weight::indicator(family),
                                  max_order);
  for (int k = 1; k <= max_order; ++k) series.marginal_cumulants.push_back(solver.cumulant(Word(k, 1)));
  for (int k = 1; k <= max_order; ++k) {
    std::vector<Rational> coefficients(static_cast<std::size_t>(k) + 1);
    for (const auto& p : enumerate(family, k)) {
      Rational term = 1;
      std::size_t power = 0;
      for (auto m : p.masks()) {
        const int size = std::popcount(m);
        term *= series.marginal_cumulants[size - 1];
        if (size >= 2) power += static_cast<std::size_t>(size - 2);
      }
      if (sgn(term) != 0) coefficients[power] += term;
    }
    while (coefficients.size() > 1 && sgn(coefficients.back()) == 0) coefficients.pop_back();
    series.moments.push_back(std::move(coefficients));
  }
  return series;
}

std::vector<ScaledMoment> clt_moments(CltKind kind, const std::vector<Rational>& marginal_moments, const Integer& n,
                                      int max_order, bool allow_noncentered) {
  const auto series = clt_series(kind, marginal_moments, max_order, allow_noncentered);
  std::vector<ScaledMoment> out;
  for (int k = 1; k <= max_order; ++k) out.push_back(series.at(k, n));
  return out;
}

std::vector<Rational> shifted_bernoulli_moments(const Rational& mean, const Rational& variance, int max_order) {
  std::vector<Rational> out;
  for (int j = 1; j <= max_order; ++j) {
    Rational sum = 0;
    Integer binomial = 1;  // C(j, i)
    for (int i = 0; i <= j; ++i) {
      if (i > 0) binomial = binomial * (j - i + 1) / i;
      if (i % 2 == 0) sum += Rational(binomial) * pow(mean, static_cast<unsigned long>(j - i)) * pow(variance, i / 2);
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace nccomb
