#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nccomb/rational.hpp"

namespace nccomb {

/// Sparse commutative polynomial over the rationals.
///
/// Indeterminates are interned by name in a process-wide registry; a
/// monomial is the sorted list of its indeterminates (with repetition).
/// Zero coefficients are never stored, so is_zero() is an exact test.
class Poly {
 public:
  using Variable = std::uint32_t;
  using Monomial = std::vector<Variable>;
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly variable(std::string_view name);
  static Variable intern(std::string_view name);
  static std::string variable_name(Variable v);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  /// Terms as (coefficient, [(name, exponent)]) sorted by variable names, for
  /// stable printing independent of interning order.
  std::vector<std::pair<Rational, std::vector<std::pair<std::string, unsigned>>>> named_terms() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& factor);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace nccomb
