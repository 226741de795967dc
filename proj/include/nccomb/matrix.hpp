#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccomb/rational.hpp"

namespace nccomb {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  RatMatrix(std::size_t dim, std::vector<Rational> row_major);

  static RatMatrix identity(std::size_t dim);
  static RatMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_diagonal() const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rational& factor);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(RatMatrix a, const Rational& b) { return a *= b; }
  friend RatMatrix operator*(const Rational& b, RatMatrix a) { return a *= b; }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;

 private:
  void require_same_dim(const RatMatrix& other) const;

  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

inline bool is_zero(const RatMatrix& m) { return m.is_zero(); }

/// The diagonal-part map onto the diagonal subalgebra; a conditional
/// expectation: E(b a b') = b E(a) b' for diagonal b, b', and E(b) = b.
RatMatrix diag_projection(const RatMatrix& m);

/// Entries p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
RatMatrix random_matrix(std::size_t dim, std::mt19937_64& rng, int max_numerator = 3,
                        int max_denominator = 3);
RatMatrix random_diagonal(std::size_t dim, std::mt19937_64& rng, int max_numerator = 3,
                          int max_denominator = 3);

}  // namespace nccomb
