#include "nccomb/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nccomb {

namespace {

Rational random_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

RatMatrix::RatMatrix(std::size_t dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

RatMatrix RatMatrix::identity(std::size_t dim) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& diag) {
  RatMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool RatMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && sgn((*this)(i, j)) != 0) return false;
    }
  }
  return true;
}

void RatMatrix::require_same_dim(const RatMatrix& other) const {
  if (dim_ != other.dim_) {
    throw DimensionError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                         std::to_string(other.dim_));
  }
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  a.require_same_dim(b);
  const std::size_t d = a.dim_;
  RatMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const RatMatrix& a, const RatMatrix& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const int c = cmp(a.entries_[i], b.entries_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string RatMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).get_str();
    }
  }
  out << ']';
  return out.str();
}

RatMatrix diag_projection(const RatMatrix& m) {
  RatMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) = m(i, i);
  return out;
}

RatMatrix random_matrix(std::size_t dim, std::mt19937_64& rng, int max_numerator,
                        int max_denominator) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = random_rational(rng, max_numerator, max_denominator);
  }
  return m;
}

RatMatrix random_diagonal(std::size_t dim, std::mt19937_64& rng, int max_numerator,
                          int max_denominator) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = random_rational(rng, max_numerator, max_denominator);
  return m;
}

}  // namespace nccomb
