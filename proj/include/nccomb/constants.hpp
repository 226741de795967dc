#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nccomb/weights.hpp"
#include "nccomb/words.hpp"

namespace nccomb {

struct ConstantWitness {
  std::string word;
  std::string value;
  std::optional<std::uint64_t> seed;
};

/// Outcome of checking that every cumulant with a constant argument vanishes.
struct ConstantsReport {
  std::string weight;
  std::string domain;  // "poly" or "matrix"
  int min_order = 2;
  int max_order = 0;
  std::vector<std::uint64_t> seeds;
  std::size_t words_checked = 0;
  std::size_t nonzero = 0;
  std::vector<ConstantWitness> witnesses;  // first few nonzero values
  bool holds() const { return nonzero == 0; }
};

/// Words of length n with the constant at every position of a non-empty
/// mask and distinct symbols a, b, c, ... elsewhere.
std::vector<Word> constant_test_words(int n);

/// Generic polynomial functional: every constant-free word is an independent
/// indeterminate.
ConstantsReport constants_check_poly(const Weight& w, int min_order, int max_order, std::size_t witness_limit = 5);

/// dim x dim random rational generators, a random invertible diagonal
/// constant, the diagonal projection as expectation; one run per seed.
ConstantsReport constants_check_matrix(const Weight& w, int min_order, int max_order, std::size_t dim,
                                       const std::vector<std::uint64_t>& seeds, std::size_t witness_limit = 5);

/// Term-by-term audit of the induction step: with the constant at position
/// r, every partition with {r} as a singleton must pair with its preimage
/// under singleton insertion (equal terms), every other non-top partition
/// must contribute zero, and every term of the shorter word must be paired.
struct BookkeepingReport {
  std::string weight;
  int max_order = 0;
  std::size_t words = 0;
  std::size_t paired = 0;         // case (ii) terms matched with a preimage
  std::size_t vanishing = 0;      // case (iii) terms, all zero
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  bool holds() const { return failures == 0; }
};

BookkeepingReport constants_bookkeeping(const Weight& w, int max_order, std::size_t message_limit = 5);

}  // namespace nccomb
