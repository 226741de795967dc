#include "nccomb/constants.hpp"

#include <random>
#include <set>

#include "nccomb/cumulants.hpp"
#include "nccomb/functional.hpp"

namespace nccomb {

std::vector<Word> constant_test_words(int n) {
  std::vector<Word> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Word w;
    Letter next = 1;
    for (int i = 0; i < n; ++i) w.push_back(mask >> i & 1 ? kConstant : next++);
    out.push_back(std::move(w));
  }
  return out;
}

ConstantsReport constants_check_poly(const Weight& w, int min_order, int max_order, std::size_t witness_limit) {
  ConstantsReport report;
  report.weight = w.name();
  report.domain = "poly";
  report.min_order = min_order;
  report.max_order = max_order;
  const Alphabet alphabet = Alphabet::letters(static_cast<std::size_t>(std::max(max_order, 1)));
  CumulantSolver<Poly> solver(generic_functional(alphabet), w, max_order);
  for (int n = min_order; n <= max_order; ++n) {
    for (const auto& word : constant_test_words(n)) {
      ++report.words_checked;
      const Poly& c = solver.cumulant(word);
      if (c.is_zero()) continue;
      ++report.nonzero;
      if (report.witnesses.size() < witness_limit) report.witnesses.push_back({alphabet.format(word), c.to_string(), {}});
    }
  }
  return report;
}

ConstantsReport constants_check_matrix(const Weight& w, int min_order, int max_order, std::size_t dim,
                                       const std::vector<std::uint64_t>& seeds, std::size_t witness_limit) {
  ConstantsReport report;
  report.weight = w.name();
  report.domain = "matrix";
  report.min_order = min_order;
  report.max_order = max_order;
  report.seeds = seeds;
  const Alphabet alphabet = Alphabet::letters(static_cast<std::size_t>(std::max(max_order, 1)));
  for (auto seed : seeds) {
    std::mt19937_64 rng(seed);
    MatrixModel model;
    model.alphabet = alphabet;
    for (std::size_t i = 0; i < alphabet.size(); ++i) model.generators.push_back(random_matrix(dim, rng));
    do {
      model.constant = random_diagonal(dim, rng);
    } while ([&] {
      for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(model.constant(i, i)) == 0) return true;
      }
      return false;
    }());
    OperatorCumulants cumulants(w);
    for (int n = min_order; n <= max_order; ++n) {
      for (const auto& word : constant_test_words(n)) {
        ++report.words_checked;
        const RatMatrix& c = cumulants.cumulant(model.arguments(word));
        if (c.is_zero()) continue;
        ++report.nonzero;
        if (report.witnesses.size() < witness_limit) {
          report.witnesses.push_back({alphabet.format(word), c.to_string(), seed});
        }
      }
    }
  }
  return report;
}

BookkeepingReport constants_bookkeeping(const Weight& w, int max_order, std::size_t message_limit) {
  BookkeepingReport report;
  report.weight = w.name();
  report.max_order = max_order;
  const Alphabet alphabet = Alphabet::letters(static_cast<std::size_t>(std::max(max_order, 1)));
  CumulantSolver<Poly> solver(generic_functional(alphabet), w, max_order);
  auto fail = [&](std::string message) {
    ++report.failures;
    if (report.messages.size() < message_limit) report.messages.push_back(std::move(message));
  };
  for (int size = 2; size <= max_order; ++size) {
    const int n = size - 1;
    for (int r = 1; r <= size; ++r) {
      // Constant at r, distinct symbols elsewhere; the shorter word absorbs
      // the constant into a neighbour, which for a scalar constant just drops it.
      Word word;
      Letter next = 1;
      for (int i = 1; i <= size; ++i) word.push_back(i == r ? kConstant : next++);
      Word shorter = strip_constants(word);
      ++report.words;
      std::set<Partition> paired_preimages;
      for (const auto& [sigma, weight] : weighted_support(w, size)) {
        if (sigma.block_count() == 1) continue;
        Poly left = solver.commutative_extension(sigma, word) * weight;
        if (sigma.has_singleton(r)) {
          std::vector<Partition::Mask> masks;
          const Partition::Mask low = element_bit(r) - 1;
          for (auto m : sigma.masks()) {
            if (m == element_bit(r)) continue;
            masks.push_back((m & low) | ((m & ~low) >> 1));
          }
          const Partition pi = Partition::from_masks(n, masks);
          if (insert_singleton(pi, r) != sigma) throw std::logic_error("singleton removal is not inverse to insertion");
          Poly right = solver.commutative_extension(pi, shorter) * w(pi);
          paired_preimages.insert(pi);
          if (left != right) {
            fail("size " + std::to_string(size) + ", r=" + std::to_string(r) + ": term of " + sigma.to_string() +
                 " (weight " + to_string(weight) + ") differs from its preimage " + pi.to_string() + " (weight " +
                 to_string(w(pi)) + ")");
          } else {
            ++report.paired;
          }
        } else if (left.is_zero()) {
          ++report.vanishing;
        } else {
          fail("size " + std::to_string(size) + ", r=" + std::to_string(r) + ": " + sigma.to_string() +
               " without singleton {r} contributes " + left.to_string());
        }
      }
      for (const auto& [pi, weight] : weighted_support(w, n)) {
        if (paired_preimages.count(pi)) continue;
        Poly right = solver.commutative_extension(pi, shorter) * weight;
        if (right.is_zero()) continue;
        fail("size " + std::to_string(size) + ", r=" + std::to_string(r) + ": term of " + pi.to_string() +
             " has no partner " + insert_singleton(pi, r).to_string());
      }
    }
  }
  return report;
}

}  // namespace nccomb
