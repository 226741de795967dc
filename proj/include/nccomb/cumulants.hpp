#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nccomb/families.hpp"
#include "nccomb/functional.hpp"
#include "nccomb/matrix.hpp"
#include "nccomb/partition.hpp"
#include "nccomb/poset.hpp"
#include "nccomb/weights.hpp"

namespace nccomb {

class NonInvertibleWeightError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Which neighbour receives the value of a collapsed block, and which
/// interval block is collapsed first.
struct NestedOptions {
  enum class Attach { Right, Left };
  Attach attach = Attach::Right;
  bool last_block_first = false;
};

/// Nested multiplicative extension. Repeatedly picks a block that is an
/// interval of the remaining positions, evaluates it with `kappa`, removes it
/// and multiplies the result into a neighbouring argument via
/// `attach(value, arg, value_on_left)`. Right attachment falls back to the
/// left neighbour when the block ends the remaining word, and vice versa.
template <class Value, class Arg, class Kappa, class AttachFn>
Value nested_extension(const Partition& p, std::vector<Arg> args, Kappa&& kappa, AttachFn&& attach,
                       const NestedOptions& options = {}) {
  if (static_cast<std::size_t>(p.size()) != args.size()) {
    throw std::invalid_argument("partition size " + std::to_string(p.size()) + " differs from argument count " +
                                std::to_string(args.size()));
  }
  if (args.empty()) throw std::invalid_argument("nested extension of the empty partition");
  std::vector<Partition::Mask> blocks(p.masks().begin(), p.masks().end());
  Partition::Mask remaining = blocks.empty() ? 0 : (Partition::Mask{1} << (p.size() - 1) << 1) - 1;
  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Partition::Mask m = blocks[b];
      const int lo = std::countr_zero(m);
      const int hi = 63 - std::countl_zero(m);
      const Partition::Mask span = ((Partition::Mask{1} << hi) << 1) - (Partition::Mask{1} << lo);
      if ((span & remaining) != m) continue;
      pick = b;
      if (!options.last_block_first) break;
    }
    if (!pick) throw PartitionError("nested extension requires a non-crossing partition, got " + p.to_string());
    const Partition::Mask m = blocks[*pick];
    std::vector<Arg> block_args;
    for (Partition::Mask rest = m; rest; rest &= rest - 1) block_args.push_back(args[std::countr_zero(rest)]);
    Value value = kappa(block_args);
    remaining &= ~m;
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(*pick));
    if (!remaining) return value;
    const int lo = std::countr_zero(m);
    const int hi = 63 - std::countl_zero(m);
    const Partition::Mask after = remaining & ~(((Partition::Mask{1} << hi) << 1) - 1);
    const Partition::Mask before = remaining & ((Partition::Mask{1} << lo) - 1);
    const bool use_right = options.attach == NestedOptions::Attach::Right ? after != 0 : before == 0;
    if (use_right) {
      attach(value, args[std::countr_zero(after)], true);
    } else {
      attach(value, args[63 - std::countl_zero(before)], false);
    }
  }
}

/// An argument of a scalar-domain cumulant: a letter carrying a scalar
/// coefficient (multilinearity pulls the coefficients out).
template <class S>
struct ScaledLetter {
  S coefficient;
  Letter letter;
};

enum class Extension { Commutative, Nested };

/// Weighted cumulants of a scalar-domain functional, solved order by order
/// from omega(1_n) c(w) = F(w) - sum_{pi != 1_n} omega(pi) c_pi(w).
template <class S>
class CumulantSolver {
 public:
  CumulantSolver(Functional<S> f, Weight w, int max_order, Extension ext = Extension::Commutative,
                 NestedOptions nested = {})
      : f_(std::move(f)), w_(std::move(w)), max_order_(max_order), ext_(ext), nested_(nested) {
    for (int n = 1; n <= max_order; ++n) {
      const Rational top = w_(Partition::one(n));
      if (sgn(top) == 0) {
        throw NonInvertibleWeightError("weight " + w_.name() + " vanishes on 1_" + std::to_string(n));
      }
      top_.push_back(top);
    }
    if (ext_ == Extension::Nested && !w_.supported_on_noncrossing()) {
      throw std::invalid_argument("nested extension needs a weight supported on non-crossing partitions");
    }
  }

  const Functional<S>& functional() const noexcept { return f_; }
  const Weight& weight() const noexcept { return w_; }
  int max_order() const noexcept { return max_order_; }

  /// c_{1_n}(w); constant letters stand for the unit.
  const S& cumulant(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cumulant of the empty word");
    if (static_cast<int>(w.size()) > max_order_) {
      throw std::out_of_range("word length " + std::to_string(w.size()) + " exceeds max order " +
                              std::to_string(max_order_));
    }
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    const int n = static_cast<int>(w.size());
    S value = f_(w);
    if (n > 1) {
      for (const auto& [p, weight] : weighted_support(w_, n)) {
        if (p.block_count() == 1) continue;
        S term = extension(p, w);
        if (is_zero(term)) continue;
        term *= weight;
        value -= term;
      }
      const Rational inverse = 1 / top_[n - 1];
      value *= inverse;
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

  /// c_pi(w) with the configured extension.
  S extension(const Partition& p, const Word& w) {
    return ext_ == Extension::Commutative ? commutative_extension(p, w) : nested_extension(p, w, nested_);
  }

  S commutative_extension(const Partition& p, const Word& w) {
    S product = ScalarTraits<S>::one();
    for (auto m : p.masks()) {
      const S& c = cumulant(subword(w, m));
      if (is_zero(c)) return ScalarTraits<S>::zero();
      product *= c;
    }
    return product;
  }

  S nested_extension(const Partition& p, const Word& w, const NestedOptions& options) {
    std::vector<ScaledLetter<S>> args;
    for (Letter l : w) args.push_back({ScalarTraits<S>::one(), l});
    return nccomb::nested_extension<S>(
        p, std::move(args),
        [this](const std::vector<ScaledLetter<S>>& block) -> S {
          S value = ScalarTraits<S>::one();
          Word letters;
          for (const auto& a : block) {
            value *= a.coefficient;
            letters.push_back(a.letter);
          }
          return value * cumulant(letters);
        },
        [](const S& value, ScaledLetter<S>& arg, bool) { arg.coefficient *= value; }, options);
  }

  std::map<Word, S> table(const std::vector<Word>& words) {
    std::map<Word, S> out;
    for (const auto& w : words) out.emplace(w, cumulant(w));
    return out;
  }

 private:
  Functional<S> f_;
  Weight w_;
  int max_order_;
  Extension ext_;
  NestedOptions nested_;
  std::vector<Rational> top_;
  std::map<Word, S> memo_;
};

/// Solved cumulants for every word up to max_order over the alphabet.
template <class S>
struct CumulantTable {
  Weight weight;
  Alphabet alphabet;
  int max_order = 0;
  std::map<Word, S> entries;
};

template <class S>
CumulantTable<S> moments_to_cumulants(const Functional<S>& f, const Weight& w, int max_order,
                                      Extension ext = Extension::Commutative) {
  CumulantSolver<S> solver(f, w, max_order, ext);
  CumulantTable<S> table{w, f.alphabet(), max_order, {}};
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& word : all_words(f.alphabet().size(), n)) table.entries.emplace(word, solver.cumulant(word));
  }
  return table;
}

/// F(w) = sum_pi omega(pi) prod_V c(w|V).
template <class S, class CumulantFn>
S moment_from_cumulants(CumulantFn&& cumulant, const Weight& w, const Word& word) {
  if (word.empty()) return ScalarTraits<S>::one();
  S sum = ScalarTraits<S>::zero();
  for (const auto& [p, weight] : weighted_support(w, static_cast<int>(word.size()))) {
    S term = ScalarTraits<S>::one();
    for (auto m : p.masks()) {
      S c = cumulant(subword(word, m));
      if (is_zero(c)) {
        term = ScalarTraits<S>::zero();
        break;
      }
      term *= c;
    }
    if (is_zero(term)) continue;
    term *= weight;
    sum += term;
  }
  return sum;
}

/// The functional whose cumulants are the table entries (constant-free words).
template <class S>
Functional<S> cumulants_to_moments(const CumulantTable<S>& table) {
  auto entries = std::make_shared<const std::map<Word, S>>(table.entries);
  const Weight w = table.weight;
  const int max_order = table.max_order;
  const Alphabet alphabet = table.alphabet;
  return Functional<S>(table.alphabet, [entries, w, max_order, alphabet](const Word& word) {
    if (static_cast<int>(word.size()) > max_order) {
      throw std::out_of_range("word '" + alphabet.format(word) + "' exceeds the table order");
    }
    return moment_from_cumulants<S>(
        [&](const Word& sub) -> S {
          auto it = entries->find(sub);
          if (it == entries->end()) throw MissingMomentError("no cumulant for word '" + alphabet.format(sub) + "'");
          return it->second;
        },
        w, word);
  });
}

/// c(w) = sum_{pi in f(n)} mu_f(pi, 1_n) prod_V F(w|V).
template <class S>
S moebius_inversion_cumulant(const Functional<S>& f, Family family, const Word& w) {
  const int n = static_cast<int>(w.size());
  const auto& poset = family_poset(family, n);
  if (!poset.order.is_lattice()) {
    throw NotALatticeError(std::string(family_name(family)) + "(" + std::to_string(n) + ") is not a lattice");
  }
  const auto mu = poset.order.moebius_to(poset.index_of(Partition::one(n)));
  S sum = ScalarTraits<S>::zero();
  for (std::size_t i = 0; i < poset.members.size(); ++i) {
    if (mu[i] == 0) continue;
    S term = ScalarTraits<S>::one();
    for (auto m : poset.members[i].masks()) term *= f(subword(w, m));
    term *= Rational(static_cast<long>(mu[i]));
    sum += term;
  }
  return sum;
}

/// Operator-valued cumulants over rational matrices with the diagonal
/// conditional expectation, using the nested extension.
class OperatorCumulants {
 public:
  explicit OperatorCumulants(Weight w, NestedOptions options = {});

  const Weight& weight() const noexcept { return w_; }
  const RatMatrix& cumulant(const std::vector<RatMatrix>& args);
  RatMatrix extension(const Partition& p, const std::vector<RatMatrix>& args);
  RatMatrix extension(const Partition& p, const std::vector<RatMatrix>& args, const NestedOptions& options);

 private:
  Weight w_;
  NestedOptions options_;
  std::map<std::size_t, Rational> top_;
  std::map<std::vector<RatMatrix>, RatMatrix> memo_;
};

}  // namespace nccomb
