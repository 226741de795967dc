#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nccomb/cumulants.hpp"
#include "nccomb/families.hpp"
#include "nccomb/functional.hpp"

namespace nccomb {

enum class ProductKind { Tensor, Free, Boolean, Monotone, FermiBoolean };

/// tensor, free, boolean, monotone, fermi-boolean
std::string_view product_name(ProductKind kind);
ProductKind parse_product_kind(std::string_view name);

/// The family whose indicator weight gives the cumulants that vanish on
/// mixed words for this product (none for monotone).
std::optional<Family> product_cumulant_family(ProductKind kind);

class AlphabetCollisionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Union of pairwise-disjoint alphabets; joint letter l comes from marginal
/// origin[l-1].first where it is letter origin[l-1].second.
struct JointAlphabet {
  Alphabet alphabet;
  std::vector<std::pair<std::size_t, Letter>> origin;

  explicit JointAlphabet(const std::vector<Alphabet>& parts);
  std::size_t marginal_of(Letter l) const { return origin.at(l - 1).first; }
  Letter local(Letter l) const { return origin.at(l - 1).second; }
  /// Joint word -> (marginal, local word) for each maximal run of one marginal.
  std::vector<std::pair<std::size_t, Word>> runs(const Word& w) const;
  Word localize(const Word& w) const;
};

namespace detail {

template <class S>
struct ProductState {
  ProductKind kind;
  std::vector<Functional<S>> marginals;
  JointAlphabet joint;
  int max_order;
  std::vector<std::unique_ptr<CumulantSolver<S>>> solvers;  // Fermi-boolean only
  std::map<Word, S> memo;
  std::recursive_mutex mutex;

  ProductState(ProductKind k, std::vector<Functional<S>> m, int order)
      : kind(k), marginals(std::move(m)), joint(alphabets(marginals)), max_order(order) {
    if (kind == ProductKind::FermiBoolean) {
      for (const auto& f : marginals) {
        solvers.push_back(std::make_unique<CumulantSolver<S>>(f, Weight::indicator(Family::AlmostInterval), order));
      }
    }
  }

  static std::vector<Alphabet> alphabets(const std::vector<Functional<S>>& fs) {
    std::vector<Alphabet> out;
    for (const auto& f : fs) out.push_back(f.alphabet());
    return out;
  }

  S eval(const Word& w) {
    if (w.empty()) return ScalarTraits<S>::one();
    if (static_cast<int>(w.size()) > max_order) {
      throw std::out_of_range("word '" + joint.alphabet.format(w) + "' exceeds the product order cap " +
                              std::to_string(max_order));
    }
    std::lock_guard lock(mutex);
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    S value = compute(w);
    memo.emplace(w, value);
    return value;
  }

  S compute(const Word& w) {
    switch (kind) {
      case ProductKind::Tensor: return tensor(w);
      case ProductKind::Boolean: return boolean(w);
      case ProductKind::Free: return free(w);
      case ProductKind::Monotone: return monotone(w);
      case ProductKind::FermiBoolean: return fermi_boolean(w);
    }
    throw std::logic_error("unknown product kind");
  }

  S tensor(const Word& w) {
    std::vector<Word> parts(marginals.size());
    for (Letter l : w) parts[joint.marginal_of(l)].push_back(joint.local(l));
    S out = ScalarTraits<S>::one();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i].empty()) out *= marginals[i](parts[i]);
    }
    return out;
  }

  S boolean(const Word& w) {
    S out = ScalarTraits<S>::one();
    for (const auto& [i, run] : joint.runs(w)) out *= marginals[i](run);
    return out;
  }

  // 0 = F(prod_i (u_i - F(u_i))) over the alternating runs u_i, solved for
  // the full product.
  S free(const Word& w) {
    const auto runs = joint.runs(w);
    const std::size_t m = runs.size();
    if (m == 1) return marginals[runs[0].first](runs[0].second);
    std::vector<S> centers;
    std::size_t pos = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bounds;
    for (const auto& [i, run] : runs) {
      bounds.emplace_back(pos, pos + run.size());
      centers.push_back(marginals[i](run));
      pos += run.size();
    }
    S sum = ScalarTraits<S>::zero();
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t subset = 0; subset < full; ++subset) {
      S term = ScalarTraits<S>::one();
      Word kept;
      for (std::size_t i = 0; i < m; ++i) {
        if (subset >> i & 1) {
          kept.insert(kept.end(), w.begin() + static_cast<std::ptrdiff_t>(bounds[i].first),
                      w.begin() + static_cast<std::ptrdiff_t>(bounds[i].second));
        } else {
          term *= centers[i];
        }
      }
      if (is_zero(term)) continue;
      term *= eval(kept);
      // sign (-1)^(m - |subset|) from the centred factors
      if ((m - static_cast<std::size_t>(std::popcount(subset))) % 2 == 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    return -sum;
  }

  S monotone(const Word& w) {
    std::size_t top = 0;
    for (Letter l : w) top = std::max(top, joint.marginal_of(l));
    S out = ScalarTraits<S>::one();
    Word rest;
    Word run;
    auto flush = [&]() {
      if (!run.empty()) out *= marginals[top](run);
      run.clear();
    };
    for (Letter l : w) {
      if (joint.marginal_of(l) == top) {
        run.push_back(joint.local(l));
      } else {
        flush();
        rest.push_back(l);
      }
    }
    flush();
    if (!rest.empty()) out *= eval(rest);
    return out;
  }

  S fermi_boolean(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> colors;
    for (Letter l : w) colors.push_back(static_cast<int>(joint.marginal_of(l)));
    const Word local = joint.localize(w);
    S sum = ScalarTraits<S>::zero();
    GeneratorOptions options;
    options.noncrossing_only = true;
    options.colors = colors;
    for_each_partition(n, options, [&](std::span<const Partition::Mask> masks) {
      const Partition p = Partition::from_masks(n, {masks.begin(), masks.end()});
      if (!contains(Family::AlmostInterval, p)) return;
      S term = ScalarTraits<S>::one();
      for (auto mask : masks) {
        const std::size_t i = joint.marginal_of(w[static_cast<std::size_t>(std::countr_zero(mask))]);
        const S& c = solvers[i]->cumulant(subword(local, mask));
        if (is_zero(c)) return;
        term *= c;
      }
      sum += term;
    });
    return sum;
  }
};

}  // namespace detail

/// Joint functional of marginals over disjoint alphabets, combined by the
/// given independence. For monotone the list order is the algebra order.
template <class S>
Functional<S> product_functional(ProductKind kind, std::vector<Functional<S>> marginals, int max_order) {
  if (marginals.empty()) throw std::invalid_argument("product of no marginals");
  auto state = std::make_shared<detail::ProductState<S>>(kind, std::move(marginals), max_order);
  return Functional<S>(state->joint.alphabet, [state](const Word& w) { return state->eval(w); });
}

}  // namespace nccomb
