#include "nccomb/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nccomb {

namespace {

using Mask = Partition::Mask;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Moebius value overflows 64 bits");
  return out;
}

// leq on partitions given the labels of the upper one.
bool refines(std::span<const Mask> lower, std::span<const Mask> upper, const std::vector<int>& upper_labels) {
  if (lower.size() < upper.size()) return false;
  for (Mask m : lower) {
    const Mask host = upper[upper_labels[std::countr_zero(m)]];
    if (m & ~host) return false;
  }
  return true;
}

struct PosetCache {
  std::mutex mutex;
  std::map<std::pair<Family, int>, std::shared_ptr<const FamilyPoset>> entries;
};

PosetCache& poset_cache() {
  static PosetCache c;
  return c;
}

}  // namespace

bool leq(const Partition& s, const Partition& p) {
  if (s.size() != p.size()) {
    throw std::invalid_argument("comparing partitions of different sizes " + std::to_string(s.size()) +
                                " and " + std::to_string(p.size()));
  }
  return refines(s.masks(), p.masks(), p.labels());
}

FinitePoset::FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq) {
  up_.assign(size, Bits(size));
  down_.assign(size, Bits(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a == b || leq(a, b)) {
        up_[a].set(b);
        down_[b].set(a);
      }
    }
  }
  topological_.resize(size);
  std::iota(topological_.begin(), topological_.end(), std::size_t{0});
  std::stable_sort(topological_.begin(), topological_.end(),
                   [this](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
}

std::vector<std::int64_t> FinitePoset::moebius_from(std::size_t a) const {
  std::vector<std::int64_t> mu(size(), 0);
  for (std::size_t x : topological_) {
    if (!up_[a].test(x)) continue;
    if (x == a) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    const Bits interval = up_[a] & down_[x];
    for (auto z = interval.find_first(); z != Bits::npos; z = interval.find_next(z)) {
      if (z != x) sum = checked_add(sum, mu[z]);
    }
    mu[x] = -sum;
  }
  return mu;
}

std::vector<std::int64_t> FinitePoset::moebius_to(std::size_t b) const {
  std::vector<std::int64_t> mu(size(), 0);
  for (auto it = topological_.rbegin(); it != topological_.rend(); ++it) {
    const std::size_t x = *it;
    if (!down_[b].test(x)) continue;
    if (x == b) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    const Bits interval = up_[x] & down_[b];
    for (auto z = interval.find_first(); z != Bits::npos; z = interval.find_next(z)) {
      if (z != x) sum = checked_add(sum, mu[z]);
    }
    mu[x] = -sum;
  }
  return mu;
}

std::int64_t FinitePoset::moebius(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw std::invalid_argument("Moebius function needs lower <= upper");
  return moebius_from(a)[b];
}

std::vector<std::size_t> FinitePoset::minimal_upper_bounds(std::size_t a, std::size_t b) const {
  const Bits bounds = up_[a] & up_[b];
  std::vector<std::size_t> out;
  for (auto u = bounds.find_first(); u != Bits::npos; u = bounds.find_next(u)) {
    if ((down_[u] & bounds).count() == 1) out.push_back(u);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  auto bounds = minimal_upper_bounds(a, b);
  if (bounds.size() != 1) return std::nullopt;
  return bounds.front();
}

bool FinitePoset::is_lattice() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (!join(a, b)) return false;
    }
  }
  // A finite join-semilattice with a least element is a lattice.
  for (std::size_t a = 0; a < size(); ++a) {
    if (down_[a].count() == 1 && up_[a].count() == size()) return true;
  }
  return size() == 0;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
      if (b == a) continue;
      // a < b is a cover when the open interval is empty.
      if ((up_[a] & down_[b]).count() == 2) edges.emplace_back(a, b);
    }
  }
  return edges;
}

FinitePoset FinitePoset::restrict_to(const std::vector<std::size_t>& elements) const {
  return FinitePoset(elements.size(),
                     [&](std::size_t a, std::size_t b) { return leq(elements[a], elements[b]); });
}

namespace {

struct Signature {
  std::size_t down, up, lower_covers, upper_covers;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FinitePoset& p) {
  std::vector<Signature> sig(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) sig[a] = {p.down_set(a).count(), p.up_set(a).count(), 0, 0};
  for (auto [lo, hi] : p.hasse_edges()) {
    ++sig[lo].upper_covers;
    ++sig[hi].lower_covers;
  }
  return sig;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t size = a.size();
  if (size != b.size()) return std::nullopt;
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sig_a[x].down < sig_a[y].down; });

  std::vector<std::size_t> image(size, size);
  std::vector<bool> used(size, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == size) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < size; ++y) {
      if (used[y] || sig_b[y] != sig_a[x]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t z = order[k];
        consistent = a.leq(z, x) == b.leq(image[z], y) && a.leq(x, z) == b.leq(y, image[z]);
      }
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::optional<std::size_t> FamilyPoset::find(const Partition& p) const {
  auto it = std::lower_bound(members.begin(), members.end(), p, [](const Partition& x, const Partition& y) {
    return x < y;
  });
  if (it == members.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

std::size_t FamilyPoset::index_of(const Partition& p) const {
  if (auto i = find(p)) return *i;
  throw std::invalid_argument(p.to_string() + " is not in " + std::string(family_name(family)) + "(" +
                              std::to_string(n) + ")");
}

const FamilyPoset& family_poset(Family f, int n, int size_cap) {
  auto& cache = poset_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find({f, n}); it != cache.entries.end()) return *it->second;
  }
  auto poset = std::make_shared<FamilyPoset>();
  poset->family = f;
  poset->n = n;
  poset->members = enumerate(f, n, size_cap);
  // Sorted storage gives binary-search lookup; enumeration order is not needed here.
  std::sort(poset->members.begin(), poset->members.end());
  std::vector<std::vector<int>> labels;
  labels.reserve(poset->members.size());
  for (const auto& p : poset->members) labels.push_back(p.labels());
  const auto& members = poset->members;
  poset->order = FinitePoset(members.size(), [&](std::size_t a, std::size_t b) {
    return refines(members[a].masks(), members[b].masks(), labels[b]);
  });
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.entries.emplace(std::make_pair(f, n), std::move(poset));
  return *it->second;
}

Partition join_in_family(Family f, const Partition& s, const Partition& p) {
  if (s.size() != p.size()) throw std::invalid_argument("join of partitions of different sizes");
  const auto& poset = family_poset(f, s.size());
  const auto bounds = poset.order.minimal_upper_bounds(poset.index_of(s), poset.index_of(p));
  if (bounds.size() != 1) {
    throw NotALatticeError(std::string(family_name(f)) + "(" + std::to_string(s.size()) + ") has " +
                           std::to_string(bounds.size()) + " minimal upper bounds for " + s.to_string() +
                           " and " + p.to_string());
  }
  return poset.members[bounds.front()];
}

std::int64_t moebius(Family f, const Partition& lower, const Partition& upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("Moebius of partitions of different sizes");
  const auto& poset = family_poset(f, lower.size());
  const std::size_t a = poset.index_of(lower);
  const std::size_t b = poset.index_of(upper);
  if (!poset.order.leq(a, b)) {
    throw std::invalid_argument(lower.to_string() + " is not below " + upper.to_string());
  }
  return poset.order.moebius_from(a)[b];
}

WeisnerResult weisner_check(Family f, int n, const Partition& sigma) {
  const auto& poset = family_poset(f, n);
  const std::size_t s = poset.index_of(sigma);
  const std::size_t bottom = poset.index_of(Partition::zero(n));
  const std::size_t top = poset.index_of(Partition::one(n));
  if (s == bottom) throw std::invalid_argument("Weisner sum needs sigma above the bottom element");
  const auto mu = poset.order.moebius_from(bottom);
  WeisnerResult result;
  for (std::size_t x = 0; x < poset.members.size(); ++x) {
    const auto bounds = poset.order.minimal_upper_bounds(x, s);
    if (bounds.size() != 1) {
      throw NotALatticeError(std::string(family_name(f)) + "(" + std::to_string(n) + ") has no unique join of " +
                             poset.members[x].to_string() + " and " + sigma.to_string());
    }
    if (bounds.front() == top) {
      result.sum = checked_add(result.sum, mu[x]);
      result.contributing.push_back(poset.members[x]);
    }
  }
  result.holds = result.sum == 0;
  return result;
}

SIReport si_check_family(Family f, int n_max) {
  SIReport report;
  report.subject = "family " + std::string(family_name(f));
  report.max_n_checked = n_max;
  for (int n = 1; n < n_max; ++n) {
    const auto& small = family_poset(f, n);
    const auto& large = family_poset(f, n + 1);
    for (int r = 1; r <= n + 1; ++r) {
      std::vector<std::size_t> images;
      images.reserve(small.members.size());
      for (const auto& p : small.members) {
        const Partition image = insert_singleton(p, r);
        auto idx = large.find(image);
        if (!idx) {
          report.holds = false;
          report.witness = SIWitness{n, r, p, image, "image leaves the family", {}, {}};
          return report;
        }
        images.push_back(*idx);
      }
      // Surjectivity onto the members carrying the singleton {r}.
      std::vector<bool> hit(large.members.size(), false);
      for (auto i : images) hit[i] = true;
      for (std::size_t j = 0; j < large.members.size(); ++j) {
        const auto& q = large.members[j];
        if (!hit[j] && q.has_singleton(r)) {
          // Drop the singleton to name the missing preimage.
          std::vector<Mask> masks;
          const Mask below = element_bit(r) - 1;
          for (Mask m : q.masks()) {
            if (m == element_bit(r)) continue;
            masks.push_back((m & below) | ((m & ~below & ~element_bit(r)) >> 1));
          }
          report.holds = false;
          report.witness = SIWitness{n, r, Partition::from_masks(n, masks), q, "singleton member has no preimage",
                                     {}, {}};
          return report;
        }
      }
      for (std::size_t a = 0; a < images.size(); ++a) {
        for (std::size_t b = 0; b < images.size(); ++b) {
          if (small.order.leq(a, b) != large.order.leq(images[a], images[b])) {
            report.holds = false;
            report.witness = SIWitness{n, r, small.members[a], large.members[images[a]], "order not preserved",
                                       {}, {}};
            return report;
          }
        }
      }
    }
  }
  return report;
}

SIReport si_check_weight(const Weight& w, int n_max) {
  SIReport report;
  report.subject = "weight " + w.name();
  report.max_n_checked = n_max;
  const Partition single = Partition::one(1);
  if (w(single) != 1) {
    report.holds = false;
    report.witness = SIWitness{1, 0, single, single, "normalization w({1}) != 1", w(single), w(single)};
    return report;
  }
  for (int n = 1; n < n_max; ++n) {
    for (int r = 1; r <= n + 1; ++r) {
      for (const auto& p : enumerate(Family::All, n, std::max(n_max, kDefaultSizeCap))) {
        const Partition image = insert_singleton(p, r);
        Rational before = w(p);
        Rational after = w(image);
        if (before != after) {
          report.holds = false;
          report.witness = SIWitness{n, r, p, image, "weight not preserved", before, after};
          return report;
        }
      }
    }
  }
  return report;
}

bool witness_is_genuine(const SIReport& report, const std::optional<Family>& family,
                        const std::optional<Weight>& weight) {
  if (!report.witness) return false;
  const auto& w = *report.witness;
  if (weight) {
    if (w.position == 0) return (*weight)(w.partition) != 1;
    return insert_singleton(w.partition, w.position) == w.image && (*weight)(w.partition) != (*weight)(w.image);
  }
  if (family) {
    if (insert_singleton(w.partition, w.position) != w.image) return false;
    const bool in_small = contains(*family, w.partition);
    const bool in_large = contains(*family, w.image);
    // Either a member maps outside, or a singleton member has a non-member preimage.
    return in_small != in_large;
  }
  return false;
}

FinitePoset collapsed_cube(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("collapsed cube size out of range");
  std::vector<std::uint64_t> words;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (std::popcount(w) <= n - 2) words.push_back(w);
  }
  const std::size_t top = words.size();
  return FinitePoset(top + 1, [&](std::size_t a, std::size_t b) {
    if (b == top) return true;
    if (a == top) return false;
    return (words[a] & ~words[b]) == 0;
  });
}

std::uint64_t cyclic_buttons(const Partition& p) {
  const int n = p.size();
  const auto labels = p.labels();
  std::uint64_t word = 0;
  for (int i = 0; i < n; ++i) {
    if (labels[i] == labels[(i + 1) % n]) word |= std::uint64_t{1} << i;
  }
  return word;
}

std::string hasse_dot(const FamilyPoset& poset) {
  std::ostringstream out;
  out << "digraph \"" << family_name(poset.family) << "(" << poset.n << ")\" {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < poset.members.size(); ++i) {
    out << "  n" << i << " [label=\"" << poset.members[i].to_string() << "\"];\n";
  }
  for (auto [lo, hi] : poset.order.hasse_edges()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nccomb
