#include "nccomb/partition.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace nccomb {

namespace {

using Mask = Partition::Mask;

Mask full_mask(int n) {
  return n >= Partition::kMaxSize ? ~Mask{0} : (Mask{1} << n) - 1;
}

int lowest(Mask m) { return std::countr_zero(m) + 1; }
int highest(Mask m) { return Partition::kMaxSize - std::countl_zero(m); }

// Bits strictly between elements a < c.
Mask open_range(int a, int c) {
  if (c - a <= 1) return 0;
  return full_mask(c - 1) & ~full_mask(a);
}

bool contiguous(Mask m) {
  if (m == 0) return true;
  Mask shifted = m >> std::countr_zero(m);
  return (shifted & (shifted + 1)) == 0;
}

void check_size(int n) {
  if (n < 0 || n > Partition::kMaxSize) {
    throw PartitionError("ground set size " + std::to_string(n) + " outside [0, " +
                         std::to_string(Partition::kMaxSize) + "]");
  }
}

}  // namespace

Partition::Partition(int n, std::vector<Mask> masks, bool /*trusted*/)
    : n_(n), masks_(std::move(masks)) {
  std::sort(masks_.begin(), masks_.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

Partition::Partition(int n, const std::vector<std::vector<int>>& blocks) {
  check_size(n);
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  Mask seen = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw PartitionError("empty block");
    Mask m = 0;
    for (int e : block) {
      if (e < 1 || e > n) {
        throw PartitionError("element " + std::to_string(e) + " out of range 1.." +
                             std::to_string(n));
      }
      if ((seen | m) & element_bit(e)) {
        throw PartitionError("element " + std::to_string(e) + " repeated");
      }
      m |= element_bit(e);
    }
    seen |= m;
    masks.push_back(m);
  }
  if (seen != full_mask(n)) {
    int missing = lowest(full_mask(n) & ~seen);
    throw PartitionError("element " + std::to_string(missing) + " uncovered");
  }
  *this = Partition(n, std::move(masks), true);
}

Partition Partition::from_masks(int n, std::vector<Mask> masks) {
  check_size(n);
  Mask seen = 0;
  for (Mask m : masks) {
    if (m == 0) throw PartitionError("empty block");
    if (m & ~full_mask(n)) {
      throw PartitionError("element " + std::to_string(highest(m)) + " out of range 1.." +
                           std::to_string(n));
    }
    if (seen & m) throw PartitionError("element " + std::to_string(lowest(seen & m)) + " repeated");
    seen |= m;
  }
  if (seen != full_mask(n)) {
    throw PartitionError("element " + std::to_string(lowest(full_mask(n) & ~seen)) +
                         " uncovered");
  }
  return Partition(n, std::move(masks), true);
}

Partition Partition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  check_size(n);
  std::vector<Mask> masks;
  for (int i = 0; i < n; ++i) {
    const int label = labels[i];
    if (label < 0) throw PartitionError("negative block label");
    if (static_cast<std::size_t>(label) >= masks.size()) masks.resize(label + 1, 0);
    masks[label] |= element_bit(i + 1);
  }
  std::erase(masks, Mask{0});
  return Partition(n, std::move(masks), true);
}

Partition Partition::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks;
  int largest = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t slash = text.find('/', start);
      if (slash == std::string_view::npos) slash = text.size();
      std::string_view group = trim(text.substr(start, slash - start));
      std::vector<int> block;
      std::size_t pos = 0;
      while (pos <= group.size()) {
        std::size_t comma = group.find(',', pos);
        if (comma == std::string_view::npos) comma = group.size();
        std::string_view token = trim(group.substr(pos, comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
          throw PartitionError("malformed partition text '" + std::string(text) + "'");
        }
        block.push_back(value);
        largest = std::max(largest, value);
        pos = comma + 1;
      }
      blocks.push_back(std::move(block));
      start = slash + 1;
    }
  }
  return Partition(n < 0 ? largest : n, blocks);
}

Partition Partition::one(int n) {
  check_size(n);
  if (n == 0) return {};
  return Partition(n, {full_mask(n)}, true);
}

Partition Partition::zero(int n) {
  check_size(n);
  std::vector<Mask> masks;
  for (int i = 1; i <= n; ++i) masks.push_back(element_bit(i));
  return Partition(n, std::move(masks), true);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) {
    std::vector<int> block;
    for (Mask rest = m; rest; rest &= rest - 1) block.push_back(lowest(rest));
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(n_, 0);
  for (std::size_t b = 0; b < masks_.size(); ++b) {
    for (Mask rest = masks_[b]; rest; rest &= rest - 1) out[std::countr_zero(rest)] = static_cast<int>(b);
  }
  return out;
}

std::size_t Partition::block_of(int element) const {
  const Mask bit = element_bit(element);
  for (std::size_t b = 0; b < masks_.size(); ++b) {
    if (masks_[b] & bit) return b;
  }
  throw PartitionError("element " + std::to_string(element) + " not in partition");
}

bool Partition::is_singleton_block(std::size_t block) const {
  return std::has_single_bit(masks_.at(block));
}

bool Partition::has_singleton(int element) const {
  return std::find(masks_.begin(), masks_.end(), element_bit(element)) != masks_.end();
}

std::string Partition::to_string() const {
  std::ostringstream out;
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out << '/';
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ',';
      out << block[i];
    }
  }
  return out.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.masks_.begin(), a.masks_.end(),
                                                b.masks_.begin(), b.masks_.end());
}

bool is_noncrossing(const Partition& p) {
  const auto masks = p.masks();
  for (Mask v : masks) {
    // Every other block meeting the gap between consecutive elements of v
    // must sit entirely inside that gap.
    for (Mask rest = v; rest & (rest - 1); rest &= rest - 1) {
      const int a = lowest(rest);
      const int c = lowest(rest & (rest - 1));
      const Mask gap = open_range(a, c);
      if (!gap) continue;
      for (Mask w : masks) {
        const Mask inside = w & gap;
        if (inside && inside != w) return false;
      }
    }
  }
  return true;
}

bool is_interval(const Partition& p) {
  return std::all_of(p.masks().begin(), p.masks().end(), contiguous);
}

bool is_cyclic_interval(const Partition& p) {
  const Mask full = full_mask(p.size());
  return std::all_of(p.masks().begin(), p.masks().end(),
                     [full](Mask m) { return contiguous(m) || contiguous(full & ~m); });
}

bool is_pairing(const Partition& p) {
  return std::all_of(p.masks().begin(), p.masks().end(),
                     [](Mask m) { return std::popcount(m) == 2; });
}

Partition remove_singletons(const Partition& p) {
  Mask kept = 0;
  for (Mask m : p.masks()) {
    if (!std::has_single_bit(m)) kept |= m;
  }
  if (!kept) return {};
  // Compress the kept positions to 1..m.
  std::vector<int> rank(p.size() + 1, 0);
  int next = 0;
  for (int e = 1; e <= p.size(); ++e) {
    if (kept & element_bit(e)) rank[e] = ++next;
  }
  std::vector<Mask> masks;
  for (Mask m : p.masks()) {
    if (std::has_single_bit(m)) continue;
    Mask relabeled = 0;
    for (Mask rest = m; rest; rest &= rest - 1) relabeled |= element_bit(rank[lowest(rest)]);
    masks.push_back(relabeled);
  }
  return Partition::from_masks(next, std::move(masks));
}

Partition insert_singleton(const Partition& p, int position) {
  const int n = p.size();
  if (position < 1 || position > n + 1) {
    throw PartitionError("insertion position " + std::to_string(position) + " outside 1.." +
                         std::to_string(n + 1));
  }
  if (n + 1 > Partition::kMaxSize) throw PartitionError("partition too large to extend");
  const Mask below = full_mask(position - 1);
  std::vector<Mask> masks;
  masks.reserve(p.block_count() + 1);
  for (Mask m : p.masks()) masks.push_back((m & below) | ((m & ~below) << 1));
  masks.push_back(element_bit(position));
  return Partition::from_masks(n + 1, std::move(masks));
}

std::uint64_t crossing_count(const Partition& p) {
  const auto labels = p.labels();
  const int n = p.size();
  std::uint64_t count = 0;
  for (int a = 0; a < n; ++a) {
    for (int c = a + 2; c < n; ++c) {
      if (labels[c] != labels[a]) continue;
      for (int b = a + 1; b < c; ++b) {
        if (labels[b] == labels[a]) continue;
        for (int d = c + 1; d < n; ++d) count += labels[d] == labels[b];
      }
    }
  }
  return count;
}

std::vector<std::size_t> NestingForest::roots() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] < 0) out.push_back(v);
  }
  return out;
}

NestingForest forest_from_parents(std::vector<int> parent) {
  NestingForest forest;
  const std::size_t count = parent.size();
  forest.subtree_size.assign(count, 1);
  // Each node adds itself to every ancestor; depth is bounded by count.
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t steps = 0;
    for (int u = parent[v]; u >= 0; u = parent[u]) {
      if (++steps > count) throw std::invalid_argument("parent array has a cycle");
      ++forest.subtree_size[u];
    }
  }
  forest.parent = std::move(parent);
  return forest;
}

NestingForest nesting_forest(const Partition& p) {
  if (!is_noncrossing(p)) {
    throw PartitionError("nesting forest requires a non-crossing partition, got " + p.to_string());
  }
  const auto masks = p.masks();
  std::vector<int> parent(masks.size(), -1);
  for (std::size_t v = 0; v < masks.size(); ++v) {
    const int lo = lowest(masks[v]);
    const int hi = highest(masks[v]);
    int best_min = 0;
    for (std::size_t w = 0; w < masks.size(); ++w) {
      if (w == v) continue;
      const int wlo = lowest(masks[w]);
      // In a non-crossing partition span containment is nesting; the
      // innermost nesting block has the largest minimum.
      if (wlo < lo && highest(masks[w]) > hi && wlo > best_min) {
        best_min = wlo;
        parent[v] = static_cast<int>(w);
      }
    }
  }
  return forest_from_parents(std::move(parent));
}

mpz_class tree_factorial(const NestingForest& forest) {
  mpz_class product = 1;
  for (std::size_t size : forest.subtree_size) product *= static_cast<unsigned long>(size);
  return product;
}

}  // namespace nccomb

std::size_t std::hash<nccomb::Partition>::operator()(const nccomb::Partition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size()) * 0x9E3779B97F4A7C15ull;
  for (auto m : p.masks()) h ^= m + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  return h;
}
