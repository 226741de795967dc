#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nccomb {

/// Raised when a list of blocks does not describe a partition of {1..n}.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set partition of {1..n}, n <= 64.
///
/// Blocks are stored as bitmasks (bit i-1 set <=> element i in the block),
/// ordered by their minimum element. Every constructor canonicalizes, so
/// equality and ordering are structural.
class Partition {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxSize = 64;

  /// The empty partition of the empty set.
  Partition() = default;

  /// Validating constructor from 1-based blocks. Throws PartitionError naming
  /// the offending element on overlap, gap, out-of-range or empty block.
  Partition(int n, const std::vector<std::vector<int>>& blocks);

  /// Builds from block masks; validates disjointness and coverage.
  static Partition from_masks(int n, std::vector<Mask> masks);

  /// Builds from a restricted-growth string (labels[i] = block of element i+1).
  static Partition from_labels(std::span<const int> labels);

  /// Parses "1,3/2,4". An empty string is the empty partition. When n is
  /// omitted it is taken as the largest element.
  static Partition parse(std::string_view text, int n = -1);

  static Partition one(int n);   // 1_n, a single block
  static Partition zero(int n);  // 0_n, all singletons

  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return masks_.size(); }
  std::span<const Mask> masks() const noexcept { return masks_; }
  Mask mask(std::size_t block) const { return masks_.at(block); }

  std::vector<std::vector<int>> blocks() const;
  /// 0-based block index for every element 1..n (a restricted-growth string).
  std::vector<int> labels() const;
  /// Index of the block holding element (1-based).
  std::size_t block_of(int element) const;

  bool is_singleton_block(std::size_t block) const;
  bool has_singleton(int element) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  Partition(int n, std::vector<Mask> masks, bool trusted);

  int n_ = 0;
  std::vector<Mask> masks_;
};

inline Partition::Mask element_bit(int element) { return Partition::Mask{1} << (element - 1); }

bool is_noncrossing(const Partition& p);
bool is_interval(const Partition& p);
/// Blocks are arcs once n and 1 are regarded as neighbours.
bool is_cyclic_interval(const Partition& p);
/// Every block has exactly two elements (the empty partition qualifies).
bool is_pairing(const Partition& p);

/// Deletes singleton blocks and relabels the survivors order-isomorphically.
/// An all-singleton partition maps to the empty partition.
Partition remove_singletons(const Partition& p);

/// Inserts the singleton {position} into p, shifting elements >= position up
/// by one. Requires 1 <= position <= n+1.
Partition insert_singleton(const Partition& p, int position);

/// Number of quadruples a<b<c<d with a,c in one block and b,d in another.
std::uint64_t crossing_count(const Partition& p);

/// Nesting structure of a non-crossing partition: one node per block, the
/// parent of a block is the smallest block strictly surrounding it.
struct NestingForest {
  std::vector<int> parent;            // -1 for outer blocks
  std::vector<std::size_t> subtree_size;

  std::size_t node_count() const noexcept { return parent.size(); }
  std::vector<std::size_t> roots() const;
};

/// Throws PartitionError for crossing input.
NestingForest nesting_forest(const Partition& p);

/// Product of subtree sizes over all nodes.
mpz_class tree_factorial(const NestingForest& forest);

/// Fills subtree sizes for an acyclic parent array (-1 marks a root).
NestingForest forest_from_parents(std::vector<int> parent);

}  // namespace nccomb

template <>
struct std::hash<nccomb::Partition> {
  std::size_t operator()(const nccomb::Partition& p) const noexcept;
};
