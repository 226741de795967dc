#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "nccomb/families.hpp"
#include "nccomb/partition.hpp"
#include "nccomb/rational.hpp"
#include "nccomb/weights.hpp"

namespace nccomb {

class NotALatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reverse refinement: every block of s lies inside a block of p.
bool leq(const Partition& s, const Partition& p);

/// A finite poset held as its full order relation (one bitset row per
/// element for the up-set and one for the down-set).
class FinitePoset {
 public:
  using Bits = boost::dynamic_bitset<>;

  FinitePoset() = default;
  FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const Bits& up_set(std::size_t a) const { return up_[a]; }
  const Bits& down_set(std::size_t a) const { return down_[a]; }

  /// mu(a, x) for every x; zero where a is not below x.
  std::vector<std::int64_t> moebius_from(std::size_t a) const;
  /// mu(x, b) for every x; zero where x is not below b.
  std::vector<std::int64_t> moebius_to(std::size_t b) const;
  std::int64_t moebius(std::size_t a, std::size_t b) const;

  std::vector<std::size_t> minimal_upper_bounds(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  bool is_lattice() const;

  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// Induced sub-poset on the listed elements (in that order).
  FinitePoset restrict_to(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::size_t> topological_;  // every element after everything below it
};

/// An order isomorphism a -> b when one exists (backtracking with
/// rank/degree refinement).
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);

/// The members of f(n) with their induced order. Cached per (family, n).
struct FamilyPoset {
  Family family;
  int n;
  std::vector<Partition> members;
  FinitePoset order;

  std::size_t index_of(const Partition& p) const;
  std::optional<std::size_t> find(const Partition& p) const;
};
const FamilyPoset& family_poset(Family f, int n, int size_cap = kDefaultSizeCap);

/// Least upper bound inside f. Throws NotALatticeError when the minimal
/// upper bounds are not unique, std::invalid_argument for non-members.
Partition join_in_family(Family f, const Partition& s, const Partition& p);

/// Moebius function of the sub-poset f(n) on [lower, upper].
std::int64_t moebius(Family f, const Partition& lower, const Partition& upper);

struct WeisnerResult {
  bool holds = false;
  std::int64_t sum = 0;
  std::vector<Partition> contributing;  // pi with pi v sigma = 1_n
};
/// Sum of mu(0_n, pi) over pi in f(n) with pi v sigma = 1_n.
WeisnerResult weisner_check(Family f, int n, const Partition& sigma);

struct SIWitness {
  int n = 0;
  int position = 0;
  Partition partition;  // in size n
  Partition image;      // in size n+1
  std::string reason;
  std::optional<Rational> weight_before;
  std::optional<Rational> weight_after;
};

struct SIReport {
  std::string subject;
  bool holds = true;
  int max_n_checked = 0;
  std::optional<SIWitness> witness;
};

/// Checks, for n < n_max and every insertion position, that singleton
/// insertion maps f(n) bijectively and order-isomorphically onto the members
/// of f(n+1) carrying that singleton.
SIReport si_check_family(Family f, int n_max);

/// Checks the normalization w({1}) = 1 and w(p) = w(insert_singleton(p, r))
/// for every p in P(n), n < n_max.
SIReport si_check_weight(const Weight& w, int n_max);

/// Re-evaluates a witness; true when it still shows a violation.
bool witness_is_genuine(const SIReport& report, const std::optional<Family>& family,
                        const std::optional<Weight>& weight);

/// Boolean lattice on the n cyclic "buttons" with every word having at most
/// one unpressed button identified with the top.
FinitePoset collapsed_cube(int n);

/// Button word of a cyclic-interval partition: bit i set when i+1 and
/// i+2 (mod n) share a block.
std::uint64_t cyclic_buttons(const Partition& p);

/// Graphviz digraph of the Hasse diagram, edges pointing upward.
std::string hasse_dot(const FamilyPoset& poset);

}  // namespace nccomb
