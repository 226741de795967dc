#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nccomb/families.hpp"
#include "nccomb/partition.hpp"
#include "nccomb/rational.hpp"

namespace nccomb {

/// A weight on set partitions, one member of the built-in catalogue.
///
/// Every catalogued weight gives the single-element partition weight 1.
/// The "modified" variants evaluate their base weight after singleton
/// removal; the empty partition produced from an all-singleton input always
/// has weight 1.
class Weight {
 public:
  enum class Kind {
    Indicator,
    Monotone,
    ModifiedMonotone,
    CyclicMonotone,
    ModifiedCyclicMonotone,
    QCrossing,
    ModifiedQCrossing,
    Singleton,
  };

  static Weight indicator(Family f) { return Weight(Kind::Indicator, f, 0); }
  static Weight monotone() { return Weight(Kind::Monotone); }
  static Weight modified_monotone() { return Weight(Kind::ModifiedMonotone); }
  static Weight cyclic_monotone() { return Weight(Kind::CyclicMonotone); }
  static Weight modified_cyclic_monotone() { return Weight(Kind::ModifiedCyclicMonotone); }
  static Weight q_crossing(Rational q) { return Weight(Kind::QCrossing, Family::All, std::move(q)); }
  static Weight modified_q_crossing(Rational q) {
    return Weight(Kind::ModifiedQCrossing, Family::All, std::move(q));
  }
  static Weight singleton() { return Weight(Kind::Singleton); }

  /// Names: ind:<family>, monotone, modified-monotone, cyclic-monotone,
  /// modified-cyclic-monotone, q-crossing:<q>, modified-q-crossing:<q>,
  /// singleton.
  static Weight parse(std::string_view name);
  std::string name() const;

  Kind kind() const noexcept { return kind_; }
  Family family() const noexcept { return family_; }
  const Rational& q() const noexcept { return q_; }

  Rational operator()(const Partition& p) const;

  /// Catalogue metadata. The family equal to the set where the weight is
  /// non-zero, when there is one.
  std::optional<Family> declared_support() const;
  bool declared_monic() const;
  bool declared_invertible() const;
  /// Whether every partition with non-zero weight is non-crossing.
  bool supported_on_noncrossing() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  explicit Weight(Kind kind, Family family = Family::All, Rational q = 0)
      : kind_(kind), family_(family), q_(std::move(q)) {}

  Kind kind_;
  Family family_;
  Rational q_;
};

/// Inverse tree factorial of the nesting forest on NC, zero off NC.
Rational monotone_weight(const Partition& p);

/// Nesting forest of a non-crossing partition drawn on a circle.
///
/// A block whose convex hull contains the centre (every cyclic gap between
/// consecutive elements is at most n/2) is the unique root. Otherwise the
/// roots are the blocks not nested by any other. A block W nests V when V
/// lies inside one of W's gaps that does not face the centre.
NestingForest cyclic_nesting_forest(const Partition& p);
Rational cyclic_monotone_weight(const Partition& p);

struct WeightedPartition {
  Partition partition;
  Rational weight;
};

/// All partitions of n with non-zero weight, in enumeration order.
/// Cached per (weight, n).
const std::vector<WeightedPartition>& weighted_support(const Weight& w, int n,
                                                       int size_cap = kDefaultSizeCap);

struct WeightClassification {
  bool monic = true;
  bool invertible = true;
  std::optional<Family> support;
  int n_max = 0;
  /// Orders n <= n_max where the top weight vanishes.
  std::vector<int> singular_orders;
};

/// Exhaustive evaluation of the monic/invertible flags and the exact support
/// up to n_max.
WeightClassification classify(const Weight& w, int n_max);

}  // namespace nccomb
