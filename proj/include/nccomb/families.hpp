#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nccomb/partition.hpp"

namespace nccomb {

enum class Family {
  All,
  NonCrossing,
  Interval,
  CyclicInterval,
  AlmostInterval,        // non-crossing, singleton removal lands in Interval
  AlmostCyclicInterval,  // non-crossing, singleton removal lands in CyclicInterval
};

inline constexpr Family kAllFamilies[] = {Family::All,           Family::NonCrossing,
                                          Family::Interval,      Family::CyclicInterval,
                                          Family::AlmostInterval, Family::AlmostCyclicInterval};

/// CLI spelling: all, nc, interval, ci, almost-interval, almost-ci.
std::string_view family_name(Family f);
/// Accepts the CLI spelling and a few long aliases; throws std::invalid_argument.
Family parse_family(std::string_view name);

class SizeCapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kDefaultSizeCap = 13;

bool contains(Family f, const Partition& p);

/// Members of f(n) in restricted-growth-string order, each exactly once.
/// Results are cached per (family, n) and live for the whole process.
const std::vector<Partition>& enumerate(Family f, int n, int size_cap = kDefaultSizeCap);

std::uint64_t cardinality(Family f, int n, int size_cap = kDefaultSizeCap);

/// Restricted-growth-string generator over P(n).
///
/// With `noncrossing_only` the search is pruned as soon as a crossing
/// appears. When `colors` is non-empty (size n) an element may only join a
/// block whose elements share its color. The visitor receives block masks in
/// canonical order.
struct GeneratorOptions {
  bool noncrossing_only = false;
  std::span<const int> colors = {};
};
void for_each_partition(int n, const GeneratorOptions& options,
                        const std::function<void(std::span<const Partition::Mask>)>& visit);

/// Closed forms used as cross-checks: 2^(n-1), 2^n - n, F_(2n-1), Catalan, Bell.
std::optional<std::uint64_t> closed_form_cardinality(Family f, int n);

std::uint64_t catalan(int n);
std::uint64_t bell(int n);
std::uint64_t fibonacci(int n);  // F_1 = F_2 = 1

}  // namespace nccomb
