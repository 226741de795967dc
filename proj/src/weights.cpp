#include "nccomb/weights.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace nccomb {

namespace {

using Mask = Partition::Mask;

// Cyclic gaps of a block: gap i runs from element i to the next element
// clockwise; the last gap wraps around n -> 1.
struct Gap {
  int from;
  int length;
};

std::vector<Gap> cyclic_gaps(Mask block, int n) {
  std::vector<int> elements;
  for (Mask rest = block; rest; rest &= rest - 1) elements.push_back(std::countr_zero(rest) + 1);
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int next = i + 1 < elements.size() ? elements[i + 1] : elements.front() + n;
    gaps.push_back({elements[i], next - elements[i]});
  }
  return gaps;
}

bool in_gap(const Gap& gap, int element, int n) {
  int offset = element - gap.from;
  if (offset < 0) offset += n;
  return offset > 0 && offset < gap.length;
}

struct SupportCache {
  std::mutex mutex;
  std::map<std::pair<std::string, int>, std::shared_ptr<const std::vector<WeightedPartition>>> entries;
};

SupportCache& support_cache() {
  static SupportCache c;
  return c;
}

}  // namespace

Rational monotone_weight(const Partition& p) {
  if (!is_noncrossing(p)) return 0;
  return Rational(1) / Rational(tree_factorial(nesting_forest(p)));
}

NestingForest cyclic_nesting_forest(const Partition& p) {
  if (!is_noncrossing(p)) {
    throw PartitionError("cyclic nesting forest requires a non-crossing partition, got " +
                         p.to_string());
  }
  const int n = p.size();
  const auto masks = p.masks();
  const std::size_t count = masks.size();
  std::vector<std::vector<Gap>> gaps(count);
  int centre = -1;
  for (std::size_t b = 0; b < count; ++b) {
    gaps[b] = cyclic_gaps(masks[b], n);
    int widest = 0;
    for (const auto& g : gaps[b]) widest = std::max(widest, g.length);
    if (2 * widest <= n) {
      if (centre >= 0) throw std::logic_error("two blocks contain the centre of the circle");
      centre = static_cast<int>(b);
    }
  }
  std::vector<int> parent(count, -1);
  for (std::size_t v = 0; v < count; ++v) {
    if (static_cast<int>(v) == centre) continue;
    const int probe = std::countr_zero(masks[v]) + 1;
    int best_length = n + 1;
    for (std::size_t w = 0; w < count; ++w) {
      if (w == v) continue;
      for (const auto& g : gaps[w]) {
        // A gap wider than half the circle faces the centre and nests nothing.
        const bool faces_centre = static_cast<int>(w) != centre && 2 * g.length > n;
        if (faces_centre || !in_gap(g, probe, n)) continue;
        if (g.length < best_length) {
          best_length = g.length;
          parent[v] = static_cast<int>(w);
        }
      }
    }
  }
  return forest_from_parents(std::move(parent));
}

Rational cyclic_monotone_weight(const Partition& p) {
  if (!is_noncrossing(p)) return 0;
  return Rational(1) / Rational(tree_factorial(cyclic_nesting_forest(p)));
}

Weight Weight::parse(std::string_view name) {
  auto colon = name.find(':');
  std::string_view head = name.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  auto need_arg = [&]() {
    if (arg.empty()) throw std::invalid_argument("weight '" + std::string(name) + "' needs a parameter");
  };
  if (head == "ind" || head == "indicator") {
    need_arg();
    return indicator(parse_family(arg));
  }
  if (head == "q-crossing") {
    need_arg();
    return q_crossing(parse_rational(arg));
  }
  if (head == "modified-q-crossing") {
    need_arg();
    return modified_q_crossing(parse_rational(arg));
  }
  if (!arg.empty()) throw std::invalid_argument("weight '" + std::string(head) + "' takes no parameter");
  if (head == "monotone") return monotone();
  if (head == "modified-monotone") return modified_monotone();
  if (head == "cyclic-monotone") return cyclic_monotone();
  if (head == "modified-cyclic-monotone") return modified_cyclic_monotone();
  if (head == "singleton") return singleton();
  // Bare family names are read as indicators.
  try {
    return indicator(parse_family(head));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown weight '" + std::string(name) + "'");
  }
}

std::string Weight::name() const {
  switch (kind_) {
    case Kind::Indicator: return "ind:" + std::string(family_name(family_));
    case Kind::Monotone: return "monotone";
    case Kind::ModifiedMonotone: return "modified-monotone";
    case Kind::CyclicMonotone: return "cyclic-monotone";
    case Kind::ModifiedCyclicMonotone: return "modified-cyclic-monotone";
    case Kind::QCrossing: return "q-crossing:" + to_string(q_);
    case Kind::ModifiedQCrossing: return "modified-q-crossing:" + to_string(q_);
    case Kind::Singleton: return "singleton";
  }
  return "?";
}

Rational Weight::operator()(const Partition& p) const {
  switch (kind_) {
    case Kind::Indicator: return contains(family_, p) ? 1 : 0;
    case Kind::Monotone: return monotone_weight(p);
    case Kind::ModifiedMonotone: return monotone_weight(remove_singletons(p));
    case Kind::CyclicMonotone: return cyclic_monotone_weight(p);
    case Kind::ModifiedCyclicMonotone: return cyclic_monotone_weight(remove_singletons(p));
    case Kind::QCrossing:
      if (p.size() == 1) return 1;
      return is_pairing(p) ? pow(q_, crossing_count(p)) : Rational(0);
    case Kind::ModifiedQCrossing: {
      const Partition reduced = remove_singletons(p);
      return is_pairing(reduced) ? pow(q_, crossing_count(reduced)) : Rational(0);
    }
    case Kind::Singleton: return p == Partition::zero(p.size()) ? 1 : 0;
  }
  return 0;
}

std::optional<Family> Weight::declared_support() const {
  switch (kind_) {
    case Kind::Indicator: return family_;
    case Kind::Monotone:
    case Kind::ModifiedMonotone:
    case Kind::CyclicMonotone:
    case Kind::ModifiedCyclicMonotone: return Family::NonCrossing;
    default: return std::nullopt;
  }
}

bool Weight::declared_monic() const {
  switch (kind_) {
    case Kind::QCrossing:
    case Kind::ModifiedQCrossing:
    case Kind::Singleton: return false;
    default: return true;
  }
}

bool Weight::declared_invertible() const { return declared_monic(); }

bool Weight::supported_on_noncrossing() const {
  switch (kind_) {
    case Kind::Indicator: return family_ != Family::All;
    case Kind::QCrossing:
    case Kind::ModifiedQCrossing: return false;
    default: return true;
  }
}

const std::vector<WeightedPartition>& weighted_support(const Weight& w, int n, int size_cap) {
  auto& cache = support_cache();
  const auto key = std::make_pair(w.name(), n);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return *it->second;
  }
  auto entries = std::make_shared<std::vector<WeightedPartition>>();
  const Family domain = w.supported_on_noncrossing() ? Family::NonCrossing : Family::All;
  for (const Partition& p : enumerate(domain, n, size_cap)) {
    Rational value = w(p);
    if (sgn(value) != 0) entries->push_back({p, std::move(value)});
  }
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.entries.emplace(key, std::move(entries));
  return *it->second;
}

WeightClassification classify(const Weight& w, int n_max) {
  WeightClassification out;
  out.n_max = n_max;
  std::vector<bool> family_matches(std::size(kAllFamilies), true);
  for (int n = 1; n <= n_max; ++n) {
    const Rational top = w(Partition::one(n));
    if (top != 1) out.monic = false;
    if (sgn(top) == 0) {
      out.invertible = false;
      out.singular_orders.push_back(n);
    }
    for (const Partition& p : enumerate(Family::All, n, std::max(n_max, kDefaultSizeCap))) {
      const bool nonzero = sgn(w(p)) != 0;
      for (std::size_t f = 0; f < std::size(kAllFamilies); ++f) {
        if (family_matches[f] && nonzero != contains(kAllFamilies[f], p)) family_matches[f] = false;
      }
    }
  }
  // Small n_max can make several families coincide; prefer the catalogue's
  // own claim, then the first match in declaration order.
  for (std::size_t f = 0; f < std::size(kAllFamilies); ++f) {
    if (!family_matches[f]) continue;
    if (!out.support || kAllFamilies[f] == w.declared_support()) out.support = kAllFamilies[f];
  }
  return out;
}

}  // namespace nccomb
