#include "nccomb/families.hpp"

#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>

namespace nccomb {

namespace {

using Mask = Partition::Mask;

// Would adding element `d` (the largest so far) to block `w` create a
// crossing a<b<c<d with a,c in another block and b in w?
bool creates_crossing(std::span<const Mask> blocks, std::size_t w, int d) {
  const Mask target = blocks[w];
  const Mask below_d = (Mask{1} << (d - 1)) - 1;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (v == w) continue;
    const Mask other = blocks[v] & below_d;
    if (std::popcount(other) < 2) continue;
    const int a = std::countr_zero(other) + 1;
    const int c = Partition::kMaxSize - std::countl_zero(other);
    // Element of w strictly between min and max of the other block, with the
    // max of the other block itself sitting between that element and d.
    const Mask between = ((Mask{1} << (c - 1)) - 1) & ~((Mask{1} << a) - 1);
    if (target & between) return true;
  }
  return false;
}

struct Cache {
  std::mutex mutex;
  std::map<std::pair<Family, int>, std::shared_ptr<const std::vector<Partition>>> members;
};

Cache& cache() {
  static Cache instance;
  return instance;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::All: return "all";
    case Family::NonCrossing: return "nc";
    case Family::Interval: return "interval";
    case Family::CyclicInterval: return "ci";
    case Family::AlmostInterval: return "almost-interval";
    case Family::AlmostCyclicInterval: return "almost-ci";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  static const std::map<std::string_view, Family> names = {
      {"all", Family::All},
      {"p", Family::All},
      {"nc", Family::NonCrossing},
      {"noncrossing", Family::NonCrossing},
      {"non-crossing", Family::NonCrossing},
      {"interval", Family::Interval},
      {"i", Family::Interval},
      {"ci", Family::CyclicInterval},
      {"cyclic-interval", Family::CyclicInterval},
      {"almost-interval", Family::AlmostInterval},
      {"almost-ci", Family::AlmostCyclicInterval},
      {"almost-cyclic-interval", Family::AlmostCyclicInterval},
  };
  if (auto it = names.find(name); it != names.end()) return it->second;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool contains(Family f, const Partition& p) {
  switch (f) {
    case Family::All: return true;
    case Family::NonCrossing: return is_noncrossing(p);
    case Family::Interval: return is_interval(p);
    case Family::CyclicInterval: return is_cyclic_interval(p);
    case Family::AlmostInterval: return is_noncrossing(p) && is_interval(remove_singletons(p));
    case Family::AlmostCyclicInterval:
      return is_noncrossing(p) && is_cyclic_interval(remove_singletons(p));
  }
  return false;
}

void for_each_partition(int n, const GeneratorOptions& options,
                        const std::function<void(std::span<const Mask>)>& visit) {
  if (n < 0 || n > Partition::kMaxSize) throw SizeCapError("unsupported ground set size");
  if (!options.colors.empty() && options.colors.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("color list length differs from n");
  }
  if (n == 0) {
    visit({});
    return;
  }
  std::array<Mask, Partition::kMaxSize> blocks{};
  std::array<int, Partition::kMaxSize> block_color{};
  std::size_t count = 0;
  const bool colored = !options.colors.empty();

  // Depth-first over elements 1..n.
  std::function<void(int)> place = [&](int element) {
    if (element > n) {
      visit(std::span<const Mask>(blocks.data(), count));
      return;
    }
    const Mask bit = element_bit(element);
    const int color = colored ? options.colors[element - 1] : 0;
    for (std::size_t b = 0; b < count; ++b) {
      if (colored && block_color[b] != color) continue;
      if (options.noncrossing_only &&
          creates_crossing(std::span<const Mask>(blocks.data(), count), b, element)) {
        continue;
      }
      blocks[b] |= bit;
      place(element + 1);
      blocks[b] &= ~bit;
    }
    blocks[count] = bit;
    block_color[count] = color;
    ++count;
    place(element + 1);
    --count;
    blocks[count] = 0;
  };
  place(1);
}

const std::vector<Partition>& enumerate(Family f, int n, int size_cap) {
  if (n < 1) throw std::invalid_argument("family enumeration needs n >= 1");
  if (n > size_cap) {
    throw SizeCapError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                       std::to_string(size_cap));
  }
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.members.find({f, n}); it != c.members.end()) return *it->second;
  }
  auto members = std::make_shared<std::vector<Partition>>();
  GeneratorOptions options;
  options.noncrossing_only = f != Family::All;
  for_each_partition(n, options, [&](std::span<const Mask> masks) {
    Partition p = Partition::from_masks(n, {masks.begin(), masks.end()});
    if (contains(f, p)) members->push_back(std::move(p));
  });
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.members.emplace(std::make_pair(f, n), std::move(members));
  return *it->second;
}

std::uint64_t cardinality(Family f, int n, int size_cap) {
  return enumerate(f, n, size_cap).size();
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t fibonacci(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> closed_form_cardinality(Family f, int n) {
  if (n < 1) return std::nullopt;
  switch (f) {
    case Family::All: return bell(n);
    case Family::NonCrossing: return catalan(n);
    case Family::Interval: return std::uint64_t{1} << (n - 1);
    case Family::CyclicInterval: return (std::uint64_t{1} << n) - n;
    case Family::AlmostInterval: return fibonacci(2 * n - 1);
    case Family::AlmostCyclicInterval: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace nccomb
