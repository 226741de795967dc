#include "nccomb/products.hpp"

namespace nccomb {

std::string_view product_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::Tensor: return "tensor";
    case ProductKind::Free: return "free";
    case ProductKind::Boolean: return "boolean";
    case ProductKind::Monotone: return "monotone";
    case ProductKind::FermiBoolean: return "fermi-boolean";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view name) {
  for (auto k : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean, ProductKind::Monotone,
                 ProductKind::FermiBoolean}) {
    if (product_name(k) == name) return k;
  }
  if (name == "classical") return ProductKind::Tensor;
  if (name == "fb" || name == "fermi") return ProductKind::FermiBoolean;
  throw std::invalid_argument("unknown product kind '" + std::string(name) + "'");
}

std::optional<Family> product_cumulant_family(ProductKind kind) {
  switch (kind) {
    case ProductKind::Tensor: return Family::All;
    case ProductKind::Free: return Family::NonCrossing;
    case ProductKind::Boolean: return Family::Interval;
    case ProductKind::FermiBoolean: return Family::AlmostInterval;
    case ProductKind::Monotone: return std::nullopt;
  }
  return std::nullopt;
}

JointAlphabet::JointAlphabet(const std::vector<Alphabet>& parts) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      const auto& s = parts[i].symbols()[j];
      if (!seen.insert(s).second) throw AlphabetCollisionError("symbol '" + s + "' appears in two marginals");
      names.push_back(s);
      origin.emplace_back(i, static_cast<Letter>(j + 1));
    }
  }
  alphabet = Alphabet(std::move(names));
}

std::vector<std::pair<std::size_t, Word>> JointAlphabet::runs(const Word& w) const {
  std::vector<std::pair<std::size_t, Word>> out;
  for (Letter l : w) {
    const std::size_t m = marginal_of(l);
    if (out.empty() || out.back().first != m) out.emplace_back(m, Word{});
    out.back().second.push_back(local(l));
  }
  return out;
}

Word JointAlphabet::localize(const Word& w) const {
  Word out;
  for (Letter l : w) out.push_back(local(l));
  return out;
}

}  // namespace nccomb
