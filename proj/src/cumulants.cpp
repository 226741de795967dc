#include "nccomb/cumulants.hpp"

namespace nccomb {

OperatorCumulants::OperatorCumulants(Weight w, NestedOptions options) : w_(std::move(w)), options_(options) {
  if (!w_.supported_on_noncrossing()) {
    throw std::invalid_argument("operator-valued cumulants need a weight supported on non-crossing partitions");
  }
}

const RatMatrix& OperatorCumulants::cumulant(const std::vector<RatMatrix>& args) {
  if (args.empty()) throw std::invalid_argument("cumulant of no arguments");
  if (auto it = memo_.find(args); it != memo_.end()) return it->second;
  const std::size_t n = args.size();
  auto top = top_.find(n);
  if (top == top_.end()) {
    Rational value = w_(Partition::one(static_cast<int>(n)));
    if (sgn(value) == 0) throw NonInvertibleWeightError("weight " + w_.name() + " vanishes on 1_" + std::to_string(n));
    top = top_.emplace(n, std::move(value)).first;
  }
  RatMatrix value = matrix_moment(args);
  if (n > 1) {
    for (const auto& [p, weight] : weighted_support(w_, static_cast<int>(n))) {
      if (p.block_count() == 1) continue;
      RatMatrix term = extension(p, args);
      term *= weight;
      value -= term;
    }
    const Rational inverse = 1 / top->second;
    value *= inverse;
  }
  return memo_.emplace(args, std::move(value)).first->second;
}

RatMatrix OperatorCumulants::extension(const Partition& p, const std::vector<RatMatrix>& args) {
  return extension(p, args, options_);
}

RatMatrix OperatorCumulants::extension(const Partition& p, const std::vector<RatMatrix>& args,
                                       const NestedOptions& options) {
  return nested_extension<RatMatrix>(
      p, args, [this](const std::vector<RatMatrix>& block) { return cumulant(block); },
      [](const RatMatrix& value, RatMatrix& arg, bool value_on_left) {
        arg = value_on_left ? value * arg : arg * value;
      },
      options);
}

}  // namespace nccomb
