#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nccomb/io.hpp"

namespace nccomb {

struct Claim {
  std::string id;
  std::string statement;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool by_design_failure = false;  // the subject is expected to fail the property
};

struct Section {
  std::string id;
  int criterion = 0;
  std::string title;
  std::vector<Claim> claims;
  double seconds = 0;

  bool pass() const;
};

struct VerifyOptions {
  std::optional<int> max_n;          // lowers every size cap
  std::uint64_t seed = 1;            // random functionals and matrices
  std::optional<std::string> weight;  // restricts the si section to one weight
};

/// Declaration order; verify_all emits sections in this order.
const std::vector<std::string>& section_ids();
int section_criterion(std::string_view id);
Section run_section(std::string_view id, const VerifyOptions& options);
std::vector<Section> verify_all(const VerifyOptions& options, const std::vector<std::string>& ids = section_ids());

Json report_json(const std::vector<Section>& sections, const VerifyOptions& options);
std::string report_tsv(const std::vector<Section>& sections);

}  // namespace nccomb
