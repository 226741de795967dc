#include <iomanip>
#include <iostream>
#include <map>

#include "nccomb/verify.hpp"

using namespace nccomb;

namespace {

const std::map<int, const char*> kTitles = {
    {1, "counting"},          {2, "Moebius values"},       {3, "Weisner sums"},
    {4, "SI classification"}, {5, "independent constants"},    {6, "independence products"},
    {7, "CLT moments"},       {8, "engine self-consistency"},
};

}  // namespace

int main() {
  VerifyOptions options;
  const auto sections = verify_all(options);
  std::map<int, std::vector<const Section*>> by_criterion;
  for (const auto& s : sections) by_criterion[s.criterion].push_back(&s);

  bool all = true;
  for (const auto& [criterion, title] : kTitles) {
    bool pass = !by_criterion[criterion].empty();
    std::size_t claims = 0;
    double seconds = 0;
    for (const auto* s : by_criterion[criterion]) {
      pass = pass && s->pass();
      claims += s->claims.size();
      seconds += s->seconds;
    }
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << "  " << std::left << std::setw(24) << title
              << std::right << claims << " claims, " << std::fixed << std::setprecision(1) << seconds << "s\n";
    for (const auto* s : by_criterion[criterion]) {
      for (const auto& c : s->claims) {
        if (!c.pass) {
          std::cout << "      " << s->id << "/" << c.id << ": expected " << c.expected << ", computed " << c.computed << "\n";
        }
      }
    }
  }
  return all ? 0 : 1;
}
