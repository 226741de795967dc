#include "doctest.h"

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(NCCOMB_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe.get())) out.append(buffer.data(), n);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* name) { return std::string(NCCOMB_DATA) + "/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("--max-n 99 families count").status == 2);
  CHECK(run("weights eval --weight bogus --partition 1,2").status == 2);
  CHECK(run("--format dot families count").status == 2);
  CHECK(run("cumulants solve --input /nonexistent.json").status == 2);
  CHECK(run("cumulants verify-constants --weight ind:interval --min-order 3 --max-order 3").status == 1);
  CHECK(run("cumulants verify-constants --weight ind:almost-interval --max-order 4 --bookkeeping").status == 0);
}

TEST_CASE("sequences") {
  const auto fib = run("--format tsv --max-n 6 families count --family almost-interval");
  CHECK(fib.status == 0);
  CHECK(fib.out == "n\talmost-interval\n1\t1\n2\t2\n3\t5\n4\t13\n5\t34\n6\t89\n");
  const auto mob = nlohmann::json::parse(run("--max-n 6 poset moebius --family almost-interval").out);
  CHECK(mob["moebius"] == nlohmann::json::array({1, -1, 2, -4, 8, -16}));
  CHECK(run("--format dot poset hasse --family ci --n 3").out.rfind("digraph", 0) == 0);
}

TEST_CASE("verify-paper sections") {
  const auto seq = run("--format tsv verify-paper --only moebius-almost-interval");
  CHECK(seq.status == 0);
  CHECK(seq.out.find("1 -1 2 -4 8 -16") != std::string::npos);
  const auto si = run("verify-paper --only si --weight monotone");
  CHECK(si.status == 0);
  const auto report = nlohmann::json::parse(si.out);
  const auto& claim = report["sections"][0]["claims"][0];
  CHECK(claim["by_design_failure"] == true);
  CHECK(claim["computed"].get<std::string>().find("1 -> 1/2") != std::string::npos);
  // Byte-identical reruns.
  CHECK(run("--seed 7 --max-n 4 verify-paper --only engine").out == run("--seed 7 --max-n 4 verify-paper --only engine").out);
  CHECK(run("verify-paper --only nonsense").status == 2);
}

TEST_CASE("moment problem files") {
  const auto semicircle = nlohmann::json::parse(run("cumulants solve --input " + data("semicircle.json")).out);
  std::vector<std::string> values;
  for (const auto& e : semicircle["entries"]) values.push_back(e["value"]);
  CHECK(values == std::vector<std::string>{"0", "1", "0", "0", "0", "0"});
  CHECK(run("cumulants solve --input " + data("generic.json")).status == 0);
  const auto matrix = nlohmann::json::parse(run("cumulants solve --input " + data("matrix.json")).out);
  CHECK(matrix["entries"].size() == 2 + 4 + 8);
}
