#include "nccomb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nccomb/clt.hpp"
#include "nccomb/constants.hpp"
#include "nccomb/poset.hpp"
#include "nccomb/products.hpp"

namespace nccomb {

namespace {

int cap(const VerifyOptions& o, int n) { return o.max_n ? std::min(*o.max_n, n) : n; }

template <class T>
std::string row(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

Claim compare(std::string id, std::string statement, const std::string& expected, const std::string& computed) {
  return Claim{std::move(id), std::move(statement), expected, computed, expected == computed, false};
}

Claim flag(std::string id, std::string statement, bool pass, std::string expected, std::string computed) {
  return Claim{std::move(id), std::move(statement), std::move(expected), std::move(computed), pass, false};
}

// Oracles, independent of the library's own closed forms.
std::vector<std::uint64_t> bell_numbers(int n_max) {
  std::vector<std::uint64_t> out, rowv = {1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> next = {rowv.back()};
    for (auto v : rowv) next.push_back(next.back() + v);
    out.push_back(next.front());
    rowv = std::move(next);
  }
  return out;  // B_1 .. B_n_max
}

std::vector<std::uint64_t> catalan_numbers(int n_max) {
  std::vector<std::uint64_t> c = {1};
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t s = 0;
    for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
    c.push_back(s);
  }
  return c;  // C_0 .. C_n_max
}

std::uint64_t fib(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) b = std::exchange(a, b) + b;
  return a;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t sign(int k) { return k % 2 == 0 ? 1 : -1; }

std::int64_t moebius_top(Family f, int n) { return moebius(f, Partition::zero(n), Partition::one(n)); }

// ---------------------------------------------------------------- counting

Section counting(const VerifyOptions& o) {
  Section s{"counting", 1, "family cardinalities", {}, 0};
  auto sequence = [&](const std::string& id, const std::string& statement, Family f, int n_max, auto oracle) {
    std::vector<std::uint64_t> expected, computed;
    for (int n = 1; n <= cap(o, n_max); ++n) {
      expected.push_back(oracle(n));
      computed.push_back(enumerate(f, n).size());
    }
    s.claims.push_back(compare(id, statement, row(expected), row(computed)));
  };
  sequence("interval", "|I(n)| = 2^(n-1), n <= 12", Family::Interval, 12,
           [](int n) { return std::uint64_t{1} << (n - 1); });
  sequence("cyclic-interval", "|CI(n)| = 2^n - n, n <= 12", Family::CyclicInterval, 12,
           [](int n) { return (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n); });
  sequence("almost-interval", "|almost-I(n)| = F(2n-1), n <= 11", Family::AlmostInterval, 11,
           [](int n) { return fib(2 * n - 1); });
  std::vector<std::uint64_t> head;
  for (int n = 1; n <= std::min(6, cap(o, 11)); ++n) head.push_back(enumerate(Family::AlmostInterval, n).size());
  const std::string odd_fibonacci = "1 2 5 13 34 89";
  s.claims.push_back(compare("almost-interval-head", "almost-interval counts open with the odd Fibonacci numbers",
                             odd_fibonacci.substr(0, row(head).size()), row(head)));
  const auto catalans = catalan_numbers(11);
  sequence("noncrossing", "|NC(n)| = Catalan(n), n <= 11", Family::NonCrossing, 11,
           [&](int n) { return catalans[static_cast<std::size_t>(n)]; });
  const auto bells = bell_numbers(11);
  sequence("all", "|P(n)| = Bell(n), n <= 11", Family::All, 11,
           [&](int n) { return bells[static_cast<std::size_t>(n - 1)]; });
  return s;
}

// ---------------------------------------------------------------- moebius

std::vector<std::int64_t> almost_interval_expected(int n_max) {
  std::vector<std::int64_t> out = {1, -1};
  while (static_cast<int>(out.size()) < n_max) out.push_back(-2 * out.back());
  out.resize(static_cast<std::size_t>(n_max));
  return out;
}

Section moebius_section(const VerifyOptions& o) {
  Section s{"moebius", 2, "Moebius function values", {}, 0};
  auto top = [&](const std::string& id, const std::string& statement, Family f, int n_min, int n_max, auto oracle) {
    std::vector<std::int64_t> expected, computed;
    for (int n = n_min; n <= cap(o, n_max); ++n) {
      expected.push_back(oracle(n));
      computed.push_back(moebius_top(f, n));
    }
    s.claims.push_back(compare(id, statement, row(expected), row(computed)));
  };
  top("all", "mu_P(0_n,1_n) = (-1)^(n-1) (n-1)!, n <= 7", Family::All, 1, 7,
      [](int n) { return sign(n - 1) * factorial(n - 1); });
  const auto catalans = catalan_numbers(9);
  top("noncrossing", "mu_NC(0_n,1_n) = (-1)^(n-1) Catalan(n-1), n <= 9", Family::NonCrossing, 1, 9,
      [&](int n) { return sign(n - 1) * static_cast<std::int64_t>(catalans[static_cast<std::size_t>(n - 1)]); });
  top("interval", "mu_I(0_n,1_n) = (-1)^(n-1), n <= 10", Family::Interval, 1, 10, [](int n) { return sign(n - 1); });
  top("cyclic-interval", "mu_CI(0_n,1_n) = (-1)^(n+1) (n-1), 2 <= n <= 10", Family::CyclicInterval, 2, 10,
      [](int n) { return sign(n + 1) * (n - 1); });

  std::vector<std::int64_t> values;
  bool recursion = true;
  for (int n = 1; n <= cap(o, 10); ++n) {
    values.push_back(moebius_top(Family::AlmostInterval, n));
    if (n >= 3 && values[n - 1] != -2 * values[n - 2]) recursion = false;
  }
  s.claims.push_back(flag("almost-interval-recursion", "mu_n = -2 mu_(n-1) on almost-interval partitions, 3 <= n <= 10",
                          recursion, "recursion holds", row(values)));

  std::size_t intervals = 0;
  std::string offender;
  for (int n = 1; n <= cap(o, 8) && offender.empty(); ++n) {
    const auto& poset = family_poset(Family::AlmostInterval, n);
    for (std::size_t a = 0; a < poset.members.size() && offender.empty(); ++a) {
      const auto from = poset.order.moebius_from(a);
      for (std::size_t b = 0; b < from.size(); ++b) {
        if (!poset.order.leq(a, b)) continue;
        ++intervals;
        const std::int64_t v = from[b] < 0 ? -from[b] : from[b];
        if (v == 0 || (v & (v - 1)) != 0) {
          offender = "mu[" + poset.members[a].to_string() + ", " + poset.members[b].to_string() +
                     "] = " + std::to_string(from[b]);
          break;
        }
      }
    }
  }
  s.claims.push_back(flag("almost-interval-powers-of-two",
                          "every interval of almost-I(n), n <= 8, has Moebius value +-2^k", offender.empty(),
                          "all values +-2^k", offender.empty() ? std::to_string(intervals) + " intervals, all +-2^k" : offender));
  return s;
}

Section moebius_almost_interval(const VerifyOptions& o) {
  Section s{"moebius-almost-interval", 2, "Moebius sequence of almost-interval partitions", {}, 0};
  std::vector<std::int64_t> computed;
  for (int n = 1; n <= cap(o, 10); ++n) computed.push_back(moebius_top(Family::AlmostInterval, n));
  s.claims.push_back(compare("sequence", "mu(0_n,1_n) on almost-interval partitions is 1 -1 2 -4 8 ...",
                             row(almost_interval_expected(static_cast<int>(computed.size()))), row(computed)));
  return s;
}

// ---------------------------------------------------------------- weisner

Section weisner(const VerifyOptions& o) {
  Section s{"weisner", 3, "Weisner sums", {}, 0};
  for (Family f : {Family::Interval, Family::CyclicInterval}) {
    std::vector<std::int64_t> sums;
    bool ok = true;
    for (int n = 2; n <= cap(o, 9); ++n) {
      const auto r = weisner_check(f, n, Partition::one(n));
      sums.push_back(r.sum);
      ok = ok && r.holds;
    }
    s.claims.push_back(flag(std::string(family_name(f)), "sum of mu(0_n,pi) over pi v 1_n = 1_n vanishes, 2 <= n <= 9",
                            ok, "all zero", row(sums)));
  }
  std::vector<std::int64_t> sums;
  std::vector<std::size_t> counts;
  bool ok = true, members = true;
  for (int n = 3; n <= cap(o, 9); ++n) {
    std::vector<std::vector<int>> blocks = {{1, 2}};
    for (int i = 3; i <= n; ++i) blocks.push_back({i});
    const auto r = weisner_check(Family::AlmostInterval, n, Partition(n, blocks));
    sums.push_back(r.sum);
    counts.push_back(r.contributing.size());
    ok = ok && r.holds;
    std::vector<int> rest, rest2 = {1};
    for (int i = 2; i <= n; ++i) rest.push_back(i);
    for (int i = 3; i <= n; ++i) rest2.push_back(i);
    const std::set<Partition> expected = {Partition::one(n), Partition(n, {{1}, rest}), Partition(n, {{2}, rest2})};
    members = members && std::set<Partition>(r.contributing.begin(), r.contributing.end()) == expected;
  }
  s.claims.push_back(flag("almost-interval", "sum vanishes for sigma = {1,2}{3}...{n}, 3 <= n <= 9", ok, "all zero",
                          row(sums)));
  s.claims.push_back(flag("almost-interval-contributors",
                          "exactly 1_n, {1}{2..n} and {2}{1,3..n} satisfy pi v sigma = 1_n", members,
                          "3 contributors each", "contributor counts " + row(counts)));
  return s;
}

// ---------------------------------------------------------------- SI

std::string describe(const SIReport& r) {
  if (r.holds) return "SI through n = " + std::to_string(r.max_n_checked);
  const auto& w = *r.witness;
  std::string out = "fails: " + w.partition.to_string() + " -> " + w.image.to_string() + " (position " +
                    std::to_string(w.position) + ")";
  if (w.weight_before && w.weight_after) {
    out += ", weight " + to_string(*w.weight_before) + " -> " + to_string(*w.weight_after);
  } else if (!w.reason.empty()) {
    out += ", " + w.reason;
  }
  return out;
}

// Expected SI status of the catalogue; nullopt when the catalogue has no opinion.
std::optional<bool> expected_si(const Weight& w) {
  switch (w.kind()) {
    case Weight::Kind::Indicator:
      return w.family() != Family::Interval && w.family() != Family::CyclicInterval;
    case Weight::Kind::ModifiedMonotone:
    case Weight::Kind::ModifiedCyclicMonotone:
    case Weight::Kind::ModifiedQCrossing:
    case Weight::Kind::Singleton: return true;
    case Weight::Kind::Monotone:
    case Weight::Kind::CyclicMonotone:
    case Weight::Kind::QCrossing: return false;
  }
  return std::nullopt;
}

Claim si_weight_claim(const Weight& w, int n_max) {
  const auto report = si_check_weight(w, n_max);
  const auto expected = expected_si(w);
  Claim c{"weight:" + w.name(), "singleton-inductive weight", "", describe(report), true, false};
  if (!expected) {
    c.expected = "(not catalogued)";
    return c;
  }
  c.by_design_failure = !*expected;
  c.expected = *expected ? "SI" : "not SI";
  c.pass = report.holds == *expected;
  if (!report.holds) c.pass = c.pass && witness_is_genuine(report, std::nullopt, w);
  // Known witnesses at psi_2(1_2) = {1,3}{2}.
  const Partition known = Partition::parse("1,3/2");
  if (w == Weight::monotone() || w == Weight::indicator(Family::Interval)) {
    const Rational value = w == Weight::monotone() ? Rational(1, 2) : Rational(0);
    c.expected = "not SI, w({1,3}{2}) = " + to_string(value) + " != 1";
    c.pass = c.pass && report.witness && report.witness->image == known && report.witness->weight_after &&
             *report.witness->weight_after == value && *report.witness->weight_before == 1;
  }
  return c;
}

Section si(const VerifyOptions& o) {
  Section s{"si", 4, "singleton-inductive classification", {}, 0};
  const int n_max = cap(o, 7);
  if (o.weight) {
    s.claims.push_back(si_weight_claim(Weight::parse(*o.weight), n_max));
    return s;
  }
  for (Family f : kAllFamilies) {
    const auto report = si_check_family(f, n_max);
    const bool expected = f != Family::Interval && f != Family::CyclicInterval;
    Claim c{"family:" + std::string(family_name(f)), "singleton-inductive family", expected ? "SI" : "not SI",
            describe(report), report.holds == expected, !expected};
    if (!report.holds) c.pass = c.pass && witness_is_genuine(report, f, std::nullopt);
    if (f == Family::Interval) {
      c.expected = "not SI, {1,3}{2} missing";
      c.pass = c.pass && report.witness->image == Partition::parse("1,3/2");
    }
    s.claims.push_back(std::move(c));
  }
  for (const auto& w : {Weight::modified_monotone(), Weight::modified_cyclic_monotone(),
                        Weight::modified_q_crossing(Rational(1, 2)), Weight::modified_q_crossing(Rational(-1)),
                        Weight::singleton(), Weight::indicator(Family::Interval),
                        Weight::indicator(Family::CyclicInterval), Weight::monotone(), Weight::cyclic_monotone(),
                        Weight::q_crossing(Rational(1, 2)), Weight::q_crossing(Rational(0))}) {
    s.claims.push_back(si_weight_claim(w, n_max));
  }
  return s;
}

// ---------------------------------------------------------------- constants

std::string describe(const ConstantsReport& r) {
  std::string out = std::to_string(r.words_checked) + " words, " + std::to_string(r.nonzero) + " nonzero";
  if (!r.witnesses.empty()) out += "; e.g. c(" + r.witnesses.front().word + ") = " + r.witnesses.front().value;
  return out;
}

Section constants(const VerifyOptions& o) {
  Section s{"constants", 5, "independence of constants", {}, 0};
  const int poly_max = cap(o, 6), matrix_max = cap(o, 5);
  for (const auto& w : {Weight::indicator(Family::All), Weight::indicator(Family::NonCrossing),
                        Weight::indicator(Family::AlmostInterval), Weight::modified_monotone()}) {
    const auto r = constants_check_poly(w, 2, poly_max);
    s.claims.push_back(flag("poly:" + w.name(), "constant-containing cumulants vanish in the generic functional, orders 2.." +
                                                    std::to_string(poly_max),
                            r.holds(), "0 nonzero", describe(r)));
  }
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 5; ++i) seeds.push_back(o.seed + i);
  for (const auto& w : {Weight::indicator(Family::AlmostInterval), Weight::modified_monotone()}) {
    const auto r = constants_check_matrix(w, 2, matrix_max, 3, seeds);
    s.claims.push_back(flag("matrix:" + w.name(), "3x3 matrix domain, seeds " + row(seeds) + ", orders 2.." +
                                                      std::to_string(matrix_max),
                            r.holds(), "0 nonzero", describe(r)));
  }
  for (const auto& w : {Weight::indicator(Family::Interval), Weight::monotone()}) {
    const auto r = constants_check_poly(w, 3, 3);
    Claim c = flag("negative:" + w.name(), "some constant-containing cumulant of order 3 is nonzero", !r.holds(),
                   "nonzero witness", describe(r));
    c.by_design_failure = true;
    s.claims.push_back(std::move(c));
  }
  const int book_max = cap(o, 5);
  for (const auto& w : {Weight::modified_monotone(), Weight::indicator(Family::AlmostInterval),
                        Weight::indicator(Family::NonCrossing)}) {
    const auto r = constants_bookkeeping(w, book_max);
    s.claims.push_back(flag("bookkeeping:" + w.name(), "expansion terms with a constant cancel in pairs or vanish, orders <= " + std::to_string(book_max),
                            r.holds() && r.paired > 0, "all terms paired or vanishing",
                            std::to_string(r.paired) + " paired, " + std::to_string(r.vanishing) + " vanishing, " +
                                std::to_string(r.failures) + " failures"));
  }
  return s;
}

// ---------------------------------------------------------------- products

Functional<Poly> marginal(const std::string& symbol, bool centered) {
  return Functional<Poly>(Alphabet({symbol}), [symbol, centered](const Word& w) {
    if (centered && w.size() == 1) return Poly();
    return Poly::variable(w.size() == 1 ? "F(" + symbol + ")" : "F(" + symbol + "^" + std::to_string(w.size()) + ")");
  });
}

Poly mom(const Functional<Poly>& f, std::size_t k) { return f(Word(k, 1)); }

Claim identity(std::string id, std::string statement, const Poly& expected, const Poly& computed) {
  return Claim{std::move(id), std::move(statement), expected.to_string(), computed.to_string(), expected == computed,
               false};
}

Section products(const VerifyOptions& o) {
  Section s{"products", 6, "independence products", {}, 0};
  const auto a1 = marginal("a1", false), a2 = marginal("a2", false), a3 = marginal("a3", false);
  {
    const auto boolean = product_functional<Poly>(ProductKind::Boolean, {a1, a2, a3}, 13);
    const auto tensor = product_functional<Poly>(ProductKind::Tensor, {a1, a2, a3}, 13);
    const Word w = boolean.alphabet().parse("a1 a1 a2 a2 a1 a1 a3 a3 a3 a2 a2 a3 a3");
    s.claims.push_back(identity("boolean-display", "boolean factorization of a1a1a2a2a1a1a3a3a3a2a2a3a3",
                                mom(a1, 2) * mom(a2, 2) * mom(a1, 2) * mom(a3, 3) * mom(a2, 2) * mom(a3, 2), boolean(w)));
    s.claims.push_back(identity("tensor-display", "tensor factorization of the same word",
                                mom(a1, 4) * mom(a2, 4) * mom(a3, 5), tensor(w)));
    const auto monotone = product_functional<Poly>(ProductKind::Monotone, {a1, a2, a3}, 15);
    const Poly m2 = mom(a2, 1);
    s.claims.push_back(identity("monotone-display", "monotone evaluation of a1a2a1a2a1a2a1a2",
                                mom(a1, 4) * m2 * m2 * m2 * m2,
                                monotone(monotone.alphabet().parse("a1 a2 a1 a2 a1 a2 a1 a2"))));
    s.claims.push_back(identity(
        "monotone-display-nested", "monotone evaluation of a1a1a2a2a3a3a3a2a2a1a1a2a2a3a3",
        mom(a1, 4) * mom(a2, 4) * mom(a3, 3) * mom(a2, 2) * mom(a3, 2),
        monotone(monotone.alphabet().parse("a1 a1 a2 a2 a3 a3 a3 a2 a2 a1 a1 a2 a2 a3 a3"))));
  }

  const int order = cap(o, 6);
  for (auto kind : {ProductKind::Boolean, ProductKind::Free, ProductKind::Tensor}) {
    for (std::size_t count : {2u, 3u}) {
      std::vector<Functional<Poly>> marginals;
      for (std::size_t i = 0; i < count; ++i) marginals.push_back(marginal(std::string(1, static_cast<char>('a' + i)), false));
      const auto f = product_functional<Poly>(kind, marginals, order);
      const Weight w = Weight::indicator(*product_cumulant_family(kind));
      CumulantSolver<Poly> joint(f, w, order);
      std::vector<std::unique_ptr<CumulantSolver<Poly>>> own;
      for (const auto& m : marginals) own.push_back(std::make_unique<CumulantSolver<Poly>>(m, w, order));
      std::size_t mixed = 0, nonzero = 0, pure = 0, mismatched = 0;
      for (int n = 2; n <= order; ++n) {
        for (const auto& word : all_words(count, static_cast<std::size_t>(n))) {
          const bool is_mixed = std::any_of(word.begin(), word.end(), [&](Letter l) { return l != word.front(); });
          if (is_mixed) {
            ++mixed;
            if (!joint.cumulant(word).is_zero()) ++nonzero;
          } else {
            ++pure;
            if (joint.cumulant(word) != own[word.front() - 1]->cumulant(Word(word.size(), 1))) ++mismatched;
          }
        }
      }
      s.claims.push_back(flag("mixed:" + std::string(product_name(kind)) + ":" + std::to_string(count),
                              std::string(product_name(kind)) + " product of " + std::to_string(count) +
                                  " generic marginals: mixed " + w.name() + " cumulants vanish, orders <= " +
                                  std::to_string(order),
                              nonzero == 0 && mismatched == 0, "0 nonzero mixed, marginal cumulants reproduced",
                              std::to_string(nonzero) + " of " + std::to_string(mixed) + " mixed nonzero, " +
                                  std::to_string(mismatched) + " of " + std::to_string(pure) + " pure mismatched"));
    }
  }

  const auto c1 = marginal("a1", true), c2 = marginal("a2", true), c3 = marginal("a3", true);
  const auto fb = product_functional<Poly>(ProductKind::FermiBoolean, {c1, c2, c3}, 13);
  const auto boolean = product_functional<Poly>(ProductKind::Boolean, {c1, c2, c3}, 13);
  s.claims.push_back(identity("fermi-boolean-display",
                              "centered Fermi-boolean factorization of a1a1a2a2a1a1a3a3a3a2a2a1a1",
                              mom(c1, 2) * mom(c2, 2) * mom(c1, 2) * mom(c3, 3) * mom(c2, 2) * mom(c1, 2),
                              fb(fb.alphabet().parse("a1 a1 a2 a2 a1 a1 a3 a3 a3 a2 a2 a1 a1"))));
  std::size_t words = 0, differ = 0;
  for (int n = 1; n <= order; ++n) {
    for (const auto& w : all_words(3, static_cast<std::size_t>(n))) {
      ++words;
      if (fb(w) != boolean(w)) ++differ;
    }
  }
  s.claims.push_back(flag("fermi-boolean-vs-boolean",
                          "centered Fermi-boolean and boolean products agree, orders <= " + std::to_string(order),
                          differ == 0, "0 differences", std::to_string(differ) + " of " + std::to_string(words) + " differ"));
  return s;
}

// ---------------------------------------------------------------- CLT

Section clt(const VerifyOptions&) {
  Section s{"clt", 7, "central limit moments", {}, 0};
  const std::vector<Integer> sizes = {Integer(10), Integer(100), Integer(10000), Integer(1000000)};
  // P(X = -2) = 1/5, P(X = 1/2) = 4/5: centered, variance 1.
  const auto m = discrete_moments({Rational(-2), Rational(1, 2)}, {Rational(1, 5), Rational(4, 5)}, 8);
  const auto series = clt_series(CltKind::Boolean, m, 8);
  const Rational b4 = m[3] - m[1] * m[1];
  {
    std::vector<std::string> expected, computed;
    for (const auto& n : sizes) {
      expected.push_back(to_string(1 + b4 / Rational(n)));
      computed.push_back(series.at(4, n).to_string());
    }
    s.claims.push_back(compare("boolean-m4-exact", "m_4(N) = 1 + b_4/N with b_4 = " + to_string(b4) + ", N = 10, 10^2, 10^4, 10^6",
                               row(expected), row(computed)));
  }
  for (int k = 1; k <= 4; ++k) {
    std::vector<long double> errors;
    bool monotone = series.limit(2 * k) == 1;
    for (const auto& n : sizes) {
      errors.push_back(std::fabs(series.at(2 * k, n).approx(n) - 1.0L));
      if (errors.size() > 1) monotone = monotone && (k == 1 ? errors.back() == 0 : errors.back() < errors[errors.size() - 2]);
    }
    std::ostringstream text;
    text.precision(3);
    for (auto e : errors) text << e << " ";
    s.claims.push_back(flag("boolean-m" + std::to_string(2 * k), "|m_" + std::to_string(2 * k) +
                                                                   "(N) - 1| decreases to 0 over the tested N",
                            monotone, "decreasing, limit 1", text.str().substr(0, text.str().size() - 1)));
  }

  // mu + Y, Y in {-1/2, 0, 1/2} with probabilities 1/8, 3/4, 1/8.
  const Rational mean(1), half(1, 2), quarter(1, 4);
  const auto shifted = discrete_moments({mean - half, mean, mean + half}, {Rational(1, 8), Rational(3, 4), Rational(1, 8)}, 6);
  const Rational variance = shifted[1] - shifted[0] * shifted[0];
  const auto limit = discrete_moments({mean - quarter, mean + quarter}, {half, half}, 6);
  const auto fb = clt_series(CltKind::FermiBoolean, shifted, 6);
  std::vector<std::string> limits, worst;
  bool ok = variance == quarter * quarter;
  for (int k = 1; k <= 6; ++k) {
    limits.push_back(to_string(fb.limit(k)));
    ok = ok && fb.limit(k) == limit[k - 1];
    Rational max_scaled = 0;
    for (const auto& n : sizes) {
      const auto v = fb.at(k, n);
      Rational err = v.rational - limit[k - 1];
      if (sgn(err) < 0) err = -err;
      ok = ok && v.exact() && err <= Rational(Integer(1), n);
      max_scaled = std::max(max_scaled, Rational(err * Rational(n)));
    }
    worst.push_back(to_string(max_scaled));
  }
  s.claims.push_back(flag("fermi-boolean-limit",
                          "Fermi-boolean CLT of 1 + Y converges to the two-atom law 1 -+ 1/4, error <= 1/N, orders <= 6",
                          ok, "limits " + row([&] {
                            std::vector<std::string> v;
                            for (const auto& x : limit) v.push_back(to_string(x));
                            return v;
                          }()),
                          "limits " + row(limits) + "; max N*error per order " + row(worst)));
  bool refused = false;
  try {
    clt_series(CltKind::Boolean, shifted, 4);
  } catch (const NonCenteredError&) {
    refused = true;
  }
  s.claims.push_back(flag("boolean-noncentered", "boolean CLT refuses a non-centered marginal without the flag", refused,
                          "NonCenteredError", refused ? "NonCenteredError" : "accepted"));
  return s;
}

// ---------------------------------------------------------------- engine

Functional<Rational> random_functional(std::uint64_t seed, std::size_t symbols) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  const std::size_t states = 4;
  std::vector<Rational> probs(states, Rational(1, states));
  std::vector<std::vector<Rational>> values(symbols);
  for (auto& r : values) {
    for (std::size_t i = 0; i < states; ++i) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      r.push_back(v);
    }
  }
  return finite_space_functional(Alphabet::letters(symbols), probs, values);
}

Section engine(const VerifyOptions& o) {
  Section s{"engine", 8, "engine self-consistency", {}, 0};
  const int order = cap(o, 6);
  const auto f = random_functional(o.seed, 2);
  std::vector<Weight> invertible;
  for (Family fam : kAllFamilies) invertible.push_back(Weight::indicator(fam));
  for (const auto& w : {Weight::monotone(), Weight::modified_monotone(), Weight::cyclic_monotone(),
                        Weight::modified_cyclic_monotone()}) {
    invertible.push_back(w);
  }
  for (const auto& w : invertible) {
    const auto back = cumulants_to_moments(moments_to_cumulants(f, w, order));
    std::size_t words = 0, bad = 0;
    for (int n = 1; n <= order; ++n) {
      for (const auto& word : all_words(2, static_cast<std::size_t>(n))) {
        ++words;
        if (back(word) != f(word)) ++bad;
      }
    }
    s.claims.push_back(flag("round-trip:" + w.name(), "moments -> cumulants -> moments is the identity, orders <= " +
                                                          std::to_string(order),
                            bad == 0, "0 mismatches", std::to_string(bad) + " of " + std::to_string(words) + " mismatched"));
  }
  for (Family fam : {Family::All, Family::NonCrossing, Family::Interval, Family::AlmostInterval}) {
    CumulantSolver<Rational> solver(f, Weight::indicator(fam), order);
    std::size_t words = 0, bad = 0;
    for (int n = 1; n <= order; ++n) {
      for (const auto& word : all_words(2, static_cast<std::size_t>(n))) {
        ++words;
        if (moebius_inversion_cumulant(f, fam, word) != solver.cumulant(word)) ++bad;
      }
    }
    s.claims.push_back(flag("moebius-inversion:" + std::string(family_name(fam)),
                            "Moebius inversion equals the recursive solver, orders <= " + std::to_string(order), bad == 0,
                            "0 mismatches", std::to_string(bad) + " of " + std::to_string(words) + " mismatched"));
  }
  {
    const auto generic = generic_functional(Alphabet::letters(2));
    const int nested_order = cap(o, 5);
    std::size_t checks = 0, bad = 0;
    for (const auto& w : {Weight::indicator(Family::NonCrossing), Weight::indicator(Family::AlmostInterval),
                          Weight::monotone(), Weight::modified_monotone()}) {
      CumulantSolver<Poly> comm(generic, w, nested_order);
      CumulantSolver<Poly> nested(generic, w, nested_order, Extension::Nested);
      for (int n = 1; n <= nested_order; ++n) {
        for (const auto& word : all_words(2, static_cast<std::size_t>(n))) {
          ++checks;
          if (comm.cumulant(word) != nested.cumulant(word)) ++bad;
        }
      }
    }
    s.claims.push_back(flag("nested-vs-commutative", "nested and commutative extensions give the same cumulants, orders <= " +
                                                         std::to_string(nested_order),
                            bad == 0, "0 mismatches", std::to_string(bad) + " of " + std::to_string(checks) + " mismatched"));
  }
  {
    std::mt19937_64 rng(o.seed);
    OperatorCumulants cumulants(Weight::modified_monotone());
    std::size_t checks = 0, bad = 0;
    for (int n = 1; n <= cap(o, 5); ++n) {
      std::vector<RatMatrix> args;
      for (int i = 0; i < n; ++i) args.push_back(random_matrix(3, rng));
      for (const auto& p : enumerate(Family::NonCrossing, n)) {
        const RatMatrix reference = cumulants.extension(p, args, {});
        for (auto attach : {NestedOptions::Attach::Right, NestedOptions::Attach::Left}) {
          for (bool last : {false, true}) {
            ++checks;
            if (cumulants.extension(p, args, {attach, last}) != reference) ++bad;
          }
        }
      }
    }
    s.claims.push_back(flag("balancedness", "left and right attachment agree on NC(n), n <= 5, 3x3 matrices, seed " +
                                                std::to_string(o.seed),
                            bad == 0, "0 mismatches", std::to_string(bad) + " of " + std::to_string(checks) + " mismatched"));
  }
  return s;
}

struct Entry {
  const char* id;
  Section (*run)(const VerifyOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"counting", counting},   {"moebius", moebius_section}, {"moebius-almost-interval", moebius_almost_interval},
      {"weisner", weisner},     {"si", si},                   {"constants", constants},
      {"products", products},   {"clt", clt},                 {"engine", engine},
  };
  return entries;
}

}  // namespace

bool Section::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const std::vector<std::string>& section_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

Section run_section(std::string_view id, const VerifyOptions& options) {
  for (const auto& e : registry()) {
    if (id == e.id) {
      const auto start = std::chrono::steady_clock::now();
      Section s = e.run(options);
      s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return s;
    }
  }
  throw std::invalid_argument("unknown section '" + std::string(id) + "'");
}

int section_criterion(std::string_view id) {
  static const std::map<std::string_view, int> criteria = {
      {"counting", 1}, {"moebius", 2},   {"moebius-almost-interval", 2}, {"weisner", 3}, {"si", 4},
      {"constants", 5}, {"products", 6}, {"clt", 7},                     {"engine", 8}};
  auto it = criteria.find(id);
  if (it == criteria.end()) throw std::invalid_argument("unknown section '" + std::string(id) + "'");
  return it->second;
}

std::vector<Section> verify_all(const VerifyOptions& options, const std::vector<std::string>& ids) {
  std::vector<Section> out;
  for (const auto& id : ids) out.push_back(run_section(id, options));
  return out;
}

Json report_json(const std::vector<Section>& sections, const VerifyOptions& options) {
  Json out;
  out["seed"] = options.seed;
  out["max_n"] = options.max_n ? Json(*options.max_n) : Json(nullptr);
  if (options.weight) out["weight"] = *options.weight;
  bool pass = true;
  Json list = Json::array();
  for (const auto& s : sections) {
    Json claims = Json::array();
    for (const auto& c : s.claims) {
      Json j{{"id", c.id}, {"statement", c.statement}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
      if (c.by_design_failure) j["by_design_failure"] = true;
      claims.push_back(std::move(j));
    }
    list.push_back({{"id", s.id}, {"criterion", s.criterion}, {"title", s.title}, {"pass", s.pass()}, {"claims", claims}});
    pass = pass && s.pass();
  }
  out["pass"] = pass;
  out["sections"] = std::move(list);
  return out;
}

std::string report_tsv(const std::vector<Section>& sections) {
  std::string out = "section\tclaim\tpass\texpected\tcomputed\n";
  for (const auto& s : sections) {
    for (const auto& c : s.claims) {
      out += s.id + "\t" + c.id + "\t" + (c.pass ? "pass" : "FAIL") + "\t" + c.expected + "\t" + c.computed + "\n";
    }
  }
  return out;
}

}  // namespace nccomb
