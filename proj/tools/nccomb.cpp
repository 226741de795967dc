#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nccomb/clt.hpp"
#include "nccomb/constants.hpp"
#include "nccomb/io.hpp"
#include "nccomb/poset.hpp"
#include "nccomb/products.hpp"
#include "nccomb/verify.hpp"

using namespace nccomb;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CLI::Option* max_n_option = nullptr;

struct Globals {
  int max_n = 8;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot write '" + g.out + "'");
  file << text;
  if (!file) throw std::runtime_error("write failed for '" + g.out + "'");
}

void emit(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (g.format == f) return;
  }
  throw UsageError("--format " + g.format + " is not available for this command");
}

std::vector<Family> families_or_all(const std::vector<std::string>& names) {
  std::vector<Family> out;
  for (const auto& n : names) out.push_back(parse_family(n));
  if (out.empty()) out.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  return out;
}

std::vector<Rational> rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_rational(item));
  return out;
}

Json si_json(const SIReport& r) {
  Json j{{"subject", r.subject}, {"holds", r.holds}, {"max_n_checked", r.max_n_checked}};
  if (r.witness) {
    const auto& w = *r.witness;
    Json wj{{"n", w.n}, {"position", w.position}, {"partition", w.partition.to_string()}, {"image", w.image.to_string()},
            {"reason", w.reason}};
    if (w.weight_before) wj["weight_before"] = to_string(*w.weight_before);
    if (w.weight_after) wj["weight_after"] = to_string(*w.weight_after);
    j["witness"] = std::move(wj);
  }
  return j;
}

std::string si_tsv(const SIReport& r) {
  std::string out = "subject\tholds\tmax_n\twitness\n" + r.subject + "\t" + (r.holds ? "yes" : "no") + "\t" +
                    std::to_string(r.max_n_checked) + "\t";
  if (r.witness) {
    out += r.witness->partition.to_string() + " -> " + r.witness->image.to_string();
    if (r.witness->weight_after) out += " (" + to_string(*r.witness->weight_before) + " -> " + to_string(*r.witness->weight_after) + ")";
  }
  return out + "\n";
}

// ---------------------------------------------------------------- families

void families_command(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("families", "enumerate and count partition families");
  cmd->require_subcommand(1);

  static std::vector<std::string> count_families;
  auto* count = cmd->add_subcommand("count", "cardinalities for n = 1..max-n");
  count->add_option("--family", count_families, "family (repeatable; default all six)");
  count->callback([&g] {
    const auto fams = families_or_all(count_families);
    require_format(g, {"json", "tsv"});
    if (g.format == "json") {
      Json j = Json::object();
      for (Family f : fams) {
        Json row = Json::array();
        for (int n = 1; n <= g.max_n; ++n) row.push_back(enumerate(f, n).size());
        j[std::string(family_name(f))] = row;
      }
      emit(g, j);
      return;
    }
    std::string out = "n";
    for (Family f : fams) out += "\t" + std::string(family_name(f));
    out += "\n";
    for (int n = 1; n <= g.max_n; ++n) {
      out += std::to_string(n);
      for (Family f : fams) out += "\t" + std::to_string(enumerate(f, n).size());
      out += "\n";
    }
    emit(g, out);
  });

  static std::string list_family = "nc";
  static int list_n = 4;
  auto* list = cmd->add_subcommand("list", "list the members of one family");
  list->add_option("--family", list_family, "family")->capture_default_str();
  list->add_option("-n,--n", list_n, "size")->required();
  list->callback([&g] {
    require_format(g, {"json", "tsv"});
    if (list_n > g.max_n) throw UsageError("--n exceeds --max-n");
    const auto& members = enumerate(parse_family(list_family), list_n);
    if (g.format == "json") {
      Json j = Json::array();
      for (const auto& p : members) j.push_back(p.to_string());
      emit(g, j);
    } else {
      std::string out;
      for (const auto& p : members) out += p.to_string() + "\n";
      emit(g, out);
    }
  });

  static std::string classify_partition;
  auto* classify_cmd = cmd->add_subcommand("classify", "families containing a partition");
  classify_cmd->add_option("--partition", classify_partition, "blocks like 1,3/2")->required();
  classify_cmd->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto p = Partition::parse(classify_partition);
    Json j = Json::object();
    std::string out = "family\tcontains\n";
    for (Family f : kAllFamilies) {
      j[std::string(family_name(f))] = contains(f, p);
      out += std::string(family_name(f)) + "\t" + (contains(f, p) ? "yes" : "no") + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"partition", p.to_string()}, {"families", j}});
    } else {
      emit(g, out);
    }
  });
}

// ---------------------------------------------------------------- poset

void poset_command(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("poset", "lattice structure, Moebius function, Weisner sums, SI");
  cmd->require_subcommand(1);
  static std::string family = "almost-interval";

  static std::string lower, upper;
  auto* mob = cmd->add_subcommand("moebius", "mu(0_n,1_n) for n = 1..max-n, or one interval");
  mob->add_option("--family", family, "family")->capture_default_str();
  mob->add_option("--lower", lower, "lower partition");
  mob->add_option("--upper", upper, "upper partition");
  mob->callback([&g] {
    require_format(g, {"json", "tsv"});
    const Family f = parse_family(family);
    if (!lower.empty() || !upper.empty()) {
      if (lower.empty() || upper.empty()) throw UsageError("--lower and --upper go together");
      const auto v = moebius(f, Partition::parse(lower), Partition::parse(upper));
      if (g.format == "json") {
        emit(g, Json{{"family", family_name(f)}, {"lower", lower}, {"upper", upper}, {"moebius", v}});
      } else {
        emit(g, std::to_string(v) + "\n");
      }
      return;
    }
    Json values = Json::array();
    std::string out = "n\tmoebius\n";
    for (int n = 1; n <= g.max_n; ++n) {
      const auto v = moebius(f, Partition::zero(n), Partition::one(n));
      values.push_back(v);
      out += std::to_string(n) + "\t" + std::to_string(v) + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"family", family_name(f)}, {"moebius", values}});
    } else {
      emit(g, out);
    }
  });

  static int hasse_n = 3;
  auto* hasse = cmd->add_subcommand("hasse", "Hasse diagram of one family");
  hasse->add_option("--family", family, "family")->capture_default_str();
  hasse->add_option("-n,--n", hasse_n, "size")->capture_default_str();
  hasse->callback([&g] {
    require_format(g, {"json", "dot"});
    if (hasse_n > g.max_n) throw UsageError("--n exceeds --max-n");
    const auto& poset = family_poset(parse_family(family), hasse_n);
    if (g.format == "dot") {
      emit(g, hasse_dot(poset));
      return;
    }
    Json edges = Json::array();
    for (const auto& [a, b] : poset.order.hasse_edges()) {
      edges.push_back({poset.members[a].to_string(), poset.members[b].to_string()});
    }
    emit(g, Json{{"family", family_name(parse_family(family))}, {"n", hasse_n}, {"lattice", poset.order.is_lattice()},
                 {"covers", edges}});
  });

  auto* lattice = cmd->add_subcommand("lattice", "whether the family is a lattice, n = 1..max-n");
  lattice->add_option("--family", family, "family")->capture_default_str();
  lattice->callback([&g] {
    require_format(g, {"json", "tsv"});
    const Family f = parse_family(family);
    Json rows = Json::array();
    std::string out = "n\tlattice\n";
    for (int n = 1; n <= g.max_n; ++n) {
      const bool l = family_poset(f, n).order.is_lattice();
      rows.push_back(l);
      out += std::to_string(n) + "\t" + (l ? "yes" : "no") + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"family", family_name(f)}, {"lattice", rows}});
    } else {
      emit(g, out);
    }
  });

  static int weisner_n = 5;
  static std::string sigma;
  auto* weis = cmd->add_subcommand("weisner", "sum of mu(0_n,pi) over pi with pi v sigma = 1_n");
  weis->add_option("--family", family, "family")->capture_default_str();
  weis->add_option("-n,--n", weisner_n, "size")->capture_default_str();
  weis->add_option("--sigma", sigma, "sigma (default 1_n)");
  weis->callback([&g] {
    require_format(g, {"json", "tsv"});
    const Family f = parse_family(family);
    const Partition s = sigma.empty() ? Partition::one(weisner_n) : Partition::parse(sigma, weisner_n);
    const auto r = weisner_check(f, weisner_n, s);
    Json contributing = Json::array();
    for (const auto& p : r.contributing) contributing.push_back(p.to_string());
    if (g.format == "json") {
      emit(g, Json{{"family", family_name(f)}, {"sigma", s.to_string()}, {"sum", r.sum}, {"holds", r.holds},
                   {"contributing", contributing}});
    } else {
      emit(g, "sum\tholds\tcontributing\n" + std::to_string(r.sum) + "\t" + (r.holds ? "yes" : "no") + "\t" +
                  std::to_string(r.contributing.size()) + "\n");
    }
  });

  auto* si = cmd->add_subcommand("si", "singleton-inductive check of a family up to max-n");
  si->add_option("--family", family, "family")->capture_default_str();
  si->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto r = si_check_family(parse_family(family), g.max_n);
    if (g.format == "json") {
      emit(g, si_json(r));
    } else {
      emit(g, si_tsv(r));
    }
  });
}

// ---------------------------------------------------------------- weights

void weights_command(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("weights", "evaluate and classify weights");
  cmd->require_subcommand(1);
  static std::string weight = "modified-monotone";

  static std::vector<std::string> partitions;
  auto* eval = cmd->add_subcommand("eval", "weight of given partitions");
  eval->add_option("--weight", weight, "weight")->capture_default_str();
  eval->add_option("--partition", partitions, "partition (repeatable)")->required();
  eval->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto w = Weight::parse(weight);
    Json rows = Json::array();
    std::string out = "partition\tweight\n";
    for (const auto& text : partitions) {
      const auto p = Partition::parse(text);
      rows.push_back({{"partition", p.to_string()}, {"weight", to_string(w(p))}});
      out += p.to_string() + "\t" + to_string(w(p)) + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"weight", w.name()}, {"values", rows}});
    } else {
      emit(g, out);
    }
  });

  static int table_n = 4;
  auto* table = cmd->add_subcommand("table", "nonzero weights on P(n)");
  table->add_option("--weight", weight, "weight")->capture_default_str();
  table->add_option("-n,--n", table_n, "size")->capture_default_str();
  table->callback([&g] {
    require_format(g, {"json", "tsv"});
    if (table_n > g.max_n) throw UsageError("--n exceeds --max-n");
    const auto w = Weight::parse(weight);
    Json rows = Json::array();
    std::string out = "partition\tweight\n";
    for (const auto& p : enumerate(Family::All, table_n)) {
      const Rational v = w(p);
      if (sgn(v) == 0) continue;
      rows.push_back({{"partition", p.to_string()}, {"weight", to_string(v)}});
      out += p.to_string() + "\t" + to_string(v) + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"weight", w.name()}, {"n", table_n}, {"support", rows}});
    } else {
      emit(g, out);
    }
  });

  auto* cls = cmd->add_subcommand("classify", "monic, invertible and support up to max-n");
  cls->add_option("--weight", weight, "weight")->capture_default_str();
  cls->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto w = Weight::parse(weight);
    const auto c = classify(w, g.max_n);
    const std::string support = c.support ? std::string(family_name(*c.support)) : "none";
    if (g.format == "json") {
      emit(g, Json{{"weight", w.name()}, {"n_max", c.n_max}, {"monic", c.monic}, {"invertible", c.invertible},
                   {"support", support}, {"singular_orders", c.singular_orders}});
    } else {
      emit(g, "weight\tmonic\tinvertible\tsupport\n" + w.name() + "\t" + (c.monic ? "yes" : "no") + "\t" +
                  (c.invertible ? "yes" : "no") + "\t" + support + "\n");
    }
  });

  auto* si = cmd->add_subcommand("si", "singleton-inductive check of a weight up to max-n");
  si->add_option("--weight", weight, "weight")->capture_default_str();
  si->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto r = si_check_weight(Weight::parse(weight), g.max_n);
    if (g.format == "json") {
      emit(g, si_json(r));
    } else {
      emit(g, si_tsv(r));
    }
  });
}

// ---------------------------------------------------------------- cumulants

template <class S>
void emit_table(const Globals& g, const CumulantTable<S>& table) {
  if (g.format == "json") {
    emit(g, cumulant_table_json(table));
    return;
  }
  std::string out = "word\tcumulant\n";
  for (const auto& [word, value] : table.entries) out += table.alphabet.format(word) + "\t" + to_json(value).dump() + "\n";
  emit(g, out);
}

void cumulants_command(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("cumulants", "moment-cumulant transforms, products, constants, CLT");
  cmd->require_subcommand(1);

  static std::string input, weight_override;
  static int order_override = 0;
  auto* solve = cmd->add_subcommand("solve", "cumulant table of a JSON moment problem");
  solve->add_option("--input", input, "moment problem file")->required();
  solve->add_option("--weight", weight_override, "override the file's weight");
  solve->add_option("--max-order", order_override, "override the file's max_order");
  solve->callback([&g] {
    require_format(g, {"json", "tsv"});
    auto problem = load_moment_problem(input);
    if (!weight_override.empty()) problem.weight = Weight::parse(weight_override);
    if (order_override > 0) problem.max_order = order_override;
    if (auto* f = std::get_if<Functional<Rational>>(&problem.functional)) {
      emit_table(g, moments_to_cumulants(*f, problem.weight, problem.max_order));
    } else if (auto* p = std::get_if<Functional<Poly>>(&problem.functional)) {
      emit_table(g, moments_to_cumulants(*p, problem.weight, problem.max_order));
    } else {
      const auto& model = std::get<MatrixModel>(problem.functional);
      OperatorCumulants cumulants(problem.weight);
      CumulantTable<RatMatrix> table{problem.weight, model.alphabet, problem.max_order, {}};
      for (int n = 1; n <= problem.max_order; ++n) {
        for (const auto& w : all_words(model.alphabet.size(), n)) table.entries.emplace(w, cumulants.cumulant(model.arguments(w)));
      }
      emit_table(g, table);
    }
  });

  static std::string kind = "boolean", word;
  static int marginals = 2, product_order = 4;
  static bool show_cumulants = false;
  auto* product = cmd->add_subcommand("product", "moments of a product of generic marginals a, b, c, ...");
  product->add_option("--kind", kind, "tensor, free, boolean, monotone, fermi-boolean")->capture_default_str();
  product->add_option("--marginals", marginals, "number of marginals")->capture_default_str()->check(CLI::Range(1, 26));
  product->add_option("--max-order", product_order, "word length cap")->capture_default_str();
  product->add_option("--word", word, "single word (default every word up to the cap)");
  product->add_flag("--cumulants", show_cumulants, "print the cumulants that vanish on mixed words instead");
  product->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto k = parse_product_kind(kind);
    std::vector<Functional<Poly>> parts;
    for (int i = 0; i < marginals; ++i) parts.push_back(generic_functional(Alphabet({std::string(1, static_cast<char>('a' + i))})));
    const auto f = product_functional<Poly>(k, parts, product_order);
    std::optional<CumulantSolver<Poly>> solver;
    if (show_cumulants) {
      const auto family = product_cumulant_family(k);
      if (!family) throw UsageError("monotone products have no vanishing-mixed-cumulant family");
      solver.emplace(f, Weight::indicator(*family), product_order);
    }
    std::vector<Word> words;
    if (!word.empty()) {
      words.push_back(f.alphabet().parse(word));
    } else {
      for (int n = 1; n <= product_order; ++n) {
        for (auto& w : all_words(f.alphabet().size(), n)) words.push_back(std::move(w));
      }
    }
    Json rows = Json::array();
    std::string out = std::string("word\t") + (show_cumulants ? "cumulant" : "moment") + "\n";
    for (const auto& w : words) {
      const Poly v = solver ? solver->cumulant(w) : f(w);
      rows.push_back({{"word", f.alphabet().format(w)}, {"value", to_json(v)}});
      out += f.alphabet().format(w) + "\t" + v.to_string() + "\n";
    }
    if (g.format == "json") {
      emit(g, Json{{"kind", product_name(k)}, {"marginals", marginals}, {show_cumulants ? "cumulants" : "moments", rows}});
    } else {
      emit(g, out);
    }
  });

  static std::string constants_weight = "modified-monotone", domain = "poly";
  static int min_order = 2, max_order = 6, dim = 3, seeds = 5;
  static bool bookkeeping = false;
  auto* constants = cmd->add_subcommand("verify-constants", "cumulants with a constant argument vanish");
  constants->add_option("--weight", constants_weight, "weight")->capture_default_str();
  constants->add_option("--min-order", min_order, "lowest order")->capture_default_str();
  constants->add_option("--max-order", max_order, "highest order")->capture_default_str();
  constants->add_option("--domain", domain, "poly or matrix")->capture_default_str()->check(CLI::IsMember({"poly", "matrix"}));
  constants->add_option("--dim", dim, "matrix size")->capture_default_str();
  constants->add_option("--seeds", seeds, "number of random matrix seeds, from --seed on")->capture_default_str();
  constants->add_flag("--bookkeeping", bookkeeping, "also verify the term-by-term cancellation");
  constants->callback([&g, &status] {
    require_format(g, {"json", "tsv"});
    const auto w = Weight::parse(constants_weight);
    ConstantsReport r;
    if (domain == "poly") {
      r = constants_check_poly(w, min_order, max_order);
    } else {
      std::vector<std::uint64_t> list;
      for (int i = 0; i < seeds; ++i) list.push_back(g.seed + static_cast<std::uint64_t>(i));
      r = constants_check_matrix(w, min_order, max_order, static_cast<std::size_t>(dim), list);
    }
    bool ok = r.holds();
    Json witnesses = Json::array();
    for (const auto& wit : r.witnesses) {
      Json j{{"word", wit.word}, {"value", wit.value}};
      if (wit.seed) j["seed"] = *wit.seed;
      witnesses.push_back(std::move(j));
    }
    Json j{{"weight", r.weight}, {"domain", r.domain}, {"min_order", r.min_order}, {"max_order", r.max_order},
           {"seeds", r.seeds}, {"words_checked", r.words_checked}, {"nonzero", r.nonzero}, {"holds", r.holds()},
           {"witnesses", witnesses}};
    std::string out = "weight\tdomain\twords\tnonzero\tholds\n" + r.weight + "\t" + r.domain + "\t" +
                      std::to_string(r.words_checked) + "\t" + std::to_string(r.nonzero) + "\t" +
                      (r.holds() ? "yes" : "no") + "\n";
    if (bookkeeping) {
      const auto b = constants_bookkeeping(w, max_order);
      j["bookkeeping"] = {{"words", b.words}, {"paired", b.paired}, {"vanishing", b.vanishing}, {"failures", b.failures},
                          {"messages", b.messages}};
      out += "bookkeeping\tpaired " + std::to_string(b.paired) + "\tvanishing " + std::to_string(b.vanishing) +
             "\tfailures " + std::to_string(b.failures) + "\n";
      ok = ok && b.holds();
    }
    if (g.format == "json") {
      emit(g, j);
    } else {
      emit(g, out);
    }
    if (!ok) status = 1;
  });

  static std::string clt_kind = "boolean", atoms, probs, n_text = "100";
  static int clt_order = 8;
  static bool noncentered = false;
  auto* clt = cmd->add_subcommand("clt", "moments of the normalized sum of N independent copies");
  clt->add_option("--kind", clt_kind, "boolean or fermi-boolean")->capture_default_str();
  clt->add_option("--N", n_text, "number of copies")->capture_default_str();
  clt->add_option("--order", clt_order, "highest moment")->capture_default_str();
  clt->add_option("--atoms", atoms, "comma-separated atoms (default: a built-in example law)");
  clt->add_option("--probs", probs, "comma-separated probabilities");
  clt->add_flag("--noncentered", noncentered, "allow a non-centered boolean marginal");
  clt->callback([&g] {
    require_format(g, {"json", "tsv"});
    const auto k = parse_clt_kind(clt_kind);
    std::vector<Rational> a, p;
    if (atoms.empty()) {
      if (k == CltKind::Boolean) {
        a = {Rational(-2), Rational(1, 2)};
        p = {Rational(1, 5), Rational(4, 5)};
      } else {
        a = {Rational(1, 2), Rational(1), Rational(3, 2)};
        p = {Rational(1, 8), Rational(3, 4), Rational(1, 8)};
      }
    } else {
      a = rationals(atoms);
      p = rationals(probs);
    }
    if (a.size() != p.size()) throw UsageError("--atoms and --probs differ in length");
    Integer n;
    if (n.set_str(n_text, 10) != 0 || sgn(n) <= 0) throw UsageError("--N must be a positive integer");
    const auto marginal = discrete_moments(a, p, clt_order);
    const auto series = clt_series(k, marginal, clt_order, noncentered);
    Json rows = Json::array();
    std::string out = "k\tmoment\tapprox\tlimit\n";
    for (int i = 1; i <= clt_order; ++i) {
      const auto m = series.at(i, n);
      std::ostringstream approx;
      approx.precision(12);
      approx << m.approx(n);
      rows.push_back({{"k", i}, {"moment", m.to_string()}, {"approx", approx.str()}, {"limit", to_string(series.limit(i))}});
      out += std::to_string(i) + "\t" + m.to_string() + "\t" + approx.str() + "\t" + to_string(series.limit(i)) + "\n";
    }
    if (g.format == "json") {
      Json cumulants = Json::array();
      for (const auto& c : series.marginal_cumulants) cumulants.push_back(to_string(c));
      emit(g, Json{{"kind", clt_kind_name(k)}, {"N", n_text}, {"marginal_cumulants", cumulants}, {"moments", rows}});
    } else {
      emit(g, out);
    }
  });
}

// ---------------------------------------------------------------- verify-paper

void verify_command(CLI::App& app, Globals& g, int& status) {
  static std::vector<std::string> only;
  static std::string weight;
  static bool list = false;
  auto* cmd = app.add_subcommand("verify-paper", "run the acceptance suite and report every claim");
  cmd->add_option("--only", only, "section id (repeatable)");
  cmd->add_option("--weight", weight, "restrict the si section to one weight");
  cmd->add_flag("--list", list, "list the section ids");
  cmd->callback([&g, &status] {
    require_format(g, {"json", "tsv"});
    if (list) {
      std::string out;
      for (const auto& id : section_ids()) out += id + "\t" + std::to_string(section_criterion(id)) + "\n";
      emit(g, out);
      return;
    }
    for (const auto& id : only) {
      const auto& ids = section_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UsageError("unknown section '" + id + "'");
    }
    VerifyOptions options;
    if (max_n_option->count() > 0) options.max_n = g.max_n;
    options.seed = g.seed;
    if (!weight.empty()) {
      Weight::parse(weight);
      options.weight = weight;
    }
    const auto sections = verify_all(options, only.empty() ? section_ids() : only);
    bool pass = true;
    for (const auto& s : sections) pass = pass && s.pass();
    emit(g, g.format == "json" ? report_json(sections, options).dump(2) + "\n" : report_tsv(sections));
    if (!pass) status = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nccomb: partition lattices, weights and non-commutative cumulants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  max_n_option = app.add_option("--max-n", g.max_n, "size cap for enumerations and checks (verify-paper: lowers its caps)")
      ->capture_default_str()
      ->check(CLI::Range(1, kDefaultSizeCap));
  app.add_option("--seed", g.seed, "seed for random functionals and matrices")->capture_default_str();
  app.add_option("--format", g.format, "json, tsv or dot")->capture_default_str()->check(CLI::IsMember({"json", "tsv", "dot"}));
  app.add_option("--out", g.out, "write the output to this path");

  int status = 0;
  families_command(app, g);
  poset_command(app, g);
  weights_command(app, g);
  cumulants_command(app, g, status);
  verify_command(app, g, status);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
