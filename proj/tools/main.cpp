// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Every subcommand prints one exact serialization
// (JSON by default, CSV where a flat table makes sense) and the process exit
// code carries the contract: 0 on success, 1 when a verification report
// contains FAIL entries or a computation cannot be completed, 2 for usage
// errors, 3 when a work budget is exceeded.  Output is byte-deterministic
// for a fixed flag set and seed; no value is ever rendered through floating
// point.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wreathchar/budget.hpp"
#include "wreathchar/char_table.hpp"
#include "wreathchar/classes.hpp"
#include "wreathchar/coinvariant.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/foulkes.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/rational.hpp"
#include "wreathchar/rsk.hpp"
#include "wreathchar/tensor.hpp"
#include "wreathchar/verify.hpp"

using nlohmann::ordered_json;
using namespace wreathchar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- serialization

ordered_json cyclo_json(const Cyclotomic& z) {
  return ordered_json(z.coeff_strings());
}

ordered_json unipoly_json(const UniPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(cyclo_json(c));
  return ordered_json{{"variable", p.var()},
                      {"coefficients", coeffs},
                      {"display", p.str()}};
}

ordered_json set_json(const std::set<unsigned long>& s) {
  return ordered_json(std::vector<unsigned long>(s.begin(), s.end()));
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Class labels contain commas, so CSV wraps them in quotes.
std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void append_cyclo_csv(std::string& line, const Cyclotomic& z) {
  for (const auto& c : z.coeff_strings()) {
    line += ',';
    line += c;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
  if (!f) throw std::runtime_error("error writing output file: " + out_path);
}

std::pair<ordered_json, ordered_json> class_columns(
    unsigned long r, const std::vector<Multipartition>& classes) {
  ordered_json names = ordered_json::array();
  ordered_json sizes = ordered_json::array();
  for (const auto& mu : classes) {
    names.push_back(format_multipartition(mu));
    sizes.push_back(class_size(r, mu).get_str());
  }
  return {std::move(names), std::move(sizes)};
}

// --------------------------------------------------------------- global flags

struct Globals {
  unsigned long r = 0;
  unsigned long n = 0;
  std::string format;
  std::string out;
  unsigned long long seed = 0;
  unsigned long budget = 0;
  CLI::Option* r_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* budget_opt = nullptr;

  unsigned long need_r() const {
    if (!r_opt->count()) throw UsageError("--r is required here");
    if (r == 0) throw UsageError("--r must be at least 1");
    return r;
  }
  unsigned long need_n() const {
    if (!n_opt->count()) throw UsageError("--n is required here");
    return n;
  }
  bool has_n() const { return n_opt->count() > 0; }

  std::string fmt(const char* fallback) const {
    return format_opt->count() ? format : fallback;
  }
  void json_only(const char* cmd) const {
    if (format_opt->count() && format == "csv")
      throw UsageError(std::string(cmd) + " emits JSON only");
  }
  unsigned long budget_or(unsigned long fallback) const {
    return budget_opt->count() ? budget : fallback;
  }
};

// --------------------------------------------------------------- subcommands

int cmd_eulerian(const Globals& g) {
  const unsigned long r = g.need_r(), n = g.need_n();
  const std::vector<mpz_class> row = eulerian_row(r, n);
  if (g.fmt("csv") == "csv") {
    std::string line;
    for (const auto& v : row) {
      if (!line.empty()) line += ',';
      line += v.get_str();
    }
    emit(line + "\n", g.out);
  } else {
    ordered_json vals = ordered_json::array();
    for (const auto& v : row) vals.push_back(v.get_str());
    emit(dump({{"r", r}, {"n", n}, {"row", vals}}), g.out);
  }
  return 0;
}

int cmd_foulkes_table(const Globals& g) {
  const unsigned long r = g.need_r(), n = g.need_n();
  const auto classes = conjugacy_classes(r, n);
  std::vector<ClassFunction> rows;
  for (unsigned long k = 0; k <= n; ++k)
    rows.push_back(foulkes(r, n, k).to_class_function());
  if (g.fmt("json") == "json") {
    auto [names, sizes] = class_columns(r, classes);
    ordered_json table = ordered_json::object();
    for (unsigned long k = 0; k <= n; ++k) {
      ordered_json vals = ordered_json::array();
      for (std::size_t j = 0; j < classes.size(); ++j)
        vals.push_back(cyclo_json(rows[k].value(j)));
      table[std::to_string(k)] = std::move(vals);
    }
    emit(dump({{"r", r},
               {"n", n},
               {"classes", names},
               {"class_sizes", sizes},
               {"rows", table}}),
         g.out);
  } else {
    std::string text;
    for (unsigned long k = 0; k <= n; ++k) {
      std::string line = std::to_string(k);
      for (std::size_t j = 0; j < classes.size(); ++j)
        append_cyclo_csv(line, rows[k].value(j));
      text += line + "\n";
    }
    emit(text, g.out);
  }
  return 0;
}

int cmd_char_table(const Globals& g) {
  const unsigned long r = g.need_r(), n = g.need_n();
  const CharacterTable table = irreducible_table(r, n);
  const auto classes = conjugacy_classes(r, n);
  if (g.fmt("json") == "json") {
    auto [names, sizes] = class_columns(r, classes);
    ordered_json rows = ordered_json::object();
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
      ordered_json vals = ordered_json::array();
      for (std::size_t j = 0; j < classes.size(); ++j)
        vals.push_back(cyclo_json(table.row(i).value(j)));
      rows[format_multipartition(table.labels()[i])] = std::move(vals);
    }
    emit(dump({{"r", r},
               {"n", n},
               {"classes", names},
               {"class_sizes", sizes},
               {"rows", rows}}),
         g.out);
  } else {
    std::string text;
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
      std::string line = csv_quote(format_multipartition(table.labels()[i]));
      for (std::size_t j = 0; j < classes.size(); ++j)
        append_cyclo_csv(line, table.row(i).value(j));
      text += line + "\n";
    }
    emit(text, g.out);
  }
  return 0;
}

int cmd_decompose(const Globals& g, const CLI::Option* chi_opt,
                  unsigned long chi_k, const CLI::Option* foulkes_opt,
                  unsigned long foulkes_k, const CLI::Option* q_opt,
                  const std::string& q_text) {
  g.json_only("decompose");
  const unsigned long r = g.need_r(), n = g.need_n();
  const int picked = (chi_opt->count() > 0) + (foulkes_opt->count() > 0) +
                     (q_opt->count() > 0);
  if (picked != 1)
    throw UsageError("pick exactly one of --chi, --foulkes, --q");

  BlockFunction f = foulkes(r, n, 0);  // replaced below
  ordered_json input;
  if (chi_opt->count()) {
    if (chi_k > n) throw UsageError("--chi must lie in 0..n");
    f = chi_block(r, n, chi_k);
    input = {{"kind", "block-power"}, {"k", chi_k}};
  } else if (foulkes_opt->count()) {
    if (foulkes_k > n) throw UsageError("--foulkes must lie in 0..n");
    f = foulkes(r, n, foulkes_k);
    input = {{"kind", "foulkes"}, {"k", foulkes_k}};
  } else {
    const Rational q = Rational::parse(q_text);
    std::vector<Cyclotomic> values;
    for (unsigned long ell = 0; ell <= n; ++ell) {
      Rational v(1);
      for (unsigned long i = 0; i < ell; ++i)
        v *= Rational(static_cast<long>(r)) * q + Rational(1);
      values.push_back(Cyclotomic::from_rational(v, r));
    }
    f = BlockFunction(r, n, std::move(values));
    input = {{"kind", "parameterized-power"}, {"q", q.str()}};
  }

  const CharacterTable table = irreducible_table(r, n);
  const FoulkesCoefficients block = block_coefficients(f);
  const std::vector<Cyclotomic> mult =
      decompose(f.to_class_function(), table);

  ordered_json coeffs = ordered_json::array();
  for (const auto& c : block.coeffs) coeffs.push_back(cyclo_json(c));
  ordered_json irr = ordered_json::object();
  for (std::size_t i = 0; i < table.labels().size(); ++i)
    irr[format_multipartition(table.labels()[i])] = cyclo_json(mult[i]);

  emit(dump({{"r", r},
             {"n", n},
             {"input", input},
             {"is_block_character", is_block_character(f)},
             {"block_coefficients", coeffs},
             {"irreducible_multiplicities", irr}}),
       g.out);
  return 0;
}

int cmd_rsk(const Globals& g, const std::string& w_text) {
  g.json_only("rsk");
  const unsigned long r = g.need_r();
  const ColoredPermutation w = ColoredPermutation::parse_word(r, w_text);
  if (g.has_n() && g.n != w.degree())
    throw UsageError("--n disagrees with the word length");
  auto [s, t] = rsk(w);
  emit(dump({{"r", r},
             {"n", w.degree()},
             {"w", w.word()},
             {"shape", format_multipartition(s.shape())},
             {"insertion", ordered_json(s.rows())},
             {"recording", ordered_json(t.rows())},
             {"word_descents", set_json(descent_set(w))},
             {"recording_descents", set_json(descent_set(t))}}),
       g.out);
  return 0;
}

int cmd_tensor_trace(const Globals& g, const CLI::Option* k_opt,
                     unsigned long k, bool signed_action,
                     const CLI::Option* parity_opt,
                     const std::string& parity_text) {
  g.json_only("tensor-trace");
  const unsigned long r = g.need_r(), n = g.need_n();
  if (!k_opt->count()) throw UsageError("--k is required here");
  if (parity_opt->count() && !signed_action)
    throw UsageError("--parity only applies with --signed");
  const unsigned long budget = g.budget_or(kDefaultTensorBudget);

  ParityAssignment parity;
  if (signed_action) {
    if (parity_opt->count()) {
      std::stringstream ss(parity_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok != "0" && tok != "1")
          throw UsageError("--parity entries must be 0 or 1");
        parity.push_back(tok == "1" ? 1 : 0);
      }
      if (parity.size() != r)
        throw UsageError("--parity needs exactly one entry per color");
    } else {
      parity = all_odd_parities(r);
    }
  }

  const ClassFunction tr =
      signed_action ? signed_trace_character(r, n, k, parity, budget)
                    : unsigned_trace_character(r, n, k, budget);
  const auto classes = conjugacy_classes(r, n);
  auto [names, sizes] = class_columns(r, classes);
  ordered_json traces = ordered_json::array();
  for (std::size_t j = 0; j < classes.size(); ++j)
    traces.push_back(cyclo_json(tr.value(j)));

  ordered_json j{{"r", r}, {"n", n}, {"k", k}, {"signed", signed_action}};
  if (signed_action) j["parity"] = ordered_json(parity);
  j["classes"] = names;
  j["class_sizes"] = sizes;
  j["traces"] = traces;
  emit(dump(j), g.out);
  return 0;
}

FlagVariant parse_variant(const std::string& name) {
  if (name == "interior-color") return FlagVariant::InteriorColor;
  if (name == "printed") return FlagVariant::PaperFormula;
  throw UsageError("--variant must be interior-color or printed");
}

const char* variant_name(FlagVariant v) {
  return v == FlagVariant::InteriorColor ? "interior-color" : "printed";
}

int cmd_coinvariant_basis(const Globals& g, FlagVariant v) {
  const unsigned long r = g.need_r(), n = g.need_n();
  const unsigned long budget = g.budget_or(kDefaultCoinvariantBudget);
  const DescentBasisReport rep = descent_basis_check(r, n, v, budget);
  ordered_json monomials = ordered_json::array();
  for (const auto& w : all_elements(r, n))
    monomials.push_back(
        ordered_json{{"w", w.word()},
                     {"exponents", ordered_json(flag_statistics(w, v).f)}});
  emit(dump({{"r", r},
             {"n", n},
             {"variant", variant_name(v)},
             {"dimension", rep.dimension},
             {"rank", rep.rank},
             {"full_rank", rep.full_rank},
             {"minimality_checked", rep.minimality_checked},
             {"minimality_holds", rep.minimality_holds},
             {"monomials", monomials}}),
       g.out);
  return 0;
}

int cmd_coinvariant_trace(const Globals& g, FlagVariant v,
                          const std::string& w_text) {
  const unsigned long r = g.need_r();
  const ColoredPermutation w = ColoredPermutation::parse_word(r, w_text);
  if (g.has_n() && g.n != w.degree())
    throw UsageError("--n disagrees with the word length");
  const unsigned long n = w.degree();
  const unsigned long budget = g.budget_or(kDefaultCoinvariantBudget);
  const CoinvariantAlgebra alg(r, n, v, budget);
  const UniPoly quotient = alg.graded_trace(w);
  const UniPoly tableau =
      tableau_side_trace(irreducible_table(r, n), w, v);
  emit(dump({{"r", r},
             {"n", n},
             {"variant", variant_name(v)},
             {"w", w.word()},
             {"quotient_trace", unipoly_json(quotient)},
             {"tableau_trace", unipoly_json(tableau)},
             {"equal", quotient == tableau}}),
       g.out);
  return 0;
}

int cmd_coinvariant_filtration(const Globals& g, FlagVariant v,
                               const std::string& statistic) {
  const unsigned long r = g.need_r(), n = g.need_n();
  GradingStatistic stat;
  if (statistic == "descent-count")
    stat = GradingStatistic::DescentCount;
  else if (statistic == "flag-exponent")
    stat = GradingStatistic::FlagExponent;
  else
    throw UsageError("--statistic must be descent-count or flag-exponent");
  const unsigned long budget = g.budget_or(kDefaultCoinvariantBudget);
  const CoinvariantAlgebra alg(r, n, v, budget);
  const FiltrationReport rep = filtration_characters(alg, stat);
  const auto classes = conjugacy_classes(r, n);
  auto [names, sizes] = class_columns(r, classes);
  ordered_json slices = ordered_json::array();
  for (const auto& s : rep.slices) {
    ordered_json character = ordered_json::array();
    for (std::size_t j = 0; j < classes.size(); ++j)
      character.push_back(cyclo_json(s.character.value(j)));
    slices.push_back(ordered_json{{"value", s.value},
                                  {"dimension", s.dimension},
                                  {"invariant", s.invariant},
                                  {"character", character}});
  }
  emit(dump({{"r", r},
             {"n", n},
             {"variant", variant_name(v)},
             {"statistic", statistic},
             {"classes", names},
             {"class_sizes", sizes},
             {"matches_foulkes", rep.matches_foulkes},
             {"boundaries", ordered_json(rep.boundaries)},
             {"slices", slices}}),
       g.out);
  return 0;
}

int cmd_ewens(const Globals& g, const std::string& q_text) {
  const unsigned long r = g.need_r(), n = g.need_n();
  const Rational q = Rational::parse(q_text);
  const Rational normalizer = ewens_normalizer(r, n, q);
  const Rational closed = ewens_closed_form(r, n, q);
  const Rational printed = ewens_printed_form(r, n, q);
  if (g.fmt("json") == "json") {
    emit(dump({{"r", r},
               {"n", n},
               {"q", q.str()},
               {"normalizer", normalizer.str()},
               {"closed_form", closed.str()},
               {"printed_form", printed.str()},
               {"closed_matches", normalizer == closed},
               {"printed_matches", normalizer == printed}}),
         g.out);
  } else {
    emit(normalizer.str() + "," + closed.str() + "," + printed.str() + "\n",
         g.out);
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& suites) {
  g.json_only("verify");
  VerifyConfig cfg;
  if (g.r_opt->count()) cfg.r_cap = g.r;
  if (g.n_opt->count()) cfg.n_cap = g.n;
  cfg.seed = g.seed;
  if (g.budget_opt->count()) {
    cfg.tensor_budget = g.budget;
    cfg.coinvariant_budget = g.budget;
  }
  cfg.suites = suites;

  const VerifyReport rep = run_verification(cfg);

  ordered_json entries = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json je{{"identity", e.identity},
                    {"locus", e.locus},
                    {"domain", e.domain},
                    {"status", to_string(e.status)}};
    if (!e.witness.empty()) je["witness"] = e.witness;
    entries.push_back(std::move(je));
  }
  emit(dump({{"version", rep.version},
             {"config",
              {{"r", rep.config.r_cap},
               {"n", rep.config.n_cap},
               {"suites", ordered_json(rep.config.suites)}}},
             {"summary",
              {{"pass", rep.count(VerifyStatus::Pass)},
               {"fail", rep.count(VerifyStatus::Fail)},
               {"mismatch_as_printed",
                rep.count(VerifyStatus::MismatchAsPrinted)}}},
             {"entries", entries}}),
       g.out);
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character computations for colored permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("wreathchar ") + kVerifyVersion);

  Globals g;
  g.r_opt = app.add_option("--r", g.r, "number of colors (at least 1)");
  g.n_opt = app.add_option("--n", g.n, "degree of the colored permutations");
  g.format_opt = app.add_option("--format", g.format, "output format")
                     ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--seed", g.seed, "seed for sampled property checks");
  g.budget_opt =
      app.add_option("--budget", g.budget, "work bound for heavy routines");

  auto* eulerian = app.add_subcommand(
      "eulerian", "descent-count distribution over the whole group");
  auto* foulkes_table = app.add_subcommand(
      "foulkes-table", "Foulkes characters evaluated on every class");
  auto* char_table = app.add_subcommand(
      "char-table", "irreducible character table");
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "coordinates of a block function in both bases");
  unsigned long chi_k = 0, foulkes_k = 0;
  std::string q_text;
  auto* chi_opt = decompose_cmd->add_option(
      "--chi", chi_k, "decompose the power block character with this k");
  auto* foulkes_opt = decompose_cmd->add_option(
      "--foulkes", foulkes_k, "decompose the Foulkes character with this k");
  auto* q_opt = decompose_cmd->add_option(
      "--q", q_text, "decompose the power function (rq+1)^length");

  auto* rsk_cmd = app.add_subcommand(
      "rsk", "insertion/recording tableau pair of a colored word");
  std::string rsk_word;
  rsk_cmd->add_option("--w", rsk_word, "colored word, e.g. \"2^0 1^1\"")
      ->required();

  auto* tensor = app.add_subcommand(
      "tensor-trace", "per-class traces of the tensor-space action");
  unsigned long tensor_k = 0;
  bool tensor_signed = false;
  std::string parity_text;
  auto* k_opt = tensor->add_option("--k", tensor_k, "tensor parameter k");
  tensor->add_flag("--signed", tensor_signed, "use the signed action");
  auto* parity_opt = tensor->add_option(
      "--parity", parity_text,
      "comma list of 0/1 block parities, one per color");

  auto* coin = app.add_subcommand(
      "coinvariant", "descent-monomial basis of the coinvariant quotient");
  coin->require_subcommand(1);
  std::string variant_text = "interior-color";
  coin->add_option("--variant", variant_text,
                   "flag statistic: interior-color or printed");
  auto* coin_basis = coin->add_subcommand(
      "basis", "descent monomials and the rank report");
  auto* coin_trace = coin->add_subcommand(
      "trace", "graded trace of one element, both sides");
  std::string coin_word;
  coin_trace->add_option("--w", coin_word, "colored word")->required();
  auto* coin_filt = coin->add_subcommand(
      "filtration", "per-threshold characters of the filtration");
  std::string statistic_text = "descent-count";
  coin_filt->add_option("--statistic", statistic_text,
                        "slice by descent-count or flag-exponent");

  auto* ewens = app.add_subcommand(
      "ewens", "normalizing constant of the colored Ewens measure");
  std::string ewens_q;
  ewens->add_option("--q", ewens_q, "measure parameter, e.g. 5/2")->required();

  auto* verify = app.add_subcommand(
      "verify", "run identity suites and emit the structured report");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites,
                     "suite name, repeatable; \"all\" for everything")
      ->delimiter(',');

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();
  for (auto* sub : coin->get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(eulerian)) return cmd_eulerian(g);
    if (app.got_subcommand(foulkes_table)) return cmd_foulkes_table(g);
    if (app.got_subcommand(char_table)) return cmd_char_table(g);
    if (app.got_subcommand(decompose_cmd))
      return cmd_decompose(g, chi_opt, chi_k, foulkes_opt, foulkes_k, q_opt,
                           q_text);
    if (app.got_subcommand(rsk_cmd)) return cmd_rsk(g, rsk_word);
    if (app.got_subcommand(tensor))
      return cmd_tensor_trace(g, k_opt, tensor_k, tensor_signed, parity_opt,
                              parity_text);
    if (app.got_subcommand(coin)) {
      g.json_only("coinvariant");
      const FlagVariant v = parse_variant(variant_text);
      if (coin->got_subcommand(coin_basis)) return cmd_coinvariant_basis(g, v);
      if (coin->got_subcommand(coin_trace))
        return cmd_coinvariant_trace(g, v, coin_word);
      return cmd_coinvariant_filtration(g, v, statistic_text);
    }
    if (app.got_subcommand(ewens)) return cmd_ewens(g, ewens_q);
    if (app.got_subcommand(verify)) return cmd_verify(g, suites);
    throw UsageError("no subcommand given");
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
