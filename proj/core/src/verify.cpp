// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wreathchar/char_table.hpp"
#include "wreathchar/classes.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/foulkes.hpp"
#include "wreathchar/rsk.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return "PASS";
    case VerifyStatus::Fail:
      return "FAIL";
    case VerifyStatus::MismatchAsPrinted:
      return "MISMATCH-AS-PRINTED";
  }
  return "FAIL";
}

bool VerifyReport::all_passed() const {
  return count(VerifyStatus::Fail) == 0;
}

std::size_t VerifyReport::count(VerifyStatus s) const {
  std::size_t c = 0;
  for (const auto& e : entries)
    if (e.status == s) ++c;
  return c;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "eulerian", "rsk",         "chartable", "foulkes",
      "tensor",   "coinvariant", "ewens"};
  return names;
}

namespace {

template <class... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

mpz_class group_order(unsigned long r, unsigned long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), r, n);
  return p * factorial(n);
}

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

Cyclotomic cyc(long v, unsigned long r) {
  return Cyclotomic::from_rational(Rational(v), r);
}

Multipartition add_box(const Multipartition& mp, const Box& b) {
  Multipartition out = mp;
  if (b.row <= out[b.component].size())
    ++out[b.component][b.row - 1];
  else
    out[b.component].push_back(1);
  return out;
}

Multipartition remove_box(const Multipartition& mp, const Box& b) {
  Multipartition out = mp;
  if (--out[b.component][b.row - 1] == 0) out[b.component].pop_back();
  return out;
}

Multipartition identity_type(unsigned long r, unsigned long n) {
  Multipartition mp(r);
  mp[0] = Partition(n, 1);
  return mp;
}

/// (r, max-n) scan bands, already clamped against the config caps.
struct Bands {
  std::vector<std::pair<unsigned long, unsigned long>> spans;

  bool empty() const { return spans.empty(); }

  /// Visits cells in ascending (r, n); stops early when fn returns false.
  template <class F>
  void scan(F&& fn) const {
    for (auto [r, nmax] : spans)
      for (unsigned long n = 1; n <= nmax; ++n)
        if (!fn(r, n)) return;
  }

  std::string text() const {
    std::string out;
    for (auto [r, nmax] : spans) {
      if (!out.empty()) out += "; ";
      out += cat("r=", r, ": n <= ", nmax);
    }
    return out;
  }
};

Bands clamp(const VerifyConfig& cfg,
            std::initializer_list<std::pair<unsigned long, unsigned long>>
                wanted) {
  Bands b;
  for (auto [r, nmax] : wanted)
    if (r <= cfg.r_cap && cfg.n_cap >= 1)
      b.spans.emplace_back(r, std::min(nmax, cfg.n_cap));
  return b;
}

/// Rectangular band r <= rmax, n <= nmax (after capping).
Bands rect(const VerifyConfig& cfg, unsigned long rmax, unsigned long nmax) {
  Bands b;
  for (unsigned long r = 1; r <= std::min(rmax, cfg.r_cap); ++r)
    b.spans.emplace_back(r, std::min(nmax, cfg.n_cap));
  return b;
}

std::string rect_text(const Bands& b) {
  if (b.empty()) return "empty";
  return cat("r <= ", b.spans.back().first, ", n <= ", b.spans.back().second);
}

class TableCache {
 public:
  const CharacterTable& get(unsigned long r, unsigned long n) {
    auto key = std::make_pair(r, n);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, irreducible_table(r, n)).first;
    return it->second;
  }

 private:
  std::map<std::pair<unsigned long, unsigned long>, CharacterTable> cache_;
};

void fail(VerifyEntry& e, const std::string& witness) {
  if (e.status != VerifyStatus::Fail) e.witness = witness;
  e.status = VerifyStatus::Fail;
}

// ---------------------------------------------------------------- eulerian

std::vector<VerifyEntry> suite_eulerian(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  const Bands band = rect(cfg, 3, 5);
  const bool big_cell = cfg.r_cap >= 2 && cfg.n_cap >= 6;

  {
    VerifyEntry e{"closed-form Eulerian numbers count descents exhaustively",
                  "descent generating function of colored permutations",
                  cat(rect_text(band),
                      big_cell ? ", plus the cell (r, n) = (2, 6)" : "")};
    auto check_cell = [&](unsigned long r, unsigned long n) {
      std::vector<mpz_class> counted(n + 1, 0);
      for (const auto& w : all_elements(r, n)) counted[descent_number(w)] += 1;
      const std::vector<mpz_class> row = eulerian_row(r, n);
      for (unsigned long k = 0; k <= n; ++k)
        if (counted[k] != row[k]) {
          fail(e, cat("r=", r, " n=", n, " k=", k, ": counted ", counted[k],
                      ", formula gives ", row[k]));
          return false;
        }
      return true;
    };
    band.scan(check_cell);
    if (big_cell && e.status == VerifyStatus::Pass) check_cell(2, 6);
    out.push_back(std::move(e));
  }

  if (cfg.r_cap >= 2 && cfg.n_cap >= 2) {
    VerifyEntry e{"the two-color degree-two row is (1, 6, 1)",
                  "worked Eulerian example", "(r, n) = (2, 2)"};
    const std::vector<mpz_class> row = eulerian_row(2, 2);
    if (row != std::vector<mpz_class>{1, 6, 1})
      fail(e, cat("row came out ", row[0], ",", row[1], ",", row[2]));
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"each Eulerian row sums to the group order",
                  "completeness of the descent distribution", rect_text(band)};
    band.scan([&](unsigned long r, unsigned long n) {
      mpz_class sum = 0;
      for (const auto& v : eulerian_row(r, n)) sum += v;
      if (sum != group_order(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": row sum ", sum, ", group order ",
                    group_order(r, n)));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

// -------------------------------------------------------------------- rsk

std::vector<VerifyEntry> suite_rsk(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  const Bands band = rect(cfg, 3, 3);
  const bool sampled = cfg.n_cap >= 4;

  {
    VerifyEntry e{
        "row insertion is a bijection onto same-shape standard pairs",
        "insertion correspondence for colored words",
        cat("exhaustive for ", rect_text(band),
            sampled ? cat("; seeded samples at n = 4 (seed ", cfg.seed, ")")
                    : std::string())};
    band.scan([&](unsigned long r, unsigned long n) {
      for (const auto& w : all_elements(r, n)) {
        auto [s, t] = rsk(w);
        if (s.shape() != t.shape()) {
          fail(e, cat("w=", w.word(), ": insertion and recording shapes "
                      "differ"));
          return false;
        }
        if (rsk_inverse(s, t) != w) {
          fail(e, cat("w=", w.word(), ": inverse insertion does not recover "
                      "the word"));
          return false;
        }
      }
      // Pair count: sum of squared standard-tableau counts is |W(r,n)|.
      mpz_class pairs = 0;
      for (const auto& mp : multipartitions(r, n)) {
        mpz_class c = standard_tableau_count(mp);
        pairs += c * c;
      }
      if (pairs != group_order(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": ", pairs,
                    " tableau pairs for group order ", group_order(r, n)));
        return false;
      }
      return true;
    });
    if (sampled && e.status == VerifyStatus::Pass) {
      std::mt19937_64 rng(cfg.seed);
      for (unsigned long r = 1; r <= std::min(3UL, cfg.r_cap); ++r) {
        const auto elems = all_elements(r, 4);
        for (int i = 0; i < 40; ++i) {
          const auto& w = elems[rng() % elems.size()];
          auto [s, t] = rsk(w);
          if (rsk_inverse(s, t) != w) {
            fail(e, cat("sampled w=", w.word(), " fails the round trip"));
            break;
          }
        }
      }
    }
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"word descents equal recording-tableau descents",
                  "descent preservation under insertion",
                  cat("exhaustive for ", rect_text(band))};
    band.scan([&](unsigned long r, unsigned long n) {
      for (const auto& w : all_elements(r, n)) {
        auto [s, t] = rsk(w);
        (void)s;
        if (descent_set(w) != descent_set(t)) {
          fail(e, cat("w=", w.word(), ": word and recording descent sets "
                      "differ"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  if (cfg.r_cap >= 3 && cfg.n_cap >= 6) {
    VerifyEntry e{"the worked six-letter example reproduces its tableau pair",
                  "worked insertion example", "(r, n) = (3, 6)"};
    const auto w = ColoredPermutation::parse_word(3, "3^0 2^0 1^0 4^2 6^2 5^1");
    auto [s, t] = rsk(w);
    using Rows = std::vector<std::vector<std::vector<unsigned long>>>;
    const Rows want_s = {{{1}, {2}, {3}}, {{5}}, {{4, 6}}};
    const Rows want_t = {{{1}, {2}, {3}}, {{6}}, {{4, 5}}};
    if (s.rows() != want_s)
      fail(e, "insertion tableau differs from the documented one");
    else if (t.rows() != want_t)
      fail(e, "recording tableau differs from the documented one");
    out.push_back(std::move(e));
  }
  return out;
}

// -------------------------------------------------------------- chartable

std::vector<VerifyEntry> suite_chartable(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  TableCache tables;
  const Bands band = rect(cfg, 3, 4);

  {
    VerifyEntry e{"irreducible rows are orthonormal",
                  "first orthogonality of characters", rect_text(band)};
    band.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (std::size_t i = 0; i < table.rows().size(); ++i)
        for (std::size_t j = i; j < table.rows().size(); ++j) {
          const Cyclotomic ip = inner_product(table.row(i), table.row(j));
          if (ip != cyc(i == j ? 1 : 0, r)) {
            fail(e, cat("r=", r, " n=", n, ": <",
                        format_multipartition(table.labels()[i]), ", ",
                        format_multipartition(table.labels()[j]), "> = ",
                        ip.str()));
            return false;
          }
        }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"columns are orthogonal with centralizer norms",
                  "second orthogonality of characters", rect_text(band)};
    band.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      const auto classes = conjugacy_classes(r, n);
      for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a; b < classes.size(); ++b) {
          Cyclotomic sum = Cyclotomic::zero(r);
          for (const auto& row : table.rows())
            sum += row.value(a) * row.value(b).conjugate();
          const Cyclotomic want =
              a == b ? Cyclotomic::from_rational(
                           Rational(centralizer_order(r, classes[a])), r)
                     : Cyclotomic::zero(r);
          if (sum != want) {
            fail(e, cat("r=", r, " n=", n, ": columns ",
                        format_multipartition(classes[a]), " and ",
                        format_multipartition(classes[b]), " pair to ",
                        sum.str()));
            return false;
          }
        }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"degrees count standard fillings and their squares sum to "
                  "the group order",
                  "dimension column of the character table", rect_text(band)};
    band.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      const Multipartition id = identity_type(r, n);
      mpz_class squares = 0;
      for (std::size_t i = 0; i < table.rows().size(); ++i) {
        const Cyclotomic deg = table.row(i).value(id);
        const mpz_class want = standard_tableau_count(table.labels()[i]);
        if (deg != Cyclotomic::from_rational(Rational(want), r)) {
          fail(e, cat("r=", r, " n=", n, ": degree of ",
                      format_multipartition(table.labels()[i]), " is ",
                      deg.str(), ", standard count is ", want));
          return false;
        }
        squares += want * want;
      }
      if (squares != group_order(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": degree squares sum to ", squares));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"restriction decomposes over removable boxes",
                  "branching rule for irreducible characters",
                  cat(rect_text(band), ", n >= 2")};
    band.scan([&](unsigned long r, unsigned long n) {
      if (n < 2) return true;
      const CharacterTable& big = tables.get(r, n);
      const CharacterTable& small = tables.get(r, n - 1);
      for (std::size_t i = 0; i < big.rows().size(); ++i) {
        const ClassFunction lhs = restrict_character(big.row(i));
        ClassFunction rhs(r, n - 1,
                          std::vector<Cyclotomic>(
                              conjugacy_classes(r, n - 1).size(),
                              Cyclotomic::zero(r)));
        for (const Box& b : removable_boxes(big.labels()[i]))
          rhs += small.row(remove_box(big.labels()[i], b));
        if (lhs != rhs) {
          fail(e, cat("r=", r, " n=", n, ": restriction of ",
                      format_multipartition(big.labels()[i]),
                      " misses the box sum"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------- foulkes

std::vector<VerifyEntry> suite_foulkes(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  TableCache tables;
  const Bands wide = rect(cfg, 3, 5);
  const Bands tabled = rect(cfg, 3, 4);

  {
    VerifyEntry e{"transform characters evaluate to Eulerian numbers at the "
                  "identity and sum to the regular character",
                  "defining properties of the transform characters",
                  rect_text(wide)};
    wide.scan([&](unsigned long r, unsigned long n) {
      if (!properties_check(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": identity column or regular sum off"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"the alternating transform and its binomial inverse are "
                  "mutually inverse",
                  "inversion of the block-character transform",
                  rect_text(rect(cfg, 3, 6))};
    rect(cfg, 3, 6).scan([&](unsigned long r, unsigned long n) {
      if (!foulkes_inverse_check(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": round trip failed"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"irreducible multiplicities count tableaux by descents",
                  "decomposition of the transform characters",
                  rect_text(tabled)};
    tabled.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        std::vector<mpz_class> mult;
        try {
          mult = foulkes_multiplicities(table, k);
        } catch (const ConventionMismatch& ex) {
          fail(e, cat("r=", r, " n=", n, " k=", k, ": ", ex.what()));
          return false;
        }
        for (std::size_t i = 0; i < mult.size(); ++i)
          if (mult[i] != m_count(table.labels()[i], k)) {
            fail(e, cat("r=", r, " n=", n, " k=", k, " shape ",
                        format_multipartition(table.labels()[i]),
                        ": multiplicity ", mult[i], ", tableau count ",
                        m_count(table.labels()[i], k)));
            return false;
          }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"restriction satisfies the two-term recurrences",
                  "branching of the power and transform characters",
                  cat(rect_text(wide), ", n >= 2")};
    wide.scan([&](unsigned long r, unsigned long n) {
      if (n >= 2 && !branching_check(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": recurrence failed"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"signed combinatorial characters equal complementary "
                  "unsigned ones",
                  "duality between the two transform families",
                  rect_text(tabled)};
    tabled.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const ClassFunction lhs = signed_foulkes_combinatorial(
            table, k, BoundaryConvention::Complement);
        const ClassFunction rhs = foulkes(r, n, n - k).to_class_function();
        if (lhs != rhs) {
          fail(e, cat("r=", r, " n=", n, " k=", k,
                      ": signed side differs from the complement"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"transform-basis coordinates of a transform character form "
                  "an indicator vector",
                  "extreme points of the normalized block characters",
                  rect_text(tabled)};
    tabled.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const BlockFunction f = foulkes(r, n, k);
        const FoulkesCoefficients solved = block_coefficients(f);
        const FoulkesCoefficients dual = block_coefficients(f, table);
        for (unsigned long j = 0; j <= n; ++j) {
          const Cyclotomic want = cyc(j == k ? 1 : 0, r);
          if (solved.coeffs[j] != want || dual.coeffs[j] != want) {
            fail(e, cat("r=", r, " n=", n, " k=", k, ": coefficient ", j,
                        " is ", solved.coeffs[j].str(), " / ",
                        dual.coeffs[j].str()));
            return false;
          }
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"multiplicity branching aggregated over addable boxes",
                  "single-box branching remark, summed reading",
                  cat(rect_text(wide), " (shapes one box smaller)")};
    wide.scan([&](unsigned long r, unsigned long n) {
      for (const auto& mu : multipartitions(r, n - 1))
        for (unsigned long k = 0; k <= n; ++k) {
          mpz_class lhs = 0;
          for (const Box& b : addable_boxes(mu))
            lhs += mpz_class(m_count(add_box(mu, b), k));
          mpz_class rhs = mpz_class(r * k + 1) * m_count(mu, k);
          if (k >= 1)
            rhs += mpz_class(r * (n + 1) - (r * k + 1)) * m_count(mu, k - 1);
          if (lhs != rhs) {
            fail(e, cat("r=", r, " n=", n, " k=", k, " below ",
                        format_multipartition(mu), ": box sum ", lhs,
                        ", recurrence ", rhs));
            return false;
          }
        }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    // As printed, the branching remark equates the recurrence to a single
    // shape one box smaller, which already fails for the two-cell row.
    VerifyEntry e{"multiplicity branching against one removable box, as "
                  "printed",
                  "single-box branching remark, literal reading",
                  rect_text(tabled)};
    bool corrected_ok = true;
    tabled.scan([&](unsigned long r, unsigned long n) {
      for (const auto& lam : multipartitions(r, n))
        for (const Box& b : removable_boxes(lam)) {
          const Multipartition mu = remove_box(lam, b);
          for (unsigned long k = 0; k <= n; ++k) {
            mpz_class rhs = mpz_class(r * k + 1) * m_count(mu, k);
            if (k >= 1)
              rhs += mpz_class(r * (n + 1) - (r * k + 1)) * m_count(mu, k - 1);
            if (mpz_class(m_count(lam, k)) != rhs) {
              e.status = VerifyStatus::MismatchAsPrinted;
              e.witness = cat(
                  "r=", r, " n=", n, ": shape ", format_multipartition(lam),
                  " minus its box at (row ", b.row, ", component ",
                  b.component, ") gives ", rhs, " at k=", k,
                  " but the multiplicity is ", m_count(lam, k),
                  "; the identity holds summed over addable boxes");
              return false;
            }
          }
        }
      return true;
    });
    (void)corrected_ok;
    out.push_back(std::move(e));
  }

  {
    const Bands narrow = rect(cfg, 2, 4);
    VerifyEntry e{"semistandard counts as a binomial transform of descent "
                  "counts",
                  "counting admissible sequences over a fixed tableau",
                  cat(rect_text(narrow), ", k <= 3")};
    narrow.scan([&](unsigned long r, unsigned long n) {
      for (const auto& lam : multipartitions(r, n))
        for (unsigned long k = 0; k <= 3; ++k) {
          const BinomialTransformReport rep = binomial_transform_check(lam, k);
          if (!rep.corrected_holds) {
            fail(e, cat("r=", r, " shape ", format_multipartition(lam),
                        " k=", k, ": corrected sum ", rep.corrected_sum,
                        ", semistandard count ", rep.s_value));
            return false;
          }
          if (!rep.printed_holds &&
              e.status == VerifyStatus::Pass) {
            e.status = VerifyStatus::MismatchAsPrinted;
            e.witness =
                cat("shape ", format_multipartition(lam), ", k=", k,
                    ": the printed binomial index gives ", rep.printed_sum,
                    " against the count ", rep.s_value,
                    "; reindexing the binomial by the summation variable "
                    "gives ", rep.corrected_sum);
          }
        }
      return true;
    });
    // Prefer the two-component witness the acceptance contract pins.
    if (e.status == VerifyStatus::MismatchAsPrinted && cfg.r_cap >= 2) {
      const Multipartition lam = {{1}, {}};
      const BinomialTransformReport rep = binomial_transform_check(lam, 2);
      if (!rep.printed_holds && rep.corrected_holds)
        e.witness = cat("shape ", format_multipartition(lam), ", k=2: the "
                        "printed binomial index gives ", rep.printed_sum,
                        " against the count ", rep.s_value,
                        "; reindexing the binomial by the summation variable "
                        "gives ", rep.corrected_sum);
    }
    out.push_back(std::move(e));
  }

  {
    const Bands narrow = rect(cfg, 3, 4);
    VerifyEntry e{"the parameterized power function is a character exactly "
                  "above the printed threshold",
                  "character criterion for the power function",
                  cat(rect_text(narrow), ", half-integers q <= n + 3/2")};
    narrow.scan([&](unsigned long r, unsigned long n) {
      for (unsigned long twice = 1; twice <= 2 * n + 3; twice += 2) {
        const Rational q(static_cast<long>(twice), 2);
        std::vector<Cyclotomic> values;
        for (unsigned long ell = 0; ell <= n; ++ell)
          values.push_back(Cyclotomic::from_rational(
              rational_pow(Rational(static_cast<long>(r)) * q + Rational(1),
                           ell),
              r));
        const bool is_char =
            is_block_character(BlockFunction(r, n, std::move(values)));
        const bool corrected = q > Rational(static_cast<long>(n) - 1);
        const bool printed = q > Rational(static_cast<long>(n));
        if (is_char != corrected) {
          fail(e, cat("r=", r, " n=", n, " q=", q.str(),
                      ": character status ", is_char ? "true" : "false",
                      " disagrees with the corrected threshold q > n-1"));
          return false;
        }
        if (is_char != printed && e.status == VerifyStatus::Pass) {
          e.status = VerifyStatus::MismatchAsPrinted;
          e.witness = cat("r=", r, " n=", n, " q=", q.str(),
                          ": the power function is a character although q < "
                          "n; the threshold that matches the coefficient "
                          "signs is q > n-1, not q > n");
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

// ----------------------------------------------------------------- tensor

std::vector<VerifyEntry> suite_tensor(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  TableCache tables;
  const Bands band = rect(cfg, 3, 3);
  const unsigned long kmax = 2;

  {
    VerifyEntry e{"the per-cycle trace is the power block character",
                  "trace computation for the unsigned tensor action",
                  cat(rect_text(band), ", k <= ", kmax)};
    band.scan([&](unsigned long r, unsigned long n) {
      for (unsigned long k = 0; k <= kmax; ++k) {
        const ClassFunction got =
            unsigned_trace_character(r, n, k, cfg.tensor_budget);
        if (got != chi_block(r, n, k).to_class_function()) {
          fail(e, cat("r=", r, " n=", n, " k=", k,
                      ": trace differs from (rk+1)^length"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    const Bands small = rect(cfg, 3, 2);
    VerifyEntry e{"cycle analysis agrees with full basis enumeration",
                  "two routes to the unsigned trace",
                  cat(rect_text(small), ", k <= ", kmax)};
    small.scan([&](unsigned long r, unsigned long n) {
      for (const auto& mu : conjugacy_classes(r, n)) {
        const ColoredPermutation w = class_representative(r, mu);
        for (unsigned long k = 0; k <= kmax; ++k)
          if (unsigned_trace(w, k, cfg.tensor_budget) !=
              naive_unsigned_trace(w, k, cfg.tensor_budget)) {
            fail(e, cat("r=", r, " class ", format_multipartition(mu),
                        " k=", k, ": the two traces differ"));
            return false;
          }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"uniformly signed traces give the sign-twisted block "
                  "character",
                  "trace of the signed tensor action",
                  cat(rect_text(band), ", k <= ", kmax, ", all blocks odd")};
    band.scan([&](unsigned long r, unsigned long n) {
      for (unsigned long k = 0; k <= kmax; ++k) {
        const ClassFunction got = signed_trace_character(
            r, n, k, all_odd_parities(r), cfg.tensor_budget);
        for (const auto& mu : conjugacy_classes(r, n)) {
          const ColoredPermutation w = class_representative(r, mu);
          const Cyclotomic want = Cyclotomic::from_rational(
              Rational(w.permutation_sign()) *
                  rational_pow(Rational(static_cast<long>(r * k + 1)),
                               length(w)),
              r);
          if (got.value(mu) != want) {
            fail(e, cat("r=", r, " n=", n, " k=", k, " class ",
                        format_multipartition(mu), ": got ",
                        got.value(mu).str(), ", want ", want.str()));
            return false;
          }
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"closed form for the signed trace, as printed",
                  "closed form accompanying the signed tensor construction",
                  cat(rect_text(band), ", k <= ", kmax)};
    band.scan([&](unsigned long r, unsigned long n) {
      for (unsigned long k = 0; k <= kmax; ++k) {
        const ClassFunction computed = signed_trace_character(
            r, n, k, all_odd_parities(r), cfg.tensor_budget);
        const ClassFunction closed =
            chi_signed_closed(r, n, k).to_class_function();
        if (computed != closed) {
          const auto classes = conjugacy_classes(r, n);
          for (const auto& mu : classes)
            if (computed.value(mu) != closed.value(mu)) {
              e.status = VerifyStatus::MismatchAsPrinted;
              e.witness = cat(
                  "r=", r, " n=", n, " k=", k, " class ",
                  format_multipartition(mu), ": printed closed form gives ",
                  closed.value(mu).str(), ", computed signed trace is ",
                  computed.value(mu).str(),
                  "; the sign-twisted block character matches the trace");
              return false;
            }
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"unsigned multiplicities are row-semistandard counts",
                  "decomposition of the unsigned tensor space",
                  cat(rect_text(band), ", k <= ", kmax)};
    band.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (unsigned long k = 0; k <= kmax; ++k) {
        mpz_class weighted = 0;
        for (const auto& lam : table.labels()) {
          mpz_class mult;
          try {
            mult = tensor_multiplicity(table, lam, k, cfg.tensor_budget);
          } catch (const std::logic_error& ex) {
            fail(e, cat("r=", r, " n=", n, " k=", k, " shape ",
                        format_multipartition(lam), ": ", ex.what()));
            return false;
          }
          weighted += mult * standard_tableau_count(lam);
        }
        mpz_class dim;
        mpz_ui_pow_ui(dim.get_mpz_t(), r * k + 1, n);
        if (weighted != dim) {
          fail(e, cat("r=", r, " n=", n, " k=", k,
                      ": dimensions close to ", weighted, " not ", dim));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"uniformly signed multiplicities are column-semistandard "
                  "counts",
                  "decomposition of the signed tensor space",
                  cat(rect_text(band), ", k <= ", kmax, ", all blocks odd")};
    band.scan([&](unsigned long r, unsigned long n) {
      const CharacterTable& table = tables.get(r, n);
      for (unsigned long k = 0; k <= kmax; ++k)
        for (const auto& lam : table.labels()) {
          const Cyclotomic got = signed_tensor_multiplicity(
              table, lam, k, all_odd_parities(r), cfg.tensor_budget);
          const Cyclotomic want = Cyclotomic::from_rational(
              Rational(column_semistandard_count(lam, k)), r);
          if (got != want) {
            fail(e, cat("r=", r, " n=", n, " k=", k, " shape ",
                        format_multipartition(lam), ": multiplicity ",
                        got.str(), ", column count ", want.str()));
            return false;
          }
        }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------ coinvariant

std::vector<VerifyEntry> suite_coinvariant(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  TableCache tables;
  const Bands cells = clamp(cfg, {{1, 4}, {2, 3}, {3, 2}});

  std::map<std::pair<unsigned long, unsigned long>, CoinvariantAlgebra> algs;
  auto algebra = [&](unsigned long r,
                     unsigned long n) -> const CoinvariantAlgebra& {
    auto key = std::make_pair(r, n);
    auto it = algs.find(key);
    if (it == algs.end())
      it = algs.emplace(key,
                        CoinvariantAlgebra(r, n, FlagVariant::InteriorColor,
                                           cfg.coinvariant_budget))
               .first;
    return it->second;
  };

  {
    const Bands tiny = rect(cfg, 2, 2);
    VerifyEntry e{"the substitution action composes as a left action",
                  "group action on the polynomial ring",
                  cat("all pairs, ", rect_text(tiny))};
    tiny.scan([&](unsigned long r, unsigned long n) {
      PolyCyclo p = PolyCyclo::constant(r, n, Cyclotomic::one(r));
      for (unsigned long i = 1; i <= n; ++i) {
        Monomial m(n, 0);
        m[i - 1] = i;
        p += PolyCyclo::monomial(r, m, cyc(static_cast<long>(i + 1), r));
      }
      const auto elems = all_elements(r, n);
      for (const auto& u : elems)
        for (const auto& v : elems)
          if (act(u * v, p) != act(u, act(v, p))) {
            fail(e, cat("r=", r, " n=", n, ": u=", u.word(), ", v=", v.word()));
            return false;
          }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    const Bands memb = clamp(cfg, {{1, 4}, {2, 4}, {3, 3}});
    VerifyEntry e{"the division reducers lie in the invariant ideal",
                  "presentation of the coinvariant quotient", memb.text()};
    memb.scan([&](unsigned long r, unsigned long n) {
      if (!reducer_membership_check(r, n)) {
        fail(e, cat("r=", r, " n=", n, ": no cofactor solution found"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"descent monomials are a basis of the quotient "
                  "(interior-color flag)",
                  "descent-monomial basis claim", cells.text()};
    cells.scan([&](unsigned long r, unsigned long n) {
      const DescentBasisReport rep = descent_basis_check(
          r, n, FlagVariant::InteriorColor, cfg.coinvariant_budget);
      if (!rep.full_rank) {
        fail(e, cat("r=", r, " n=", n, ": rank ", rep.rank, " of ",
                    rep.dimension));
        return false;
      }
      if (rep.minimality_checked && !rep.minimality_holds) {
        fail(e, cat("r=", r, " n=", n,
                    ": a sampled coset member precedes its monomial"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    const Bands narrow = rect(cfg, 3, 3);
    VerifyEntry e{"flag exponents as printed index monomials outside the "
                  "quotient",
                  "flag-exponent formula for descent monomials",
                  narrow.text()};
    narrow.scan([&](unsigned long r, unsigned long n) {
      const DescentBasisReport rep = descent_basis_check(
          r, n, FlagVariant::PaperFormula, cfg.coinvariant_budget);
      if (!rep.full_rank && e.status == VerifyStatus::Pass) {
        e.status = VerifyStatus::MismatchAsPrinted;
        e.witness = cat(
            "r=", r, " n=", n, ": the printed flag exponents span rank ",
            rep.rank, " of dimension ", rep.dimension,
            r == 2 && n == 1
                ? "; the word 1^1 gets exponent 2 while x1^2 generates the "
                  "invariant ideal"
                : "",
            "; counting interior descents and adding the color as-is "
            "restores a basis");
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"the graded trace on the quotient equals the tableau-side "
                  "sum",
                  "graded trace identity, top-degree specialization",
                  cat(cells.text(), ", all classes")};
    cells.scan([&](unsigned long r, unsigned long n) {
      const CoinvariantAlgebra& alg = algebra(r, n);
      const CharacterTable& table = tables.get(r, n);
      for (const auto& mu : conjugacy_classes(r, n)) {
        const ColoredPermutation w = class_representative(r, mu);
        if (alg.graded_trace(w) !=
            tableau_side_trace(table, w, FlagVariant::InteriorColor)) {
          fail(e, cat("r=", r, " n=", n, " class ",
                      format_multipartition(mu), ": the two polynomials "
                      "differ"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    const Bands small = rect(cfg, 3, 2);
    VerifyEntry e{"the multivariate graded traces agree",
                  "graded trace identity, full grading",
                  cat(small.text(), ", all classes")};
    small.scan([&](unsigned long r, unsigned long n) {
      const CoinvariantAlgebra& alg = algebra(r, n);
      const CharacterTable& table = tables.get(r, n);
      for (const auto& mu : conjugacy_classes(r, n)) {
        const ColoredPermutation w = class_representative(r, mu);
        if (alg.multigraded_trace(w) !=
            tableau_side_multitrace(table, w, FlagVariant::InteriorColor)) {
          fail(e, cat("r=", r, " n=", n, " class ",
                      format_multipartition(mu), ": the two polynomials "
                      "differ"));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"the descent-count filtration carries the transform "
                  "characters",
                  "filtration of the coinvariant quotient", cells.text()};
    cells.scan([&](unsigned long r, unsigned long n) {
      const FiltrationReport rep = filtration_characters(
          algebra(r, n), GradingStatistic::DescentCount);
      if (!rep.matches_foulkes) {
        std::string dims;
        for (const auto& s : rep.slices)
          dims += cat(dims.empty() ? "" : ",", s.dimension);
        fail(e, cat("r=", r, " n=", n, ": slice dimensions (", dims,
                    ") do not group into the transform characters"));
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    VerifyEntry e{"the top flag exponent as the filtration grading, as "
                  "printed",
                  "filtration of the coinvariant quotient, grading choice",
                  cells.text()};
    cells.scan([&](unsigned long r, unsigned long n) {
      const FiltrationReport rep = filtration_characters(
          algebra(r, n), GradingStatistic::FlagExponent);
      if (!rep.matches_foulkes && e.status == VerifyStatus::Pass) {
        std::string dims;
        for (const auto& s : rep.slices)
          dims += cat(dims.empty() ? "" : ",", s.dimension);
        std::string row;
        for (const auto& v : eulerian_row(r, n))
          row += cat(row.empty() ? "" : ",", v);
        e.status = VerifyStatus::MismatchAsPrinted;
        e.witness = cat("r=", r, " n=", n, ": grading by the top flag "
                        "exponent slices the basis into dimensions (", dims,
                        ") against the Eulerian column (", row,
                        "); grading by the descent count matches");
        return false;
      }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------------ ewens

std::vector<VerifyEntry> suite_ewens(const VerifyConfig& cfg) {
  std::vector<VerifyEntry> out;
  const std::vector<Rational> qs = {Rational(0), Rational(1), Rational(2),
                                    Rational(5, 2)};

  {
    const Bands band = rect(cfg, 3, 4);
    VerifyEntry e{"weights sum to the product normalizer and the measure "
                  "has mass one",
                  "normalizing constant of the colored Ewens measure",
                  cat(rect_text(band), ", q in {0, 1, 2, 5/2}")};
    band.scan([&](unsigned long r, unsigned long n) {
      for (const Rational& q : qs) {
        const Rational normalizer = ewens_normalizer(r, n, q);
        if (normalizer != ewens_closed_form(r, n, q)) {
          fail(e, cat("r=", r, " n=", n, " q=", q.str(), ": class sum ",
                      normalizer.str(), ", product ",
                      ewens_closed_form(r, n, q).str()));
          return false;
        }
        if (n <= 3) {  // brute-force over elements where that is cheap
          Rational brute(0);
          for (const auto& w : all_elements(r, n)) brute += ewens_weight(w, q);
          if (brute != normalizer) {
            fail(e, cat("r=", r, " n=", n, " q=", q.str(),
                        ": element sum ", brute.str(), " differs"));
            return false;
          }
        }
        Rational mass(0);
        for (const auto& mu : conjugacy_classes(r, n))
          mass += Rational(class_size(r, mu)) *
                  ewens_weight(class_representative(r, mu), q);
        if (mass / normalizer != Rational(1)) {
          fail(e, cat("r=", r, " n=", n, " q=", q.str(), ": total mass ",
                      (mass / normalizer).str()));
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }

  {
    const unsigned long nmax = std::min(5UL, cfg.n_cap);
    VerifyEntry e{"the single-color normalizer is the rising factorial",
                  "classical specialization of the Ewens measure",
                  cat("r=1, n <= ", nmax, ", q in {0, 1, 2, 5/2}")};
    for (unsigned long n = 1; n <= nmax; ++n)
      for (const Rational& q : qs) {
        Rational rising(1);
        for (unsigned long i = 1; i <= n; ++i)
          rising *= q + Rational(static_cast<long>(i));
        if (ewens_normalizer(1, n, q) != rising) {
          fail(e, cat("n=", n, " q=", q.str(), ": normalizer ",
                      ewens_normalizer(1, n, q).str(), ", rising factorial ",
                      rising.str()));
          break;
        }
      }
    out.push_back(std::move(e));
  }

  {
    const Bands band = rect(cfg, 3, 3);
    VerifyEntry e{"the normalizing constant as printed",
                  "displayed denominator of the colored Ewens measure",
                  cat(rect_text(band), ", q in {1, 2}")};
    band.scan([&](unsigned long r, unsigned long n) {
      for (const Rational& q : {Rational(1), Rational(2)}) {
        const Rational printed = ewens_printed_form(r, n, q);
        const Rational computed = ewens_normalizer(r, n, q);
        if (printed != computed && e.status == VerifyStatus::Pass) {
          e.status = VerifyStatus::MismatchAsPrinted;
          e.witness = cat("r=", r, " n=", n, " q=", q.str(),
                          ": the displayed product gives ", printed.str(),
                          " but the weights sum to ", computed.str(),
                          "; the product of r(q+i) over i = 1..n matches "
                          "the sum");
          return false;
        }
      }
      return true;
    });
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  const auto& names = verify_suite_names();
  std::vector<std::string> wanted =
      config.suites.empty() ? names : config.suites;
  for (const auto& s : wanted)
    if (s == "all") {
      wanted = names;
      break;
    }
  for (const auto& s : wanted)
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw std::invalid_argument(cat("unknown verify suite: ", s));

  using SuiteFn = std::vector<VerifyEntry> (*)(const VerifyConfig&);
  static const std::map<std::string, SuiteFn> suites = {
      {"eulerian", &suite_eulerian},       {"rsk", &suite_rsk},
      {"chartable", &suite_chartable},     {"foulkes", &suite_foulkes},
      {"tensor", &suite_tensor},           {"coinvariant", &suite_coinvariant},
      {"ewens", &suite_ewens}};

  VerifyReport report;
  report.config = config;
  report.config.suites.clear();

  // One task per selected suite; the merge order is the fixed name order,
  // so the report is deterministic regardless of completion order.
  std::vector<std::future<std::vector<VerifyEntry>>> tasks;
  for (const auto& name : names) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end())
      continue;
    report.config.suites.push_back(name);
    tasks.push_back(
        std::async(std::launch::async, suites.at(name), config));
  }
  for (auto& t : tasks) {
    std::vector<VerifyEntry> entries = t.get();
    report.entries.insert(report.entries.end(),
                          std::make_move_iterator(entries.begin()),
                          std::make_move_iterator(entries.end()));
  }
  return report;
}

}  // namespace wreathchar
