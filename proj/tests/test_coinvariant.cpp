// SPDX-License-Identifier: Apache-2.0
//
// The polynomial action, the invariant ideal and its structured reducers,
// descent monomials under both flag conventions, the basis rank
// certification, graded traces against the character-theoretic side, and
// the filtration experiments.  Every frozen value below was produced by the
// code itself and cross-checked by hand where sizes permit.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "wreathchar/char_table.hpp"
#include "wreathchar/classes.hpp"
#include "wreathchar/coinvariant.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/foulkes.hpp"

using namespace wreathchar;

namespace {

const CharacterTable& table_of(unsigned long r, unsigned long n) {
  static std::map<std::pair<unsigned long, unsigned long>, CharacterTable> memo;
  const auto key = std::make_pair(r, n);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, irreducible_table(r, n)).first;
  return it->second;
}

PolyCyclo var(unsigned long r, unsigned long n, unsigned long i) {
  Monomial m(n, 0);
  m[i - 1] = 1;
  return PolyCyclo::monomial(r, m, Cyclotomic::one(r));
}

Cyclotomic cint(long v, unsigned long r = 1) {
  return Cyclotomic::from_rational(Rational(v), r);
}

}  // namespace

TEST_CASE("polynomial plumbing") {
  const auto x1 = var(1, 2, 1);
  const auto x2 = var(1, 2, 2);
  auto p = x1 * x1 + x2;  // x1^2 + x2
  CHECK(p.terms().size() == 2);
  CHECK(p.terms().begin()->first == Monomial{2, 0});  // leading term first
  CHECK(p.coefficient(Monomial{0, 1}).rational_part() == Rational(1));
  CHECK(p.coefficient(Monomial{1, 1}).is_zero());
  p -= x1 * x1;
  CHECK(p == x2);
  p -= x2;
  CHECK(p.is_zero());
  auto q = x1 + x2;
  CHECK((q * q).terms().size() == 3);  // x1^2 + 2 x1 x2 + x2^2
  CHECK((q * q).coefficient(Monomial{1, 1}).rational_part() == Rational(2));
  CHECK_THROWS_AS(p += var(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(PolyCyclo::monomial(1, Monomial{1}, cint(1)) * x1,
                  std::invalid_argument);
}

TEST_CASE("substitution action") {
  // Identity fixes everything.
  const auto p = var(2, 2, 1) * var(2, 2, 1) + var(2, 2, 2);
  CHECK(act(ColoredPermutation::identity(2, 2), p) == p);
  // The color generator negates x_1 when r = 2.
  const auto s0 = ColoredPermutation::color_generator(2, 1);
  const auto x = var(2, 1, 1);
  auto minus_x = x;
  minus_x *= cint(-1, 2);
  CHECK(act(s0, x) == minus_x);
  // Left action: act(u*v, p) = act(u, act(v, p)) over all pairs in W(2,2).
  const auto probe = var(2, 2, 1) + var(2, 2, 2) * var(2, 2, 2) * var(2, 2, 2);
  for (const auto& u : all_elements(2, 2))
    for (const auto& v : all_elements(2, 2))
      CHECK(act(u * v, probe) == act(u, act(v, probe)));
  // Algebra automorphism: multiplicative on products.
  const auto a = var(3, 2, 1);
  const auto b = var(3, 2, 2) * var(3, 2, 2);
  for (const auto& w : all_elements(3, 2))
    CHECK(act(w, a * b) == act(w, a) * act(w, b));
  CHECK_THROWS_AS(act(ColoredPermutation::identity(2, 3), p),
                  std::invalid_argument);
}

TEST_CASE("flag statistics: worked example and small anchors") {
  const auto w = ColoredPermutation::parse_word(3, "3^0 2^0 1^0 4^2 6^2 5^1");
  const auto fs = flag_statistics(w, FlagVariant::PaperFormula);
  CHECK(fs.des == std::vector<unsigned long>{4, 3, 2, 2, 2, 1});
  CHECK(fs.f == std::vector<unsigned long>{14, 11, 8, 6, 6, 4});
  // Its descent monomial: x3^14 x2^11 x1^8 x4^6 x6^6 x5^4.
  const auto m = descent_monomial(w, FlagVariant::PaperFormula);
  REQUIRE(m.terms().size() == 1);
  CHECK(m.terms().begin()->first == Monomial{8, 11, 14, 6, 4, 6});

  // Identity under the as-printed formula carries f_i = r-1 everywhere.
  for (unsigned long r = 1; r <= 3; ++r) {
    const auto id = ColoredPermutation::identity(r, 3);
    const auto fid = flag_statistics(id, FlagVariant::PaperFormula);
    for (unsigned long i = 0; i < 3; ++i) CHECK(fid.f[i] == r - 1);
  }
  // Interior-color convention at n = 1.
  const auto c1 = ColoredPermutation::parse_word(2, "1^1");
  CHECK(flag_statistics(c1, FlagVariant::InteriorColor).f ==
        std::vector<unsigned long>{1});
  CHECK(flag_statistics(c1, FlagVariant::PaperFormula).f ==
        std::vector<unsigned long>{2});
  // Classical descent monomial for r = 1: w = 21 gives x_2.
  const auto w21 = ColoredPermutation::parse_word(1, "2^0 1^0");
  const auto m21 = descent_monomial(w21, FlagVariant::PaperFormula);
  REQUIRE(m21.terms().size() == 1);
  CHECK(m21.terms().begin()->first == Monomial{0, 1});
  // W(2,1) interior-color monomials are 1 and x_1.
  CHECK(descent_monomial(ColoredPermutation::identity(2, 1),
                         FlagVariant::InteriorColor)
            .terms()
            .begin()
            ->first == Monomial{0});
  CHECK(descent_monomial(c1, FlagVariant::InteriorColor)
            .terms()
            .begin()
            ->first == Monomial{1});
}

TEST_CASE("as-printed flag vectors decrease weakly with steps at most r") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 1; n <= 3; ++n)
      for (const auto& w : all_elements(r, n)) {
        const auto f = flag_statistics(w, FlagVariant::PaperFormula).f;
        for (unsigned long i = 0; i + 1 < n; ++i) {
          CHECK(f[i] >= f[i + 1]);
          CHECK(f[i] - f[i + 1] <= r);
        }
      }
  // The interior-color convention does not share the monotonicity: the
  // word 1^0 2^1 in W(2,2) carries the increasing vector (0, 1).
  const auto w = ColoredPermutation::parse_word(2, "1^0 2^1");
  CHECK(flag_statistics(w, FlagVariant::InteriorColor).f ==
        std::vector<unsigned long>{0, 1});
}

TEST_CASE("reducers: shapes, leading terms, ideal membership") {
  // r=2, n=1: the single reducer is x_1^2.
  const auto r21 = reducers(2, 1);
  REQUIRE(r21.size() == 1);
  CHECK(r21[0].terms().size() == 1);
  CHECK(r21[0].terms().begin()->first == Monomial{2});
  // r=1, n=2: the classical lex set {x_1 + x_2, x_2^2}.
  const auto r12 = reducers(1, 2);
  REQUIRE(r12.size() == 2);
  CHECK(r12[0] == var(1, 2, 1) + var(1, 2, 2));
  CHECK(r12[1] == var(1, 2, 2) * var(1, 2, 2));
  // Leading terms are x_m^{rm} throughout.
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 1; n <= 4; ++n) {
      const auto reds = reducers(r, n);
      REQUIRE(reds.size() == n);
      for (unsigned long m = 1; m <= n; ++m) {
        Monomial lead(n, 0);
        lead[m - 1] = r * m;
        CHECK(reds[m - 1].terms().begin()->first == lead);
        CHECK(reds[m - 1].terms().begin()->second.rational_part() ==
              Rational(1));
      }
    }
  // Every reducer is certified to lie in the invariant ideal.
  for (unsigned long n = 1; n <= 4; ++n) {
    CHECK(reducer_membership_check(1, n));
    CHECK(reducer_membership_check(2, n));
  }
  CHECK(reducer_membership_check(3, 3));
}

TEST_CASE("normal form: annihilation, idempotence, Artin support") {
  // x_1^2 dies for r=2, n=1.
  const auto red21 = reducers(2, 1);
  CHECK(normal_form(var(2, 1, 1) * var(2, 1, 1), red21).is_zero());
  // The ideal generators themselves reduce to zero.
  for (auto [r, n] : std::vector<std::pair<unsigned long, unsigned long>>{
           {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
    const auto reds = reducers(r, n);
    for (const auto& e : elementary_invariants(r, n))
      CHECK(normal_form(e, reds).is_zero());
  }
  // Idempotent and linear.
  const auto reds = reducers(2, 2);
  const auto p = var(2, 2, 1) * var(2, 2, 1) * var(2, 2, 1) + var(2, 2, 2);
  const auto q = var(2, 2, 1) * var(2, 2, 2) * var(2, 2, 2);
  CHECK(normal_form(normal_form(p, reds), reds) == normal_form(p, reds));
  CHECK(normal_form(p + q, reds) == normal_form(p, reds) + normal_form(q, reds));
  // Remainders live in the Artin box.
  const auto box = artin_box(2, 2);
  for (const auto& w : all_elements(2, 2)) {
    const auto nf =
        normal_form(descent_monomial(w, FlagVariant::InteriorColor), reds);
    for (const auto& [mono, coeff] : nf.terms()) {
      bool inside = true;
      for (unsigned long m = 1; m <= 2; ++m)
        if (mono[m - 1] >= 2 * m) inside = false;
      CHECK(inside);
    }
  }
  // Box sizes are r^n n!.
  CHECK(artin_box(1, 4).size() == 24);
  CHECK(artin_box(2, 3).size() == 48);
  CHECK(artin_box(3, 4).size() == 1944);
  CHECK(artin_box(2, 0).size() == 1);
  CHECK_THROWS_AS(normal_form(p, reducers(2, 3)), std::invalid_argument);
}

TEST_CASE("descent basis ranks: the two conventions diverge at r >= 2") {
  struct Expect {
    unsigned long r, n, paper_rank, interior_rank, dim;
  };
  const std::vector<Expect> grid{
      {1, 1, 1, 1, 1},    {1, 2, 2, 2, 2},    {1, 3, 6, 6, 6},
      {1, 4, 24, 24, 24}, {2, 1, 1, 2, 2},    {2, 2, 4, 8, 8},
      {2, 3, 24, 48, 48}, {3, 1, 1, 3, 3},    {3, 2, 6, 18, 18}};
  for (const auto& e : grid) {
    const auto paper = descent_basis_check(e.r, e.n, FlagVariant::PaperFormula);
    const auto interior =
        descent_basis_check(e.r, e.n, FlagVariant::InteriorColor);
    CHECK(paper.dimension == e.dim);
    CHECK(paper.rank == e.paper_rank);
    CHECK(paper.full_rank == (e.paper_rank == e.dim));
    CHECK(interior.rank == e.interior_rank);
    CHECK(interior.full_rank);
    if (e.n <= 2) {
      CHECK(paper.minimality_checked);
      CHECK(paper.minimality_holds);
      CHECK(interior.minimality_checked);
      CHECK(interior.minimality_holds);
    }
  }
  CHECK_THROWS_AS(descent_basis_check(2, 4, FlagVariant::InteriorColor),
                  BudgetExceeded);
  CHECK(descent_basis_check(2, 4, FlagVariant::InteriorColor, 400).full_rank);
}

TEST_CASE("as-printed flag formula escapes the quotient at r=2, n=1") {
  // f_1(1^1) = 2 under the printed convention, but x_1^2 generates the
  // ideal: the would-be basis monomial is annihilated, which is exactly the
  // rank deficiency recorded above.
  const auto c1 = ColoredPermutation::parse_word(2, "1^1");
  const auto m = descent_monomial(c1, FlagVariant::PaperFormula);
  CHECK(m.terms().begin()->first == Monomial{2});
  CHECK(normal_form(m, reducers(2, 1)).is_zero());
}

TEST_CASE("quotient coordinates and regular-character traces") {
  CHECK_THROWS_AS(CoinvariantAlgebra(2, 1, FlagVariant::PaperFormula),
                  std::runtime_error);
  CHECK_THROWS_AS(CoinvariantAlgebra(2, 4, FlagVariant::InteriorColor),
                  BudgetExceeded);

  const CoinvariantAlgebra A(2, 2, FlagVariant::InteriorColor);
  CHECK(A.dimension() == 8);
  // Coordinates of each basis monomial form the standard basis.
  for (std::size_t g = 0; g < A.dimension(); ++g) {
    const auto y = A.coordinates(A.basis_monomial(g));
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i == g)
        CHECK(y[i].rational_part() == Rational(1));
      else
        CHECK(y[i].is_zero());
    }
  }
  // P_w(1) is the regular character: dimension at the identity, 0 elsewhere.
  for (unsigned long n = 1; n <= 2; ++n) {
    const CoinvariantAlgebra B(2, n, FlagVariant::InteriorColor);
    for (const auto& w : all_elements(2, n)) {
      const Cyclotomic at_one = B.graded_trace(w).eval(Cyclotomic::one(2));
      if (w == ColoredPermutation::identity(2, n))
        CHECK(at_one.rational_part() == Rational(long(B.dimension())));
      else
        CHECK(at_one.is_zero());
    }
  }
}

TEST_CASE("graded trace of the identity: pinned polynomials") {
  const CoinvariantAlgebra A12(1, 2, FlagVariant::InteriorColor);
  const auto pe12 = A12.graded_trace(ColoredPermutation::identity(1, 2));
  CHECK(pe12.degree() == 1);
  CHECK(pe12.coeff(0).rational_part() == Rational(1));  // 1 + q
  CHECK(pe12.coeff(1).rational_part() == Rational(1));

  // Hand-checked at r=2, n=2: 3 + q + q^2 + 3 q^3.
  const CoinvariantAlgebra A22(2, 2, FlagVariant::InteriorColor);
  const auto pe22 = A22.graded_trace(ColoredPermutation::identity(2, 2));
  CHECK(pe22.degree() == 3);
  CHECK(pe22.coeff(0).rational_part() == Rational(3));
  CHECK(pe22.coeff(1).rational_part() == Rational(1));
  CHECK(pe22.coeff(2).rational_part() == Rational(1));
  CHECK(pe22.coeff(3).rational_part() == Rational(3));
}

TEST_CASE("tableau-side trace at n = 1 from the linear characters") {
  // W(2,1): the two irreducibles are 1 and the sign of the color, living in
  // flag degrees 0 and 1; at w = 1^1 the trace is 1 - q.
  const auto& t21 = table_of(2, 1);
  const auto q_tw = tableau_side_trace(
      t21, ColoredPermutation::parse_word(2, "1^1"), FlagVariant::InteriorColor);
  CHECK(q_tw.degree() == 1);
  CHECK(q_tw.coeff(0).rational_part() == Rational(1));
  CHECK(q_tw.coeff(1).rational_part() == Rational(-1));
  // Flag-degree anchors per shape at r=2, n=2.
  Multipartition row2(2);
  row2[0] = Partition{2};
  CHECK(tableau_flag_one(standard_tableaux(row2)[0],
                         FlagVariant::InteriorColor) == 0);
  Multipartition col2(2);
  col2[1] = Partition{1, 1};
  CHECK(tableau_flag_one(standard_tableaux(col2)[0],
                         FlagVariant::InteriorColor) == 3);
}

TEST_CASE("graded trace equals the character-theoretic side on all classes") {
  for (auto [r, n] : std::vector<std::pair<unsigned long, unsigned long>>{
           {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const CoinvariantAlgebra A(r, n, FlagVariant::InteriorColor);
    const auto& table = table_of(r, n);
    for (const auto& mu : conjugacy_classes(r, n)) {
      const auto w = class_representative(r, mu);
      CHECK((A.graded_trace(w) -
             tableau_side_trace(table, w, FlagVariant::InteriorColor))
                .is_zero());
    }
  }
}

TEST_CASE("multigraded traces agree at n <= 2") {
  for (auto [r, n] : std::vector<std::pair<unsigned long, unsigned long>>{
           {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const CoinvariantAlgebra A(r, n, FlagVariant::InteriorColor);
    const auto& table = table_of(r, n);
    for (const auto& mu : conjugacy_classes(r, n)) {
      const auto w = class_representative(r, mu);
      CHECK(A.multigraded_trace(w) ==
            tableau_side_multitrace(table, w, FlagVariant::InteriorColor));
    }
  }
}

TEST_CASE("descent-count histogram reproduces the Eulerian row") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 4; ++n) {
      std::vector<mpz_class> histogram(n + 1, 0);
      for (const auto& w : all_elements(r, n)) ++histogram[descent_number(w)];
      CHECK(histogram == eulerian_row(r, n));
    }
}

TEST_CASE("filtration by descent count carries the Foulkes characters") {
  for (auto [r, n] : std::vector<std::pair<unsigned long, unsigned long>>{
           {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const CoinvariantAlgebra A(r, n, FlagVariant::InteriorColor);
    const auto report = filtration_characters(A, GradingStatistic::DescentCount);
    CHECK(report.matches_foulkes);
    // One slice per achieved value; at r = 1 the top count n never occurs.
    std::size_t achieved = 0;
    for (unsigned long k = 0; k <= n; ++k)
      if (eulerian(r, n, k) > 0) ++achieved;
    REQUIRE(report.slices.size() == achieved);
    for (std::size_t k = 0; k < achieved; ++k) {
      CHECK(report.slices[k].value == k);
      CHECK(report.slices[k].invariant);
      CHECK(report.slices[k].dimension == eulerian(r, n, k));
      // Each graded piece is an honest Foulkes character on its own.
      CHECK(report.slices[k].character ==
            foulkes(r, n, k).to_class_function());
    }
  }
}

TEST_CASE("filtration by raw flag exponent: matches only when degenerate") {
  // At n = 1 and r = 1 the flag exponent groups into the Foulkes pieces.
  for (auto [r, n] : std::vector<std::pair<unsigned long, unsigned long>>{
           {1, 2}, {1, 3}, {2, 1}, {3, 1}}) {
    const CoinvariantAlgebra A(r, n, FlagVariant::InteriorColor);
    CHECK(filtration_characters(A, GradingStatistic::FlagExponent)
              .matches_foulkes);
  }
  // At (2,2) the slice dimensions (3,1,1,3) cannot group into (1,6,1); the
  // experiment records the failure, with every span still invariant.
  const CoinvariantAlgebra A22(2, 2, FlagVariant::InteriorColor);
  const auto rep22 = filtration_characters(A22, GradingStatistic::FlagExponent);
  CHECK_FALSE(rep22.matches_foulkes);
  REQUIRE(rep22.slices.size() == 4);
  CHECK(rep22.slices[0].dimension == 3);
  CHECK(rep22.slices[1].dimension == 1);
  CHECK(rep22.slices[2].dimension == 1);
  CHECK(rep22.slices[3].dimension == 3);
  for (const auto& s : rep22.slices) CHECK(s.invariant);
  const CoinvariantAlgebra A32(3, 2, FlagVariant::InteriorColor);
  CHECK_FALSE(filtration_characters(A32, GradingStatistic::FlagExponent)
                  .matches_foulkes);
}
