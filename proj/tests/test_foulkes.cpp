// SPDX-License-Identifier: Apache-2.0
//
// Block and Foulkes characters: transform algebra, multiplicities against
// descent counts, signed duality, branching, simplex coordinates, and the
// q-expansion.  The printed signed closed form is pinned down exactly as
// printed, including the places it goes wrong.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "wreathchar/char_table.hpp"
#include "wreathchar/classes.hpp"
#include "wreathchar/colored_perm.hpp"
#include "wreathchar/foulkes.hpp"
#include "wreathchar/linalg.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/tableaux.hpp"

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

Rational rat(const Cyclotomic& c) { return c.rational_part(); }

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

BlockFunction ewens_block(unsigned long r, unsigned long n,
                          const Rational& q) {
  const Rational base = Rational(mpz_class(r)) * q + Rational(1);
  std::vector<Cyclotomic> vals;
  for (unsigned long ell = 0; ell <= n; ++ell)
    vals.push_back(Cyclotomic::from_rational(rational_pow(base, ell)));
  return BlockFunction(r, n, std::move(vals));
}

Multipartition add_box(const Multipartition& mp, const Box& b) {
  Multipartition out = mp;
  if (b.row <= out[b.component].size())
    ++out[b.component][b.row - 1];
  else
    out[b.component].push_back(1);
  return out;
}

}  // namespace

TEST_CASE("block character values") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 4; ++n)
      for (unsigned long ell = 0; ell <= n; ++ell)
        CHECK(rat(chi_block(r, n, 0).at_length(ell)) == Rational(1));
  CHECK(rat(chi_block(2, 2, 1).at_length(2)) == Rational(9));

  // The running W(3,12) example has two color-0 cycles, so chi_1 takes the
  // value (3+1)^2 on it.
  const ColoredPermutation w1 = ColoredPermutation::parse_word(
      3, "2^1 1^0 4^0 5^1 3^1 7^0 6^0 9^0 10^0 8^0 12^0 11^1");
  const auto type = cycle_type(w1);
  REQUIRE(type[0].size() == 2);
  CHECK(rat(chi_block(3, 12, 1).at_length(type[0].size())) == Rational(16));
}

TEST_CASE("printed signed closed form: correct at r=1, absurd beyond") {
  // r = 1: (-1)^n (-k-1)^ell really is sign tensor chi_k.
  for (unsigned long n = 1; n <= 3; ++n) {
    for (unsigned long k = 0; k <= 2; ++k) {
      const ClassFunction cf =
          chi_signed_closed(1, n, k).to_class_function();
      const auto classes = conjugacy_classes(1, n);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const unsigned long ell = classes[c][0].size();
        mpz_class expect;
        mpz_pow_ui(expect.get_mpz_t(), mpz_class(k + 1).get_mpz_t(), ell);
        if ((n - ell) % 2 != 0) expect = -expect;  // sign of the class
        CHECK(rat(cf.value(c)) == Rational(expect));
      }
    }
  }
  // Length-0 slot is the global sign.
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 3; ++n)
      CHECK(rat(chi_signed_closed(r, n, 1).at_length(0)) ==
            Rational((n + r - 1) % 2 == 0 ? 1 : -1));
  // r=2, n=1, k=0: value -1 at the identity, impossible for a character.
  CHECK(rat(chi_signed_closed(2, 1, 0).at_length(1)) == Rational(-1));
}

TEST_CASE("Foulkes characters: pinned small values and degenerate range") {
  CHECK(rat(foulkes(2, 1, 0).at_length(0)) == Rational(1));
  CHECK(rat(foulkes(2, 1, 0).at_length(1)) == Rational(1));
  CHECK(rat(foulkes(2, 1, 1).at_length(1)) == Rational(1));   // at e
  CHECK(rat(foulkes(2, 1, 1).at_length(0)) == Rational(-1));  // at 1^1
  CHECK(rat(foulkes(2, 2, 0).at_length(2)) == Rational(1));
  CHECK(rat(foulkes(2, 2, 1).at_length(2)) == Rational(6));
  CHECK(rat(foulkes(2, 2, 2).at_length(2)) == Rational(1));
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      CHECK(foulkes(r, n, 0) == chi_block(r, n, 0));
      // Above k = n the alternating sum is a telescoped (n+1)-st finite
      // difference of a degree <= n polynomial: identically zero.
      const BlockFunction zero(
          r, n, std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(r)));
      CHECK(foulkes(r, n, n + 1) == zero);
      CHECK(foulkes(r, n, n + 2) == zero);
    }
  }
}

TEST_CASE("inverse transform: chi_k = sum C(n+j,j) phi_{k-j}") {
  CHECK(rat(chi_block(2, 2, 2).at_length(2)) == Rational(25));
  CHECK(Rational(1 * 1 + 3 * 6 + 6 * 1) == Rational(25));
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 5; ++n)
      CHECK(foulkes_inverse_check(r, n));
}

TEST_CASE("transform matrices are mutually inverse, n <= 8") {
  for (unsigned long n = 0; n <= 8; ++n) {
    const std::size_t d = n + 1;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t m = 0; m < d; ++m) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
          if (m > j) continue;
          // phi_i = sum_j (-1)^{i-j} C(n+1, i-j) chi_j, then
          // chi_j = sum_m C(n+j-m, j-m) phi_m.
          mpz_class term =
              binomial(n + 1, i - j) * binomial(n + (j - m), j - m);
          if ((i - j) % 2 != 0) term = -term;
          acc += term;
        }
        CHECK(acc == (i == m ? mpz_class(1) : mpz_class(0)));
      }
    }
  }
}

TEST_CASE("the evaluation matrix [(ra+1)^b] is invertible, n <= 6") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 6; ++n) {
      Matrix<Rational> m(n + 1, std::vector<Rational>());
      for (unsigned long a = 0; a <= n; ++a)
        for (unsigned long b = 0; b <= n; ++b)
          m[a].push_back(rational_pow(Rational(mpz_class(r * a + 1)), b));
      CHECK(exact_rank(m) == n + 1);
    }
  }
}

TEST_CASE("multiplicities of phi_k count tableau descents, r <= 3, n <= 4") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const auto mult = foulkes_multiplicities(t, k);  // throws on mismatch
        for (std::size_t li = 0; li < t.labels().size(); ++li)
          CHECK(mult[li] == mpz_class(m_count(t.labels()[li], k)));
      }
    }
  }
  // Convenience overload builds its own table.
  const auto mult = foulkes_multiplicities(2, 2, 1);
  mpz_class total = 0;
  for (const auto& m : mult) total += m;
  CHECK(total > 0);
}

TEST_CASE("isolating shapes carry a single coefficient") {
  for (unsigned long r = 2; r <= 3; ++r) {
    for (unsigned long n = 1; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const Multipartition shape = descent_isolating_shape(r, n, k);
        CHECK(standard_tableau_count(shape) == binomial(n, k));
        const std::size_t li = class_index(r, n, shape);
        REQUIRE(t.labels()[li] == shape);
        for (unsigned long j = 0; j <= n; ++j)
          CHECK(foulkes_multiplicities(t, j)[li] ==
                (j == k ? binomial(n, k) : mpz_class(0)));
      }
    }
  }
  // r = 1: hooks, reaching only k <= n-1.
  for (unsigned long n = 1; n <= 4; ++n) {
    const auto& t = table_of(1, n);
    for (unsigned long k = 0; k + 1 <= n; ++k) {
      const Multipartition shape = descent_isolating_shape(1, n, k);
      CHECK(standard_tableau_count(shape) == binomial(n - 1, k));
      const std::size_t li = class_index(1, n, shape);
      for (unsigned long j = 0; j <= n; ++j)
        CHECK(foulkes_multiplicities(t, j)[li] ==
              (j == k ? binomial(n - 1, k) : mpz_class(0)));
    }
    CHECK_THROWS_AS(descent_isolating_shape(1, n, n), std::invalid_argument);
  }
}

TEST_CASE("mislabeled tables are refused with ConventionMismatch") {
  const auto& good = table_of(2, 2);
  auto labels = good.labels();
  std::vector<ClassFunction> rows;
  for (const auto& row : good.rows()) rows.push_back(row);
  std::swap(rows[0], rows[1]);  // ((2);) vs ((1,1);) rows traded
  const CharacterTable bad(2, 2, labels, rows, 1);
  CHECK_THROWS_AS(foulkes_multiplicities(bad, 0), ConventionMismatch);
}

TEST_CASE("signed duality: complement convention gives phi_{n-k}") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const ClassFunction lhs = signed_foulkes_combinatorial(
            t, k, BoundaryConvention::Complement);
        CHECK(lhs == foulkes(r, n, n - k).to_class_function());
      }
      // k = n collapses to the trivial character.
      const ClassFunction top = signed_foulkes_combinatorial(
          t, n, BoundaryConvention::Complement);
      for (const auto& v : top.values()) CHECK(rat(v) == Rational(1));
    }
  }
  // At r = 2 the sentinel convention coincides with the complement one.
  for (unsigned long n = 1; n <= 3; ++n) {
    const auto& t = table_of(2, n);
    for (unsigned long k = 0; k <= n; ++k)
      CHECK(signed_foulkes_combinatorial(t, k,
                                         BoundaryConvention::Complement) ==
            signed_foulkes_combinatorial(t, k,
                                         BoundaryConvention::PaperSentinel));
  }
}

TEST_CASE("branching of chi_k and phi_k, r <= 3, n <= 5") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 1; n <= 5; ++n)
      CHECK(branching_check(r, n));
  CHECK_THROWS_AS(branching_check(2, 0), std::invalid_argument);
}

TEST_CASE("aggregated branching of descent counts, r <= 3, n <= 5") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 1; n <= 5; ++n) {
      for (const auto& mu : multipartitions(r, n - 1)) {
        for (unsigned long k = 0; k <= n; ++k) {
          mpz_class lhs = 0;
          for (const Box& b : addable_boxes(mu))
            lhs += mpz_class(m_count(add_box(mu, b), k));
          mpz_class rhs = mpz_class(r * k + 1) * m_count(mu, k);
          if (k >= 1)
            rhs += mpz_class(r * (n + 1) - (r * k + 1)) * m_count(mu, k - 1);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("dimension column and regular-character sum, r <= 3, n <= 5") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 5; ++n)
      CHECK(properties_check(r, n));
  // Pinned: dims (1,6,1) summing to |W(2,2)| = 8 at the identity.
  CHECK(eulerian(2, 2, 0) == 1);
  CHECK(eulerian(2, 2, 1) == 6);
  CHECK(eulerian(2, 2, 2) == 1);
  CHECK(rat(foulkes(3, 1, 0).at_length(1)) == Rational(1));
  CHECK(rat(foulkes(3, 1, 1).at_length(1)) == Rational(2));
  const BlockFunction sum31 = foulkes(3, 1, 0) + foulkes(3, 1, 1);
  const ClassFunction cf31 = sum31.to_class_function();
  CHECK(rat(cf31.value(0)) == Rational(3));
  CHECK(cf31.value(1).is_zero());
  CHECK(cf31.value(2).is_zero());
}

TEST_CASE("phi coordinates: solve route and inner-product route agree") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      for (unsigned long k = 0; k <= n; ++k) {
        const BlockFunction phi = foulkes(r, n, k);
        const auto direct = block_coefficients(phi);
        const auto via_table = block_coefficients(phi, t);
        for (unsigned long j = 0; j <= n; ++j) {
          CHECK((direct.coeffs[j] - via_table.coeffs[j]).is_zero());
          if (j == k)
            CHECK(rat(direct.coeffs[j]) == Rational(1));
          else
            CHECK(direct.coeffs[j].is_zero());
        }
      }
      // chi_m expands with the inverse-transform binomials.
      for (unsigned long m = 0; m <= n; ++m) {
        const auto co = block_coefficients(chi_block(r, n, m), t);
        for (unsigned long j = 0; j <= n; ++j) {
          const mpz_class expect =
              j <= m ? binomial(n + (m - j), m - j) : mpz_class(0);
          CHECK(rat(co.coeffs[j]) == Rational(expect));
        }
      }
      // A block function that is no character at all still decomposes.
      std::vector<Cyclotomic> vals;
      for (unsigned long ell = 0; ell <= n; ++ell)
        vals.push_back(Cyclotomic::from_rational(
            Rational(mpz_class(2 * ell + 1), mpz_class(3))));
      const BlockFunction odd(r, n, std::move(vals));
      const auto a = block_coefficients(odd);
      const auto b = block_coefficients(odd, t);
      for (unsigned long j = 0; j <= n; ++j)
        CHECK((a.coeffs[j] - b.coeffs[j]).is_zero());
    }
  }
  const BlockFunction zero(2, 2,
                           std::vector<Cyclotomic>(3, Cyclotomic::zero(2)));
  for (const auto& c : block_coefficients(zero).coeffs) CHECK(c.is_zero());
}

TEST_CASE("block-character recognition") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 4; ++n)
      for (unsigned long k = 0; k <= n; ++k) {
        CHECK(is_block_character(chi_block(r, n, k)));
        CHECK(is_block_character(foulkes(r, n, k)));
      }
  const BlockFunction mixed =
      foulkes(2, 2, 1) -
      foulkes(2, 2, 0) *
          Cyclotomic::from_rational(Rational(1, 2));
  CHECK_FALSE(is_block_character(mixed));

  // (rq+1)^length: the coefficient signs flip once q dips below n-1 (for
  // non-integer q); the last strictly-negative product needs an odd number
  // of negative factors.
  CHECK(is_block_character(ewens_block(2, 2, Rational(5, 2))));
  CHECK(is_block_character(ewens_block(2, 2, Rational(3, 2))));   // q = n - 1/2
  CHECK(is_block_character(ewens_block(2, 3, Rational(5, 2))));   // q = n - 1/2
  CHECK_FALSE(is_block_character(ewens_block(2, 3, Rational(3, 2))));
  CHECK_FALSE(is_block_character(ewens_block(2, 4, Rational(3, 2))));
  CHECK_FALSE(is_block_character(ewens_block(2, 4, Rational(5, 2))));
  for (unsigned long n = 1; n <= 4; ++n) {
    // q = n + 1/2 > n is always fine, as is any integer q.
    CHECK(is_block_character(
        ewens_block(2, n, Rational(mpz_class(2 * n + 1), mpz_class(2)))));
    CHECK(is_block_character(ewens_block(2, n, Rational(mpz_class(n)))));
  }
}

TEST_CASE("q-expansion of (rq+1)^length") {
  // Integer q reproduces the inverse-transform coefficients.
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      for (unsigned long q = 0; q <= n; ++q) {
        const auto co = q_block_expansion(r, n, Rational(mpz_class(q)));
        for (unsigned long j = 0; j <= n; ++j) {
          const mpz_class expect =
              j <= q ? binomial(n + (q - j), q - j) : mpz_class(0);
          CHECK(rat(co.coeffs[j]) == Rational(expect));
        }
      }
    }
  }
  const auto q0 = q_block_expansion(3, 4, Rational(0));
  CHECK(rat(q0.coeffs[0]) == Rational(1));
  for (unsigned long j = 1; j <= 4; ++j) CHECK(q0.coeffs[j].is_zero());

  // Fractional q: coefficients are the generalized binomials and the
  // internal reconstruction assertion has already run.
  const auto co = q_block_expansion(2, 2, Rational(5, 2));
  CHECK(rat(co.coeffs[0]) == binomial(Rational(9, 2), 2));
  CHECK(rat(co.coeffs[1]) == binomial(Rational(7, 2), 2));
  CHECK(rat(co.coeffs[2]) == binomial(Rational(5, 2), 2));
  CHECK_THROWS_AS(q_block_expansion(2, 2, Rational(-1, 2)),
                  std::invalid_argument);
}

TEST_CASE("block function plumbing") {
  CHECK_THROWS_AS(BlockFunction(2, 2, std::vector<Cyclotomic>(2)),
                  std::invalid_argument);
  const BlockFunction f = chi_block(2, 2, 1);
  CHECK(f.order() == 2);
  CHECK(f.degree() == 2);
  CHECK_THROWS_AS(f.at_length(3), std::out_of_range);
  CHECK(f != chi_block(2, 2, 0));
  CHECK(f == chi_block(2, 2, 1));
  CHECK_THROWS_AS(chi_block(2, 2, 1) + chi_block(2, 1, 1),
                  std::invalid_argument);
  // Class function conversion: value depends only on color-0 cycle count.
  const ClassFunction cf = f.to_class_function();
  for (const auto& mu : conjugacy_classes(2, 2))
    CHECK(rat(cf.value(mu)) ==
          rat(f.at_length(static_cast<unsigned long>(mu[0].size()))));
}
