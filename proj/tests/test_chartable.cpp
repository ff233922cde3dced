// SPDX-License-Identifier: Apache-2.0
//
// Character tables of W(r,n): symmetric-group ingredient, induced rows,
// orthogonality both ways, branching, decomposition, and the label
// calibration machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "wreathchar/char_table.hpp"
#include "wreathchar/classes.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/sn_characters.hpp"
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

Multipartition remove_box(const Multipartition& mp, const Box& b) {
  Multipartition out = mp;
  if (--out[b.component][b.row - 1] == 0) out[b.component].pop_back();
  return out;
}

}  // namespace

TEST_CASE("symmetric group characters: trivial, sign, dimensions") {
  for (unsigned long n = 0; n <= 6; ++n) {
    const Partition row_n(n ? Partition{n} : Partition{});
    Partition ones(n, 1);
    for (const auto& mu : partitions(n)) {
      CHECK(sn_character(row_n, mu) == 1);
      const long sign = (n - mu.size()) % 2 == 0 ? 1 : -1;
      CHECK(sn_character(ones, mu) == sign);
    }
    // The dimension column agrees with the hook-length count.
    for (const auto& lambda : partitions(n))
      CHECK(sn_character(lambda, ones) ==
            standard_tableau_count(Multipartition{lambda}));
  }
  CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
}

TEST_CASE("symmetric group characters: known S_3 and S_4 values") {
  // chi^{(2,1)} of S_3 on (1,1,1), (2,1), (3).
  CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sn_character({2, 1}, {2, 1}) == 0);
  CHECK(sn_character({2, 1}, {3}) == -1);
  // chi^{(2,2)} of S_4 on (1^4), (2,1,1), (2,2), (3,1), (4).
  CHECK(sn_character({2, 2}, {1, 1, 1, 1}) == 2);
  CHECK(sn_character({2, 2}, {2, 1, 1}) == 0);
  CHECK(sn_character({2, 2}, {2, 2}) == 2);
  CHECK(sn_character({2, 2}, {3, 1}) == -1);
  CHECK(sn_character({2, 2}, {4}) == 0);
  // chi^{(3,1)} of S_4.
  CHECK(sn_character({3, 1}, {1, 1, 1, 1}) == 3);
  CHECK(sn_character({3, 1}, {2, 1, 1}) == 1);
  CHECK(sn_character({3, 1}, {2, 2}) == -1);
  CHECK(sn_character({3, 1}, {3, 1}) == 0);
  CHECK(sn_character({3, 1}, {4}) == -1);
}

TEST_CASE("symmetric group characters: row orthogonality, n <= 6") {
  for (unsigned long n = 1; n <= 6; ++n) {
    const auto parts = partitions(n);
    for (const auto& la : parts) {
      for (const auto& rho : parts) {
        mpz_class acc = 0;
        for (const auto& mu : parts) {
          const mpz_class z = centralizer_order(1, Multipartition{mu});
          acc += (factorial(n) / z) * sn_character(la, mu) *
                 sn_character(rho, mu);
        }
        CHECK(acc == (la == rho ? factorial(n) : mpz_class(0)));
      }
    }
  }
}

TEST_CASE("symmetric group characters: size mismatch rejected") {
  CHECK_THROWS_AS(sn_character({2}, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sn_character({2, 1}, {2}), std::invalid_argument);
}

TEST_CASE("wreath table at r=1 reduces to the symmetric group table") {
  for (unsigned long n = 0; n <= 5; ++n) {
    const auto& t = table_of(1, n);
    const auto classes = conjugacy_classes(1, n);
    REQUIRE(t.labels() == classes);
    for (std::size_t li = 0; li < classes.size(); ++li)
      for (std::size_t c = 0; c < classes.size(); ++c)
        CHECK(rat(t.row(li).value(c)) ==
              Rational(sn_character(classes[li][0], classes[c][0])));
  }
}

TEST_CASE("linear tables: W(2,1) and W(3,1)") {
  const auto& t2 = table_of(2, 1);
  REQUIRE(t2.labels() ==
          std::vector<Multipartition>{{{1}, {}}, {{}, {1}}});
  CHECK(rat(t2.row(0).value(0)) == Rational(1));
  CHECK(rat(t2.row(0).value(1)) == Rational(1));
  CHECK(rat(t2.row(1).value(0)) == Rational(1));
  CHECK(rat(t2.row(1).value(1)) == Rational(-1));

  const auto& t3 = table_of(3, 1);
  REQUIRE(t3.labels().size() == 3);
  for (unsigned long i = 0; i < 3; ++i) {
    Multipartition label(3);
    label[i] = Partition{1};
    const ClassFunction& row = t3.row(label);
    for (unsigned long c = 0; c < 3; ++c) {
      const Cyclotomic expect =
          Cyclotomic::root_power(3, static_cast<long>(i * c));
      CHECK((row.value(c) - expect).is_zero());
    }
  }
  CHECK(t2.color_relabel() == 1);
  CHECK(t3.color_relabel() == 1);
}

TEST_CASE("row orthonormality, r <= 3, n <= 4") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      const std::size_t num = t.rows().size();
      for (std::size_t i = 0; i < num; ++i) {
        for (std::size_t j = 0; j < num; ++j) {
          const Cyclotomic ip = inner_product(t.row(i), t.row(j));
          if (i == j)
            CHECK(rat(ip) == Rational(1));
          else
            CHECK(ip.is_zero());
        }
      }
    }
  }
}

TEST_CASE("column orthogonality against centralizer orders, r <= 3, n <= 4") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      const auto classes = conjugacy_classes(r, n);
      for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = 0; b < classes.size(); ++b) {
          Cyclotomic acc = Cyclotomic::zero(r);
          for (const auto& row : t.rows())
            acc += row.value(a) * row.value(b).conjugate();
          if (a == b)
            CHECK(rat(acc) == Rational(centralizer_order(r, classes[a])));
          else
            CHECK(acc.is_zero());
        }
      }
    }
  }
}

TEST_CASE("dimensions: identity column counts standard tableaux") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      const auto& t = table_of(r, n);
      Multipartition id(r);
      if (n > 0) id[0] = Partition(n, 1);
      mpz_class sum_sq = 0;
      for (std::size_t li = 0; li < t.labels().size(); ++li) {
        const Rational dim = rat(t.row(li).value(id));
        CHECK(dim == Rational(standard_tableau_count(t.labels()[li])));
        sum_sq += dim.numerator() * dim.numerator();
      }
      mpz_class group = factorial(n);
      for (unsigned long i = 0; i < n; ++i) group *= r;
      CHECK(sum_sq == group);
    }
  }
}

TEST_CASE("character values are algebraic integers (integer coefficients)") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 4; ++n) {
      for (const auto& row : table_of(r, n).rows())
        for (const auto& v : row.values())
          for (const auto& co : v.coeffs()) CHECK(co.is_integer());
    }
  }
}

TEST_CASE("restriction: branching over removable boxes, r <= 3, n <= 4") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 1; n <= 4; ++n) {
      const auto& big = table_of(r, n);
      const auto& small = table_of(r, n - 1);
      for (std::size_t li = 0; li < big.labels().size(); ++li) {
        const ClassFunction lhs = restrict_character(big.row(li));
        ClassFunction rhs(r, n - 1,
                          std::vector<Cyclotomic>(small.rows().size(),
                                                  Cyclotomic::zero(r)));
        for (const Box& b : removable_boxes(big.labels()[li]))
          rhs += small.row(remove_box(big.labels()[li], b));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("restriction: trivial stays trivial, regular scales by rn") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 1; n <= 4; ++n) {
      const auto classes = conjugacy_classes(r, n);
      std::vector<Cyclotomic> triv(classes.size(), Cyclotomic::one(r));
      const ClassFunction trivial(r, n, triv);
      const ClassFunction down = restrict_character(trivial);
      for (const auto& v : down.values()) CHECK(rat(v) == Rational(1));

      // Regular character: |W| at the identity, zero elsewhere.
      mpz_class group = factorial(n);
      for (unsigned long i = 0; i < n; ++i) group *= r;
      Multipartition id(r);
      id[0] = Partition(n, 1);
      std::vector<Cyclotomic> reg(classes.size(), Cyclotomic::zero(r));
      reg[class_index(r, n, id)] =
          Cyclotomic::from_rational(Rational(group), 1);
      const ClassFunction regular(r, n, reg);

      const auto small = conjugacy_classes(r, n - 1);
      Multipartition small_id(r);
      if (n > 1) small_id[0] = Partition(n - 1, 1);
      const ClassFunction down_reg = restrict_character(regular);
      for (std::size_t c = 0; c < small.size(); ++c) {
        const Rational expect =
            small[c] == small_id
                ? Rational(group) / Rational(mpz_class(1))
                : Rational(0);
        // Restricting the regular character of W(r,n) gives r*n copies of
        // the regular character of W(r,n-1).
        mpz_class small_group = factorial(n - 1);
        for (unsigned long i = 0; i + 1 < n; ++i) small_group *= r;
        const Rational target =
            small[c] == small_id
                ? Rational(mpz_class(r * n)) * Rational(small_group)
                : Rational(0);
        CHECK(rat(down_reg.value(c)) == expect);
        CHECK(rat(down_reg.value(c)) == target);
      }
    }
  }
}

TEST_CASE("decompose: indicators, linearity, regular character") {
  for (unsigned long r = 1; r <= 3; ++r) {
    for (unsigned long n = 0; n <= 3; ++n) {
      const auto& t = table_of(r, n);
      const std::size_t num = t.rows().size();
      for (std::size_t li = 0; li < num; ++li) {
        const auto coeffs = decompose(t.row(li), t);
        for (std::size_t j = 0; j < num; ++j) {
          if (j == li)
            CHECK(rat(coeffs[j]) == Rational(1));
          else
            CHECK(coeffs[j].is_zero());
        }
      }
      if (num >= 2) {
        const ClassFunction sum = t.row(0) + t.row(1);
        const auto coeffs = decompose(sum, t);
        CHECK(rat(coeffs[0]) == Rational(1));
        CHECK(rat(coeffs[1]) == Rational(1));
      }
      // Regular character decomposes with each row appearing dim times.
      mpz_class group = factorial(n);
      for (unsigned long i = 0; i < n; ++i) group *= r;
      Multipartition id(r);
      if (n > 0) id[0] = Partition(n, 1);
      const auto classes = conjugacy_classes(r, n);
      std::vector<Cyclotomic> reg(classes.size(), Cyclotomic::zero(r));
      reg[class_index(r, n, id)] =
          Cyclotomic::from_rational(Rational(group), 1);
      const auto coeffs = decompose(ClassFunction(r, n, reg), t);
      for (std::size_t li = 0; li < num; ++li)
        CHECK(rat(coeffs[li]) == Rational(standard_tableau_count(t.labels()[li])));
    }
  }
}

TEST_CASE("descent multiplicities pin the labeling") {
  for (unsigned long r = 1; r <= 3; ++r)
    for (unsigned long n = 0; n <= 3; ++n)
      CHECK(descent_multiplicity_check(table_of(r, n)));
}

TEST_CASE("color relabeling map on shapes") {
  const Multipartition mp{{3}, {2, 1}, {1}};
  CHECK(apply_color_relabel(mp, 1) == mp);
  // u = 2 swaps components 1 and 2 when r = 3.
  CHECK(apply_color_relabel(mp, 2) == Multipartition{{3}, {1}, {2, 1}});
  CHECK(apply_color_relabel(apply_color_relabel(mp, 2), 2) == mp);
}

TEST_CASE("calibration accepts unit-twisted labelings and rejects garbage") {
  const auto& t = table_of(3, 2);
  const auto& labels = t.labels();

  // Permuting rows by a unit of Z/3 is undetectable: Galois conjugation
  // fixes the rational multiplicities, so the twisted table satisfies the
  // same descent counts.
  std::vector<ClassFunction> twisted;
  for (const auto& label : labels)
    twisted.push_back(t.row(apply_color_relabel(label, 2)));
  const CharacterTable re = calibrate_labels(3, 2, labels, twisted);
  CHECK(descent_multiplicity_check(re));

  // Swapping two rows inside component 0 is caught: no unit repairs it.
  std::vector<ClassFunction> garbled;
  for (const auto& row : t.rows()) garbled.push_back(row);
  Multipartition a{{2}, {}, {}};
  Multipartition b{{1, 1}, {}, {}};
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == a) ia = i;
    if (labels[i] == b) ib = i;
  }
  std::swap(garbled[ia], garbled[ib]);
  CHECK_THROWS_AS(calibrate_labels(3, 2, labels, garbled),
                  std::runtime_error);
}

TEST_CASE("domain mismatches and malformed inputs are rejected") {
  const auto& t21 = table_of(2, 1);
  const auto& t31 = table_of(3, 1);
  CHECK_THROWS_AS(inner_product(t21.row(0), t31.row(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose(t21.row(0), t31), std::invalid_argument);
  CHECK_THROWS_AS(ClassFunction(2, 1, std::vector<Cyclotomic>{}),
                  std::invalid_argument);
  const auto classes0 = conjugacy_classes(2, 0);
  REQUIRE(classes0.size() == 1);
  const ClassFunction unit(2, 0, {Cyclotomic::one(2)});
  CHECK_THROWS_AS(restrict_character(unit), std::invalid_argument);
  CHECK_THROWS_AS(t21.row(Multipartition{{}, {}, {}}), std::invalid_argument);
}
