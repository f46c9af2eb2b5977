#include <doctest.h>

#include "ncps/ideal.hpp"
#include "ncps/morphism.hpp"
#include "ncps/recenter.hpp"
#include "support.hpp"

using namespace ncps;
using ncps::testing::Rng;
using ncps::testing::naive_recenter;
using ncps::testing::random_series;

namespace {

// the worked example f = x1 x2 - t x2 x1 centered at the origin
Germ beispiel(const Scalar& t, unsigned degree = 2) {
  NCSeries f(2, degree);
  f.set(Word{1, 2}, Scalar(1));
  f.set(Word{2, 1}, -t);
  return Germ(Point{Scalar(0), Scalar(0)}, f);
}

}  // namespace

TEST_CASE("recentred coefficients of the worked example") {
  for (long tval : {0L, 1L, 3L, -2L}) {
    Scalar t(tval);
    Scalar one_minus_t = Scalar(1) - t;
    for (auto [q1, q2] : {std::pair<long, long>{1, 2}, std::pair<long, long>{-1, 1}}) {
      Germ f = beispiel(t);
      Point q{Scalar(q1), Scalar(q2)};
      CHECK(coefficient_at(f, q, Word{}) == one_minus_t * Scalar(q1) * Scalar(q2));
      CHECK(coefficient_at(f, q, Word{1}) == one_minus_t * Scalar(q2));
      CHECK(coefficient_at(f, q, Word{2}) == one_minus_t * Scalar(q1));
      CHECK(coefficient_at(f, q, Word{1, 2}) == Scalar(1));
      CHECK(coefficient_at(f, q, Word{2, 1}) == -t);
    }
  }
}

TEST_CASE("coefficient_at via embeddings equals the collapsed binomial form") {
  Rng rng(20240830);
  for (int k = 0; k < 40; ++k) {
    NCSeries series = random_series(rng, 2, 4, 6);
    Point p = ncps::testing::random_point(rng, 2);
    Point q = ncps::testing::random_point(rng, 2);
    Germ f(p, series);
    for (const Word& word : words_up_to(2, 4)) {
      // sum_I (I choose J) a_I (q-p)^(I-J) on letter multisets
      Scalar collapsed;
      for (const auto& [stored, c] : series.terms()) {
        std::size_t ways = count_embeddings(word, stored);
        if (ways == 0) continue;
        std::vector<unsigned> exponents(2, 0);
        for (Letter l : stored.letters()) ++exponents[l - 1];
        for (Letter l : word.letters()) --exponents[l - 1];
        Scalar mono(1);
        for (unsigned v = 0; v < 2; ++v)
          for (unsigned e = 0; e < exponents[v]; ++e) mono *= q[v] - p[v];
        collapsed += Scalar(static_cast<long>(ways)) * c * mono;
      }
      CHECK(coefficient_at(f, q, word) == collapsed);
    }
  }
}

TEST_CASE("recentring the worked example re-expands to the original") {
  Scalar t(3);
  Germ f = beispiel(t);
  Point q{Scalar(1), Scalar(2)};
  Germ moved = recenter(f, q, 2);

  CHECK(moved.series.coefficient(Word{}) == Scalar(-4));   // (1-t) q1 q2
  CHECK(moved.series.coefficient(Word{1}) == Scalar(-4));  // (1-t) q2
  CHECK(moved.series.coefficient(Word{2}) == Scalar(-2));  // (1-t) q1
  CHECK(moved.series.coefficient(Word{1, 2}) == Scalar(1));
  CHECK(moved.series.coefficient(Word{2, 1}) == Scalar(-3));

  // substitute (x - q) = (x - p) + (p - q) back and compare
  CHECK(naive_recenter(moved.series, q, f.base, 2) == f.series);
}

TEST_CASE("recenter matches the direct re-expansion oracle (random)") {
  Rng rng(20240831);
  for (int k = 0; k < 40; ++k) {
    NCSeries series = random_series(rng, 2, 4, 6);
    Point p = ncps::testing::random_point(rng, 2);
    Point q = ncps::testing::random_point(rng, 2);
    Germ moved = recenter(Germ(p, series), q, 4);
    CHECK(moved.series == naive_recenter(series, p, q, 4));
  }
}

TEST_CASE("recenter at the same point is the identity") {
  Rng rng(20240832);
  NCSeries series = random_series(rng, 2, 4, 6);
  Point p = ncps::testing::random_point(rng, 2);
  CHECK(recenter(Germ(p, series), p, 4).series == series);
}

TEST_CASE("recentring a constant changes nothing") {
  Germ c(Point{Scalar(1), Scalar(2)}, NCSeries::constant(2, 3, Scalar(7)));
  Germ moved = recenter(c, Point{Scalar(5), Scalar(-1)}, 3);
  CHECK(moved.series == c.series);
}

TEST_CASE("recentring is an algebra homomorphism (random)") {
  // recentring spreads coefficients downward, so the product has to be
  // expanded in full (degree 8) before re-expanding to degree 4
  Rng rng(20240833);
  Point p{Scalar(0), Scalar(0)};
  for (int k = 0; k < 40; ++k) {
    NCSeries f = random_series(rng, 2, 4, 6);
    NCSeries g = random_series(rng, 2, 4, 6);
    Point q = ncps::testing::random_point(rng, 2);
    NCSeries full_product = f.truncated(8) * g.truncated(8);
    NCSeries lhs = recenter(Germ(p, full_product), q, 4).series;
    NCSeries rhs = recenter(Germ(p, f), q, 4).series * recenter(Germ(p, g), q, 4).series;
    CHECK(lhs == rhs);
    // linearity
    CHECK(recenter(Germ(p, f + g), q, 4).series ==
          recenter(Germ(p, f), q, 4).series + recenter(Germ(p, g), q, 4).series);
  }
}

TEST_CASE("recentring is transitive on polynomial germs") {
  Rng rng(20240834);
  for (int k = 0; k < 25; ++k) {
    NCSeries f = random_series(rng, 2, 4, 6);
    Point p = ncps::testing::random_point(rng, 2);
    Point q = ncps::testing::random_point(rng, 2);
    Point s = ncps::testing::random_point(rng, 2);
    Germ direct = recenter(Germ(p, f), s, 4);
    Germ via_q = recenter(recenter(Germ(p, f), q, 4), s, 4);
    CHECK(direct.series == via_q.series);
    CHECK(direct.base == via_q.base);
  }
}

TEST_CASE("abelianized recentring is the classical Taylor shift") {
  Rng rng(20240835);
  for (int k = 0; k < 30; ++k) {
    NCSeries f = random_series(rng, 2, 4, 6);
    Point p = ncps::testing::random_point(rng, 2);
    Point q = ncps::testing::random_point(rng, 2);
    Germ moved = recenter(Germ(p, f), q, 4);
    std::vector<Scalar> offset{q[0] - p[0], q[1] - p[1]};
    CHECK(ab(moved.series) == ab(f).shift(offset));
  }
}

TEST_CASE("evaluate") {
  NCSeries comm = commutator(2, 2, 1, 2);
  CHECK(evaluate(Germ(Point{Scalar(0), Scalar(0)}, comm),
                 Point{Scalar(5), Scalar(-7)}) == Scalar(0));

  NCSeries affine = NCSeries::constant(1, 2, Scalar(1)) + NCSeries::variable(1, 2, 1);
  CHECK(evaluate(Germ(Point{Scalar(0)}, affine), Point{Scalar(5)}) == Scalar(6));
}

TEST_CASE("evaluating the truncated geometric germ stays inside the tail bound") {
  // germ of 1/x1 at p = 2, truncated at D = 8, evaluated at q = 5/2
  unsigned degree = 8;
  NCSeries x1_at_2 = NCSeries::variable(1, degree, 1) +
                     NCSeries::constant(1, degree, Scalar(2));
  NCSeries inv = invert_unit(x1_at_2, degree);
  Germ germ(Point{Scalar(2)}, inv);
  Scalar value = evaluate(germ, Point{Scalar(make_rational(5, 2))});

  // partial sum of sum (-1)^k (1/2)^k / 2^(k+1)
  Scalar expected;
  for (unsigned k = 0; k <= degree; ++k) {
    Rational term = make_rational((k % 2 == 0) ? 1 : -1);
    for (unsigned j = 0; j < k; ++j) term /= 2;
    for (unsigned j = 0; j <= k; ++j) term /= 2;
    expected += Scalar(term);
  }
  CHECK(value == expected);

  Rational error = abs(value.re - make_rational(2, 5));
  Rational bound = make_rational(1, 2 * (1 << 9));  // (1/2)^9 / 2
  CHECK(error <= bound);
}

TEST_CASE("polydisk containment uses the l1 majorant") {
  Polydisk disk(Point{Scalar(0), Scalar(0)}, {make_rational(1), make_rational(2)});
  CHECK(disk.contains(Point{Scalar(make_rational(1, 2)), Scalar(0)}));
  CHECK_FALSE(disk.contains(Point{Scalar(1), Scalar(0)}));  // boundary excluded
  // 1/2 + 1/2 i has majorant 1
  CHECK_FALSE(disk.contains(
      Point{Scalar(make_rational(1, 2), make_rational(1, 2)), Scalar(0)}));
  CHECK_THROWS_AS(Polydisk(Point{Scalar(0)}, {make_rational(0)}), std::invalid_argument);
}

TEST_CASE("family consistency") {
  Rng rng(20240836);
  NCSeries f = random_series(rng, 2, 3, 6);
  Point p{Scalar(0), Scalar(0)};
  std::vector<Rational> radii{make_rational(10), make_rational(10)};

  LocalFunctionFamily family;
  family.entries.push_back({Germ(p, f), Polydisk(p, radii)});
  for (int k = 0; k < 3; ++k) {
    Point q = ncps::testing::random_point(rng, 2);
    family.entries.push_back({recenter(Germ(p, f), q, 3), Polydisk(q, radii)});
  }
  CHECK_FALSE(check_family_consistency(family, 3).has_value());

  // perturb one coefficient: the violation names the pair
  LocalFunctionFamily broken = family;
  NCSeries perturbed = broken.entries[2].germ.series;
  perturbed.add_term(Word{1}, Scalar(1));
  broken.entries[2].germ = Germ(broken.entries[2].germ.base, perturbed);
  auto violation = check_family_consistency(broken, 3);
  REQUIRE(violation.has_value());
  CHECK(violation->to == 2);
  CHECK(violation->word == Word{1});
  CHECK(violation->expected + Scalar(1) == violation->found);

  // disjoint polydisks are vacuously consistent
  LocalFunctionFamily apart;
  std::vector<Rational> tiny{make_rational(1, 10), make_rational(1, 10)};
  apart.entries.push_back({Germ(p, f), Polydisk(p, tiny)});
  Point far{Scalar(100), Scalar(100)};
  apart.entries.push_back(
      {Germ(far, random_series(rng, 2, 3, 6)), Polydisk(far, tiny)});
  CHECK_FALSE(check_family_consistency(apart, 3).has_value());
}
