#include <doctest.h>

#include "ncps/geometry.hpp"
#include "support.hpp"

using namespace ncps;
using ncps::testing::Rng;
using ncps::testing::dense_rank;

namespace {

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned k = 0; k < exponent; ++k) out *= base;
  return out;
}

// classical Taylor coefficients of 1/u around u = p: (-1)^k / p^(k+1)
Rational inverse_coefficient(const Rational& p, unsigned k) {
  Rational value = pow_rational(1 / p, k + 1);
  return k % 2 == 0 ? value : Rational(-value);
}

}  // namespace

TEST_CASE("split_local_model") {
  CommSeries g(2, 3);
  g.set(Word{1, 2}, Scalar(1));  // commutative x1 x2
  LocalModel model = split_local_model({g}, {Point{Scalar(0), Scalar(5)}}, 3);
  REQUIRE(model.ideal_generators.size() == 1);
  CHECK(model.ideal_generators[0] ==
        NCSeries::monomial(2, 3, Word{1, 2}, Scalar(1)));
  CHECK(model.ideal_generators[0].is_commlike());

  // no generators: the ambient NC manifold
  LocalModel ambient = split_local_model({}, {Point{Scalar(1), Scalar(1)}}, 3);
  CHECK(ambient.ideal_generators.empty());

  // x1^2 - x2 vanishes at (1,1) but not at (1,0)
  CommSeries parabola(2, 3);
  parabola.set(Word{1, 1}, Scalar(1));
  parabola.set(Word{2}, Scalar(-1));
  CHECK_NOTHROW(split_local_model({parabola}, {Point{Scalar(1), Scalar(1)}}, 3));
  CHECK_THROWS_AS(split_local_model({parabola}, {Point{Scalar(1), Scalar(0)}}, 3),
                  std::invalid_argument);
}

TEST_CASE("split local model abelianizes back onto the commutative ideal") {
  unsigned degree = 3;
  CommSeries parabola(2, degree);
  parabola.set(Word{1, 1}, Scalar(1));
  parabola.set(Word{2}, Scalar(-1));
  LocalModel model = split_local_model({parabola}, {}, degree);
  CompletedIdealBasis basis(model.ideal_generators, 2, degree);

  // span{ab(basis)} equals span{m * g : monomials m} inside the commlike
  // subspace: compare ranks of either side against the union
  std::vector<NCSeries> from_basis;
  for (const auto& element : basis.elements()) {
    CommSeries dropped = ab(element.series);
    if (!dropped.is_zero()) from_basis.push_back(unab(dropped));
  }
  std::vector<NCSeries> from_comm;
  for (const Word& m : words_up_to(2, degree - parabola.order())) {
    if (!m.is_ordered()) continue;  // one monomial per multiset
    CommSeries mono(2, degree);
    mono.set(m, Scalar(1));
    from_comm.push_back(unab(mono * parabola));
  }
  std::vector<NCSeries> both = from_basis;
  both.insert(both.end(), from_comm.begin(), from_comm.end());
  std::size_t rank_basis = dense_rank(from_basis, 2, degree);
  std::size_t rank_comm = dense_rank(from_comm, 2, degree);
  std::size_t rank_union = dense_rank(both, 2, degree);
  CHECK(rank_basis == rank_comm);
  CHECK(rank_union == rank_comm);

  // and every commutative multiple lifts into the completed NC ideal
  for (const NCSeries& lifted : from_comm) CHECK(basis.contains(lifted));
}

TEST_CASE("supermanifold relation ideal, n=1 r=2 D=3") {
  CompletedIdealBasis basis = super_relation_ideal(1, 2, 3);
  CHECK(basis.vars() == 3);

  // the 12 expected normal-form words
  std::vector<Word> expected{Word{},        Word{1},       Word{2},       Word{3},
                             Word{1, 1},    Word{1, 2},    Word{1, 3},    Word{2, 3},
                             Word{1, 1, 1}, Word{1, 1, 2}, Word{1, 1, 3}, Word{1, 2, 3}};
  std::vector<Word> normal;
  for (const Word& w : words_up_to(3, 3)) {
    bool is_pivot = false;
    for (const auto& element : basis.elements()) is_pivot |= (element.pivot == w);
    if (!is_pivot) normal.push_back(w);
  }
  CHECK(normal == expected);
  CHECK(basis.dimension() + normal.size() == words_up_to(3, 3).size());

  // y1^2 -> 0
  CHECK(basis.normal_form(NCSeries::monomial(3, 3, Word{2, 2}, Scalar(1))).is_zero());
  // y2 y1 -> -y1 y2
  CHECK(basis.normal_form(NCSeries::monomial(3, 3, Word{3, 2}, Scalar(1))) ==
        NCSeries::monomial(3, 3, Word{2, 3}, Scalar(-1)));
  // x y1 and y1 x agree in the quotient
  CHECK(basis.normal_form(NCSeries::monomial(3, 3, Word{1, 2}, Scalar(1))) ==
        basis.normal_form(NCSeries::monomial(3, 3, Word{2, 1}, Scalar(1))));
}

TEST_CASE("supermanifold quotient has exterior-algebra rank") {
  for (unsigned n = 0; n <= 2; ++n)
    for (unsigned r = 0; r <= 3; ++r) {
      unsigned degree = 3;
      CompletedIdealBasis basis = super_relation_ideal(n, r, degree);
      std::vector<bool> pivot_mask;
      std::size_t normal_count = 0;
      std::size_t expected = 0;
      for (const Word& w : words_up_to(n + r, degree)) {
        bool is_pivot = false;
        for (const auto& element : basis.elements()) is_pivot |= (element.pivot == w);
        if (!is_pivot) ++normal_count;
      }
      // expected: ordered words whose odd letters are pairwise distinct
      for (const Word& w : words_up_to(n + r, degree)) {
        if (!w.is_ordered()) continue;
        bool squarefree_odd = true;
        for (std::size_t k = 0; k + 1 < w.length(); ++k)
          if (w[k] > n && w[k] == w[k + 1]) squarefree_odd = false;
        if (squarefree_odd) ++expected;
      }
      CHECK(normal_count == expected);
    }
}

TEST_CASE("projective transition at p=(2,3)") {
  Point p{Scalar(2), Scalar(3)};
  TransitionGerm germ = projective_transition(2, 0, 1, p, 2);
  CHECK(germ.image == Point{Scalar(make_rational(1, 2)), Scalar(make_rational(3, 2))});

  const NCSeries& first = germ.map.images()[0];
  CHECK(first.coefficient(Word{1}) == Scalar(make_rational(-1, 4)));
  CHECK(first.coefficient(Word{1, 1}) == Scalar(make_rational(1, 8)));
  CHECK(first.coefficient(Word{}) == Scalar(0));

  CHECK(is_automorphism(germ.map));

  CHECK_THROWS_AS(projective_transition(2, 0, 1, Point{Scalar(0), Scalar(3)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(projective_transition(2, 0, 0, p, 2), std::invalid_argument);
}

TEST_CASE("transition germs abelianize to classical Taylor expansions") {
  unsigned degree = 5;
  Point p{Scalar(2), Scalar(3)};
  TransitionGerm germ = projective_transition(2, 0, 1, p, degree);
  Rational p1 = make_rational(2), p2 = make_rational(3);

  // image of the first chart-1 coordinate: 1/x1 - 1/p1
  CommSeries inv_ab = ab(germ.map.images()[0]);
  for (unsigned k = 1; k <= degree; ++k)
    CHECK(inv_ab.coefficient(Word(std::vector<Letter>(k, 1))) ==
          Scalar(inverse_coefficient(p1, k)));
  CHECK(inv_ab.coefficient(Word{}) == Scalar(0));
  CHECK(inv_ab.terms().size() == degree);

  // image of the second: (1/x1) x2 - p2/p1, coefficients on x1^a and x1^a x2
  CommSeries quot_ab = ab(germ.map.images()[1]);
  for (unsigned a = 1; a <= degree; ++a)
    CHECK(quot_ab.coefficient(Word(std::vector<Letter>(a, 1))) ==
          Scalar(Rational(inverse_coefficient(p1, a) * p2)));
  for (unsigned a = 0; a + 1 <= degree; ++a) {
    std::vector<Letter> w(a, 1);
    w.push_back(2);
    CHECK(quot_ab.coefficient(Word(std::move(w))) == Scalar(inverse_coefficient(p1, a)));
  }
  // note inverse_coefficient(p1, 0) = 1/p1: the x2 coefficient of the quotient
  CHECK(quot_ab.coefficient(Word{2}) == Scalar(make_rational(1, 2)));
}

TEST_CASE("noncommutative order matters in transition images") {
  // the inverse factor sits on the left: coefficient lives on x1 x2, not x2 x1
  Point p{Scalar(2), Scalar(3)};
  TransitionGerm germ = projective_transition(2, 0, 1, p, 2);
  const NCSeries& second = germ.map.images()[1];
  CHECK(second.coefficient(Word{1, 2}) != Scalar(0));
  CHECK(second.coefficient(Word{2, 1}) == Scalar(0));
}

TEST_CASE("pair and triple cocycle checks") {
  // n = 2 at p = (2,3)
  {
    CocycleReport report = check_cocycle(2, {0, 1, 2}, Point{Scalar(2), Scalar(3)}, 4);
    CHECK(report.ok);
    CHECK(report.points_match);
    CHECK(report.agree_degree == 4);
  }
  // n = 3 at p = (2,3,5)
  {
    Point p{Scalar(2), Scalar(3), Scalar(5)};
    CocycleReport report = check_cocycle(3, {0, 1, 2}, p, 3);
    CHECK(report.ok);
    CHECK(report.agree_degree == 3);
    CocycleReport shuffled = check_cocycle(3, {1, 3, 2}, Point{Scalar(make_rational(1, 2)), Scalar(make_rational(3, 2)), Scalar(make_rational(5, 2))}, 3);
    CHECK(shuffled.ok);
  }
  CHECK_THROWS_AS(check_cocycle(2, {0, 1, 2}, Point{Scalar(0), Scalar(3)}, 3),
                  std::invalid_argument);
}

TEST_CASE("homogeneous_lift") {
  CommSeries f(3, 2);
  f.set(Word{1, 2}, Scalar(1));   // x0 x1 as letters 1,2
  f.set(Word{3, 3}, Scalar(-1));  // -x2^2
  NCSeries lift = homogeneous_lift(f);
  CHECK(lift.is_commlike());
  CHECK(ab(lift) == f);
  for (const auto& [w, c] : lift.terms()) CHECK(w.length() == 2);

  CommSeries mixed(2, 2);
  mixed.set(Word{1}, Scalar(1));
  mixed.set(Word{1, 2}, Scalar(1));
  CHECK_THROWS_AS(homogeneous_lift(mixed), std::invalid_argument);

  CHECK(homogeneous_lift(CommSeries(2, 2)).is_zero());
}
