#pragma once

// Shared test helpers: random data generators and independent oracles. The
// oracles deliberately avoid the library code paths they are used to check.

#include <random>
#include <vector>

#include "ncps/morphism.hpp"
#include "ncps/recenter.hpp"
#include "ncps/series.hpp"

namespace ncps::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs = 4, long max_den = 3) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline Scalar random_scalar(Rng& rng, bool allow_imaginary = true) {
  Rational re = random_rational(rng);
  if (!allow_imaginary) return Scalar(re);
  std::uniform_int_distribution<int> coin(0, 3);
  if (coin(rng) == 0) return Scalar(re, random_rational(rng));
  return Scalar(re);
}

inline Scalar random_nonzero_scalar(Rng& rng, bool allow_imaginary = true) {
  while (true) {
    Scalar c = random_scalar(rng, allow_imaginary);
    if (!c.is_zero()) return c;
  }
}

/// Sparse random series with at most max_terms terms.
inline NCSeries random_series(Rng& rng, unsigned vars, unsigned degree,
                              unsigned max_terms, bool allow_imaginary = true) {
  std::vector<Word> pool = words_up_to(vars, degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<unsigned> count(0, max_terms);
  NCSeries out(vars, degree);
  unsigned terms = count(rng);
  for (unsigned k = 0; k < terms; ++k)
    out.set(pool[pick(rng)], random_scalar(rng, allow_imaginary));
  return out;
}

/// Random series of order >= 1 (a legal morphism image).
inline NCSeries random_image(Rng& rng, unsigned vars, unsigned degree,
                             unsigned max_terms) {
  while (true) {
    NCSeries f = random_series(rng, vars, degree, max_terms);
    f.set(Word{}, Scalar(0));
    if (f.order() >= 1) return f;
  }
}

/// Random endomorphism with invertible Jacobian.
inline NCMorphism random_automorphism(Rng& rng, unsigned vars, unsigned degree,
                                      unsigned max_terms) {
  while (true) {
    std::vector<NCSeries> images;
    for (unsigned k = 0; k < vars; ++k)
      images.push_back(random_image(rng, vars, degree, max_terms));
    NCMorphism phi(vars, vars, degree, std::move(images));
    if (is_automorphism(phi)) return phi;
  }
}

inline Point random_point(Rng& rng, unsigned dim, bool allow_imaginary = false) {
  std::vector<Scalar> coords;
  for (unsigned k = 0; k < dim; ++k) coords.push_back(random_scalar(rng, allow_imaginary));
  return Point(std::move(coords));
}

/// Recentering oracle by direct re-expansion: each factor (x_l - base_l)
/// becomes ((x_l - q_l) + (q_l - base_l)), expanded with plain series
/// products in the algebra centered at q.
inline NCSeries naive_recenter(const NCSeries& series, const Point& base,
                               const Point& q, unsigned degree) {
  unsigned vars = series.vars();
  NCSeries out(vars, degree);
  for (const auto& [word, c] : series.terms()) {
    NCSeries prod = NCSeries::constant(vars, degree, c);
    for (Letter l : word.letters()) {
      NCSeries factor = NCSeries::variable(vars, degree, l);
      factor.add_term(Word{}, q[l - 1] - base[l - 1]);
      prod = prod * factor;
    }
    out += prod;
  }
  return out;
}

/// Commutative substitution oracle: replaces variable k by images[k-1].
inline CommSeries comm_substitute(const CommSeries& g,
                                  const std::vector<CommSeries>& images) {
  unsigned degree = g.degree();
  unsigned target_vars = images.empty() ? 0 : images.front().vars();
  CommSeries out(target_vars, degree);
  for (const auto& [word, c] : g.terms()) {
    CommSeries prod = CommSeries::constant(target_vars, degree, c);
    for (Letter l : word.letters()) prod = prod * images[l - 1].truncated(degree);
    out += prod;
  }
  return out;
}

/// One-variable series reversion: coefficients of the compositional inverse
/// of f = sum f[k] x^k (f[0] = 0, f[1] != 0), solved degree by degree with
/// plain commutative polynomial arithmetic.
inline std::vector<Rational> revert_series_1var(const std::vector<Rational>& f,
                                                unsigned degree) {
  auto compose_at = [&](const std::vector<Rational>& g) {
    // f(g(x)) truncated at `degree`
    std::vector<Rational> result(degree + 1, Rational(0));
    std::vector<Rational> power(degree + 1, Rational(0));
    power[0] = 1;
    for (std::size_t k = 0; k < f.size() && k <= degree; ++k) {
      if (k > 0) {
        std::vector<Rational> next(degree + 1, Rational(0));
        for (unsigned a = 0; a <= degree; ++a)
          for (unsigned b = 0; a + b <= degree && b < g.size(); ++b)
            next[a + b] += power[a] * g[b];
        power = std::move(next);
      }
      for (unsigned a = 0; a <= degree; ++a) result[a] += f[k] * power[a];
    }
    return result;
  };
  std::vector<Rational> g(degree + 1, Rational(0));
  g[1] = 1 / f[1];
  for (unsigned k = 2; k <= degree; ++k) {
    std::vector<Rational> value = compose_at(g);
    g[k] = -value[k] / f[1];
  }
  return g;
}

/// Dense exact rank of a list of series rows, independent of the ideal
/// module's echelon bookkeeping.
inline std::size_t dense_rank(const std::vector<NCSeries>& rows, unsigned vars,
                              unsigned degree) {
  std::vector<Word> basis = words_up_to(vars, degree);
  std::vector<std::vector<Scalar>> matrix;
  for (const NCSeries& row : rows) {
    std::vector<Scalar> dense(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) dense[c] = row.coefficient(basis[c]);
    matrix.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < matrix.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < matrix.size() && matrix[pivot][col].is_zero()) ++pivot;
    if (pivot == matrix.size()) continue;
    std::swap(matrix[rank], matrix[pivot]);
    Scalar lead = matrix[rank][col];
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r == rank || matrix[r][col].is_zero()) continue;
      Scalar factor = matrix[r][col] / lead;
      for (std::size_t c = col; c < basis.size(); ++c)
        matrix[r][c] -= factor * matrix[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ncps::testing
