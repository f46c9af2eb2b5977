#pragma once

#include <limits>
#include <map>
#include <span>
#include <vector>

#include "ncps/scalar.hpp"
#include "ncps/words.hpp"

namespace ncps {

/// Order of the zero series.
inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

/// A power series in n noncommuting variables, truncated at total degree D:
/// the degree-D jet of sum_I a_I (x-p)^I. Terms are stored sparsely in
/// graded-lex word order and zero coefficients are pruned, so operator== is
/// mathematical equality at the truncation. Binary operations require equal
/// variable counts and truncate to the smaller degree of the operands.
class NCSeries {
 public:
  NCSeries(unsigned vars, unsigned degree) : vars_(vars), degree_(degree) {}

  static NCSeries constant(unsigned vars, unsigned degree, const Scalar& value);
  static NCSeries variable(unsigned vars, unsigned degree, Letter v);
  static NCSeries monomial(unsigned vars, unsigned degree, const Word& word,
                           const Scalar& value);

  unsigned vars() const { return vars_; }
  unsigned degree() const { return degree_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `word`; zero when absent.
  Scalar coefficient(const Word& word) const;

  /// Sets a coefficient, validating letters and length; zero erases.
  NCSeries& set(const Word& word, const Scalar& value);

  /// Adds into a coefficient (validating as in set()).
  NCSeries& add_term(const Word& word, const Scalar& value);

  /// Minimal length of a word with nonzero coefficient; kInfiniteOrder for 0.
  unsigned order() const;

  /// Largest stored word length (0 for the zero series).
  unsigned max_term_degree() const;

  /// True iff every stored word is ordered.
  bool is_commlike() const;

  NCSeries truncated(unsigned degree) const;

  /// The image under OP read back as a plain series: the coefficient at the
  /// reversal of J equals this series' coefficient at J.
  NCSeries opposite() const;

  NCSeries& operator+=(const NCSeries& other);
  NCSeries& operator-=(const NCSeries& other);

  bool operator==(const NCSeries& other) const = default;

 private:
  void check_word(const Word& word) const;

  unsigned vars_;
  unsigned degree_;
  std::map<Word, Scalar> terms_;
};

NCSeries operator+(NCSeries lhs, const NCSeries& rhs);
NCSeries operator-(NCSeries lhs, const NCSeries& rhs);
NCSeries operator*(const NCSeries& lhs, const NCSeries& rhs);
NCSeries operator*(const Scalar& scale, const NCSeries& series);
NCSeries operator*(const NCSeries& series, const Scalar& scale);
NCSeries operator-(const NCSeries& series);

/// A commutative power series truncated at total degree D. Exponent
/// multisets are keyed by their ordered word (the unique nondecreasing word
/// with that multiset), which keeps one basis order for both algebras.
class CommSeries {
 public:
  CommSeries(unsigned vars, unsigned degree) : vars_(vars), degree_(degree) {}

  static CommSeries constant(unsigned vars, unsigned degree, const Scalar& value);
  static CommSeries variable(unsigned vars, unsigned degree, Letter v);

  unsigned vars() const { return vars_; }
  unsigned degree() const { return degree_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& ordered_word) const;
  CommSeries& set(const Word& ordered_word, const Scalar& value);
  CommSeries& add_term(const Word& ordered_word, const Scalar& value);

  unsigned order() const;
  unsigned max_term_degree() const;
  CommSeries truncated(unsigned degree) const;

  /// Exponent vector (length vars) of a stored key.
  std::vector<unsigned> exponents(const Word& ordered_word) const;

  /// Substitutes point[k-1] for variable k.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Substitutes x_k + offset[k-1] for x_k (classical Taylor shift).
  CommSeries shift(std::span<const Scalar> offset) const;

  CommSeries& operator+=(const CommSeries& other);
  CommSeries& operator-=(const CommSeries& other);

  bool operator==(const CommSeries& other) const = default;

 private:
  void check_word(const Word& word) const;

  unsigned vars_;
  unsigned degree_;
  std::map<Word, Scalar> terms_;
};

CommSeries operator+(CommSeries lhs, const CommSeries& rhs);
CommSeries operator-(CommSeries lhs, const CommSeries& rhs);
CommSeries operator*(const CommSeries& lhs, const CommSeries& rhs);
CommSeries operator*(const Scalar& scale, const CommSeries& series);
CommSeries operator-(const CommSeries& series);

/// Abelianization: sends each word to its letter multiset.
CommSeries ab(const NCSeries& series);

/// The vector-space section of ab: each commutative monomial lands on its
/// ordered word. unab(g) is commlike and ab(unab(g)) == g.
NCSeries unab(const CommSeries& series);

/// Coefficientwise sum of a finite family (vars/degree fix the empty sum).
NCSeries sum_family(unsigned vars, unsigned degree, std::span<const NCSeries> family);

/// Same series over a larger alphabet (new_vars >= vars()).
NCSeries extend_alphabet(const NCSeries& series, unsigned new_vars);

/// Adds `offset` to every letter; the result lives over new_vars letters.
NCSeries offset_letters(const NCSeries& series, unsigned offset, unsigned new_vars);

/// f * g inside the free product: f keeps its letters, g's letters are
/// shifted past f's alphabet. No relations between the two groups hold.
NCSeries free_product(const NCSeries& f, const NCSeries& g);

/// Series of l1 majorants of the coefficients (real, nonnegative).
NCSeries termwise_majorant(const NCSeries& series);

}  // namespace ncps
