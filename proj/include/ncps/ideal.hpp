#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ncps/series.hpp"

namespace ncps {

/// A finite element of the enveloping algebra acting by sandwich maps:
/// f -> sum c * u * f * v. Terms with equal (u, v) merge; zeros are pruned.
class EnvElement {
 public:
  EnvElement() = default;

  static EnvElement sandwich(Word left, Word right, const Scalar& c);
  static EnvElement one();  // the identity sandwich (1, 1, 1)

  EnvElement& add(const Word& left, const Word& right, const Scalar& c);
  EnvElement& operator+=(const EnvElement& other);
  EnvElement& scale(const Scalar& factor);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }

  bool operator==(const EnvElement& other) const = default;

 private:
  std::map<std::pair<Word, Word>, Scalar> terms_;
};

/// sum c * u * f * v over the element's terms, truncated at f's degree.
NCSeries apply_env(const EnvElement& e, const NCSeries& f);

/// A membership certificate: for each generator index, the enveloping
/// combination applied to it. apply() reproduces the certified series.
class IdealCertificate {
 public:
  IdealCertificate() = default;

  void add(std::size_t generator, const Word& left, const Word& right, const Scalar& c);
  void add_scaled(const IdealCertificate& other, const Scalar& factor);
  void scale(const Scalar& factor);

  bool empty() const { return parts_.empty(); }
  const std::map<std::size_t, EnvElement>& parts() const { return parts_; }

  /// sum over generators of apply_env(part, generator), truncated at `degree`.
  NCSeries apply(std::span<const NCSeries> generators, unsigned vars,
                 unsigned degree) const;

 private:
  std::map<std::size_t, EnvElement> parts_;
};

/// The degree-D part of the completed two-sided ideal generated by the given
/// series: the linear span of all truncated sandwiches u*g*v. Kept as a
/// reduced echelon basis with graded-lex-maximal pivot words, so membership,
/// certificates, and quotient normal forms are single reduction passes.
class CompletedIdealBasis {
 public:
  CompletedIdealBasis(std::vector<NCSeries> generators, unsigned vars, unsigned degree);

  unsigned vars() const { return vars_; }
  unsigned degree() const { return degree_; }
  const std::vector<NCSeries>& generators() const { return generators_; }

  struct Element {
    Word pivot;
    NCSeries series;       // monic at pivot, no other pivot word occurs
    IdealCertificate certificate;
  };

  /// Basis elements in ascending pivot order.
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t dimension() const { return elements_.size(); }

  struct Reduction {
    NCSeries remainder;
    IdealCertificate certificate;  // f == remainder + certificate.apply(...)
  };

  /// Eliminates every pivot word from f. Requires f.degree() <= degree().
  Reduction reduce(const NCSeries& f) const;

  bool contains(const NCSeries& f) const;

  /// The unique representative of f + ideal supported on non-pivot words.
  NCSeries normal_form(const NCSeries& f) const;

 private:
  void insert(NCSeries row, IdealCertificate certificate);

  unsigned vars_;
  unsigned degree_;
  std::vector<NCSeries> generators_;
  std::vector<Element> elements_;
};

/// x_i x_j - x_j x_i as a series.
NCSeries commutator(unsigned vars, unsigned degree, Letter i, Letter j);

/// Splits f into its commlike shadow unab(ab(f)) plus an explicit enveloping
/// combination of the commutators [x_i, x_j], i < j: one sandwich term per
/// adjacent transposition used to sort each word.
struct CommutatorReduction {
  NCSeries commlike;
  std::map<std::pair<Letter, Letter>, EnvElement> certificate;
};

CommutatorReduction commutator_reduce(const NCSeries& f);

}  // namespace ncps
