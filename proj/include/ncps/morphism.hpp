#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncps/series.hpp"

namespace ncps {

/// Dense matrix over the scalar field with exact elimination.
class ScalarMatrix {
 public:
  ScalarMatrix(unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ScalarMatrix identity(unsigned size);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  Scalar& at(unsigned r, unsigned c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(unsigned r, unsigned c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  ScalarMatrix operator*(const ScalarMatrix& other) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& vec) const;

  /// Gauss-Jordan inverse; nullopt when singular. Square matrices only.
  std::optional<ScalarMatrix> inverse() const;
  bool invertible() const { return inverse().has_value(); }

  bool operator==(const ScalarMatrix& other) const = default;

  std::string str() const;  // [[a,b],[c,d]]

 private:
  unsigned rows_, cols_;
  std::vector<Scalar> data_;
};

/// The local algebra homomorphism C[[x_1..x_n - p]] -> C[[y_1..y_m - q]]
/// determined by g -> g(f_1,...,f_n): image k is the series substituted for
/// the k-th source variable. Every image has order >= 1.
class NCMorphism {
 public:
  NCMorphism(unsigned source_vars, unsigned target_vars, unsigned degree,
             std::vector<NCSeries> images);

  static NCMorphism identity(unsigned vars, unsigned degree);

  unsigned source_vars() const { return source_vars_; }
  unsigned target_vars() const { return target_vars_; }
  unsigned degree() const { return degree_; }
  const std::vector<NCSeries>& images() const { return images_; }
  const NCSeries& image(Letter source_var) const { return images_[source_var - 1]; }

  bool operator==(const NCMorphism& other) const = default;

 private:
  unsigned source_vars_, target_vars_, degree_;
  std::vector<NCSeries> images_;
};

/// g(f_1,...,f_n): substitutes phi's images for g's letters and expands,
/// truncating at min(g.degree, phi.degree).
NCSeries substitute(const NCSeries& g, const NCMorphism& phi);

/// Morphism whose image of each source variable is substitute(f.image, g);
/// as ring maps this is "apply f, then g". Requires f.target_vars ==
/// g.source_vars.
NCMorphism compose(const NCMorphism& f, const NCMorphism& g);

/// Matrix of degree-1 coefficients (row = image, column = letter).
/// Endomorphisms only.
ScalarMatrix jacobian(const NCMorphism& phi);

/// An endomorphism is an automorphism iff its Jacobian is invertible.
bool is_automorphism(const NCMorphism& phi);

/// Two-sided inverse modulo degree+1, built degree by degree: at each word
/// the correction solves one n-by-n linear system against the Jacobian.
/// Throws std::domain_error naming the Jacobian when it is singular.
NCMorphism invert_morphism(const NCMorphism& phi, unsigned degree);

/// Multiplicative inverse of a series with nonzero constant term, via the
/// truncated geometric sum f^-1 = c^-1 sum_j (1 - f/c)^j.
/// Throws std::domain_error when order(f) >= 1.
NCSeries invert_unit(const NCSeries& f, unsigned degree);

/// Lifts a commutative morphism through unab, image by image.
NCMorphism lift_commutative_morphism(const std::vector<CommSeries>& images);

}  // namespace ncps
