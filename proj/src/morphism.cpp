#include "ncps/morphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncps {

ScalarMatrix ScalarMatrix::identity(unsigned size) {
  ScalarMatrix out(size, size);
  for (unsigned k = 0; k < size; ++k) out.at(k, k) = Scalar(1);
  return out;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix out(rows_, other.cols_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (unsigned c = 0; c < other.cols_; ++c)
        out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& vec) const {
  if (vec.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Scalar> out(rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c) out[r] += at(r, c) * vec[c];
  return out;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  ScalarMatrix work = *this;
  ScalarMatrix inv = identity(rows_);
  for (unsigned col = 0; col < cols_; ++col) {
    unsigned pivot = col;
    while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return std::nullopt;
    if (pivot != col)
      for (unsigned c = 0; c < cols_; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Scalar lead = work.at(col, col);
    for (unsigned c = 0; c < cols_; ++c) {
      work.at(col, c) /= lead;
      inv.at(col, c) /= lead;
    }
    for (unsigned r = 0; r < rows_; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Scalar factor = work.at(r, col);
      for (unsigned c = 0; c < cols_; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

std::string ScalarMatrix::str() const {
  std::string out = "[";
  for (unsigned r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (unsigned c = 0; c < cols_; ++c) {
      if (c) out += ",";
      out += scalar_str(at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

NCMorphism::NCMorphism(unsigned source_vars, unsigned target_vars, unsigned degree,
                       std::vector<NCSeries> images)
    : source_vars_(source_vars),
      target_vars_(target_vars),
      degree_(degree),
      images_(std::move(images)) {
  if (images_.size() != source_vars_)
    throw std::invalid_argument("morphism needs one image per source variable");
  for (NCSeries& img : images_) {
    if (img.vars() != target_vars_)
      throw std::invalid_argument("image over wrong variable count");
    if (img.degree() != degree_) img = img.truncated(degree_);
    if (img.order() < 1)
      throw std::invalid_argument("morphism image must have order >= 1");
  }
}

NCMorphism NCMorphism::identity(unsigned vars, unsigned degree) {
  std::vector<NCSeries> images;
  images.reserve(vars);
  for (Letter v = 1; v <= vars; ++v)
    images.push_back(NCSeries::variable(vars, degree, v));
  return NCMorphism(vars, vars, degree, std::move(images));
}

NCSeries substitute(const NCSeries& g, const NCMorphism& phi) {
  if (g.vars() != phi.source_vars())
    throw std::invalid_argument("series/morphism variable count mismatch");
  unsigned degree = std::min(g.degree(), phi.degree());
  NCSeries result(phi.target_vars(), degree);
  // prefix products of images, shared across the words of g
  std::map<Word, NCSeries> cache;
  cache.emplace(Word{}, NCSeries::constant(phi.target_vars(), degree, Scalar(1)));
  auto product_for = [&](const Word& word, auto&& self) -> const NCSeries& {
    auto it = cache.find(word);
    if (it != cache.end()) return it->second;
    std::vector<Letter> prefix(word.letters().begin(), word.letters().end() - 1);
    const NCSeries& head = self(Word(std::move(prefix)), self);
    NCSeries prod = head * phi.image(word[word.length() - 1]);
    return cache.emplace(word, std::move(prod)).first->second;
  };
  for (const auto& [word, c] : g.terms()) {
    if (word.length() > degree) break;  // images have order >= 1
    result += c * product_for(word, product_for);
  }
  return result;
}

NCMorphism compose(const NCMorphism& f, const NCMorphism& g) {
  if (f.target_vars() != g.source_vars())
    throw std::invalid_argument("morphism chain mismatch");
  unsigned degree = std::min(f.degree(), g.degree());
  std::vector<NCSeries> images;
  images.reserve(f.source_vars());
  for (const NCSeries& img : f.images()) images.push_back(substitute(img, g));
  return NCMorphism(f.source_vars(), g.target_vars(), degree, std::move(images));
}

ScalarMatrix jacobian(const NCMorphism& phi) {
  if (phi.source_vars() != phi.target_vars())
    throw std::invalid_argument("jacobian requires an endomorphism");
  unsigned n = phi.source_vars();
  ScalarMatrix out(n, n);
  for (unsigned row = 0; row < n; ++row)
    for (Letter col = 1; col <= n; ++col)
      out.at(row, col - 1) = phi.images()[row].coefficient(Word{col});
  return out;
}

bool is_automorphism(const NCMorphism& phi) { return jacobian(phi).invertible(); }

NCMorphism invert_morphism(const NCMorphism& phi, unsigned degree) {
  ScalarMatrix jac = jacobian(phi);
  auto jac_inv = jac.inverse();
  if (!jac_inv)
    throw std::domain_error("morphism is not invertible, singular Jacobian " + jac.str());
  unsigned n = phi.source_vars();
  unsigned d = std::min(degree, phi.degree());

  std::vector<NCSeries> inverse_images(n, NCSeries(n, d));
  for (unsigned row = 0; row < n; ++row)
    for (Letter col = 1; col <= n; ++col)
      inverse_images[row].set(Word{col}, jac_inv->at(row, col - 1));

  // One n x n solve per word: the degree-k defect of psi(f_nu) is linear in
  // the unknown degree-k coefficients through the Jacobian alone.
  for (unsigned k = 2; k <= d; ++k) {
    NCMorphism psi(n, n, d, inverse_images);
    std::vector<NCSeries> residuals;
    residuals.reserve(n);
    for (const NCSeries& img : phi.images()) residuals.push_back(substitute(img, psi));
    std::map<Word, std::vector<Scalar>> defects;
    for (unsigned nu = 0; nu < n; ++nu)
      for (const auto& [word, c] : residuals[nu].terms()) {
        if (word.length() != k) continue;
        auto [it, inserted] = defects.try_emplace(word, std::vector<Scalar>(n));
        it->second[nu] = c;
      }
    for (const auto& [word, defect] : defects) {
      std::vector<Scalar> correction = jac_inv->apply(defect);
      for (unsigned i = 0; i < n; ++i)
        inverse_images[i].add_term(word, -correction[i]);
    }
  }
  return NCMorphism(n, n, d, std::move(inverse_images));
}

NCSeries invert_unit(const NCSeries& f, unsigned degree) {
  if (f.order() >= 1)
    throw std::domain_error("not a unit: series has zero constant term");
  unsigned d = std::min(degree, f.degree());
  Scalar lead = f.coefficient(Word{});
  // f = lead * (1 - u) with order(u) >= 1; invert by the geometric sum
  NCSeries one = NCSeries::constant(f.vars(), d, Scalar(1));
  NCSeries u = one - Scalar(1) / lead * f.truncated(d);
  NCSeries sum = one;
  for (unsigned j = 0; j < d; ++j) sum = one + u * sum;
  return Scalar(1) / lead * sum;
}

NCMorphism lift_commutative_morphism(const std::vector<CommSeries>& images) {
  if (images.empty()) throw std::invalid_argument("empty commutative morphism");
  unsigned target = images.front().vars();
  unsigned degree = images.front().degree();
  std::vector<NCSeries> lifted;
  lifted.reserve(images.size());
  for (const CommSeries& img : images) {
    if (img.vars() != target || img.degree() != degree)
      throw std::invalid_argument("commutative images must share vars and degree");
    if (img.order() < 1)
      throw std::invalid_argument("morphism image must have order >= 1");
    lifted.push_back(unab(img));
  }
  return NCMorphism(static_cast<unsigned>(images.size()), target, degree,
                    std::move(lifted));
}

}  // namespace ncps
