#include "ncps/recenter.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ncps {

Polydisk::Polydisk(Point c, std::vector<Rational> r)
    : center(std::move(c)), radii(std::move(r)) {
  if (radii.size() != center.dim())
    throw std::invalid_argument("polydisk radii/center dimension mismatch");
  for (const Rational& radius : radii)
    if (radius <= 0) throw std::invalid_argument("polydisk radii must be positive");
}

bool Polydisk::contains(const Point& q) const {
  if (q.dim() != center.dim())
    throw std::invalid_argument("point/polydisk dimension mismatch");
  for (unsigned k = 0; k < center.dim(); ++k) {
    Scalar delta = q[k] - center[k];
    if (delta.majorant() >= radii[k]) return false;
  }
  return true;
}

Germ::Germ(Point base_point, NCSeries s) : base(std::move(base_point)), series(std::move(s)) {
  if (series.vars() != base.dim())
    throw std::invalid_argument("germ series/base dimension mismatch");
}

Scalar coefficient_at(const Germ& f, const Point& q, const Word& word) {
  if (q.dim() != f.base.dim())
    throw std::invalid_argument("recentring point has wrong dimension");
  std::vector<Scalar> delta(q.dim());
  for (unsigned k = 0; k < q.dim(); ++k) delta[k] = q[k] - f.base[k];
  Scalar sum;
  for (const auto& [stored, c] : f.series.terms()) {
    if (stored.length() < word.length()) continue;
    for (const Embedding& e : embeddings(word, stored)) {
      Word rest = delete_along(stored, e);
      Scalar mono(1);
      for (Letter l : rest.letters()) mono *= delta[l - 1];
      sum += c * mono;
    }
  }
  return sum;
}

Germ recenter(const Germ& f, const Point& q, unsigned degree) {
  if (q.dim() != f.base.dim())
    throw std::invalid_argument("recentring point has wrong dimension");
  std::vector<Scalar> delta(q.dim());
  for (unsigned k = 0; k < q.dim(); ++k) delta[k] = q[k] - f.base[k];
  NCSeries out(f.series.vars(), degree);
  // one pass per stored word: every position subset S contributes a_I times
  // the evaluated complement to the coefficient of the subword I|S. This
  // visits each embedding of each target word exactly once.
  for (const auto& [stored, c] : f.series.terms()) {
    std::size_t len = stored.length();
    if (len >= 8 * sizeof(std::size_t))
      throw std::invalid_argument("word too long to recenter");
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) > degree) continue;
      std::vector<Letter> kept;
      Scalar mono = c;
      for (std::size_t pos = 0; pos < len; ++pos) {
        if (mask & (std::size_t{1} << pos))
          kept.push_back(stored[pos]);
        else
          mono *= delta[stored[pos] - 1];
      }
      out.add_term(Word(std::move(kept)), mono);
    }
  }
  return Germ(q, std::move(out));
}

Scalar evaluate(const Germ& f, const Point& q) {
  if (q.dim() != f.base.dim())
    throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<Scalar> delta(q.dim());
  for (unsigned k = 0; k < q.dim(); ++k) delta[k] = q[k] - f.base[k];
  return ab(f.series).evaluate(delta);
}

std::optional<ConsistencyViolation> check_family_consistency(
    const LocalFunctionFamily& family, unsigned degree) {
  for (std::size_t a = 0; a < family.entries.size(); ++a) {
    for (std::size_t b = 0; b < family.entries.size(); ++b) {
      if (a == b) continue;
      const auto& source = family.entries[a];
      const auto& target = family.entries[b];
      if (!source.disk.contains(target.germ.base)) continue;
      Germ moved = recenter(source.germ, target.germ.base, degree);
      NCSeries expected = moved.series.truncated(degree);
      NCSeries found = target.germ.series.truncated(degree);
      if (expected == found) continue;
      NCSeries diff = expected - found;
      const Word& word = diff.terms().begin()->first;
      return ConsistencyViolation{a, b, word, expected.coefficient(word),
                                  found.coefficient(word)};
    }
  }
  return std::nullopt;
}

}  // namespace ncps
