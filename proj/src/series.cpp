#include "ncps/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncps {

namespace {

void check_same_vars(unsigned a, unsigned b) {
  if (a != b)
    throw std::invalid_argument("variable count mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

}  // namespace

NCSeries NCSeries::constant(unsigned vars, unsigned degree, const Scalar& value) {
  NCSeries out(vars, degree);
  out.set(Word{}, value);
  return out;
}

NCSeries NCSeries::variable(unsigned vars, unsigned degree, Letter v) {
  NCSeries out(vars, degree);
  out.set(Word{v}, Scalar(1));
  return out;
}

NCSeries NCSeries::monomial(unsigned vars, unsigned degree, const Word& word,
                            const Scalar& value) {
  NCSeries out(vars, degree);
  out.set(word, value);
  return out;
}

void NCSeries::check_word(const Word& word) const {
  if (word.length() > degree_)
    throw std::invalid_argument("word length " + std::to_string(word.length()) +
                                " exceeds truncation degree " + std::to_string(degree_));
  for (Letter l : word.letters())
    if (l < 1 || l > vars_)
      throw std::invalid_argument("letter " + std::to_string(l) +
                                  " outside alphabet 1.." + std::to_string(vars_));
}

Scalar NCSeries::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar() : it->second;
}

NCSeries& NCSeries::set(const Word& word, const Scalar& value) {
  check_word(word);
  if (value.is_zero())
    terms_.erase(word);
  else
    terms_[word] = value;
  return *this;
}

NCSeries& NCSeries::add_term(const Word& word, const Scalar& value) {
  if (value.is_zero()) return *this;
  check_word(word);
  auto [it, inserted] = terms_.try_emplace(word, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

unsigned NCSeries::order() const {
  if (terms_.empty()) return kInfiniteOrder;
  return static_cast<unsigned>(terms_.begin()->first.length());
}

unsigned NCSeries::max_term_degree() const {
  if (terms_.empty()) return 0;
  return static_cast<unsigned>(terms_.rbegin()->first.length());
}

bool NCSeries::is_commlike() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_ordered(); });
}

NCSeries NCSeries::truncated(unsigned degree) const {
  NCSeries out(vars_, degree);
  for (const auto& [word, c] : terms_) {
    if (word.length() > degree) break;  // graded order: all later words are longer or equal length
    if (word.length() <= degree) out.terms_.emplace(word, c);
  }
  return out;
}

NCSeries NCSeries::opposite() const {
  NCSeries out(vars_, degree_);
  for (const auto& [word, c] : terms_) out.terms_.emplace(word.reversed(), c);
  return out;
}

NCSeries& NCSeries::operator+=(const NCSeries& other) {
  check_same_vars(vars_, other.vars_);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [word, c] : other.terms_) {
    if (word.length() > degree_) break;
    add_term(word, c);
  }
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& other) {
  check_same_vars(vars_, other.vars_);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [word, c] : other.terms_) {
    if (word.length() > degree_) break;
    add_term(word, -c);
  }
  return *this;
}

NCSeries operator+(NCSeries lhs, const NCSeries& rhs) { return lhs += rhs; }

NCSeries operator-(NCSeries lhs, const NCSeries& rhs) { return lhs -= rhs; }

NCSeries operator*(const NCSeries& lhs, const NCSeries& rhs) {
  check_same_vars(lhs.vars(), rhs.vars());
  unsigned degree = std::min(lhs.degree(), rhs.degree());
  NCSeries out(lhs.vars(), degree);
  for (const auto& [u, cu] : lhs.terms()) {
    if (u.length() > degree) break;
    for (const auto& [v, cv] : rhs.terms()) {
      if (u.length() + v.length() > degree) break;
      out.add_term(u + v, cu * cv);
    }
  }
  return out;
}

NCSeries operator*(const Scalar& scale, const NCSeries& series) {
  NCSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.add_term(word, scale * c);
  return out;
}

NCSeries operator*(const NCSeries& series, const Scalar& scale) {
  NCSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.add_term(word, c * scale);
  return out;
}

NCSeries operator-(const NCSeries& series) { return Scalar(-1) * series; }

CommSeries CommSeries::constant(unsigned vars, unsigned degree, const Scalar& value) {
  CommSeries out(vars, degree);
  out.set(Word{}, value);
  return out;
}

CommSeries CommSeries::variable(unsigned vars, unsigned degree, Letter v) {
  CommSeries out(vars, degree);
  out.set(Word{v}, Scalar(1));
  return out;
}

void CommSeries::check_word(const Word& word) const {
  if (!word.is_ordered())
    throw std::invalid_argument("commutative monomial key must be an ordered word");
  if (word.length() > degree_)
    throw std::invalid_argument("monomial degree " + std::to_string(word.length()) +
                                " exceeds truncation degree " + std::to_string(degree_));
  for (Letter l : word.letters())
    if (l < 1 || l > vars_)
      throw std::invalid_argument("letter " + std::to_string(l) +
                                  " outside alphabet 1.." + std::to_string(vars_));
}

Scalar CommSeries::coefficient(const Word& ordered_word) const {
  auto it = terms_.find(ordered_word);
  return it == terms_.end() ? Scalar() : it->second;
}

CommSeries& CommSeries::set(const Word& ordered_word, const Scalar& value) {
  check_word(ordered_word);
  if (value.is_zero())
    terms_.erase(ordered_word);
  else
    terms_[ordered_word] = value;
  return *this;
}

CommSeries& CommSeries::add_term(const Word& ordered_word, const Scalar& value) {
  if (value.is_zero()) return *this;
  check_word(ordered_word);
  auto [it, inserted] = terms_.try_emplace(ordered_word, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

unsigned CommSeries::order() const {
  if (terms_.empty()) return kInfiniteOrder;
  return static_cast<unsigned>(terms_.begin()->first.length());
}

unsigned CommSeries::max_term_degree() const {
  if (terms_.empty()) return 0;
  return static_cast<unsigned>(terms_.rbegin()->first.length());
}

CommSeries CommSeries::truncated(unsigned degree) const {
  CommSeries out(vars_, degree);
  for (const auto& [word, c] : terms_) {
    if (word.length() > degree) break;
    out.terms_.emplace(word, c);
  }
  return out;
}

std::vector<unsigned> CommSeries::exponents(const Word& ordered_word) const {
  std::vector<unsigned> e(vars_, 0);
  for (Letter l : ordered_word.letters()) ++e[l - 1];
  return e;
}

Scalar CommSeries::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Scalar sum;
  for (const auto& [word, c] : terms_) {
    Scalar mono(1);
    for (Letter l : word.letters()) mono *= point[l - 1];
    sum += c * mono;
  }
  return sum;
}

CommSeries CommSeries::shift(std::span<const Scalar> offset) const {
  if (offset.size() != vars_)
    throw std::invalid_argument("shift offset has wrong dimension");
  CommSeries out(vars_, degree_);
  for (const auto& [word, c] : terms_) {
    CommSeries mono = CommSeries::constant(vars_, degree_, c);
    for (Letter l : word.letters()) {
      CommSeries factor = CommSeries::variable(vars_, degree_, l);
      factor.add_term(Word{}, offset[l - 1]);
      mono = mono * factor;
    }
    out += mono;
  }
  return out;
}

CommSeries& CommSeries::operator+=(const CommSeries& other) {
  check_same_vars(vars_, other.vars_);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [word, c] : other.terms_) {
    if (word.length() > degree_) break;
    add_term(word, c);
  }
  return *this;
}

CommSeries& CommSeries::operator-=(const CommSeries& other) {
  check_same_vars(vars_, other.vars_);
  if (other.degree_ < degree_) *this = truncated(other.degree_);
  for (const auto& [word, c] : other.terms_) {
    if (word.length() > degree_) break;
    add_term(word, -c);
  }
  return *this;
}

CommSeries operator+(CommSeries lhs, const CommSeries& rhs) { return lhs += rhs; }

CommSeries operator-(CommSeries lhs, const CommSeries& rhs) { return lhs -= rhs; }

CommSeries operator*(const CommSeries& lhs, const CommSeries& rhs) {
  check_same_vars(lhs.vars(), rhs.vars());
  unsigned degree = std::min(lhs.degree(), rhs.degree());
  CommSeries out(lhs.vars(), degree);
  for (const auto& [u, cu] : lhs.terms()) {
    if (u.length() > degree) break;
    for (const auto& [v, cv] : rhs.terms()) {
      if (u.length() + v.length() > degree) break;
      out.add_term((u + v).sorted(), cu * cv);
    }
  }
  return out;
}

CommSeries operator*(const Scalar& scale, const CommSeries& series) {
  CommSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.add_term(word, scale * c);
  return out;
}

CommSeries operator-(const CommSeries& series) { return Scalar(-1) * series; }

CommSeries ab(const NCSeries& series) {
  CommSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.add_term(word.sorted(), c);
  return out;
}

NCSeries unab(const CommSeries& series) {
  NCSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.set(word, c);
  return out;
}

NCSeries sum_family(unsigned vars, unsigned degree, std::span<const NCSeries> family) {
  NCSeries out(vars, degree);
  for (const NCSeries& h : family) out += h;
  return out;
}

NCSeries extend_alphabet(const NCSeries& series, unsigned new_vars) {
  if (new_vars < series.vars())
    throw std::invalid_argument("extend_alphabet cannot shrink the alphabet");
  NCSeries out(new_vars, series.degree());
  for (const auto& [word, c] : series.terms()) out.set(word, c);
  return out;
}

NCSeries offset_letters(const NCSeries& series, unsigned offset, unsigned new_vars) {
  NCSeries out(new_vars, series.degree());
  for (const auto& [word, c] : series.terms()) {
    std::vector<Letter> shifted;
    shifted.reserve(word.length());
    for (Letter l : word.letters()) shifted.push_back(l + offset);
    out.set(Word(std::move(shifted)), c);
  }
  return out;
}

NCSeries free_product(const NCSeries& f, const NCSeries& g) {
  unsigned joined = f.vars() + g.vars();
  return extend_alphabet(f, joined) * offset_letters(g, f.vars(), joined);
}

NCSeries termwise_majorant(const NCSeries& series) {
  NCSeries out(series.vars(), series.degree());
  for (const auto& [word, c] : series.terms()) out.set(word, Scalar(c.majorant()));
  return out;
}

}  // namespace ncps
