#include "ncps/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncps {

EnvElement EnvElement::sandwich(Word left, Word right, const Scalar& c) {
  EnvElement out;
  out.add(left, right, c);
  return out;
}

EnvElement EnvElement::one() { return sandwich(Word{}, Word{}, Scalar(1)); }

EnvElement& EnvElement::add(const Word& left, const Word& right, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto key = std::make_pair(left, right);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

EnvElement& EnvElement::operator+=(const EnvElement& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

EnvElement& EnvElement::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= factor;
  return *this;
}

NCSeries apply_env(const EnvElement& e, const NCSeries& f) {
  NCSeries out(f.vars(), f.degree());
  for (const auto& [key, c] : e.terms()) {
    const auto& [left, right] = key;
    for (const auto& [word, a] : f.terms()) {
      if (left.length() + word.length() + right.length() > f.degree()) continue;
      out.add_term(left + word + right, c * a);
    }
  }
  return out;
}

void IdealCertificate::add(std::size_t generator, const Word& left, const Word& right,
                           const Scalar& c) {
  if (c.is_zero()) return;
  auto& part = parts_[generator];
  part.add(left, right, c);
  if (part.is_zero()) parts_.erase(generator);
}

void IdealCertificate::add_scaled(const IdealCertificate& other, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [generator, env] : other.parts_)
    for (const auto& [key, c] : env.terms()) add(generator, key.first, key.second, c * factor);
}

void IdealCertificate::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    parts_.clear();
    return;
  }
  for (auto& [generator, env] : parts_) env.scale(factor);
}

NCSeries IdealCertificate::apply(std::span<const NCSeries> generators, unsigned vars,
                                 unsigned degree) const {
  NCSeries out(vars, degree);
  for (const auto& [generator, env] : parts_) {
    if (generator >= generators.size())
      throw std::invalid_argument("certificate names a missing generator");
    out += apply_env(env, generators[generator].truncated(degree));
  }
  return out;
}

CompletedIdealBasis::CompletedIdealBasis(std::vector<NCSeries> generators, unsigned vars,
                                         unsigned degree)
    : vars_(vars), degree_(degree), generators_(std::move(generators)) {
  for (const NCSeries& g : generators_) {
    if (g.vars() != vars_)
      throw std::invalid_argument("generator over wrong variable count");
    if (g.is_zero()) throw std::invalid_argument("zero ideal generator");
  }
  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    const NCSeries g = generators_[gi].truncated(degree_);
    if (g.is_zero()) continue;  // generator entirely above the truncation
    unsigned ord = g.order();
    unsigned room = degree_ - ord;
    for (const Word& left : words_up_to(vars_, room)) {
      unsigned rest = room - static_cast<unsigned>(left.length());
      for (const Word& right : words_up_to(vars_, rest)) {
        NCSeries row(vars_, degree_);
        for (const auto& [word, c] : g.terms()) {
          if (left.length() + word.length() + right.length() > degree_) continue;
          row.add_term(left + word + right, c);
        }
        if (row.is_zero()) continue;
        IdealCertificate cert;
        cert.add(gi, left, right, Scalar(1));
        insert(std::move(row), std::move(cert));
      }
    }
  }
}

void CompletedIdealBasis::insert(NCSeries row, IdealCertificate certificate) {
  // eliminate every existing pivot word from the incoming row; basis rows
  // are already reduced, so one pass is complete
  for (const Element& e : elements_) {
    Scalar c = row.coefficient(e.pivot);
    if (c.is_zero()) continue;
    row -= c * e.series;
    certificate.add_scaled(e.certificate, -c);
  }
  if (row.is_zero()) return;
  Word pivot = row.terms().rbegin()->first;
  Scalar inv = Scalar(1) / row.coefficient(pivot);
  row = inv * row;
  certificate.scale(inv);
  // back-substitute the fresh pivot out of the stored rows
  for (Element& e : elements_) {
    Scalar c = e.series.coefficient(pivot);
    if (c.is_zero()) continue;
    e.series -= c * row;
    e.certificate.add_scaled(certificate, -c);
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), pivot,
                             [](const Element& e, const Word& w) { return e.pivot < w; });
  elements_.insert(it, Element{pivot, std::move(row), std::move(certificate)});
}

CompletedIdealBasis::Reduction CompletedIdealBasis::reduce(const NCSeries& f) const {
  if (f.vars() != vars_)
    throw std::invalid_argument("series over wrong variable count");
  if (f.degree() > degree_)
    throw std::invalid_argument("series degree exceeds ideal basis degree");
  NCSeries remainder = f;
  IdealCertificate certificate;
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
    if (it->pivot.length() > remainder.degree()) continue;
    Scalar c = remainder.coefficient(it->pivot);
    if (c.is_zero()) continue;
    remainder -= c * it->series;
    certificate.add_scaled(it->certificate, c);
  }
  return Reduction{std::move(remainder), std::move(certificate)};
}

bool CompletedIdealBasis::contains(const NCSeries& f) const {
  return reduce(f).remainder.is_zero();
}

NCSeries CompletedIdealBasis::normal_form(const NCSeries& f) const {
  return reduce(f).remainder;
}

NCSeries commutator(unsigned vars, unsigned degree, Letter i, Letter j) {
  NCSeries out(vars, degree);
  out.set(Word{i, j}, Scalar(1));
  out.add_term(Word{j, i}, Scalar(-1));
  return out;
}

CommutatorReduction commutator_reduce(const NCSeries& f) {
  CommutatorReduction out{NCSeries(f.vars(), f.degree()), {}};
  for (const auto& [word, c] : f.terms()) {
    // sort by adjacent transpositions, emitting one sandwich per swap:
    // u*(b,a)*v = u*(a,b)*v - u*[x_a,x_b]*v for b > a
    std::vector<Letter> current(word.letters());
    while (true) {
      std::size_t t = 0;
      while (t + 1 < current.size() && current[t] <= current[t + 1]) ++t;
      if (t + 1 >= current.size()) break;
      Letter b = current[t], a = current[t + 1];
      Word left(std::vector<Letter>(current.begin(), current.begin() + t));
      Word right(std::vector<Letter>(current.begin() + t + 2, current.end()));
      out.certificate[{a, b}].add(left, right, -c);
      current[t] = a;
      current[t + 1] = b;
    }
    out.commlike.add_term(Word(std::move(current)), c);
  }
  std::erase_if(out.certificate, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace ncps
