#include "ncps/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncps {

LocalModel split_local_model(const std::vector<CommSeries>& commutative_generators,
                             const std::vector<Point>& sample_points, unsigned degree) {
  unsigned vars = commutative_generators.empty() ? (sample_points.empty()
                                                        ? 0
                                                        : sample_points.front().dim())
                                                 : commutative_generators.front().vars();
  LocalModel model{vars, degree, sample_points, {}};
  for (const CommSeries& g : commutative_generators) {
    if (g.vars() != vars)
      throw std::invalid_argument("generator over wrong variable count");
    for (const Point& p : sample_points) {
      if (p.dim() != vars)
        throw std::invalid_argument("sample point has wrong dimension");
      if (!g.evaluate(p.coords).is_zero())
        throw std::invalid_argument("generator does not vanish at a sample point");
    }
    if (!g.is_zero()) model.ideal_generators.push_back(unab(g.truncated(degree)));
  }
  return model;
}

CompletedIdealBasis super_relation_ideal(unsigned n, unsigned r, unsigned degree) {
  unsigned vars = n + r;
  std::vector<NCSeries> generators;
  for (Letter i = 1; i <= n; ++i)
    for (Letter j = i + 1; j <= n; ++j)
      generators.push_back(commutator(vars, degree, i, j));
  for (Letter i = 1; i <= n; ++i)
    for (Letter j = 1; j <= r; ++j)
      generators.push_back(commutator(vars, degree, i, n + j));
  for (Letter i = 1; i <= r; ++i)
    for (Letter j = i; j <= r; ++j) {
      NCSeries anti(vars, degree);
      anti.add_term(Word{n + i, n + j}, Scalar(1));
      anti.add_term(Word{n + j, n + i}, Scalar(1));
      generators.push_back(std::move(anti));
    }
  return CompletedIdealBasis(std::move(generators), vars, degree);
}

namespace {

// chart k of P^n carries the coordinates z_l / z_k, l != k, ascending in l
std::vector<unsigned> chart_labels(unsigned n, unsigned chart) {
  std::vector<unsigned> labels;
  for (unsigned l = 0; l <= n; ++l)
    if (l != chart) labels.push_back(l);
  return labels;
}

Letter label_position(const std::vector<unsigned>& labels, unsigned label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  return static_cast<Letter>(it - labels.begin()) + 1;
}

}  // namespace

TransitionGerm projective_transition(unsigned n, unsigned chart_from, unsigned chart_to,
                                     const Point& at, unsigned degree) {
  if (chart_from > n || chart_to > n)
    throw std::invalid_argument("chart index exceeds dimension");
  if (chart_from == chart_to)
    throw std::invalid_argument("transition needs two distinct charts");
  if (at.dim() != n) throw std::invalid_argument("base point has wrong dimension");

  std::vector<unsigned> from_labels = chart_labels(n, chart_from);
  std::vector<unsigned> to_labels = chart_labels(n, chart_to);
  Letter inverted = label_position(from_labels, chart_to);
  const Scalar& pivot_value = at[inverted - 1];
  if (pivot_value.is_zero())
    throw std::invalid_argument("base point outside the chart overlap: coordinate " +
                                std::to_string(inverted) + " vanishes");

  // expansion of the inverted coordinate around the base point
  NCSeries pivot_series =
      NCSeries::variable(n, degree, inverted) + NCSeries::constant(n, degree, pivot_value);
  NCSeries pivot_inverse = invert_unit(pivot_series, degree);

  std::vector<NCSeries> images;
  std::vector<Scalar> image_coords;
  images.reserve(n);
  for (unsigned label : to_labels) {
    if (label == chart_from) {
      Scalar q = Scalar(1) / pivot_value;
      images.push_back(pivot_inverse - NCSeries::constant(n, degree, q));
      image_coords.push_back(q);
      continue;
    }
    Letter source = label_position(from_labels, label);
    const Scalar& source_value = at[source - 1];
    NCSeries coordinate =
        NCSeries::variable(n, degree, source) + NCSeries::constant(n, degree, source_value);
    Scalar q = source_value / pivot_value;
    // quotient convention: the inverse factor multiplies on the left
    images.push_back(pivot_inverse * coordinate - NCSeries::constant(n, degree, q));
    image_coords.push_back(q);
  }
  return TransitionGerm{chart_from, chart_to, at, Point(std::move(image_coords)),
                        NCMorphism(n, n, degree, std::move(images))};
}

CocycleReport check_cocycle(unsigned n, std::array<unsigned, 3> charts, const Point& at,
                            unsigned degree) {
  const auto [i, j, k] = charts;
  TransitionGerm t_ij = projective_transition(n, i, j, at, degree);
  TransitionGerm t_jk = projective_transition(n, j, k, t_ij.image, degree);
  TransitionGerm t_ik = projective_transition(n, i, k, at, degree);

  bool points_match = t_jk.image == t_ik.image;

  auto pair_identity = [&](const TransitionGerm& fwd) {
    TransitionGerm back = projective_transition(n, fwd.chart_to, fwd.chart_from,
                                                fwd.image, degree);
    bool centers = back.image == fwd.at;
    NCMorphism id = NCMorphism::identity(n, degree);
    return centers && compose(back.map, fwd.map) == id && compose(fwd.map, back.map) == id;
  };

  bool pairs_ok = pair_identity(t_ij) && pair_identity(t_jk) && pair_identity(t_ik);

  // route through the middle chart vs the direct germ
  NCMorphism via_middle = compose(t_jk.map, t_ij.map);
  unsigned agree = 0;
  for (unsigned d = 0; d <= degree; ++d) {
    bool same = points_match;
    for (unsigned img = 0; same && img < n; ++img)
      same = via_middle.images()[img].truncated(d) == t_ik.map.images()[img].truncated(d);
    if (!same) break;
    agree = d;
  }
  bool triple_ok = points_match && via_middle == t_ik.map;
  return CocycleReport{pairs_ok && triple_ok, agree, points_match};
}

NCSeries homogeneous_lift(const CommSeries& f) {
  unsigned degree_of_terms = 0;
  bool first = true;
  for (const auto& [word, c] : f.terms()) {
    if (first) {
      degree_of_terms = static_cast<unsigned>(word.length());
      first = false;
    } else if (word.length() != degree_of_terms) {
      throw std::invalid_argument("polynomial is not homogeneous");
    }
  }
  return unab(f);
}

}  // namespace ncps
