#pragma once

#include <array>
#include <vector>

#include "ncps/ideal.hpp"
#include "ncps/morphism.hpp"
#include "ncps/recenter.hpp"

namespace ncps {

/// A local model: an ambient dimension, sample points of the zero set, and
/// the ideal generators cutting it out. The abelianized generators must
/// vanish at every sample point.
struct LocalModel {
  unsigned vars;
  unsigned degree;
  std::vector<Point> sample_points;
  std::vector<NCSeries> ideal_generators;
};

/// Builds the local model whose ideal is generated by the commlike lifts of
/// the given commutative generators. Throws when a generator fails to vanish
/// at a sample point.
LocalModel split_local_model(const std::vector<CommSeries>& commutative_generators,
                             const std::vector<Point>& sample_points, unsigned degree);

/// The supermanifold relation ideal on n even letters x_1..x_n and r odd
/// letters y_1..y_r (letters n+1..n+r): commutators [x_i,x_j] and [x_i,y_j],
/// plus anticommutators y_i y_j + y_j y_i for i <= j (so 2 y_i^2 appears).
CompletedIdealBasis super_relation_ideal(unsigned n, unsigned r, unsigned degree);

/// A germ of a chart transition of NC projective space: the algebra map
/// C{chart_to coords - image} -> C{chart_from coords - at}.
struct TransitionGerm {
  unsigned chart_from;
  unsigned chart_to;
  Point at;      // base point in chart_from coordinates
  Point image;   // its classical image in chart_to coordinates
  NCMorphism map;
};

/// The transition germ between charts of NC P^n at a base point given in
/// chart_from coordinates. Every division places the inverted coordinate's
/// expansion on the left; the expansions come from invert_unit. Throws when
/// the coordinate to invert vanishes at the base point.
TransitionGerm projective_transition(unsigned n, unsigned chart_from, unsigned chart_to,
                                     const Point& at, unsigned degree);

struct CocycleReport {
  bool ok;                 // pair inverses and triple compatibility all hold
  unsigned agree_degree;   // largest degree to which everything agrees
  bool points_match;       // classical images agree on the composite routes
};

/// Verifies phi_ji o phi_ij = id (both orders) for each chart pair of the
/// triple and the cocycle identity through the middle chart, modulo
/// degree+1. The base point is given in chart charts[0] coordinates and must
/// have the relevant coordinates nonzero.
CocycleReport check_cocycle(unsigned n, std::array<unsigned, 3> charts, const Point& at,
                            unsigned degree);

/// The commlike homogeneous lift of a homogeneous commutative polynomial.
/// Throws for non-homogeneous input.
NCSeries homogeneous_lift(const CommSeries& f);

}  // namespace ncps
