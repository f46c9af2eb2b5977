#pragma once

#include <optional>
#include <vector>

#include "ncps/series.hpp"

namespace ncps {

/// A point of C^n with exact coordinates.
struct Point {
  std::vector<Scalar> coords;

  Point() = default;
  Point(std::initializer_list<Scalar> list) : coords(list) {}
  explicit Point(std::vector<Scalar> list) : coords(std::move(list)) {}

  unsigned dim() const { return static_cast<unsigned>(coords.size()); }
  const Scalar& operator[](std::size_t k) const { return coords[k]; }

  bool operator==(const Point& other) const = default;
};

/// Open polydisk P(center, radii). Containment is decided conservatively
/// with the l1 coefficient majorant standing in for the modulus.
struct Polydisk {
  Point center;
  std::vector<Rational> radii;

  Polydisk(Point c, std::vector<Rational> r);

  bool contains(const Point& q) const;
};

/// A series read as an element of C{x - base}: coefficients of (x-base)^I.
struct Germ {
  Point base;
  NCSeries series;

  Germ(Point base_point, NCSeries s);
};

/// The recentred coefficient a_J(q) = sum over stored words I and embeddings
/// of J into I of a_I * (q-base)^(I minus the embedded positions).
Scalar coefficient_at(const Germ& f, const Point& q, const Word& word);

/// Re-expands f around q: the germ at q whose coefficient at J is
/// coefficient_at(f, q, J), for all #J <= degree. Exact for polynomial data;
/// for truncated data the result is the truncation of the true recentring.
Germ recenter(const Germ& f, const Point& q, unsigned degree);

/// f(q) := (ab f)(q - base), the truncated partial sum of the underlying
/// commutative function.
Scalar evaluate(const Germ& f, const Point& q);

/// A finite family of germs with their polydisks of validity.
struct LocalFunctionFamily {
  struct Entry {
    Germ germ;
    Polydisk disk;
  };
  std::vector<Entry> entries;
};

struct ConsistencyViolation {
  std::size_t from;  // index of the germ that was recentred
  std::size_t to;    // index of the germ it was compared with
  Word word;
  Scalar expected;  // coefficient coming from recentring `from`
  Scalar found;     // coefficient stored in `to`
};

/// Checks the section condition pairwise: whenever germ b's base lies in
/// germ a's polydisk, recentring a to that base must reproduce b (compared
/// at truncation `degree`). Returns the first violation, or nullopt.
std::optional<ConsistencyViolation> check_family_consistency(
    const LocalFunctionFamily& family, unsigned degree);

}  // namespace ncps
