#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ideals.hpp"
#include "rat.hpp"

namespace hilb {

// Point of the projective plane with exact rational coordinates.
struct ProjPoint {
  std::array<Rational, 3> x;

  ProjPoint(Rational x0, Rational x1, Rational x2);

  bool same_point(const ProjPoint& other) const;

  // Standard affine chart containing the point: the coordinate of largest
  // absolute value, lowest index on ties.
  int chart() const;

  // Affine coordinates in the given chart: the two remaining homogeneous
  // coordinates in index order, divided by the chart coordinate.
  std::array<Rational, 2> affine(int chart) const;

  std::string to_string() const;
};

// Component of a finite subscheme: a point together with the ideal of the
// component in local coordinates (u, v) centered at the point, read in the
// stated affine chart.
struct LocalComponent {
  ProjPoint point;
  int chart;
  IdealSubspace local;

  LocalComponent(ProjPoint p, int chart_index, IdealSubspace ideal);
  LocalComponent(ProjPoint p, IdealSubspace ideal);

  int length() const { return local.colength(); }
};

// Finite subscheme of the plane presented by its support and local ideals.
// The supporting points must be pairwise distinct.
class PointedScheme {
 public:
  explicit PointedScheme(std::vector<LocalComponent> components);

  const std::vector<LocalComponent>& components() const { return components_; }
  int length() const;

 private:
  std::vector<LocalComponent> components_;
};

// The reduced scheme on a list of distinct points.
PointedScheme reduced_scheme(const std::vector<ProjPoint>& points);

// Coefficients (l0, l1, l2) of the unique line through the support, if the
// support is collinear and spans a line. A single point (no unique line) and
// a non-degenerate support both yield nullopt.
std::optional<std::array<Rational, 3>> support_line(const PointedScheme& s);

} // namespace hilb
