#pragma once

#include <optional>

#include "homform.hpp"
#include "pluecker.hpp"
#include "schemes.hpp"

namespace hilb {

// Canonical basis (rows of coefficient vectors) of the degree-m forms whose
// local jet at every component lies in that component's ideal, i.e. the
// global sections of the twisted ideal sheaf in coordinates.
QMat vanishing_forms(const PointedScheme& xi, int m);

int h0_ideal_twist(const PointedScheme& xi, int m);

bool form_vanishes_on(const PointedScheme& xi, const HomForm& f);

// True iff the scheme is contained in the zero locus of the degree-1 form
// as a subscheme (every local ideal contains the local equation of the
// line), which is strictly stronger than collinear support.
bool scheme_in_line(const PointedScheme& xi, const HomForm& line);

/// Image of a scheme under the sections-of-degree-m map: the vanishing
/// subspace together with its normalized coordinate vector.
struct PhiImage {
  int twist = 0;
  QMat subspace;
  PlueckerVector coords;
};

PhiImage phi_map(const PointedScheme& xi, int m);
/// Standard twist m = length(xi).
PhiImage phi_map(const PointedScheme& xi);

// Whether every length-(k+1) subscheme imposes independent conditions on the
// degree-a plane curves. The numerical test below decides this exactly in
// its range of applicability.
bool kva_applicable(int a, int k);

/// Least curve degree d >= 1 witnessing failure, or nullopt when the bundle
/// passes. Throws DomainError when (a+3)^2 <= 4k+5 (test not applicable).
std::optional<int> kva_violation(int a, int k);

enum class FiberKind { Point, Line };

/// Fiber type of the degree-(length-1) sections map at the scheme. The
/// fiber is a positive-dimensional family exactly when one line divides
/// every section, and then the line is returned.
struct PhiFiber {
  FiberKind kind = FiberKind::Point;
  std::optional<HomForm> line; // normalized, set iff kind == Line
  QMat subspace;               // the degree-(length-1) sections
};

/// Requires length >= 2 and the expected section count n(n-1)/2 (throws
/// DomainError otherwise, naming the defect).
PhiFiber phi1_fiber(const PointedScheme& xi);

} // namespace hilb
