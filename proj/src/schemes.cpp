#include "schemes.hpp"

#include "errors.hpp"
#include "qmat.hpp"

namespace hilb {

ProjPoint::ProjPoint(Rational x0, Rational x1, Rational x2)
    : x{std::move(x0), std::move(x1), std::move(x2)} {
  if (x[0] == 0 && x[1] == 0 && x[2] == 0)
    throw DomainError("projective point needs a nonzero coordinate");
}

bool ProjPoint::same_point(const ProjPoint& other) const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (x[i] * other.x[j] != x[j] * other.x[i]) return false;
  return true;
}

int ProjPoint::chart() const {
  int best = 0;
  Rational best_abs = abs(x[0]);
  for (int i = 1; i < 3; ++i) {
    Rational a = abs(x[i]);
    if (a > best_abs) {
      best = i;
      best_abs = a;
    }
  }
  return best;
}

std::array<Rational, 2> ProjPoint::affine(int chart) const {
  if (chart < 0 || chart > 2) throw DomainError("chart index out of range");
  if (x[chart] == 0)
    throw DomainError("point is not contained in the requested chart");
  std::array<Rational, 2> out;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == chart) continue;
    out[k++] = x[i] / x[chart];
  }
  return out;
}

std::string ProjPoint::to_string() const {
  return "(" + rational_to_string(x[0]) + " : " + rational_to_string(x[1]) +
         " : " + rational_to_string(x[2]) + ")";
}

LocalComponent::LocalComponent(ProjPoint p, int chart_index, IdealSubspace ideal)
    : point(std::move(p)), chart(chart_index), local(std::move(ideal)) {
  if (chart < 0 || chart > 2) throw DomainError("chart index out of range");
  if (point.x[chart] == 0)
    throw DomainError("component chart does not contain the point");
}

LocalComponent::LocalComponent(ProjPoint p, IdealSubspace ideal)
    : LocalComponent(p, p.chart(), std::move(ideal)) {}

PointedScheme::PointedScheme(std::vector<LocalComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw DomainError("scheme needs at least one component");
  for (size_t i = 0; i < components_.size(); ++i)
    for (size_t j = i + 1; j < components_.size(); ++j)
      if (components_[i].point.same_point(components_[j].point))
        throw DomainError("scheme components must have distinct support");
}

int PointedScheme::length() const {
  int total = 0;
  for (const auto& comp : components_) total += comp.length();
  return total;
}

PointedScheme reduced_scheme(const std::vector<ProjPoint>& points) {
  std::vector<LocalComponent> comps;
  comps.reserve(points.size());
  for (const auto& p : points)
    comps.emplace_back(p, IdealSubspace::maximal_ideal(TruncRing{1}));
  return PointedScheme(std::move(comps));
}

std::optional<std::array<Rational, 3>> support_line(const PointedScheme& s) {
  QMat coords(static_cast<int>(s.components().size()), 3);
  for (int i = 0; i < coords.rows(); ++i)
    for (int j = 0; j < 3; ++j) coords.at(i, j) = s.components()[i].point.x[j];
  QMat ker = coords.kernel();
  if (ker.rows() != 1) return std::nullopt;
  return std::array<Rational, 3>{ker.at(0, 0), ker.at(0, 1), ker.at(0, 2)};
}

} // namespace hilb
