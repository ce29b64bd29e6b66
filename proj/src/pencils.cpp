#include "pencils.hpp"

#include <algorithm>

#include "errors.hpp"

namespace hilb {

namespace {

bool in_socle(const IdealSubspace& eta, const RingElem& f) {
  const TruncRing& ring = eta.ring();
  RingElem u = RingElem::monomial(ring, 1, 0);
  RingElem v = RingElem::monomial(ring, 0, 1);
  return eta.contains_element(u.times(f)) && eta.contains_element(v.times(f));
}

QMat with_element(const QMat& rows, const RingElem& f) {
  QMat one_row(1, static_cast<int>(f.coeffs().size()));
  for (int j = 0; j < one_row.cols(); ++j) one_row.at(0, j) = f.coeffs()[j];
  return row_space(rows.vstack(one_row));
}

// Canonical representative modulo eta of a direction of the member outside
// eta; the member properly contains eta, so one exists.
std::vector<Rational> direction_mod(const IdealSubspace& member,
                                    const IdealSubspace& eta) {
  for (int i = 0; i < member.rows().rows(); ++i) {
    std::vector<Rational> r =
        reduce_against(eta.rows(), member.rows().row_vector(i));
    if (std::any_of(r.begin(), r.end(),
                    [](const Rational& x) { return x != 0; }))
      return r;
  }
  throw DomainError("member does not extend the intersection");
}

} // namespace

BetaPencil BetaPencil::build(const IdealSubspace& eta, const RingElem& f1,
                             const RingElem& f2) {
  const TruncRing& ring = eta.ring();
  require_same_ring(ring, f1.ring(), "pencil data");
  require_same_ring(ring, f2.ring(), "pencil data");
  int n = eta.colength() - 1;
  if (n < 2)
    throw DomainError("base ideal colength " + std::to_string(n + 1) +
                      " is too small for a pencil (needs >= 3)");
  if (ring.order < n)
    throw DomainError("context order " + std::to_string(ring.order) +
                      " cannot state the tail condition for n = " +
                      std::to_string(n));
  if (!eta.contains(IdealSubspace::max_power(ring, n)))
    throw DomainError("base ideal does not contain the degree-" +
                      std::to_string(n) + " tail");
  if (!in_socle(eta, f1) || !in_socle(eta, f2))
    throw DomainError("pencil elements must be socle elements of the base");
  QMat with_f1 = with_element(eta.rows(), f1);
  QMat span = with_element(with_f1, f2);
  if (with_f1.rows() != eta.rows().rows() + 1 ||
      span.rows() != eta.rows().rows() + 2)
    throw DomainError("pencil elements are dependent modulo the base ideal");
  return BetaPencil(eta, f1, f2, std::move(span), n);
}

IdealSubspace BetaPencil::member(const Rational& t, const Rational& s) const {
  if (t == 0 && s == 0) throw DomainError("member at (0 : 0) is undefined");
  RingElem g = f1_.scaled(t).plus(f2_.scaled(s));
  return IdealSubspace::from_rows(eta_.ring(), with_element(eta_.rows(), g));
}

RecognitionResult recognize(std::span<const IdealSubspace> samples) {
  if (samples.size() < 2)
    throw DomainError("recognition needs at least two samples");
  const TruncRing& ring = samples[0].ring();
  for (const auto& s : samples)
    require_same_ring(ring, s.ring(), "recognition samples");
  int n = samples[0].colength();
  for (const auto& s : samples)
    if (s.colength() != n)
      return RecognitionFailure{"samples have different colengths"};
  if (ring.order < n)
    throw DomainError("context order " + std::to_string(ring.order) +
                      " cannot state the tail condition for n = " +
                      std::to_string(n));
  if (samples[0] == samples[1])
    return RecognitionFailure{"first two samples are identical"};
  IdealSubspace eta = samples[0].intersect(samples[1]);
  if (eta.colength() != n + 1)
    return RecognitionFailure{
        "intersection of the first two samples has colength " +
        std::to_string(eta.colength()) + ", expected " + std::to_string(n + 1)};
  if (!eta.contains(IdealSubspace::max_power(ring, n)))
    return RecognitionFailure{"intersection does not contain the degree-" +
                              std::to_string(n) + " tail"};
  QMat span = row_space_sum(samples[0].rows(), samples[1].rows());
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].contains(eta))
      return RecognitionFailure{"sample " + std::to_string(i) +
                                " does not contain the intersection"};
    if (!row_space_contains(span, samples[i].rows()))
      return RecognitionFailure{"sample " + std::to_string(i) +
                                " lies outside the span of the first two"};
  }
  // Directions of the first two members modulo eta; socle membership and
  // independence are automatic here, but build revalidates everything.
  RingElem f1(ring, direction_mod(samples[0], eta));
  RingElem f2(ring, direction_mod(samples[1], eta));
  return BetaPencil::build(eta, f1, f2);
}

DecomposeResult decompose_moving_point(std::span<const PointedScheme> samples) {
  if (samples.size() < 2)
    throw DomainError("decomposition needs at least two samples");
  int n = samples[0].length();
  for (const auto& s : samples)
    if (s.length() != n)
      throw DomainError("samples must all have the same length");

  // A component agrees across the family when every sample carries an
  // identical component at the same point.
  auto find_at = [](const PointedScheme& s,
                    const ProjPoint& p) -> const LocalComponent* {
    for (const auto& comp : s.components())
      if (comp.point.same_point(p)) return &comp;
    return nullptr;
  };
  auto agrees_everywhere = [&](const LocalComponent& ref) {
    for (const auto& s : samples) {
      const LocalComponent* comp = find_at(s, ref.point);
      if (comp == nullptr || comp->chart != ref.chart ||
          comp->local != ref.local)
        return false;
    }
    return true;
  };

  std::vector<const ProjPoint*> moving_points;
  auto note_moving = [&](const ProjPoint& p) {
    for (const auto* q : moving_points)
      if (q->same_point(p)) return;
    moving_points.push_back(&p);
  };
  for (const auto& s : samples)
    for (const auto& comp : s.components())
      if (!agrees_everywhere(comp)) note_moving(comp.point);

  if (moving_points.empty())
    return RecognitionFailure{"no moving point: all samples are identical"};
  if (moving_points.size() > 1)
    return RecognitionFailure{"moving support is not a single point"};
  const ProjPoint& x = *moving_points[0];

  std::vector<IdealSubspace> moving;
  int chart = -1;
  for (const auto& s : samples) {
    const LocalComponent* comp = find_at(s, x);
    if (comp == nullptr)
      return RecognitionFailure{"a sample misses the moving point"};
    if (chart < 0) chart = comp->chart;
    if (comp->chart != chart)
      throw DomainError("samples use different charts at the moving point");
    if (std::find(moving.begin(), moving.end(), comp->local) == moving.end())
      moving.push_back(comp->local);
  }
  if (moving.size() < 2)
    return RecognitionFailure{
        "fewer than two distinct members at the moving point"};

  RecognitionResult rec = recognize(moving);
  if (auto* fail = std::get_if<RecognitionFailure>(&rec)) return *fail;
  BetaPencil pencil = std::move(std::get<BetaPencil>(rec));

  std::vector<LocalComponent> fixed;
  for (const auto& comp : samples[0].components())
    if (!comp.point.same_point(x)) fixed.push_back(comp);

  int k = pencil.n();
  return Decomposition{x,     chart, std::move(pencil), std::move(moving),
                       std::move(fixed), k};
}

std::pair<int, int> beta_moduli_dim(int n) {
  if (n < 2) throw DomainError("pencil families exist only for n >= 2");
  return {2 * n - 2, 2 * n - 3};
}

} // namespace hilb
