#include "ideals.hpp"

#include <algorithm>

#include "errors.hpp"

namespace hilb {

namespace {

// Rows of the multiplication image g * span(rows) inside the context.
QMat multiplied_rows(TruncRing ring, const QMat& rows, int du, int dv) {
  QMat out(rows.rows(), ring.dim());
  for (int i = 0; i < rows.rows(); ++i) {
    for (int j = 0; j < ring.dim(); ++j) {
      if (rows.at(i, j) == 0) continue;
      auto [a, b] = ring.monomial_at(j);
      if (a + du + b + dv >= ring.order) continue;
      out.at(i, ring.index_of(a + du, b + dv)) += rows.at(i, j);
    }
  }
  return out;
}

QMat max_power_rows(TruncRing ring, int k) {
  std::vector<std::vector<Rational>> rows;
  for (int idx = 0; idx < ring.dim(); ++idx) {
    auto [a, b] = ring.monomial_at(idx);
    if (a + b < k) continue;
    std::vector<Rational> row(ring.dim());
    row[idx] = 1;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return QMat(0, ring.dim());
  return QMat::from_rows(rows);
}

} // namespace

std::optional<IdealSubspace> close_span(TruncRing ring, QMat span) {
  span = row_space(span);
  while (true) {
    QMat grown = span.vstack(multiplied_rows(ring, span, 1, 0))
                     .vstack(multiplied_rows(ring, span, 0, 1));
    grown = row_space(grown);
    if (grown.rows() == span.rows()) break;
    span = grown;
  }
  if (span.rows() == ring.dim()) return std::nullopt; // unit ideal
  return IdealSubspace(ring, std::move(span));
}

std::optional<IdealSubspace> IdealSubspace::from_generators(
    TruncRing ring, const std::vector<RingElem>& generators) {
  QMat span(static_cast<int>(generators.size()), ring.dim());
  for (size_t i = 0; i < generators.size(); ++i) {
    require_same_ring(ring, generators[i].ring(), "from_generators");
    for (int j = 0; j < ring.dim(); ++j)
      span.at(static_cast<int>(i), j) = generators[i].coeffs()[j];
  }
  return close_span(ring, std::move(span));
}

IdealSubspace IdealSubspace::from_rows(TruncRing ring, const QMat& rows) {
  if (rows.rows() == 0) return IdealSubspace(ring, QMat(0, ring.dim()));
  if (rows.cols() != ring.dim())
    throw DomainError("from_rows: width does not match the context");
  QMat canonical = row_space(rows);
  if (!spans_ideal(ring, canonical))
    throw DomainError("from_rows: span is not closed under u, v");
  if (canonical.rows() == ring.dim())
    throw DomainError("from_rows: span is the unit ideal");
  return IdealSubspace(ring, std::move(canonical));
}

IdealSubspace IdealSubspace::maximal_ideal(TruncRing ring) {
  return IdealSubspace(ring, max_power_rows(ring, 1));
}

IdealSubspace IdealSubspace::max_power(TruncRing ring, int k) {
  if (k < 1 || k > ring.order)
    throw DomainError("max_power: k must lie in [1, order]");
  return IdealSubspace(ring, max_power_rows(ring, k));
}

IdealSubspace IdealSubspace::theta(TruncRing ring) {
  if (ring.order < 3)
    throw DomainError("theta needs order >= 3 to be faithful");
  return max_power(ring, 2);
}

IdealSubspace IdealSubspace::monomial_ideal(TruncRing ring,
                                            const std::vector<int>& partition) {
  int n = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1 || (i > 0 && partition[i] > partition[i - 1]))
      throw DomainError("monomial_ideal: not a partition");
    n += partition[i];
  }
  if (ring.order < n)
    throw DomainError("monomial_ideal: colength " + std::to_string(n) +
                      " needs order >= " + std::to_string(n));
  auto in_staircase = [&](int a, int b) {
    return a < static_cast<int>(partition.size()) && b < partition[a];
  };
  std::vector<std::vector<Rational>> rows;
  for (int idx = 0; idx < ring.dim(); ++idx) {
    auto [a, b] = ring.monomial_at(idx);
    if (in_staircase(a, b)) continue;
    std::vector<Rational> row(ring.dim());
    row[idx] = 1;
    rows.push_back(std::move(row));
  }
  QMat m = rows.empty() ? QMat(0, ring.dim()) : QMat::from_rows(rows);
  return IdealSubspace(ring, std::move(m));
}

bool IdealSubspace::contains(const IdealSubspace& other) const {
  require_same_ring(ring_, other.ring_, "contains");
  return row_space_contains(rows_, other.rows_);
}

bool IdealSubspace::contains_element(const RingElem& f) const {
  require_same_ring(ring_, f.ring(), "contains_element");
  auto rest = reduce_against(rows_, f.coeffs());
  return std::all_of(rest.begin(), rest.end(),
                     [](const Rational& x) { return x == 0; });
}

IdealSubspace IdealSubspace::intersect(const IdealSubspace& other) const {
  require_same_ring(ring_, other.ring_, "intersect");
  QMat meet = rows_.rows() == 0 || other.rows_.rows() == 0
                  ? QMat(0, ring_.dim())
                  : row_space_intersection(rows_, other.rows_);
  return IdealSubspace(ring_, std::move(meet));
}

IdealSubspace IdealSubspace::sum(const IdealSubspace& other) const {
  require_same_ring(ring_, other.ring_, "sum");
  QMat join = row_space_sum(rows_, other.rows_);
  // Proper ideals of a local ring sit inside m, so the sum stays proper.
  return IdealSubspace(ring_, std::move(join));
}

QMat IdealSubspace::socle() const {
  // f is in the socle iff u*f and v*f both fall back into the ideal, a
  // linear condition expressed through the residuals of the two products.
  int dim = ring_.dim();
  QMat conditions(2 * dim, dim);
  for (int j = 0; j < dim; ++j) {
    auto [a, b] = ring_.monomial_at(j);
    for (int k = 0; k < 2; ++k) {
      std::vector<Rational> image(dim);
      int na = a + (k == 0 ? 1 : 0), nb = b + (k == 0 ? 0 : 1);
      if (na + nb < ring_.order) image[ring_.index_of(na, nb)] = 1;
      auto residual = reduce_against(rows_, std::move(image));
      for (int i = 0; i < dim; ++i)
        conditions.at(k * dim + i, j) = residual[i];
    }
  }
  QMat annihilated = conditions.kernel();
  // Quotient by the ideal: keep the kernel rows that add new directions.
  QMat socle_classes(annihilated.rows(), dim);
  int out = 0;
  QMat accumulated = rows_;
  for (int i = 0; i < annihilated.rows(); ++i) {
    auto residual = reduce_against(accumulated, annihilated.row_vector(i));
    bool zero = std::all_of(residual.begin(), residual.end(),
                            [](const Rational& x) { return x == 0; });
    if (zero) continue;
    QMat extra(1, dim);
    for (int j = 0; j < dim; ++j) extra.at(0, j) = residual[j];
    accumulated = row_space_sum(accumulated, extra);
    for (int j = 0; j < dim; ++j) socle_classes.at(out, j) = residual[j];
    ++out;
  }
  QMat result(out, dim);
  for (int i = 0; i < out; ++i)
    for (int j = 0; j < dim; ++j) result.at(i, j) = socle_classes.at(i, j);
  return row_space(result);
}

int IdealSubspace::min_generators() const {
  if (ring_.order < colength())
    throw DomainError(
        "min_generators: context too small to be faithful; needs order >= " +
        std::to_string(colength()));
  // Work one context higher: I = span(rows) + m^order, and I/mI is a
  // quotient of I/m^(order+1), so everything below is exact.
  TruncRing tall(ring_.order + 1);
  QMat lifted(rows_.rows(), tall.dim());
  for (int i = 0; i < rows_.rows(); ++i)
    for (int j = 0; j < ring_.dim(); ++j) {
      auto [a, b] = ring_.monomial_at(j);
      lifted.at(i, tall.index_of(a, b)) = rows_.at(i, j);
    }
  QMat tail = max_power_rows(tall, ring_.order);
  QMat ideal_tall = row_space(lifted.vstack(tail));
  QMat m_ideal = row_space(multiplied_rows(tall, ideal_tall, 1, 0)
                               .vstack(multiplied_rows(tall, ideal_tall, 0, 1)));
  return ideal_tall.rows() - m_ideal.rows();
}

IdealSubspace IdealSubspace::substituted(const LinearSubst& subst) const {
  QMat m = substitution_matrix(ring_, subst);
  QMat image = rows_.times(m.transposed());
  // An automorphism maps the ideal onto an ideal of the same colength.
  return IdealSubspace(ring_, row_space(image));
}

IdealSubspace IdealSubspace::restricted(int smaller_order) const {
  if (smaller_order < 1 || smaller_order > ring_.order)
    throw DomainError("restricted: order out of range");
  TruncRing small(smaller_order);
  if (!contains(max_power(ring_, smaller_order)))
    throw DomainError(
        "restricted: ideal does not contain the required power of m");
  QMat cut(rows_.rows(), small.dim());
  for (int i = 0; i < rows_.rows(); ++i)
    for (int j = 0; j < small.dim(); ++j) cut.at(i, j) = rows_.at(i, j);
  return IdealSubspace(small, row_space(cut));
}

bool spans_ideal(TruncRing ring, const QMat& rows) {
  QMat canonical = row_space(rows);
  if (canonical.rows() != rows.rows()) return false; // dependent rows
  return row_space_contains(canonical,
                            multiplied_rows(ring, canonical, 1, 0)) &&
         row_space_contains(canonical,
                            multiplied_rows(ring, canonical, 0, 1));
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

std::vector<IdealSubspace> enumerate_monomial_ideals(TruncRing ring, int n) {
  if (n < 1) throw DomainError("enumerate_monomial_ideals: n must be >= 1");
  if (ring.order < n)
    throw DomainError("enumerate_monomial_ideals: needs order >= " +
                      std::to_string(n));
  std::vector<IdealSubspace> out;
  for (const auto& partition : partitions_of(n))
    out.push_back(IdealSubspace::monomial_ideal(ring, partition));
  return out;
}

} // namespace hilb
