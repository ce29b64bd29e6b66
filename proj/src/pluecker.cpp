#include "pluecker.hpp"

#include <algorithm>

#include "errors.hpp"

namespace hilb {

namespace {

constexpr long kMaxCoords = 2'000'000;

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Colex rank of an ascending subset: sum of C(s_i, i+1).
long colex_rank(const std::vector<int>& subset) {
  long rank = 0;
  for (size_t i = 0; i < subset.size(); ++i)
    rank += binomial(subset[i], static_cast<int>(i) + 1);
  return rank;
}

// Exterior powers of the row span, built one row at a time. Level j holds
// one coordinate per ascending j-subset, indexed by colex rank. Each row is
// scaled to integer entries first: that multiplies the whole vector by one
// positive factor, which the caller's projective normalization absorbs, and
// keeps the inner loop on integer arithmetic.
std::vector<Rational> wedge_rows(const QMat& rows) {
  int amb = rows.cols(), k = rows.rows();
  std::vector<std::vector<mpz_class>> irows(
      k, std::vector<mpz_class>(static_cast<size_t>(amb)));
  for (int i = 0; i < k; ++i) {
    mpz_class den = 1;
    for (int j = 0; j < amb; ++j)
      den = lcm(den, rows.at(i, j).get_den());
    for (int j = 0; j < amb; ++j) {
      Rational scaled = rows.at(i, j) * Rational(den);
      irows[i][j] = scaled.get_num();
    }
  }
  std::vector<mpz_class> level(1, mpz_class(1)); // empty wedge
  for (int j = 0; j < k; ++j) {
    std::vector<mpz_class> next(binomial(amb, j + 1));
    std::vector<int> subset(j + 1);
    for (int i = 0; i <= j; ++i) subset[i] = i;
    std::vector<int> rest(j);
    while (true) {
      long target = colex_rank(subset);
      mpz_class value;
      for (int drop = 0; drop <= j; ++drop) {
        const mpz_class& factor = irows[j][subset[drop]];
        if (factor != 0) {
          rest.clear();
          for (int i = 0; i <= j; ++i)
            if (i != drop) rest.push_back(subset[i]);
          const mpz_class& prev = level[colex_rank(rest)];
          if (prev != 0) {
            if ((j - drop) % 2 == 0)
              value += factor * prev;
            else
              value -= factor * prev;
          }
        }
      }
      next[target] = std::move(value);
      // advance to the next ascending subset (lex successor)
      int i = j;
      while (i >= 0 && subset[i] == amb - 1 - (j - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int t = i + 1; t <= j; ++t) subset[t] = subset[t - 1] + 1;
    }
    level = std::move(next);
  }
  std::vector<Rational> out(level.size());
  for (size_t i = 0; i < level.size(); ++i) out[i] = Rational(level[i]);
  return out;
}

void normalize_first_nonzero(std::vector<Rational>& coords) {
  for (const auto& c : coords) {
    if (c == 0) continue;
    if (c != 1) {
      Rational inv = 1 / c;
      for (auto& x : coords) x *= inv;
    }
    return;
  }
}

} // namespace

std::vector<std::vector<int>> lex_subsets(int amb, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > amb) return out;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    out.push_back(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == amb - 1 - (k - 1 - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int t = i + 1; t < k; ++t) subset[t] = subset[t - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

const Rational& PlueckerVector::coord(const std::vector<int>& subset) const {
  if (static_cast<int>(subset.size()) != sub_dim)
    throw DomainError("coord: wrong subset size");
  long rank = 0;
  int prev = -1;
  for (int i = 0; i < sub_dim; ++i) {
    int s = subset[i];
    if (s <= prev || s >= amb_dim)
      throw DomainError("coord: not an ascending k-subset");
    for (int j = prev + 1; j < s; ++j)
      rank += binomial(amb_dim - 1 - j, sub_dim - 1 - i);
    prev = s;
  }
  return coords[rank];
}

PlueckerVector pluecker_coords(const QMat& rows) {
  int amb = rows.cols(), k = rows.rows();
  if (k < 1 || k > amb)
    throw DomainError("pluecker_coords: need 1 <= k <= ambient dimension");
  QMat basis = row_space(rows);
  if (basis.rows() != k)
    throw DomainError("pluecker_coords: rows are dependent");
  if (binomial(amb, std::min(k, amb - k)) > kMaxCoords)
    throw DomainError("pluecker_coords: coordinate vector too large");

  PlueckerVector p;
  p.sub_dim = k;
  p.amb_dim = amb;
  p.coords.resize(binomial(amb, k));
  bool dual = amb - k < k;
  std::vector<Rational> small =
      wedge_rows(dual ? basis.kernel() : basis);

  auto subsets = lex_subsets(amb, k);
  std::vector<int> complement(amb - k);
  for (size_t s = 0; s < subsets.size(); ++s) {
    if (!dual) {
      p.coords[s] = small[colex_rank(subsets[s])];
      continue;
    }
    // Duality: the S-minor of the subspace equals, up to one global sign
    // and scale, (-1)^{sum S} times the complement minor of the kernel.
    complement.clear();
    const auto& sub = subsets[s];
    size_t t = 0;
    long sum = 0;
    for (int c = 0; c < amb; ++c) {
      if (t < sub.size() && sub[t] == c) {
        sum += c;
        ++t;
      } else {
        complement.push_back(c);
      }
    }
    const Rational& value = small[colex_rank(complement)];
    p.coords[s] = sum % 2 == 0 ? value : Rational(-value);
  }
  normalize_first_nonzero(p.coords);
  return p;
}

QMat reconstruct_subspace(const PlueckerVector& p) {
  auto subsets = lex_subsets(p.amb_dim, p.sub_dim);
  size_t lead = 0;
  while (lead < p.coords.size() && p.coords[lead] == 0) ++lead;
  if (lead == p.coords.size())
    throw DomainError("reconstruct_subspace: zero coordinate vector");
  const auto& base = subsets[lead];
  const Rational& pivot = p.coords[lead];
  QMat rows(p.sub_dim, p.amb_dim);
  for (int i = 0; i < p.sub_dim; ++i) {
    rows.at(i, base[i]) = 1;
    for (int c = 0; c < p.amb_dim; ++c) {
      if (std::binary_search(base.begin(), base.end(), c)) continue;
      // Replace base[i] by c, re-sort, and track the permutation sign.
      std::vector<int> swapped;
      swapped.reserve(base.size());
      for (int j = 0; j < p.sub_dim; ++j)
        if (j != i) swapped.push_back(base[j]);
      auto pos = std::lower_bound(swapped.begin(), swapped.end(), c);
      int moved = static_cast<int>(pos - swapped.begin());
      swapped.insert(pos, c);
      int sign = (i - moved) % 2 == 0 ? 1 : -1;
      rows.at(i, c) = sign * p.coord(swapped) / pivot;
    }
  }
  return row_space(rows);
}

QMat SubspacePencil::member(const Rational& t, const Rational& s) const {
  if (t == 0 && s == 0) throw DomainError("member: (0:0) is not a point");
  QMat extra(1, common.cols());
  for (int j = 0; j < common.cols(); ++j)
    extra.at(0, j) = t * first_extra[j] + s * second_extra[j];
  return row_space(common.vstack(extra));
}

SubspacePencil pencil_from_two(const QMat& v1, const QMat& v2) {
  if (v1.cols() != v2.cols() || v1.rows() != v2.rows())
    throw DomainError("pencil_from_two: samples of unequal shape");
  QMat b1 = row_space(v1), b2 = row_space(v2);
  if (b1.rows() != v1.rows() || b2.rows() != v2.rows())
    throw DomainError("pencil_from_two: dependent rows in a sample");
  int k = b1.rows();
  SubspacePencil pencil;
  pencil.common = row_space_intersection(b1, b2);
  pencil.span = row_space_sum(b1, b2);
  if (pencil.common.rows() != k - 1 || pencil.span.rows() != k + 1)
    throw DomainError("pencil_from_two: subspaces do not meet in codim 1");
  auto pick_extra = [&](const QMat& sample) {
    for (int i = 0; i < sample.rows(); ++i) {
      auto rest = reduce_against(pencil.common, sample.row_vector(i));
      if (std::any_of(rest.begin(), rest.end(),
                      [](const Rational& x) { return x != 0; }))
        return rest;
    }
    throw DomainError("pencil_from_two: sample equals the common part");
  };
  pencil.first_extra = pick_extra(b1);
  pencil.second_extra = pick_extra(b2);
  return pencil;
}

LineFamilyCheck is_line_family(std::span<const QMat> samples) {
  if (samples.empty()) throw DomainError("is_line_family: no samples");
  std::vector<QMat> distinct;
  int k = -1;
  for (const auto& sample : samples) {
    QMat basis = row_space(sample);
    if (basis.rows() != sample.rows())
      throw DomainError("is_line_family: dependent rows in a sample");
    if (k < 0)
      k = basis.rows();
    else if (basis.rows() != k || basis.cols() != distinct.front().cols())
      throw DomainError("is_line_family: samples of unequal dimension");
    if (std::find(distinct.begin(), distinct.end(), basis) == distinct.end())
      distinct.push_back(std::move(basis));
  }
  if (distinct.size() < 2)
    throw DomainError("is_line_family: fewer than 2 distinct samples");

  LineFamilyCheck check;
  SubspacePencil pencil;
  try {
    pencil = pencil_from_two(distinct[0], distinct[1]);
  } catch (const DomainError& e) {
    check.reason = e.what();
    return check;
  }
  for (size_t i = 2; i < distinct.size(); ++i) {
    if (!row_space_contains(distinct[i], pencil.common)) {
      check.reason = "a sample does not contain the common subspace";
      return check;
    }
    if (!row_space_contains(pencil.span, distinct[i])) {
      check.reason = "a sample falls outside the pencil span";
      return check;
    }
  }
  if (distinct.size() >= 3) {
    // Cross-check through the embedding: the minor vectors of the samples
    // must span a plane, the image of the pencil's line.
    std::vector<PlueckerVector> minors;
    minors.reserve(distinct.size());
    for (const auto& sample : distinct)
      minors.push_back(pluecker_coords(sample));
    QMat vectors(static_cast<int>(minors.size()),
                 static_cast<int>(minors[0].coords.size()));
    for (size_t i = 0; i < minors.size(); ++i)
      for (size_t j = 0; j < minors[i].coords.size(); ++j)
        vectors.at(static_cast<int>(i), static_cast<int>(j)) =
            minors[i].coords[j];
    if (vectors.rank() != 2) {
      check.reason = "minor vectors of the samples do not span a plane";
      return check;
    }
  }
  check.is_line = true;
  check.pencil = std::move(pencil);
  return check;
}

} // namespace hilb
