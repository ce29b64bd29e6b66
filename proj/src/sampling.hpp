#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "binforms.hpp"
#include "ideals.hpp"
#include "schemes.hpp"
#include "truncring.hpp"

namespace hilb {

/// Seeded generator for the randomized suites. All draws go through the
/// modulo path below rather than standard distributions, so a seed pins the
/// byte-exact sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform-ish integer in [lo, hi], inclusive.
  int uniform(int lo, int hi);
  /// Small exact rational: numerator in [-9, 9], denominator in [1, 4].
  Rational rational();
  Rational nonzero_rational();

 private:
  std::mt19937_64 gen_;
};

std::vector<int> random_partition(Rng& rng, int n);

IdealSubspace random_monomial_ideal(Rng& rng, TruncRing ring, int colength);

LinearSubst random_substitution(Rng& rng);

/// Random colength-n ideal: a monomial staircase moved by a random
/// coordinate change.
IdealSubspace random_ideal(Rng& rng, TruncRing ring, int colength);

/// Base ideal of colength n+1 containing the degree-n tail with socle
/// dimension >= 2, plus an independent socle pair, in a context of order
/// n+1. Exactly the input of a pencil build.
struct EtaPair {
  IdealSubspace eta;
  RingElem f1, f2;
};
EtaPair random_eta_pair(Rng& rng, int n);

ProjPoint random_point(Rng& rng);

/// Random length-n scheme: a random composition of n into local lengths at
/// pairwise distinct points, each local ideal a moved staircase in a
/// context of its own colength.
PointedScheme random_scheme(Rng& rng, int n);

LineWithParam random_line(Rng& rng);

/// Random length-n scheme contained in the line as a subscheme: distinct
/// parameters with multiplicities summing to n.
PointedScheme random_collinear_scheme(Rng& rng, int n,
                                      const LineWithParam& line);

/// Coprime pencil of degree-n forms, both completely split over the
/// rationals with disjoint root sets.
FormPencil random_split_pencil(Rng& rng, int n);

/// Coprime pencil with unconstrained random coefficients; members need not
/// split over the rationals.
FormPencil random_pencil(Rng& rng, int n);

} // namespace hilb
