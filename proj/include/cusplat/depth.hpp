#pragma once

#include "cusplat/stabilizer.hpp"

namespace cusplat {

// All zeta in the base polytope with zeta*q integral, exhaustive over the
// denominator lattice O*conj(q)/n.
std::vector<Scalar> candidate_z(const Form& f, const Scalar& q,
                                const Polytope& base);

// Vertical coordinates t in the prism range such that the first coordinate
// of psi(zeta, v, 0)*q is integral. Complex lattices: t = c*sqrt(d), the
// returned rationals are the coefficients c. Quaternionic: full t-triples on
// the 1/(2n) grid. PSL(2,Z): a single empty triple when the lift itself is
// integral.
std::vector<std::array<Surd, 3>> candidate_t(const Form& f, const Scalar& q,
                                             const Scalar& zeta,
                                             const Polytope& prism);

// All boundary points of exact depth n in the closed prism; deterministic
// order. Enumerates per q of norm n and filters by the exact level.
std::vector<HeisPoint> rational_points_of_depth(const Form& f,
                                                const StabilizerData& stab,
                                                const Int& n);

struct Orbit {
  HeisPoint rep;  // canonical member (named reps are matched by the caller)
  struct Member {
    HeisPoint p;
    Word witness;  // eval(witness) maps rep's lift to the member's lift
  };
  std::vector<Member> members;
};

// Partition of same-depth points into Gamma_inf-orbits with exact witnesses.
std::vector<Orbit> group_into_orbits(const StabilizerData& stab,
                                     const std::vector<HeisPoint>& points);

// Brute-force oracle for the constraint solver: enumerates the full
// denominator grid over the prism and keeps points of depth exactly n.
std::vector<HeisPoint> depth_points_bruteforce(const Form& f,
                                               const StabilizerData& stab,
                                               const Int& n);

// Depths at which rational points exist (norm form hits n), up to the bound.
std::vector<Int> represented_depths(Ring r, const Int& bound);

std::string point_sort_key(const Form& f, const HeisPoint& p);

}  // namespace cusplat
