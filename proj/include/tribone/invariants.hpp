#ifndef TRIBONE_INVARIANTS_HPP
#define TRIBONE_INVARIANTS_HPP

#include <vector>

#include "tribone/hexlattice.hpp"
#include "tribone/polynomial.hpp"

namespace tribone {

/* The ring of rotation invariants is generated by s1 = a+b+c, s2 = ab+bc+ca
 * and t = a^2 b + b^2 c + c^2 a, subject to one monic quadratic relation in t:
 * t^2 - (s1 s2 - 3) t + (s1^3 + s2^3 - 6 s1 s2 + 9).  This returns it over
 * st_vars(). */
Polynomial theta_relation();

/* Canonical form modulo the t-relation: fold every t-power >= 2 down with the
 * (monic) relation until the t-degree is at most 1.  Two st-polynomials are
 * congruent modulo the relation iff their canonical forms are equal. */
Polynomial st_canonical(const Polynomial& f);

/* Orbit sum f + rotate120(f) + rotate120^2(f). */
Polynomial delta_symmetrize(const Polynomial& f);

/* Rewrite a rotation-invariant polynomial of the black-dot ring in the
 * invariant coordinates, with t-degree at most 1 (the canonical form).
 * Throws std::invalid_argument when f is not rotation-invariant. */
Polynomial to_st_coords(const Polynomial& f);

/* Substitute s1, s2, t by their defining polynomials and normalize: the exact
 * inverse of to_st_coords on invariant polynomials. */
Polynomial st_to_q(const Polynomial& f);

/* The six orbit-sums of tribones rooted at the origin cell and its x-neighbor,
 * in invariant coordinates; together with the t-relation they generate the
 * contraction of the symmetrized tribone ideal to the invariant ring. */
std::vector<Polynomial> tribone_triplet_generators();

/* Invariant of the three-sector region as a short combination P + d*Q modulo
 * the t-relation, with P, Q depending only on the case of N and d the
 * case multiplier. */
struct RegionDecomposition {
  unsigned n = 0;
  RegionFamily family = RegionFamily::n_mod3_eq_2;
  int case_index = 0;
  unsigned d = 0;
  Polynomial p = Polynomial(st_vars());
  Polynomial q = Polynomial(st_vars());
};
RegionDecomposition region_delta_st(unsigned n);  // throws FixedCellError if N = 1 (mod 3)

}  // namespace tribone

#endif
