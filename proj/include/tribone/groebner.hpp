#ifndef TRIBONE_GROEBNER_HPP
#define TRIBONE_GROEBNER_HPP

#include <vector>

#include "tribone/polynomial.hpp"

namespace tribone {

/* A strong Groebner basis over Z, with a cofactor matrix expressing every
 * basis element as an explicit integer-polynomial combination of the original
 * generators: elements[i] == sum_j cofactors[i][j] * generators[j]. */
struct GroebnerBasis {
  VariableSet vars;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> elements;
  std::vector<std::vector<Polynomial>> cofactors;
};

/* S-polynomial over Z: cross-multiply so both leading terms become
 * lcm(c1,c2) * lcm(m1,m2) and subtract.  Requires nonzero inputs over one
 * variable set. */
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/* GCD-polynomial over Z: a Bezout combination whose leading term is
 * gcd(c1,c2) * lcm(m1,m2), with the deterministic Bezout pair of
 * extended_gcd.  Requires nonzero inputs over one variable set. */
Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/* Normal form with the integer quotient-with-remainder rule: a term c*m is
 * rewritten through any basis element with leading term c'*m', m' | m, whose
 * symmetric quotient of c by c' is nonzero; the surviving coefficient is the
 * minimal-absolute-value remainder (ties positive).  Exact identity:
 * f == sum_i quotients[i]*basis[i] + remainder, and no remainder term can be
 * rewritten further. */
struct ReduceResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};
ReduceResult reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                         MonomialOrder order);
ReduceResult reduce_full(const Polynomial& f, const GroebnerBasis& basis);

/* Buchberger completion over Z with both S- and GCD-polynomials (strong basis
 * construction), followed by minimization (drop elements whose leading term is
 * strongly divisible by another's) and tail inter-reduction.  Elements are
 * sign-normalized (positive leading coefficient) and sorted ascending by
 * leading monomial.  The cofactor matrix is maintained through every step.
 * Deterministic: pairs are selected by smallest lcm monomial, FIFO on ties. */
GroebnerBasis buchberger_z(const std::vector<Polynomial>& generators, MonomialOrder order);

/* Ideal membership with an explicit certificate over the ORIGINAL generators:
 * when member, f == sum_j cofactors[j] * basis.generators[j] exactly;
 * otherwise remainder is the (nonzero) normal form and the identity
 * f == sum_j cofactors[j]*generators[j] + remainder still holds. */
struct MembershipCertificate {
  bool member = false;
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};
MembershipCertificate is_member(const Polynomial& f, const GroebnerBasis& basis);

/* Equality of ideals by mutual membership of generators. */
bool ideal_equal(const std::vector<Polynomial>& gens1, const std::vector<Polynomial>& gens2,
                 MonomialOrder order);

}  // namespace tribone

#endif
