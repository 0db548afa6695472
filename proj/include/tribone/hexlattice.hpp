#ifndef TRIBONE_HEXLATTICE_HPP
#define TRIBONE_HEXLATTICE_HPP

#include <stdexcept>
#include <vector>

#include "tribone/polynomial.hpp"

namespace tribone {

/* Raised when a symmetric-pipeline operation is asked about a triangle with
 * N = 1 (mod 3): the 120-degree rotation of such a triangle fixes its central
 * cell, so the three-sector decomposition does not exist. */
class FixedCellError : public std::runtime_error {
 public:
  explicit FixedCellError(unsigned n)
      : std::runtime_error("triangle of side " + std::to_string(n) +
                           ": N = 1 (mod 3) has a rotation-fixed central cell; "
                           "the symmetric decomposition is undefined") {}
};

/* Canonical variable sets.  Pointer-shared singletons so set comparisons in
 * hot paths are cheap. */
const VariableSet& q_vars();   // a, b, c   (black-dot ring, abc = 1)
const VariableSet& p_vars();   // x, y, z   (white-dot ring, xyz = 1)
const VariableSet& xy_vars();  // x, y      (first-quadrant chart)
const VariableSet& st_vars();  // s1, s2, t (invariant coordinates)

/* Mod-3 grading of a normalized abc-monomial (every one of a, b, c counts 1).
 * Black dots are exactly the grading-1 monomials. */
int grading(const Monomial& m);

/* The 120-degree rotation a->b->c->a on the black-dot ring (or x->y->z->x on
 * the white-dot ring), with quotient normalization. */
Polynomial rotate120(const Polynomial& f);

/* A black dot in the angle-xOy sector chart: the normalized monomial of
 * a * x^p * y^q, rotated `sector` times (sector in {0,1,2}).  Every black dot
 * of the plane has exactly one such triple. */
struct Cell {
  long p = 0;
  long q = 0;
  int sector = 0;
  bool operator==(const Cell& o) const { return p == o.p && q == o.q && sector == o.sector; }
};

enum class TriboneType { X, Y, Z };
char tribone_type_name(TriboneType t);
TriboneType tribone_type_from_name(char c);

/* One weighted tribone: the three covered dots are center*t^-1, center,
 * center*t for the placement's axis t. */
struct Placement {
  TriboneType type = TriboneType::X;
  Cell center;
  long long weight = 1;
};

struct Region {
  unsigned n = 0;
  std::vector<Cell> cells;
};

/* Cell <-> monomial <-> global (i,j) coordinate conversions.  Global
 * coordinates write a black dot as a * x^i * y^j with i, j in Z. */
Monomial cell_monomial(const Cell& cell);
Cell cell_from_monomial(const Monomial& m);
Monomial dot_monomial(long i, long j);
std::pair<long, long> monomial_dot(const Monomial& m);

/* The three black dots covered by a placement, as normalized monomials. */
std::vector<Monomial> placement_dots(const Placement& p);

/* Tribone polynomial in the black-dot ring: center times (t^-1 + 1 + t).
 * Requires a normalized grading-1 center monomial. */
Polynomial tribone_poly(TriboneType type, const Monomial& center);

/* Case data for the three-sector decomposition of the triangle of side N.
 * Family N=3k-1 has case_index in {0,1,2} with k = 3d + case_index;
 * family N=3k has case_index in {0,1,-1} with k = 3d + case_index. */
enum class RegionFamily { n_mod3_eq_2, n_mod3_eq_0 };
struct SectorClass {
  RegionFamily family;
  unsigned k = 0;
  unsigned d = 0;
  int case_index = 0;
};
SectorClass sector_class(unsigned n);  // throws FixedCellError if N = 1 (mod 3)

/* The centered symmetric triangle with N cells per side: N(N+1)/2 distinct
 * cells.  For N != 1 (mod 3) this is the sector content plus its two
 * rotations (an exact partition); for N = 1 (mod 3) it is the re-centered
 * enumeration around the rotation-fixed cell. */
Region region_T(unsigned n);

/* Sum of the black-dot monomials of the sector-0 content of region_T(N).
 * Throws FixedCellError when N = 1 (mod 3). */
Polynomial sector_poly(unsigned n);

/* The short congruent form of sector_poly(N) modulo the chart tribone ideal,
 * from the case tables (d copies of a three-dot block plus a small anchor). */
Polynomial reduced_sector_form(unsigned n);

/* The staircase triangle in the first-quadrant chart:
 * sum of x^i y^j over 0 <= j <= i <= N-1. */
Polynomial region_xy(unsigned n);

/* Row, rhombus and the two triangle orientations in the chart, enumerated,
 * and their short representatives modulo the chart tribone ideal. */
enum class ClosedFormKind { L, square, delta, nabla };
Polynomial block_poly(ClosedFormKind kind, unsigned k);
Polynomial closed_form_class(ClosedFormKind kind, unsigned k);

/* Push a cone-supported grading-1 black-dot polynomial to the chart:
 * a*x^p*y^q  ->  x^p*y^q.  Errors when a term is not a cone dot. */
Polynomial xy_chart(const Polynomial& f);

}  // namespace tribone

#endif
