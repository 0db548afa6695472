#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "tribone/groebner.hpp"
#include "tribone/hexlattice.hpp"

using namespace tribone;

namespace {

Polynomial Q(const std::string& text) { return parse_polynomial(q_vars(), text); }
Polynomial XY(const std::string& text) { return parse_polynomial(xy_vars(), text); }

Monomial rot(const Monomial& m) { return Monomial({m[2], m[0], m[1]}); }

const GroebnerBasis& chart_basis() {
  static const GroebnerBasis G = buchberger_z(
      {XY("1 + x + x^2"), XY("1 + y + y^2"), XY("1 + x*y + x^2*y^2")}, MonomialOrder::deglex);
  return G;
}

bool congruent_chart(const Polynomial& f, const Polynomial& g) {
  return reduce_full(f - g, chart_basis()).remainder.is_zero();
}

Polynomial region_poly(const Region& r) {
  Polynomial out(q_vars());
  for (const Cell& c : r.cells) out = out + Polynomial::term(q_vars(), cell_monomial(c), 1);
  return out;
}

}  // namespace

TEST_CASE("grading counts every variable once mod 3") {
  CHECK(grading(Monomial({1, 0, 0})) == 1);
  CHECK(grading(Monomial({1, 1, 0})) == 2);
  CHECK(grading(Monomial({1, 1, 1})) == 0);
  CHECK(grading(Monomial({2, 0, 2})) == 1);
  CHECK(grading(Monomial({0, 0, 0})) == 0);
}

TEST_CASE("rotate120 cycles the variables and fixes symmetric polynomials") {
  CHECK(rotate120(Q("a")) == Q("b"));
  CHECK(rotate120(Q("a^2*b")) == Q("b^2*c"));
  CHECK(rotate120(Q("a + b + c")) == Q("a + b + c"));
  CHECK(rotate120(Q("a*b + b*c + c*a")) == Q("a*b + b*c + c*a"));
  CHECK(rotate120(Q("a^2*c")) == Q("a*b^2"));
  // normalization strips the product of all variables from the image
  CHECK(rotate120(Q("a^2*b*c")) == Q("b"));
  Polynomial f = Q("3*a^4*c - 2*b + a*b^2");
  CHECK(rotate120(rotate120(rotate120(f))) == normalize_quotient(f));
}

TEST_CASE("cell monomials: chart corner values and sector rotations") {
  CHECK(cell_monomial(Cell{0, 0, 0}) == Monomial({1, 0, 0}));  // a
  CHECK(cell_monomial(Cell{0, 0, 1}) == Monomial({0, 1, 0}));  // b
  CHECK(cell_monomial(Cell{0, 0, 2}) == Monomial({0, 0, 1}));  // c
  CHECK(cell_monomial(Cell{1, 0, 0}) == Monomial({2, 0, 2}));  // a*x = a^2 c^2
  CHECK(cell_monomial(Cell{0, 1, 0}) == Monomial({3, 1, 0}));  // a*y = a^3 b
  CHECK(cell_monomial(Cell{1, 1, 0}) == Monomial({3, 0, 1}));  // a*x*y = a^3 c
  CHECK_THROWS_AS(cell_monomial(Cell{-1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cell_monomial(Cell{0, 0, 3}), std::invalid_argument);
}

TEST_CASE("cell <-> monomial round trip and chart uniqueness") {
  std::set<std::vector<unsigned>> seen;
  for (long p = 0; p <= 8; ++p)
    for (long q = 0; q <= 8; ++q)
      for (int s = 0; s < 3; ++s) {
        Cell cell{p, q, s};
        Monomial m = cell_monomial(cell);
        CHECK(grading(m) == 1);
        CHECK(cell_from_monomial(m) == cell);
        CHECK(seen.insert(m.exponents()).second);
      }
}

TEST_CASE("global coordinates cover all black dots exactly once") {
  CHECK(dot_monomial(0, 0) == Monomial({1, 0, 0}));
  CHECK(dot_monomial(-1, -1) == Monomial({0, 1, 0}));  // b = a x^-1 y^-1
  CHECK(monomial_dot(Monomial({0, 0, 1})) == std::pair<long, long>(0, -1));  // c = a y^-1
  for (long i = -12; i <= 12; ++i)
    for (long j = -12; j <= 12; ++j) {
      Monomial m = dot_monomial(i, j);
      CHECK(grading(m) == 1);
      CHECK(monomial_dot(m) == std::pair<long, long>(i, j));
      Cell cell = cell_from_monomial(m);  // throws unless exactly one sector matches
      CHECK(cell_monomial(cell) == m);
    }
  CHECK_THROWS_AS(monomial_dot(Monomial({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("tribone polynomials at the origin cell") {
  CHECK(tribone_poly(TriboneType::X, Monomial({1, 0, 0})) == Q("a^2*b^2 + a + a^2*c^2"));
  CHECK(tribone_poly(TriboneType::Y, Monomial({1, 0, 0})) == Q("c + a + a^3*b"));
  CHECK(tribone_poly(TriboneType::Z, Monomial({1, 0, 0})) == Q("a^3*c + a + b"));
  CHECK_THROWS_AS(tribone_poly(TriboneType::X, Monomial({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("tribone polynomials match their covered dots") {
  for (long p : {0L, 1L, 3L})
    for (long q : {0L, 2L})
      for (int s = 0; s < 3; ++s)
        for (TriboneType type : {TriboneType::X, TriboneType::Y, TriboneType::Z}) {
          Placement pl{type, Cell{p, q, s}, 1};
          Polynomial sum(q_vars());
          for (const Monomial& dot : placement_dots(pl))
            sum = sum + Polynomial::term(q_vars(), dot, 1);
          CHECK(sum == tribone_poly(type, cell_monomial(pl.center)));
        }
}

TEST_CASE("rotation permutes tribone types X -> Y -> Z -> X") {
  for (long p : {0L, 2L})
    for (long q : {0L, 1L}) {
      Monomial center = cell_monomial(Cell{p, q, 0});
      CHECK(rotate120(tribone_poly(TriboneType::X, center)) ==
            tribone_poly(TriboneType::Y, rot(center)));
      CHECK(rotate120(tribone_poly(TriboneType::Y, center)) ==
            tribone_poly(TriboneType::Z, rot(center)));
      CHECK(rotate120(tribone_poly(TriboneType::Z, center)) ==
            tribone_poly(TriboneType::X, rot(center)));
    }
}

TEST_CASE("sector_class splits both families into their three cases") {
  auto sc = sector_class(2);
  CHECK(sc.family == RegionFamily::n_mod3_eq_2);
  CHECK(sc.k == 1);
  CHECK(sc.case_index == 1);
  CHECK(sc.d == 0);
  sc = sector_class(5);
  CHECK((sc.k == 2 && sc.case_index == 2 && sc.d == 0));
  sc = sector_class(8);
  CHECK((sc.k == 3 && sc.case_index == 0 && sc.d == 1));
  sc = sector_class(9);
  CHECK(sc.family == RegionFamily::n_mod3_eq_0);
  CHECK((sc.k == 3 && sc.case_index == 0 && sc.d == 1));
  sc = sector_class(12);
  CHECK((sc.k == 4 && sc.case_index == 1 && sc.d == 1));
  sc = sector_class(15);
  CHECK((sc.k == 5 && sc.case_index == -1 && sc.d == 2));
  CHECK_THROWS_AS(sector_class(4), FixedCellError);
  CHECK_THROWS_AS(sector_class(10), FixedCellError);
  CHECK_THROWS_AS(sector_class(0), std::invalid_argument);
}

TEST_CASE("region_T has N(N+1)/2 distinct cells and the right triangle shape") {
  for (unsigned n = 1; n <= 40; ++n) {
    Region r = region_T(n);
    CHECK(r.cells.size() == n * (n + 1) / 2);
    std::set<std::vector<unsigned>> seen;
    for (const Cell& c : r.cells) seen.insert(cell_monomial(c).exponents());
    CHECK(seen.size() == r.cells.size());

    if (n % 3 == 2) {
      long k = (n + 1) / 3;
      for (const Cell& c : r.cells) {
        auto [i, j] = monomial_dot(cell_monomial(c));
        CHECK(j >= -k);
        CHECK(i <= k - 1);
        CHECK(j - i <= k - 1);
      }
    } else if (n % 3 == 0) {
      long k = n / 3;
      for (const Cell& c : r.cells) {
        auto [i, j] = monomial_dot(cell_monomial(c));
        CHECK(j <= k - 1);
        CHECK(i >= -k);
        CHECK(j - i >= -k);
      }
    } else {
      // centered triangle: invariant under rotation about its middle cell
      std::set<std::pair<long, long>> dots;
      for (const Cell& c : r.cells) dots.insert(monomial_dot(cell_monomial(c)));
      for (auto [i, j] : dots) CHECK(dots.count({-j, i - j}) == 1);
    }
  }
}

TEST_CASE("sector content plus its two rotations partitions the region") {
  for (unsigned n : {2u, 3u, 5u, 6u, 8u, 9u, 12u, 15u, 17u, 18u}) {
    Polynomial s = sector_poly(n);
    CHECK(evaluate_all_ones(s) * 3 == Integer(n) * (n + 1) / 2);
    Polynomial total = s + rotate120(s) + rotate120(rotate120(s));
    CHECK(total == region_poly(region_T(n)));
  }
  CHECK(sector_poly(2) == Q("a"));
  CHECK(sector_poly(3) == Q("a + a^2*c^2"));
  CHECK_THROWS_AS(sector_poly(4), FixedCellError);
}

TEST_CASE("reduced sector forms are congruent to the sector content") {
  CHECK(reduced_sector_form(2) == Q("a"));
  CHECK(reduced_sector_form(3) == Q("a + a^2*c^2"));
  CHECK(reduced_sector_form(5) == Q("a^5*c^2 + a^4"));
  CHECK(reduced_sector_form(8) == Q("a^2*c^2 + a^3*c^4 + a^4*c^3"));
  CHECK(reduced_sector_form(9) == Q("a + a^3*b + a^3*c"));
  for (unsigned n : {2u,  3u,  5u,  6u,  8u,  9u,  11u, 12u, 14u, 15u,
                     17u, 18u, 20u, 21u, 23u, 24u, 26u, 27u, 29u, 30u}) {
    CAPTURE(n);
    CHECK(congruent_chart(xy_chart(sector_poly(n)), xy_chart(reduced_sector_form(n))));
  }
  CHECK_THROWS_AS(reduced_sector_form(7), FixedCellError);
}

TEST_CASE("staircase region in the chart") {
  CHECK(region_xy(1) == XY("1"));
  CHECK(region_xy(2) == XY("1 + x + x*y"));
  for (unsigned n : {3u, 7u, 12u}) {
    CHECK(evaluate_all_ones(region_xy(n)) == Integer(n) * (n + 1) / 2);
    CHECK(region_xy(n) == block_poly(ClosedFormKind::delta, n));
  }
}

TEST_CASE("closed-form classes of rows, rhombi and triangles") {
  CHECK(closed_form_class(ClosedFormKind::L, 3).is_zero());
  CHECK(closed_form_class(ClosedFormKind::L, 4) == XY("1"));
  CHECK(closed_form_class(ClosedFormKind::L, 5) == XY("1 + x"));
  CHECK(closed_form_class(ClosedFormKind::square, 2) == XY("x^2*y^2"));
  CHECK(closed_form_class(ClosedFormKind::square, 3).is_zero());
  CHECK(closed_form_class(ClosedFormKind::delta, 4) == XY("2 + x + x*y"));
  CHECK(closed_form_class(ClosedFormKind::nabla, 2) == XY("1 + y + x*y"));
  CHECK(closed_form_class(ClosedFormKind::nabla, 5) == XY("2 + 2*y + 2*x*y"));
  for (unsigned k = 1; k <= 15; ++k) {
    CAPTURE(k);
    for (ClosedFormKind kind : {ClosedFormKind::L, ClosedFormKind::square, ClosedFormKind::delta,
                                ClosedFormKind::nabla}) {
      CHECK(congruent_chart(block_poly(kind, k), closed_form_class(kind, k)));
    }
  }
}

TEST_CASE("triangle orientations stay in distinct classes but 3x apart vanishes") {
  Polynomial diff = closed_form_class(ClosedFormKind::delta, 2) -
                    closed_form_class(ClosedFormKind::nabla, 2);
  CHECK_FALSE(reduce_full(diff, chart_basis()).remainder.is_zero());
  CHECK(reduce_full(Polynomial::constant(xy_vars(), 3) * diff, chart_basis()).remainder.is_zero());
}

TEST_CASE("xy_chart pushes cone dots down and rejects the rest") {
  CHECK(xy_chart(Q("a + a^2*c^2")) == XY("1 + x"));
  CHECK(xy_chart(Q("a^5*c^2 + a^4")) == XY("x^2*y^2 + x*y^2"));
  CHECK(xy_chart(tribone_poly(TriboneType::X, cell_monomial(Cell{1, 0, 0}))) ==
        XY("1 + x + x^2"));
  CHECK_THROWS_AS(xy_chart(Q("b")), std::invalid_argument);
  CHECK_THROWS_AS(xy_chart(Q("a*b")), std::invalid_argument);
}
