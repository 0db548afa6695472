#include "tribone/hexlattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tribone {

namespace {

VariableSet make_vars(std::vector<std::string> names) { return VariableSet(std::move(names)); }

Monomial normalized(Monomial m) {
  unsigned low = m[0];
  for (std::size_t v = 1; v < m.nvars(); ++v) low = std::min(low, m[v]);
  if (low == 0) return m;
  std::vector<unsigned> e(m.nvars());
  for (std::size_t v = 0; v < m.nvars(); ++v) e[v] = m[v] - low;
  return Monomial(e);
}

Monomial rotate_monomial(const Monomial& m) {
  // a -> b -> c -> a sends exponents (alpha, beta, gamma) to (gamma, alpha, beta).
  return Monomial({m[2], m[0], m[1]});
}

void require_dot(const Monomial& m, const char* who) {
  if (m.nvars() != 3) throw std::invalid_argument(std::string(who) + ": expected a monomial in three variables");
  if (grading(m) != 1) throw std::invalid_argument(std::string(who) + ": monomial is not a black dot (grading != 1)");
}

}  // namespace

const VariableSet& q_vars() {
  static const VariableSet vars = make_vars({"a", "b", "c"});
  return vars;
}

const VariableSet& p_vars() {
  static const VariableSet vars = make_vars({"x", "y", "z"});
  return vars;
}

const VariableSet& xy_vars() {
  static const VariableSet vars = make_vars({"x", "y"});
  return vars;
}

const VariableSet& st_vars() {
  static const VariableSet vars = make_vars({"s1", "s2", "t"});
  return vars;
}

int grading(const Monomial& m) {
  unsigned long total = 0;
  for (std::size_t v = 0; v < m.nvars(); ++v) total += m[v];
  return static_cast<int>(total % 3);
}

Polynomial rotate120(const Polynomial& f) {
  if (f.vars().size() != 3) throw std::invalid_argument("rotate120: expected a three-variable polynomial");
  return normalize_quotient(permute_variables(f, {1, 2, 0}));
}

char tribone_type_name(TriboneType t) {
  switch (t) {
    case TriboneType::X: return 'X';
    case TriboneType::Y: return 'Y';
    case TriboneType::Z: return 'Z';
  }
  throw std::logic_error("tribone_type_name: bad type");
}

TriboneType tribone_type_from_name(char c) {
  switch (c) {
    case 'X': return TriboneType::X;
    case 'Y': return TriboneType::Y;
    case 'Z': return TriboneType::Z;
    default: throw std::invalid_argument(std::string("unknown tribone type '") + c + "'");
  }
}

Monomial cell_monomial(const Cell& cell) {
  if (cell.p < 0 || cell.q < 0) throw std::invalid_argument("cell_monomial: chart coordinates must be nonnegative");
  if (cell.sector < 0 || cell.sector > 2) throw std::invalid_argument("cell_monomial: sector must be 0, 1 or 2");
  Monomial m = normalized(Monomial({static_cast<unsigned>(1 + cell.p + 2 * cell.q),
                                    static_cast<unsigned>(cell.q),
                                    static_cast<unsigned>(2 * cell.p)}));
  for (int s = 0; s < cell.sector; ++s) m = rotate_monomial(m);
  return m;
}

Monomial dot_monomial(long i, long j) {
  long e0 = 1 + i + 2 * j;
  long e1 = j;
  long e2 = 2 * i;
  long low = std::min(e0, std::min(e1, e2));
  return Monomial({static_cast<unsigned>(e0 - low), static_cast<unsigned>(e1 - low),
                   static_cast<unsigned>(e2 - low)});
}

std::pair<long, long> monomial_dot(const Monomial& m) {
  require_dot(m, "monomial_dot");
  long alpha = m[0];
  long beta = m[1];
  long gamma = m[2];
  long i = (alpha + gamma - 2 * beta - 1) / 3;
  long j = (alpha - beta - 1) - i;
  return {i, j};
}

Cell cell_from_monomial(const Monomial& m) {
  require_dot(m, "cell_from_monomial");
  auto [i, j] = monomial_dot(normalized(m));
  Cell found;
  int hits = 0;
  long u = i;
  long v = j;
  for (int s = 0; s < 3; ++s) {
    // After s inverse rotations (i,j) -> (j-i, -1-i), (u,v) is the chart
    // position whose s-fold rotation is the input dot.
    if (u >= 0 && v >= 0) {
      found = Cell{u, v, s};
      ++hits;
    }
    long nu = v - u;
    long nv = -1 - u;
    u = nu;
    v = nv;
  }
  if (hits != 1) throw std::logic_error("cell_from_monomial: sector chart is not a fundamental domain here");
  return found;
}

std::vector<Monomial> placement_dots(const Placement& p) {
  auto [i, j] = monomial_dot(cell_monomial(p.center));
  switch (p.type) {
    case TriboneType::X:
      return {dot_monomial(i - 1, j), dot_monomial(i, j), dot_monomial(i + 1, j)};
    case TriboneType::Y:
      return {dot_monomial(i, j - 1), dot_monomial(i, j), dot_monomial(i, j + 1)};
    case TriboneType::Z:
      return {dot_monomial(i + 1, j + 1), dot_monomial(i, j), dot_monomial(i - 1, j - 1)};
  }
  throw std::logic_error("placement_dots: bad type");
}

Polynomial tribone_poly(TriboneType type, const Monomial& center) {
  require_dot(center, "tribone_poly");
  std::vector<Monomial> mults;
  switch (type) {
    case TriboneType::X: mults = {Monomial({1, 2, 0}), Monomial({0, 0, 0}), Monomial({1, 0, 2})}; break;
    case TriboneType::Y: mults = {Monomial({0, 1, 2}), Monomial({0, 0, 0}), Monomial({2, 1, 0})}; break;
    case TriboneType::Z: mults = {Monomial({2, 0, 1}), Monomial({0, 0, 0}), Monomial({0, 2, 1})}; break;
  }
  Polynomial out(q_vars());
  for (const Monomial& mult : mults) out = out + Polynomial::term(q_vars(), normalized(center.mul(mult)), 1);
  return out;
}

SectorClass sector_class(unsigned n) {
  if (n == 0) throw std::invalid_argument("sector_class: triangle side must be positive");
  if (n % 3 == 1) throw FixedCellError(n);
  SectorClass sc;
  if (n % 3 == 2) {
    sc.family = RegionFamily::n_mod3_eq_2;
    sc.k = (n + 1) / 3;
    sc.case_index = static_cast<int>(sc.k % 3);
    sc.d = sc.k / 3;
  } else {
    sc.family = RegionFamily::n_mod3_eq_0;
    sc.k = n / 3;
    switch (sc.k % 3) {
      case 0: sc.case_index = 0; sc.d = sc.k / 3; break;
      case 1: sc.case_index = 1; sc.d = (sc.k - 1) / 3; break;
      default: sc.case_index = -1; sc.d = (sc.k + 1) / 3; break;
    }
  }
  return sc;
}

namespace {

std::vector<Cell> sector_cells(unsigned n) {
  SectorClass sc = sector_class(n);
  long k = sc.k;
  std::vector<Cell> cells;
  for (long p = 0; p < k; ++p)
    for (long q = 0; q < k; ++q) cells.push_back(Cell{p, q, 0});
  if (sc.family == RegionFamily::n_mod3_eq_2) {
    for (long i = 0; i + 2 <= k; ++i)
      for (long j = 0; j <= i; ++j) cells.push_back(Cell{1 + i, k + j, 0});
  } else {
    for (long i = 0; i < k; ++i)
      for (long j = i; j < k; ++j) cells.push_back(Cell{k + i, j, 0});
  }
  return cells;
}

}  // namespace

Region region_T(unsigned n) {
  if (n == 0) throw std::invalid_argument("region_T: triangle side must be positive");
  Region region;
  region.n = n;
  if (n % 3 != 1) {
    std::vector<Cell> sector = sector_cells(n);
    for (int s = 0; s < 3; ++s)
      for (const Cell& c : sector) region.cells.push_back(Cell{c.p, c.q, s});
    return region;
  }
  // Rotation-fixed family: enumerate the staircase re-centered on its middle
  // cell, so the region is invariant under rotation about that cell.
  long shift = (static_cast<long>(n) - 1) / 3;
  for (long i = 0; i < static_cast<long>(n); ++i)
    for (long j = 0; j <= i; ++j)
      region.cells.push_back(cell_from_monomial(dot_monomial(i - 2 * shift, j - shift)));
  return region;
}

Polynomial sector_poly(unsigned n) {
  Polynomial out(q_vars());
  for (const Cell& c : sector_cells(n)) out = out + Polynomial::term(q_vars(), cell_monomial(c), 1);
  return out;
}

Polynomial reduced_sector_form(unsigned n) {
  SectorClass sc = sector_class(n);
  Polynomial d = Polynomial::constant(q_vars(), static_cast<long>(sc.d));
  auto parse = [](const std::string& text) { return parse_polynomial(q_vars(), text); };
  if (sc.family == RegionFamily::n_mod3_eq_2) {
    switch (sc.case_index) {
      case 0: return d * parse("a^2*c^2 + a^3*c^4 + a^4*c^3");
      case 1: return parse("a") + d * parse("a^3*c + a^4*c^3 + a^5*c^2");
      default: return parse("a^5*c^2 + a^4") + d * parse("a^4 + a^5*c^2 + a^6*c");
    }
  }
  switch (sc.case_index) {
    case 0: return d * parse("a + a^3*b + a^3*c");
    case 1: return parse("a + a^2*c^2") + d * parse("a^2*c^2 + a^3*c + a^4*c^3");
    default: return parse("a^5*c^2") + d * parse("a^3*c^4 + a^4*c^3 + a^5*c^5");
  }
}

Polynomial region_xy(unsigned n) {
  if (n == 0) throw std::invalid_argument("region_xy: triangle side must be positive");
  Polynomial out(xy_vars());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j <= i; ++j) out = out + Polynomial::term(xy_vars(), Monomial({i, j}), 1);
  return out;
}

Polynomial block_poly(ClosedFormKind kind, unsigned k) {
  if (k == 0) throw std::invalid_argument("block_poly: size must be positive");
  Polynomial out(xy_vars());
  auto add = [&out](unsigned i, unsigned j) {
    out = out + Polynomial::term(xy_vars(), Monomial({i, j}), 1);
  };
  switch (kind) {
    case ClosedFormKind::L:
      for (unsigned i = 0; i < k; ++i) add(i, 0);
      break;
    case ClosedFormKind::square:
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) add(i, j);
      break;
    case ClosedFormKind::delta:
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j <= i; ++j) add(i, j);
      break;
    case ClosedFormKind::nabla:
      for (unsigned j = 0; j < k; ++j)
        for (unsigned i = 0; i <= j; ++i) add(i, j);
      break;
  }
  return out;
}

Polynomial closed_form_class(ClosedFormKind kind, unsigned k) {
  if (k == 0) throw std::invalid_argument("closed_form_class: size must be positive");
  unsigned r = k % 3;
  auto parse = [](const std::string& text) { return parse_polynomial(xy_vars(), text); };
  switch (kind) {
    case ClosedFormKind::L:
      if (r == 0) return Polynomial(xy_vars());
      return r == 1 ? parse("1") : parse("1 + x");
    case ClosedFormKind::square:
      if (r == 0) return Polynomial(xy_vars());
      return r == 1 ? parse("1") : parse("x^2*y^2");
    case ClosedFormKind::delta:
    case ClosedFormKind::nabla: {
      unsigned copies = (k + 1) / 3;  // r == 0 and r == 2 round to the same value; r == 1 needs one less
      if (r == 1) copies = (k - 1) / 3;
      Polynomial block = (kind == ClosedFormKind::delta) ? parse("1 + x + x*y") : parse("1 + y + x*y");
      Polynomial out = Polynomial::constant(xy_vars(), static_cast<long>(copies)) * block;
      if (r == 1) out = out + parse("1");
      return out;
    }
  }
  throw std::logic_error("closed_form_class: bad kind");
}

Polynomial xy_chart(const Polynomial& f) {
  if (f.vars().size() != 3) throw std::invalid_argument("xy_chart: expected a three-variable polynomial");
  Polynomial out(xy_vars());
  for (const auto& [mon, coeff] : f.terms()) {
    auto [i, j] = monomial_dot(mon);
    if (i < 0 || j < 0) throw std::invalid_argument("xy_chart: term " + format_polynomial(Polynomial::term(f.vars(), mon, 1)) + " lies outside the chart cone");
    out = out + Polynomial::term(xy_vars(), Monomial({static_cast<unsigned>(i), static_cast<unsigned>(j)}), coeff);
  }
  return out;
}

}  // namespace tribone
