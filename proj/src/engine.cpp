#include "tribone/engine.hpp"

#include <array>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "tribone/hnf.hpp"

namespace tribone {

namespace {

using nlohmann::json;

Polynomial parse_xy(const std::string& text) { return parse_polynomial(xy_vars(), text); }
Polynomial parse_st(const std::string& text) { return parse_polynomial(st_vars(), text); }

TriboneType rotated_type(TriboneType t, int times) {
  int v = (static_cast<int>(t) + times) % 3;
  return static_cast<TriboneType>(v);
}

/* 120-degree rotation in global dot coordinates. */
std::pair<long, long> rotate_dot(long i, long j) { return {-1 - j, i - j - 1}; }

long long to_weight(const Integer& c) {
  if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
    throw std::overflow_error("placement weight does not fit in 64 bits");
  return c.convert_to<long long>();
}

/* A placement before it is pinned to the plane: tribone type, center in dot
 * coordinates, weight. */
struct RawPlacement {
  TriboneType type;
  long i = 0;
  long j = 0;
  long long w = 1;
};

Placement pin(const RawPlacement& raw) {
  return Placement{raw.type, cell_from_monomial(dot_monomial(raw.i, raw.j)), raw.w};
}

/* Signed tiling of the staircase 0 <= j <= i <= k-1 in dot coordinates, read
 * off the membership cofactors: a term c x^i y^j against 1+x+x^2 is an
 * X-tribone centered at (i+1, j), against 1+y+y^2 a Y-tribone at (i, j+1),
 * against 1+xy+(xy)^2 a Z-tribone at (i+1, j+1). */
std::vector<RawPlacement> staircase_certificate(unsigned k) {
  MembershipCertificate cert = is_member(region_xy(k), chart_tribone_basis());
  if (!cert.member)
    throw std::runtime_error("triangle of side " + std::to_string(k) +
                             " has no signed tribone tiling");
  std::vector<RawPlacement> out;
  for (int g = 0; g < 3; ++g) {
    for (const auto& [mon, coeff] : cert.cofactors[g].terms()) {
      const long i = mon[0];
      const long j = mon[1];
      RawPlacement raw;
      raw.w = to_weight(coeff);
      switch (g) {
        case 0: raw.type = TriboneType::X; raw.i = i + 1; raw.j = j; break;
        case 1: raw.type = TriboneType::Y; raw.i = i; raw.j = j + 1; break;
        default: raw.type = TriboneType::Z; raw.i = i + 1; raw.j = j + 1; break;
      }
      out.push_back(raw);
    }
  }
  return out;
}

/* The affine chart-to-plane map that carries the staircase of side N onto the
 * dots of region_T(N): a translation for N = 2 (mod 3) and N = 1 (mod 3), a
 * point reflection for N = 0 (mod 3).  All three preserve tribone types. */
RawPlacement place_in_region(unsigned n, const RawPlacement& raw) {
  RawPlacement out = raw;
  if (n % 3 == 2) {
    const long k = (n + 1) / 3;
    out.i = raw.i + 1 - 2 * k;
    out.j = raw.j - k;
  } else if (n % 3 == 0) {
    const long k = n / 3;
    out.i = 2 * k - 1 - raw.i;
    out.j = k - 1 - raw.j;
  } else {
    const long s = (n - 1) / 3;
    out.i = raw.i - 2 * s;
    out.j = raw.j - s;
  }
  return out;
}

/* Aggregate placements by (type, center dot) with Integer weights. */
using PlacementKey = std::pair<int, std::pair<long, long>>;

std::map<PlacementKey, Integer> aggregate(const std::vector<Placement>& placements) {
  std::map<PlacementKey, Integer> agg;
  for (const Placement& pl : placements) {
    auto [i, j] = monomial_dot(cell_monomial(pl.center));
    agg[{static_cast<int>(pl.type), {i, j}}] += pl.weight;
  }
  return agg;
}

bool rotation_closed(const std::vector<Placement>& placements) {
  std::map<PlacementKey, Integer> agg = aggregate(placements);
  for (const auto& [key, w] : agg) {
    auto [ri, rj] = rotate_dot(key.second.first, key.second.second);
    PlacementKey rot{(key.first + 1) % 3, {ri, rj}};
    auto it = agg.find(rot);
    if (it == agg.end() ? w != 0 : it->second != w) return false;
  }
  return true;
}

/* Triangular oracle window: the bounding triangle of region_T(n) dilated by
 * the margin, one inequality triple per family.  For n != 1 (mod 3) the
 * window is invariant under the 120-degree rotation. */
struct TriWindow {
  int family = 0;  // n mod 3
  long m = 0;      // triangle parameter including the margin

  bool contains(long i, long j) const {
    switch (family) {
      case 2: return j >= -m && i <= m - 1 && j - i <= m - 1;
      case 0: return j <= m - 1 && i >= -m && j - i >= -m;
      default: return j >= -m && i <= m && j - i <= m;
    }
  }

  std::vector<std::pair<long, long>> dots() const {
    std::vector<std::pair<long, long>> out;
    switch (family) {
      case 2:
        for (long i = -2 * m + 1; i <= m - 1; ++i)
          for (long j = -m; j <= i + m - 1; ++j) out.push_back({i, j});
        break;
      case 0:
        for (long i = -m; i <= 2 * m - 1; ++i)
          for (long j = i - m; j <= m - 1; ++j) out.push_back({i, j});
        break;
      default:
        for (long i = -2 * m; i <= m; ++i)
          for (long j = -m; j <= i + m; ++j) out.push_back({i, j});
        break;
    }
    return out;
  }
};

TriWindow make_window(unsigned n, unsigned margin) {
  if (n == 0) throw std::invalid_argument("oracle: triangle side must be positive");
  TriWindow win;
  win.family = static_cast<int>(n % 3);
  const long base = win.family == 2 ? (n + 1) / 3 : (win.family == 0 ? n / 3 : (n - 1) / 3);
  win.m = base + static_cast<long>(margin);
  return win;
}

constexpr std::array<std::array<std::pair<long, long>, 3>, 3> kCovered = {{
    {{{-1, 0}, {0, 0}, {1, 0}}},    // X
    {{{0, -1}, {0, 0}, {0, 1}}},    // Y
    {{{-1, -1}, {0, 0}, {1, 1}}},   // Z
}};

SparseColumn region_indicator(unsigned n, const std::map<std::pair<long, long>, int>& index) {
  SparseColumn target;
  for (const Cell& cell : region_T(n).cells) {
    auto dot = monomial_dot(cell_monomial(cell));
    target[index.at(dot)] = 1;
  }
  return target;
}

}  // namespace

const GroebnerBasis& chart_tribone_basis() {
  static const GroebnerBasis basis = buchberger_z(
      {parse_xy("1 + x + x^2"), parse_xy("1 + y + y^2"), parse_xy("1 + x*y + x^2*y^2")},
      MonomialOrder::deglex);
  return basis;
}

const GroebnerBasis& invariant_tribone_basis() {
  static const GroebnerBasis basis = [] {
    std::vector<Polynomial> gens = tribone_triplet_generators();
    gens.push_back(theta_relation());
    return buchberger_z(gens, MonomialOrder::lex);
  }();
  return basis;
}

const std::vector<Polynomial>& printed_invariant_basis() {
  static const std::vector<Polynomial> basis = {
      parse_st("27 + 9*t + 3*t^2"),
      parse_st("-27 + t^3"),
      parse_st("9*s2 + 3*s2*t + s2*t^2"),
      parse_st("3*s2^2"),
      parse_st("s2^2*t"),
      parse_st("s2^4"),
      parse_st("3*s1 + s2^2"),
      parse_st("s2^2 + s1*t"),
      parse_st("s1*s2^3"),
      parse_st("s1^2*s2"),
      parse_st("9 + s1^3 + s2^3 + 3*t + t^2"),
  };
  return basis;
}

Verdict signed_tileable(unsigned n) {
  if (n == 0) throw std::invalid_argument("signed_tileable: triangle side must be positive");
  Verdict v;
  v.n = n;
  v.symmetric = false;
  v.remainder = reduce_full(region_xy(n), chart_tribone_basis()).remainder;
  v.tileable = v.remainder.is_zero();
  v.closed_form_check = v.tileable == (n % 9 == 0 || n % 9 == 8);
  return v;
}

Verdict symmetric_signed_tileable(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric_signed_tileable: triangle side must be positive");
  if (n % 3 == 1) throw FixedCellError(n);
  const RegionDecomposition dec = region_delta_st(n);
  const Polynomial target =
      dec.p + Polynomial::constant(st_vars(), static_cast<long>(dec.d)) * dec.q;
  Verdict v;
  v.n = n;
  v.symmetric = true;
  v.remainder = reduce_full(target, invariant_tribone_basis()).remainder;
  v.tileable = v.remainder.is_zero();
  v.closed_form_check = v.tileable == (n % 27 == 0 || n % 27 == 26);
  return v;
}

Tiling extract_certificate(unsigned n) {
  if (n == 0) throw std::invalid_argument("extract_certificate: triangle side must be positive");
  Tiling tiling;
  tiling.region_n = n;
  tiling.symmetric = false;
  for (const RawPlacement& raw : staircase_certificate(n))
    tiling.placements.push_back(pin(place_in_region(n, raw)));
  return tiling;
}

Tiling extract_symmetric_certificate(unsigned n) {
  if (n == 0) throw std::invalid_argument("extract_symmetric_certificate: triangle side must be positive");
  if (n % 3 == 1) throw FixedCellError(n);
  if (n % 27 != 0 && n % 27 != 26)
    throw std::runtime_error("triangle of side " + std::to_string(n) +
                             " has no symmetric signed tribone tiling");
  const SectorClass sc = sector_class(n);
  const long k = sc.k;  // k = 9r, so the rhombus rows split into tribones

  std::vector<RawPlacement> sector;
  for (long q = 0; q < k; ++q)
    for (long p = 1; p < k; p += 3) sector.push_back({TriboneType::X, p, q, 1});

  if (sc.family == RegionFamily::n_mod3_eq_2) {
    // corner triangle (1+i, k+j), 0 <= j <= i <= k-2: a translated staircase
    for (const RawPlacement& raw : staircase_certificate(static_cast<unsigned>(k - 1)))
      sector.push_back({raw.type, raw.i + 1, raw.j + k, raw.w});
  } else {
    // corner triangle (k+i, j), 0 <= i <= j <= k-1: a transposed staircase;
    // transposition swaps X and Y, fixes Z, and flips the center coordinates
    for (const RawPlacement& raw : staircase_certificate(static_cast<unsigned>(k))) {
      TriboneType type = raw.type == TriboneType::Z
                             ? TriboneType::Z
                             : (raw.type == TriboneType::X ? TriboneType::Y : TriboneType::X);
      sector.push_back({type, raw.j + k, raw.i, raw.w});
    }
  }

  Tiling tiling;
  tiling.region_n = n;
  tiling.symmetric = true;
  for (const RawPlacement& raw : sector) {
    long i = raw.i;
    long j = raw.j;
    for (int s = 0; s < 3; ++s) {
      tiling.placements.push_back(pin({rotated_type(raw.type, s), i, j, raw.w}));
      std::tie(i, j) = rotate_dot(i, j);
    }
  }
  return tiling;
}

bool covers_exactly(const std::vector<Cell>& region, const std::vector<Placement>& placements) {
  std::map<Monomial, Integer, MonomialLexLess> weight;
  for (const Placement& pl : placements)
    for (const Monomial& dot : placement_dots(pl)) weight[dot] += pl.weight;
  for (const Cell& cell : region) {
    auto it = weight.find(cell_monomial(cell));
    if (it == weight.end() || it->second != 1) return false;
    weight.erase(it);
  }
  for (const auto& [dot, w] : weight)
    if (w != 0) return false;
  return true;
}

bool verify_tiling(unsigned n, const Tiling& tiling, bool symmetric) {
  const std::vector<Cell> region = n == 0 ? std::vector<Cell>{} : region_T(n).cells;
  if (!covers_exactly(region, tiling.placements)) return false;
  return !symmetric || rotation_closed(tiling.placements);
}

namespace {

OracleReport run_oracle(unsigned n, unsigned margin, std::size_t column_cap, bool symmetric) {
  if (symmetric && n % 3 == 1) throw FixedCellError(n);
  const TriWindow win = make_window(n, margin);
  const std::vector<std::pair<long, long>> dots = win.dots();
  std::map<std::pair<long, long>, int> index;
  for (const auto& dot : dots) index.emplace(dot, static_cast<int>(index.size()));

  std::vector<SparseColumn> columns;
  for (const auto& [ci, cj] : dots) {
    if (symmetric && (ci < 0 || cj < 0)) continue;  // one representative per orbit
    for (int type = 0; type < 3; ++type) {
      SparseColumn col;
      bool inside = true;
      long ui = ci;
      long uj = cj;
      const int copies = symmetric ? 3 : 1;
      for (int s = 0; s < copies && inside; ++s) {
        for (const auto& [di, dj] : kCovered[(type + s) % 3]) {
          auto it = index.find({ui + di, uj + dj});
          if (it == index.end()) {
            inside = false;
            break;
          }
          col[it->second] += 1;
        }
        std::tie(ui, uj) = rotate_dot(ui, uj);
      }
      if (inside) columns.push_back(std::move(col));
    }
  }
  if (columns.size() > column_cap)
    throw std::runtime_error("oracle system has " + std::to_string(columns.size()) +
                             " columns, above the cap of " + std::to_string(column_cap));

  OracleReport report;
  report.n = n;
  report.symmetric = symmetric;
  report.window_margin = margin;
  report.solvable = lattice_contains(std::move(columns), region_indicator(n, index)).solvable;
  return report;
}

}  // namespace

OracleReport oracle_signed(unsigned n, unsigned window_margin, std::size_t column_cap) {
  return run_oracle(n, window_margin, column_cap, false);
}

OracleReport oracle_symmetric(unsigned n, unsigned window_margin, std::size_t column_cap) {
  return run_oracle(n, window_margin, column_cap, true);
}

std::string tiling_to_json(const Tiling& tiling) {
  json out;
  out["n"] = tiling.region_n;
  out["symmetric"] = tiling.symmetric;
  json placements = json::array();
  for (const Placement& pl : tiling.placements) {
    json p;
    p["type"] = std::string(1, tribone_type_name(pl.type));
    p["center"] = {pl.center.p, pl.center.q, pl.center.sector};
    p["weight"] = pl.weight;
    placements.push_back(std::move(p));
  }
  out["placements"] = std::move(placements);
  return out.dump(2);
}

Tiling tiling_from_json(const std::string& text) {
  const json in = json::parse(text);
  if (!in.is_object() || !in.contains("n") || !in.contains("placements"))
    throw std::invalid_argument("tiling JSON: expected an object with \"n\" and \"placements\"");
  if (!in["n"].is_number_integer() && !in["n"].is_number_unsigned())
    throw std::invalid_argument("tiling JSON: \"n\" must be an integer");
  const long long n = in["n"].get<long long>();
  if (n < 0 || n > std::numeric_limits<unsigned>::max())
    throw std::invalid_argument("tiling JSON: \"n\" out of range");

  Tiling tiling;
  tiling.region_n = static_cast<unsigned>(n);
  tiling.symmetric = in.value("symmetric", false);
  if (!in["placements"].is_array())
    throw std::invalid_argument("tiling JSON: \"placements\" must be an array");
  for (const json& p : in["placements"]) {
    const std::string type = p.at("type").get<std::string>();
    if (type.size() != 1)
      throw std::invalid_argument("tiling JSON: placement type must be \"X\", \"Y\" or \"Z\"");
    const json& center = p.at("center");
    if (!center.is_array() || center.size() != 3)
      throw std::invalid_argument("tiling JSON: placement center must be [p, q, sector]");
    Cell cell{center[0].get<long>(), center[1].get<long>(), center[2].get<int>()};
    if (cell.p < 0 || cell.q < 0 || cell.sector < 0 || cell.sector > 2)
      throw std::invalid_argument("tiling JSON: placement center out of range");
    const long long w = p.at("weight").get<long long>();
    if (w == 0) throw std::invalid_argument("tiling JSON: placement weight must be nonzero");
    tiling.placements.push_back(Placement{tribone_type_from_name(type[0]), cell, w});
  }
  return tiling;
}

std::string verdict_to_json(const Verdict& verdict) {
  json out;
  out["n"] = verdict.n;
  out["symmetric"] = verdict.symmetric;
  out["tileable"] = verdict.tileable;
  out["remainder"] = format_polynomial(verdict.remainder);
  out["closed_form_check"] = verdict.closed_form_check;
  return out.dump(2);
}

std::string oracle_to_json(const OracleReport& report) {
  json out;
  out["n"] = report.n;
  out["symmetric"] = report.symmetric;
  out["window_margin"] = report.window_margin;
  out["solvable"] = report.solvable;
  return out.dump(2);
}

}  // namespace tribone
