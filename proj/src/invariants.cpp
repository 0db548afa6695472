#include "tribone/invariants.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tribone {

namespace {

Polynomial ST(const std::string& text) { return parse_polynomial(st_vars(), text); }

constexpr std::size_t T_INDEX = 2;

Monomial rotated(const Monomial& m) { return Monomial({m[2], m[0], m[1]}); }

/* Invariant coordinates of the orbit sum a^p b^q + b^p c^q + c^p a^q,
 * memoized over the three-step rewriting rules.  Every result has t-degree
 * at most 1. */
const Polynomial& orbit_st(unsigned p, unsigned q) {
  static std::map<std::pair<unsigned, unsigned>, Polynomial> cache;
  auto it = cache.find({p, q});
  if (it != cache.end()) return it->second;

  Polynomial value(st_vars());
  if (p == 0 && q == 0) {
    value = ST("3");
  } else if (p == 0) {
    value = orbit_st(q, 0);
  } else if (p == 1 && q == 0) {
    value = ST("s1");
  } else if (p == 1 && q == 1) {
    value = ST("s2");
  } else if (p == 2 && q == 1) {
    value = ST("t");
  } else if (p == 1 && q == 2) {
    value = ST("s1*s2 - 3 - t");
  } else if (q == 0) {
    value = ST("s1") * orbit_st(p - 1, 0) - orbit_st(p - 1, 1) - orbit_st(1, p - 1);
  } else if (q == 1) {
    value = ST("s1") * orbit_st(p - 1, 1) - orbit_st(p - 1, 2) - orbit_st(p - 2, 0);
  } else if (p == 1) {
    value = ST("s1") * orbit_st(1, q - 1) - orbit_st(2, q - 1) - orbit_st(q - 2, 0);
  } else {
    value = ST("s2") * orbit_st(p - 1, q - 1) - orbit_st(p - 1, q - 2) - orbit_st(p - 2, q - 1);
  }
  return cache.emplace(std::make_pair(p, q), std::move(value)).first->second;
}

}  // namespace

Polynomial theta_relation() {
  return ST("t^2 - s1*s2*t + 3*t + s1^3 + s2^3 - 6*s1*s2 + 9");
}

Polynomial st_canonical(const Polynomial& f) {
  if (f.vars() != st_vars()) throw std::invalid_argument("st_canonical: expected an s1/s2/t polynomial");
  static const Polynomial theta = theta_relation();
  Polynomial g = f;
  while (!g.is_zero() && g.degree_in(T_INDEX) >= 2) {
    unsigned d = g.degree_in(T_INDEX);
    Polynomial head(st_vars());
    for (const auto& [mon, coeff] : g.terms()) {
      if (mon[T_INDEX] != d) continue;
      std::vector<unsigned> e = mon.exponents();
      e[T_INDEX] = d - 2;
      head.add_term(Monomial(std::move(e)), coeff);
    }
    g -= head * theta;  // the relation is monic in t, so all t^d terms cancel
  }
  return g;
}

Polynomial delta_symmetrize(const Polynomial& f) {
  Polynomial r1 = rotate120(f);
  return normalize_quotient(f) + r1 + rotate120(r1);
}

Polynomial to_st_coords(const Polynomial& f0) {
  if (f0.vars().size() != 3) throw std::invalid_argument("to_st_coords: expected a three-variable polynomial");
  Polynomial f = normalize_quotient(f0);
  if (rotate120(f) != f)
    throw std::invalid_argument("to_st_coords: polynomial is not rotation-invariant");
  Polynomial out(st_vars());
  std::set<std::vector<unsigned>> done;
  for (const auto& [mon, coeff] : f.terms()) {
    if (done.count(mon.exponents())) continue;
    Monomial r1 = rotated(mon);
    Monomial r2 = rotated(r1);
    done.insert(mon.exponents());
    done.insert(r1.exponents());
    done.insert(r2.exponents());
    if (mon == r1) {
      // the only rotation-fixed normalized monomial is 1
      out += Polynomial::constant(st_vars(), coeff);
      continue;
    }
    // orbit representative: the largest (p,q) over the rotations a^p b^q
    bool have = false;
    std::pair<unsigned, unsigned> rep;
    for (const Monomial& m : {mon, r1, r2}) {
      if (m[2] != 0) continue;
      std::pair<unsigned, unsigned> cand{m[0], m[1]};
      if (!have || cand > rep) rep = cand;
      have = true;
    }
    if (!have) throw std::logic_error("to_st_coords: normalized orbit without a c-free rotation");
    out += Polynomial::constant(st_vars(), coeff) * orbit_st(rep.first, rep.second);
  }
  return out;
}

Polynomial st_to_q(const Polynomial& f) {
  if (f.vars() != st_vars()) throw std::invalid_argument("st_to_q: expected an s1/s2/t polynomial");
  static const std::vector<Polynomial> images = {
      parse_polynomial(q_vars(), "a + b + c"),
      parse_polynomial(q_vars(), "a*b + b*c + c*a"),
      parse_polynomial(q_vars(), "a^2*b + b^2*c + c^2*a"),
  };
  return normalize_quotient(substitute(f, q_vars(), images));
}

std::vector<Polynomial> tribone_triplet_generators() {
  const Monomial origin({1, 0, 0});           // a
  const Monomial x_neighbor({2, 0, 2});       // a*x
  std::vector<Polynomial> out;
  for (const Monomial& center : {origin, x_neighbor})
    for (TriboneType type : {TriboneType::X, TriboneType::Y, TriboneType::Z})
      out.push_back(to_st_coords(delta_symmetrize(tribone_poly(type, center))));
  return out;
}

RegionDecomposition region_delta_st(unsigned n) {
  SectorClass sc = sector_class(n);
  RegionDecomposition dec;
  dec.n = n;
  dec.family = sc.family;
  dec.case_index = sc.case_index;
  dec.d = sc.d;
  if (sc.family == RegionFamily::n_mod3_eq_2) {
    switch (sc.case_index) {
      case 0:
        dec.q = ST("3*s1 - 3*s1^2*s2 + s1*s2^3");
        break;
      case 1:
        dec.p = ST("s1");
        dec.q = ST("9*s1 - 6*s1^2*s2 + s1^3*s2^2 + 4*s1*t - 2*s1^2*s2*t + s1*t^2");
        break;
      default:
        dec.p = ST("11*s1 + s1^4 - 9*s1^2*s2 + 5*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t "
                   "- 2*s1^2*s2*t + s2^2*t + s1*t^2");
        dec.q = ST("24*s1 + s1^4 - 11*s1^2*s2 + s1^5*s2 - 3*s1^3*s2^2 + 4*s1*s2^3 "
                   "+ 8*s1*t - s1^4*t - s1^2*s2*t + 3*s1*t^2");
        break;
    }
    return dec;
  }
  switch (sc.case_index) {
    case 0:
      dec.q = ST("s1^2*s2 - 2*s2^2");
      break;
    case 1:
      dec.p = ST("-s1 + s2^2");
      dec.q = ST("-s1^2*s2 - 2*s2^2 + s1*s2^3 - s2^2*t");
      break;
    default:
      dec.p = ST("7*s1 - 5*s1^2*s2 + 3*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t "
                 "- 2*s1^2*s2*t + s2^2*t + s1*t^2");
      dec.q = ST("2*s1^2*s2 + 4*s2^2 - 4*s1*s2^3 + s2^5");
      break;
  }
  return dec;
}

}  // namespace tribone
