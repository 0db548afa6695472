#include "tribone/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tribone {

namespace {

struct LeadPair {
  Monomial mon;
  Integer coeff;
};

LeadPair lead_of(const Polynomial& f, MonomialOrder order, const char* who) {
  if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
  Term t = f.leading_term(order);
  return {t.mon, t.coeff};
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.vars() != g.vars())
    throw std::invalid_argument("s_polynomial: mismatched variable sets");
  LeadPair lf = lead_of(f, order, "s_polynomial");
  LeadPair lg = lead_of(g, order, "s_polynomial");
  Monomial L = lf.mon.lcm(lg.mon);
  Integer gc = extended_gcd(lf.coeff, lg.coeff).g;
  Integer ell = lf.coeff / gc * lg.coeff;  // lcm of the coefficients, sign carried
  if (ell < 0) ell = -ell;
  return f.times_term(L.div(lf.mon), ell / lf.coeff) -
         g.times_term(L.div(lg.mon), ell / lg.coeff);
}

Polynomial gcd_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.vars() != g.vars())
    throw std::invalid_argument("gcd_polynomial: mismatched variable sets");
  LeadPair lf = lead_of(f, order, "gcd_polynomial");
  LeadPair lg = lead_of(g, order, "gcd_polynomial");
  Monomial L = lf.mon.lcm(lg.mon);
  Bezout bz = extended_gcd(lf.coeff, lg.coeff);
  return f.times_term(L.div(lf.mon), bz.a) + g.times_term(L.div(lg.mon), bz.b);
}

namespace {

struct OrderLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order) < 0;
  }
};

/* Shared multi-divisor reduction loop.  strict=true uses the exact integral
 * rule (coefficient must divide); strict=false uses symmetric
 * quotient-with-remainder.  Tracks quotients per divisor. */
ReduceResult reduce_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                         MonomialOrder order, bool strict) {
  std::vector<LeadPair> lead;
  lead.reserve(basis.size());
  for (const auto& e : basis) {
    if (e.vars() != f.vars())
      throw std::invalid_argument("reduce: basis element over mismatched variable set");
    lead.push_back(lead_of(e, order, "reduce"));
  }

  ReduceResult res{Polynomial(f.vars()),
                   std::vector<Polynomial>(basis.size(), Polynomial(f.vars()))};

  std::map<Monomial, Integer, OrderLess> work{OrderLess{order}};
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  while (!work.empty()) {
    auto top = std::prev(work.end());
    Monomial m = top->first;
    Integer c = top->second;
    bool rewritten = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!lead[i].mon.divides(m)) continue;
      Integer q;
      if (strict) {
        if (c % lead[i].coeff != 0) continue;
        q = c / lead[i].coeff;
      } else {
        q = divmod_symmetric(c, lead[i].coeff).quot;
        if (q == 0) continue;
      }
      Monomial u = m.div(lead[i].mon);
      for (const auto& [md, cd] : basis[i].terms()) {
        Monomial mm = md.mul(u);
        Integer delta = -q * cd;
        auto [it, inserted] = work.emplace(mm, delta);
        if (!inserted) {
          it->second += delta;
          if (it->second == 0) work.erase(it);
        }
      }
      res.quotients[i].add_term(u, q);
      rewritten = true;
      break;
    }
    if (!rewritten) {
      res.remainder.add_term(m, c);
      work.erase(m);
    }
  }
  return res;
}

}  // namespace

ReduceResult reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                         MonomialOrder order) {
  return reduce_impl(f, basis, order, /*strict=*/false);
}

ReduceResult reduce_full(const Polynomial& f, const GroebnerBasis& basis) {
  return reduce_full(f, basis.elements, basis.order);
}

namespace {

/* One tracked basis element under construction: the polynomial plus its row in
 * the cofactor matrix over the original generators. */
struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> row;
};

struct PendingPair {
  Monomial lcm;
  unsigned long seq;
  std::size_t i, j;
  bool gcd_kind;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    auto c = compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

void sign_normalize(Tracked& t, MonomialOrder order) {
  if (t.poly.is_zero()) return;
  if (t.poly.leading_term(order).coeff < 0) {
    t.poly = -t.poly;
    for (auto& c : t.row) c = -c;
  }
}

}  // namespace

GroebnerBasis buchberger_z(const std::vector<Polynomial>& generators, MonomialOrder order) {
  if (generators.empty()) throw std::invalid_argument("buchberger_z: no generators");
  const VariableSet vars = generators.front().vars();
  for (const auto& g : generators)
    if (g.vars() != vars)
      throw std::invalid_argument("buchberger_z: generators over mismatched variable sets");

  const std::size_t ngen = generators.size();
  std::vector<Tracked> basis;
  std::set<PendingPair, PairLess> queue{PairLess{order}};
  unsigned long seq = 0;

  auto push_pairs = [&](std::size_t n) {
    LeadPair ln = lead_of(basis[n].poly, order, "buchberger_z");
    for (std::size_t i = 0; i < n; ++i) {
      Monomial L = lead_of(basis[i].poly, order, "buchberger_z").mon.lcm(ln.mon);
      queue.insert({L, seq++, i, n, false});
      queue.insert({L, seq++, i, n, true});
    }
  };

  auto add_element = [&](Tracked t) {
    sign_normalize(t, order);
    basis.push_back(std::move(t));
    push_pairs(basis.size() - 1);
  };

  /* reduce with the strict rule against the current basis, in tracked form */
  auto strict_reduce = [&](Tracked t) -> Tracked {
    std::vector<Polynomial> polys;
    polys.reserve(basis.size());
    for (const auto& b : basis) polys.push_back(b.poly);
    if (polys.empty() || t.poly.is_zero()) return t;
    DivisionResult dr = divide(t.poly, polys, order);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (dr.quotients[i].is_zero()) continue;
      for (std::size_t j = 0; j < ngen; ++j) t.row[j] -= dr.quotients[i] * basis[i].row[j];
    }
    t.poly = std::move(dr.remainder);
    return t;
  };

  for (std::size_t j = 0; j < ngen; ++j) {
    if (generators[j].is_zero()) continue;
    Tracked t{generators[j], std::vector<Polynomial>(ngen, Polynomial(vars))};
    t.row[j] = Polynomial::constant(vars, 1);
    add_element(std::move(t));
  }
  if (basis.empty()) throw std::invalid_argument("buchberger_z: all generators are zero");

  while (!queue.empty()) {
    PendingPair p = *queue.begin();
    queue.erase(queue.begin());
    const Tracked& fi = basis[p.i];
    const Tracked& fj = basis[p.j];
    LeadPair li = lead_of(fi.poly, order, "buchberger_z");
    LeadPair lj = lead_of(fj.poly, order, "buchberger_z");
    Monomial L = li.mon.lcm(lj.mon);
    Monomial ui = L.div(li.mon), uj = L.div(lj.mon);

    Tracked cand{Polynomial(vars), std::vector<Polynomial>(ngen, Polynomial(vars))};
    if (p.gcd_kind) {
      Bezout bz = extended_gcd(li.coeff, lj.coeff);
      cand.poly = fi.poly.times_term(ui, bz.a) + fj.poly.times_term(uj, bz.b);
      for (std::size_t k = 0; k < ngen; ++k)
        cand.row[k] = fi.row[k].times_term(ui, bz.a) + fj.row[k].times_term(uj, bz.b);
    } else {
      Integer gc = extended_gcd(li.coeff, lj.coeff).g;
      Integer ell = li.coeff / gc * lj.coeff;
      if (ell < 0) ell = -ell;
      cand.poly = fi.poly.times_term(ui, ell / li.coeff) - fj.poly.times_term(uj, ell / lj.coeff);
      for (std::size_t k = 0; k < ngen; ++k)
        cand.row[k] =
            fi.row[k].times_term(ui, ell / li.coeff) - fj.row[k].times_term(uj, ell / lj.coeff);
    }

    cand = strict_reduce(std::move(cand));
    if (!cand.poly.is_zero()) add_element(std::move(cand));
  }

  /* Minimize: drop any element whose leading term is strongly divisible by a
   * kept one's.  Sorting by (monomial, |coefficient|) first makes every
   * potential divisor appear before what it divides. */
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<LeadPair> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) leads.push_back(lead_of(b.poly, order, "buchberger_z"));
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto c = compare(leads[a].mon, leads[b].mon, order);
    if (c != 0) return c < 0;
    return leads[a].coeff < leads[b].coeff;
  });
  std::vector<Tracked> kept;
  std::vector<LeadPair> kept_leads;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (const auto& kl : kept_leads) {
      if (kl.mon.divides(leads[i].mon) && leads[i].coeff % kl.coeff == 0) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(std::move(basis[i]));
      kept_leads.push_back(leads[i]);
    }
  }

  /* Tail-reduce each kept element by all the others: leading terms are
   * pairwise strongly irreducible, so only tails change. */
  std::vector<Polynomial> kept_polys;
  for (const auto& k : kept) kept_polys.push_back(k.poly);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Polynomial lt = Polynomial::term(vars, kept_leads[i].mon, kept_leads[i].coeff);
    Polynomial tail = kept[i].poly - lt;
    if (tail.is_zero()) continue;
    std::vector<Polynomial> others;
    std::vector<std::size_t> omap;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      others.push_back(kept_polys[j]);
      omap.push_back(j);
    }
    ReduceResult rr = reduce_impl(tail, others, order, /*strict=*/false);
    kept[i].poly = lt + rr.remainder;
    for (std::size_t oj = 0; oj < omap.size(); ++oj) {
      if (rr.quotients[oj].is_zero()) continue;
      for (std::size_t g = 0; g < ngen; ++g)
        kept[i].row[g] -= rr.quotients[oj] * kept[omap[oj]].row[g];
    }
    kept_polys[i] = kept[i].poly;
  }

  GroebnerBasis out{vars, order, generators, {}, {}};
  for (auto& k : kept) {
    out.elements.push_back(std::move(k.poly));
    out.cofactors.push_back(std::move(k.row));
  }
  return out;
}

MembershipCertificate is_member(const Polynomial& f, const GroebnerBasis& basis) {
  ReduceResult rr = reduce_full(f, basis);
  MembershipCertificate cert{rr.remainder.is_zero(), rr.remainder,
                             std::vector<Polynomial>(basis.generators.size(),
                                                     Polynomial(basis.vars))};
  for (std::size_t e = 0; e < basis.elements.size(); ++e) {
    if (rr.quotients[e].is_zero()) continue;
    for (std::size_t j = 0; j < basis.generators.size(); ++j)
      cert.cofactors[j] += rr.quotients[e] * basis.cofactors[e][j];
  }
  return cert;
}

bool ideal_equal(const std::vector<Polynomial>& gens1, const std::vector<Polynomial>& gens2,
                 MonomialOrder order) {
  GroebnerBasis b1 = buchberger_z(gens1, order);
  GroebnerBasis b2 = buchberger_z(gens2, order);
  for (const auto& g : gens1)
    if (!reduce_full(g, b2).remainder.is_zero()) return false;
  for (const auto& g : gens2)
    if (!reduce_full(g, b1).remainder.is_zero()) return false;
  return true;
}

}  // namespace tribone
