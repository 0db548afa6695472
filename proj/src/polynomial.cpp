#include "tribone/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tribone {

Bezout extended_gcd(const Integer& c1, const Integer& c2) {
  if (c1 == 0 && c2 == 0)
    throw std::invalid_argument("extended_gcd(0, 0) is undefined");
  /* iterative Euclid on (r0, r1), carrying the Bezout rows along */
  Integer r0 = c1, r1 = c2;
  Integer a0 = 1, b0 = 0;
  Integer a1 = 0, b1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;  // C++ truncated division; any consistent choice works
    Integer r2 = r0 - q * r1;
    Integer a2 = a0 - q * a1;
    Integer b2 = b0 - q * b1;
    r0 = r1; r1 = r2;
    a0 = a1; a1 = a2;
    b0 = b1; b1 = b2;
  }
  if (r0 < 0) { r0 = -r0; a0 = -a0; b0 = -b0; }
  return {r0, a0, b0};
}

SymDiv divmod_symmetric(const Integer& c, const Integer& m) {
  if (m == 0) throw std::invalid_argument("divmod_symmetric: zero modulus");
  Integer mm = m < 0 ? Integer(-m) : m;
  Integer r = c % mm;           // truncated remainder, sign of c
  if (r < 0) r += mm;           // now r in [0, mm)
  if (2 * r > mm) r -= mm;      // minimal absolute value, ties (2r == mm) stay positive
  Integer q = (c - r) / m;
  return {q, r};
}

VariableSet::VariableSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->empty()) throw std::invalid_argument("VariableSet: empty");
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j])
        throw std::invalid_argument("VariableSet: duplicate name " + (*names_)[i]);
}

int VariableSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return -1;
}

bool VariableSet::operator==(const VariableSet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::mul(const Monomial& m) const {
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::div(const Monomial& m) const {
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (m.e_[i] > e_[i]) throw std::invalid_argument("Monomial::div: not divisible");
    r[i] = e_[i] - m.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& m) const {
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], m.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::pow(unsigned k) const {
  std::vector<unsigned> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * k;
  return Monomial(std::move(r));
}

std::strong_ordering compare(const Monomial& m1, const Monomial& m2, MonomialOrder order) {
  if (m1.nvars() != m2.nvars())
    throw std::invalid_argument("compare: monomials over different variable sets");
  if (order == MonomialOrder::deglex) {
    unsigned d1 = m1.degree(), d2 = m2.degree();
    if (d1 != d2) return d1 <=> d2;
  }
  /* lex tie-break: higher exponent on an earlier (higher-precedence) variable
   * makes the monomial larger */
  for (std::size_t i = 0; i < m1.nvars(); ++i)
    if (m1[i] != m2[i]) return m1[i] <=> m2[i];
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(const VariableSet& vars, Integer c) {
  Polynomial f(vars);
  if (c != 0) f.terms_.emplace(Monomial::one(vars.size()), std::move(c));
  return f;
}

Polynomial Polynomial::variable(const VariableSet& vars, std::size_t index) {
  if (index >= vars.size()) throw std::invalid_argument("Polynomial::variable: bad index");
  std::vector<unsigned> e(vars.size(), 0);
  e[index] = 1;
  return term(vars, Monomial(std::move(e)), 1);
}

Polynomial Polynomial::term(const VariableSet& vars, Monomial m, Integer c) {
  if (m.nvars() != vars.size())
    throw std::invalid_argument("Polynomial::term: monomial arity mismatch");
  Polynomial f(vars);
  if (c != 0) f.terms_.emplace(std::move(m), std::move(c));
  return f;
}

Integer Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var_index) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var_index]);
  return d;
}

Term Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
  if (order == MonomialOrder::lex) {
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (compare(it->first, best->first, order) > 0) best = it;
  return {best->first, best->second};
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.nvars() != vars_.size())
    throw std::invalid_argument("add_term: monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& g) const {
  if (vars_ != g.vars_)
    throw std::invalid_argument("polynomial operation on mismatched variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_same_vars(g);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_same_vars(g);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same_vars(g);
  Polynomial r(f.vars_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf.mul(mg), cf * cg);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Integer& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [mf, cf] : terms_) r.terms_.emplace(mf.mul(m), cf * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return vars_ == g.vars_ && terms_ == g.terms_;
}

Polynomial normalize_quotient(const Polynomial& f) {
  Polynomial r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    unsigned k = m[0];
    for (std::size_t i = 1; i < m.nvars(); ++i) k = std::min(k, m[i]);
    if (k == 0) {
      r.add_term(m, c);
    } else {
      std::vector<unsigned> e(m.exponents());
      for (auto& x : e) x -= k;
      r.add_term(Monomial(std::move(e)), c);
    }
  }
  return r;
}

Integer evaluate_all_ones(const Polynomial& f) {
  Integer s = 0;
  for (const auto& [m, c] : f.terms()) s += c;
  return s;
}

Polynomial substitute(const Polynomial& f, const VariableSet& target,
                      const std::vector<Polynomial>& images) {
  if (images.size() != f.vars().size())
    throw std::invalid_argument("substitute: one image per source variable required");
  for (const auto& im : images)
    if (im.vars() != target) throw std::invalid_argument("substitute: image over wrong set");
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m[i] > 0) t *= images[i].pow(m[i]);
    r += t;
  }
  return r;
}

Polynomial permute_variables(const Polynomial& f, const std::vector<std::size_t>& sigma) {
  const std::size_t n = f.vars().size();
  if (sigma.size() != n) throw std::invalid_argument("permute_variables: arity mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw std::invalid_argument("permute_variables: not a permutation");
    seen[s] = true;
  }
  Polynomial r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(n);
    for (std::size_t i = 0; i < n; ++i) e[sigma[i]] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

namespace {

/* comparator object so working maps can be keyed by the division order */
struct OrderLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order) < 0;
  }
};

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder order) {
  for (const auto& d : divisors) {
    if (d.vars() != f.vars())
      throw std::invalid_argument("divide: divisor over mismatched variable set");
    if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
  }
  std::vector<Term> lead;
  lead.reserve(divisors.size());
  for (const auto& d : divisors) lead.push_back(d.leading_term(order));

  DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial(f.vars())),
                     Polynomial(f.vars())};

  std::map<Monomial, Integer, OrderLess> work{OrderLess{order}};
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  while (!work.empty()) {
    auto top = std::prev(work.end());
    Monomial m = top->first;
    Integer c = top->second;
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lead[i].mon.divides(m) || c % lead[i].coeff != 0) continue;
      Integer q = c / lead[i].coeff;
      Monomial u = m.div(lead[i].mon);
      /* f -= q * u * divisor_i, applied to the working map */
      for (const auto& [md, cd] : divisors[i].terms()) {
        Monomial mm = md.mul(u);
        Integer delta = -q * cd;
        auto [it, inserted] = work.emplace(mm, delta);
        if (!inserted) {
          it->second += delta;
          if (it->second == 0) work.erase(it);
        }
      }
      res.quotients[i].add_term(u, q);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(m, c);
      work.erase(m);
    }
  }
  return res;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why);
  }
  Integer integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Integer(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (pos == start || std::isdigit(static_cast<unsigned char>(s[start]))) fail("expected name");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const VariableSet& vars, const std::string& text) {
  Lexer lx{text};
  Polynomial f(vars);
  bool first = true;
  while (!lx.eof()) {
    Integer sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    /* one term: optional coefficient and '*'-joined variable powers */
    Integer coeff = 1;
    std::vector<unsigned> expo(vars.size(), 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        coeff *= lx.integer();
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = lx.ident();
        int idx = vars.index_of(name);
        if (idx < 0) lx.fail("unknown variable '" + name + "'");
        unsigned k = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          Integer e = lx.integer();
          if (e < 0 || e > 100000) lx.fail("exponent out of range");
          k = static_cast<unsigned>(e);
        }
        expo[static_cast<std::size_t>(idx)] += k;
      } else {
        lx.fail("expected a coefficient or variable");
      }
      saw_factor = true;
      if (lx.peek() == '*') {
        ++lx.pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) lx.fail("empty term");
    f.add_term(Monomial(std::move(expo)), sign * coeff);
    first = false;
  }
  if (first) lx.fail("empty input");
  return f;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  /* descending canonical (lex) order for deterministic output */
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) { out << "-"; c = -c; }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    std::vector<std::string> factors;
    if (c != 1 || m.is_one()) factors.push_back(c.str());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      std::string v = f.vars().name(i);
      if (m[i] > 1) v += "^" + std::to_string(m[i]);
      factors.push_back(v);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
    first = false;
  }
  return out.str();
}

}  // namespace tribone
