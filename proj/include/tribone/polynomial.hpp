#ifndef TRIBONE_POLYNOMIAL_HPP
#define TRIBONE_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tribone {

using Integer = boost::multiprecision::cpp_int;

/* Extended gcd with a deterministic Bezout pair: g = gcd(c1,c2) > 0 and
 * g == a*c1 + b*c2, computed by the iterative Euclidean algorithm (canonical
 * minimal solution).  Requires (c1,c2) != (0,0). */
struct Bezout {
  Integer g, a, b;
};
Bezout extended_gcd(const Integer& c1, const Integer& c2);

/* Symmetric division with remainder: c == quot*m + rem with the remainder the
 * representative of minimal absolute value, ties resolved to the positive one:
 * rem in (-|m|/2, |m|/2].  Requires m != 0. */
struct SymDiv {
  Integer quot, rem;
};
SymDiv divmod_symmetric(const Integer& c, const Integer& m);

/* An ordered list of variable names.  Position = precedence (index 0 is the
 * highest variable for every monomial order built on the set). */
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  /* index of a name, or -1 if the set does not contain it */
  int index_of(const std::string& name) const;

  bool operator==(const VariableSet& other) const;
  bool operator!=(const VariableSet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/* Exponent vector over a fixed VariableSet (the owning polynomial carries the
 * set; a monomial is just the exponents). */
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const;
  bool is_one() const;

  /* does *this divide m (componentwise <=)? */
  bool divides(const Monomial& m) const;
  Monomial mul(const Monomial& m) const;
  /* exact division; requires m.divides(*this) */
  Monomial div(const Monomial& m) const;
  Monomial lcm(const Monomial& m) const;
  Monomial pow(unsigned k) const;

  const std::vector<unsigned>& exponents() const { return e_; }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<unsigned> e_;
};

enum class MonomialOrder { lex, deglex };

/* Strong total order on monomials of the same variable set.  Precedence is the
 * VariableSet position order (index 0 highest). */
std::strong_ordering compare(const Monomial& m1, const Monomial& m2, MonomialOrder order);

/* Stateless lexicographic less-than, used as the canonical storage order. */
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::lex) < 0;
  }
};

struct Term {
  Monomial mon;
  Integer coeff;
};

/* Sparse multivariate polynomial with arbitrary-precision integer
 * coefficients.  Terms are stored keyed by monomial (no zero coefficients);
 * all binary operations require both operands to share one VariableSet. */
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialLexLess>;

  explicit Polynomial(VariableSet vars) : vars_(std::move(vars)) {}
  static Polynomial constant(const VariableSet& vars, Integer c);
  static Polynomial variable(const VariableSet& vars, std::size_t index);
  static Polynomial term(const VariableSet& vars, Monomial m, Integer c);

  const VariableSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /* coefficient of a monomial (zero if absent) */
  Integer coeff(const Monomial& m) const;
  /* terms in canonical (ascending lex) storage order */
  const TermMap& terms() const { return terms_; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var_index) const;

  /* largest term under the given order; requires a nonzero polynomial */
  Term leading_term(MonomialOrder order) const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
  /* f * c*m */
  Polynomial times_term(const Monomial& m, const Integer& c) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

 private:
  void check_same_vars(const Polynomial& g) const;

  VariableSet vars_;
  TermMap terms_;
};

/* Quotient-ring normalization for Z[v1..vn]/(v1..vn - 1): subtract from every
 * term the largest power of the product-of-all-variables monomial it contains,
 * so each term has at least one zero exponent. */
Polynomial normalize_quotient(const Polynomial& f);

/* Sum of coefficients, i.e. f(1,1,...,1): the discrete volume of a region
 * polynomial. */
Integer evaluate_all_ones(const Polynomial& f);

/* Simultaneous substitution: the result lives over `target`; images[i] is the
 * image of f's i-th variable and must live over `target`. */
Polynomial substitute(const Polynomial& f, const VariableSet& target,
                      const std::vector<Polynomial>& images);

/* Variable renumbering: sigma[i] = index, in the (same-size) result set, that
 * old variable i maps onto.  sigma must be a permutation. */
Polynomial permute_variables(const Polynomial& f, const std::vector<std::size_t>& sigma);

/* Multi-divisor division with the strict integral rule: a term c*m is reduced
 * by the first divisor (in sequence order) whose leading term c'*m' satisfies
 * m' | m and c' | c.  Exact identity: f == sum_i quotients[i]*divisors[i] +
 * remainder, and no remainder term is strictly reducible. */
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder order);

/* Text form.  Grammar: terms joined by + or -, each term an optional integer
 * coefficient and variable powers joined by '*', powers written v^k.
 * Example: "9 + s1^3 + s2^3 + 3*t + t^2".  parse throws std::invalid_argument
 * on malformed input or unknown variables; format(f) parses back to f. */
Polynomial parse_polynomial(const VariableSet& vars, const std::string& text);
std::string format_polynomial(const Polynomial& f);

}  // namespace tribone

#endif
