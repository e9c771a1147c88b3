#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace groth {

using Int = boost::multiprecision::cpp_int;

// Exponent row of a monomial in Z[beta][x_1..x_n, b_1..b_n], laid out as
// [beta, x_1..x_n, b_1..b_n]. The ring size n is fixed at construction.
class Monomial {
 public:
  explicit Monomial(int n) : n_(n), e_(2 * static_cast<std::size_t>(n) + 1, 0) {}

  int ring_size() const { return n_; }

  std::uint32_t beta() const { return e_[0]; }
  std::uint32_t x(int i) const { return e_[xslot(i)]; }
  std::uint32_t b(int j) const { return e_[bslot(j)]; }

  void set_beta(std::uint32_t v) { e_[0] = v; }
  void set_x(int i, std::uint32_t v) { e_[xslot(i)] = v; }
  void set_b(int j, std::uint32_t v) { e_[bslot(j)] = v; }

  std::uint64_t total_degree() const;

  // Slot-wise sum of exponents; rings must match.
  static Monomial product(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  // Canonical term order: beta ascending, then x block, then b block, each
  // block ordered with the larger exponent at the first differing slot first.
  static bool canonical_less(const Monomial& a, const Monomial& b);

  const std::vector<std::uint32_t>& raw() const { return e_; }

 private:
  std::size_t xslot(int i) const;
  std::size_t bslot(int j) const;

  int n_;
  std::vector<std::uint32_t> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial mono;
  Int coeff;

  bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

// Element of Z[beta][x_1..x_n, b_1..b_n]. Invariant: terms are sorted in the
// canonical order and no coefficient is zero, so equality is representational.
class Polynomial {
 public:
  explicit Polynomial(int n);

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial one(int n) { return constant(n, 1); }
  static Polynomial constant(int n, Int c);
  static Polynomial x(int n, int i);
  static Polynomial b(int n, int j);
  static Polynomial beta(int n);

  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(int n, std::vector<Term> terms);

  int ring_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  int n_;
  std::vector<Term> terms_;
};

// u (+) v = u + v + beta*u*v.
Polynomial oplus(const Polynomial& u, const Polynomial& v);

// Exchanges x_i and x_{i+1}; b and beta are untouched. 1 <= i <= n-1.
Polynomial swap_adjacent(const Polynomial& p, int i);

// K-theoretic divided difference
//   pi_i(f) = ((1 + beta x_{i+1}) f - (1 + beta x_i) s_i(f)) / (x_i - x_{i+1}),
// computed monomial-wise through the classical operator applied to
// (1 + beta x_{i+1}) f, so the division is exact by construction.
Polynomial divided_difference(const Polynomial& p, int i);

// beta_value substitutes an integer for beta; kill_b / kill_x send the whole
// variable family to zero.
Polynomial specialize(const Polynomial& p, std::optional<std::int64_t> beta_value,
                      bool kill_b = false, bool kill_x = false);

// Plain-text form, e.g. "x1 + b1 + B*x1*b1"; beta renders as the token B.
std::string to_text(const Polynomial& p);

// LaTeX form, e.g. "x_{1} + b_{1} + \\beta x_{1} b_{1}".
std::string to_latex(const Polynomial& p);

// {"n": ..., "terms": [{"coeff": "...", "beta": ..., "x": [...], "b": [...]}]}
// with terms in canonical order and coefficients as decimal strings.
std::string to_json_string(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

}  // namespace groth
