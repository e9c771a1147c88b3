#include "groth/identities.hpp"

#include <stdexcept>
#include <vector>

namespace groth {

namespace {

Polynomial x_power(int n, int i, int e) {
  Polynomial p = Polynomial::one(n);
  for (int k = 0; k < e; ++k) p = p * Polynomial::x(n, i);
  return p;
}

Polynomial symmetrize(const Polynomial& p, int i) { return p + swap_adjacent(p, i); }

}  // namespace

bool check_exactness(const Polynomial& p, int i) {
  const int n = p.ring_size();
  const Polynomial xi = Polynomial::x(n, i), xj = Polynomial::x(n, i + 1);
  const Polynomial beta = Polynomial::beta(n);
  const Polynomial lhs = (xi - xj) * divided_difference(p, i);
  const Polynomial rhs =
      (Polynomial::one(n) + beta * xj) * p - (Polynomial::one(n) + beta * xi) * swap_adjacent(p, i);
  return lhs == rhs;
}

bool check_leibniz(const Polynomial& p, const Polynomial& q, int i) {
  const Polynomial beta = Polynomial::beta(p.ring_size());
  const Polynomial lhs = divided_difference(p * q, i);
  const Polynomial sp = swap_adjacent(p, i);
  const Polynomial rhs = divided_difference(p, i) * q + sp * divided_difference(q, i) + beta * sp * q;
  return lhs == rhs;
}

bool check_symmetric_collapse(const Polynomial& p, int i) {
  const Polynomial f = symmetrize(p, i);
  return divided_difference(f, i) == -(Polynomial::beta(p.ring_size()) * f);
}

bool check_symmetric_factor(const Polynomial& p, const Polynomial& q, int i) {
  const Polynomial f = symmetrize(p, i);
  return divided_difference(f * q, i) == f * divided_difference(q, i);
}

bool check_power_rule(const Polynomial& p, int i, int k) {
  if (k < 0) throw std::invalid_argument("power must be nonnegative");
  const int n = p.ring_size();
  const Polynomial f = symmetrize(p, i);
  const Polynomial lhs = divided_difference(x_power(n, i, k) * f, i);
  if (k == 0) return lhs == -(Polynomial::beta(n) * f);
  Polynomial bracket = Polynomial::zero(n);
  for (int s = 0; s <= k - 1; ++s) bracket += x_power(n, i, s) * x_power(n, i + 1, k - 1 - s);
  Polynomial cross = Polynomial::zero(n);
  for (int s = 1; s <= k - 1; ++s) cross += x_power(n, i, s) * x_power(n, i + 1, k - s);
  bracket += Polynomial::beta(n) * cross;
  return lhs == bracket * f;
}

bool check_double_application(const Polynomial& p, int i) {
  const Polynomial once = divided_difference(p, i);
  return divided_difference(once, i) == -(Polynomial::beta(p.ring_size()) * once);
}

bool check_distant_commutation(const Polynomial& p, int i, int j) {
  if (i > j) return check_distant_commutation(p, j, i);
  if (j - i < 2) throw std::invalid_argument("indices must be at least two apart");
  return divided_difference(divided_difference(p, i), j) ==
         divided_difference(divided_difference(p, j), i);
}

bool check_braid(const Polynomial& p, int i) {
  auto dd = [](const Polynomial& q, int k) { return divided_difference(q, k); };
  return dd(dd(dd(p, i), i + 1), i) == dd(dd(dd(p, i + 1), i), i + 1);
}

Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_degree, int max_terms) {
  if (n < 1 || max_degree < 0 || max_terms < 1)
    throw std::invalid_argument("bad random polynomial parameters");
  // Plain modulo keeps the stream identical across standard libraries.
  const int nterms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(n);
    m.set_beta(static_cast<std::uint32_t>(rng() % 3));
    const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    for (int d = 0; d < deg; ++d) {
      const int slot = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
      if (slot < n)
        m.set_x(slot + 1, m.x(slot + 1) + 1);
      else
        m.set_b(slot - n + 1, m.b(slot - n + 1) + 1);
    }
    const int mag = 1 + static_cast<int>(rng() % 5);
    const bool neg = rng() % 2 == 1;
    ts.push_back(Term{std::move(m), Int(neg ? -mag : mag)});
  }
  return Polynomial::from_terms(n, std::move(ts));
}

}  // namespace groth
