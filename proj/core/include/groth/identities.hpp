#pragma once

#include "groth/polynomial.hpp"

#include <random>

namespace groth {

// Operator laws used as randomized properties. Checks that need a symmetric
// input build one internally as p + s_i(p); each returns true when the law
// holds for the given inputs.

// (x_i - x_{i+1}) * pi_i(p) == (1 + beta x_{i+1}) p - (1 + beta x_i) s_i(p);
// the defining quotient, stated multiplicatively so it stays in the ring.
bool check_exactness(const Polynomial& p, int i);

// pi_i(p q) == pi_i(p) q + s_i(p) pi_i(q) + beta s_i(p) q.
bool check_leibniz(const Polynomial& p, const Polynomial& q, int i);

// pi_i(f) == -beta f for f symmetric in x_i, x_{i+1}.
bool check_symmetric_collapse(const Polynomial& p, int i);

// pi_i(f q) == f pi_i(q) for f symmetric in x_i, x_{i+1}.
bool check_symmetric_factor(const Polynomial& p, const Polynomial& q, int i);

// pi_i(x_i^k f) for symmetric f: -beta f when k = 0, otherwise
// (sum_{s=0}^{k-1} x_i^s x_{i+1}^{k-1-s} + beta sum_{s=1}^{k-1} x_i^s x_{i+1}^{k-s}) f.
bool check_power_rule(const Polynomial& p, int i, int k);

// pi_i(pi_i(p)) == -beta pi_i(p).
bool check_double_application(const Polynomial& p, int i);

// pi_i pi_j == pi_j pi_i when |i - j| >= 2.
bool check_distant_commutation(const Polynomial& p, int i, int j);

// pi_i pi_{i+1} pi_i == pi_{i+1} pi_i pi_{i+1}.
bool check_braid(const Polynomial& p, int i);

// Deterministic small polynomial: at most max_terms terms, total x/b degree
// at most max_degree per term, beta exponent at most 2, coefficients in
// [-5, 5] minus zero.
Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_degree, int max_terms);

}  // namespace groth
