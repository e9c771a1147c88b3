#pragma once

#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace groth {

// prod over i+j <= n of x_i (+) b_j, the polynomial of the longest element.
Polynomial groth_longest(int n);

// Inductive pipeline: walk w up to the longest element along an ascent path,
// then apply the divided differences in reverse. Defined for every w; the
// rule only picks the path, not the result.
Polynomial groth_divided(const Permutation& w, AscentRule rule = AscentRule::smallest);

struct TableauSum {
  Polynomial poly;
  std::uint64_t tableau_count = 0;
};

// Combinatorial pipeline: sum of tableau_weight over all set-valued tableaux
// of the flagged diagram of w. Requires 321-avoiding input; the identity
// contributes the empty tableau and yields 1.
TableauSum tableau_formula(const Permutation& w);

// One-descent pipeline over the rotated diagram with constant flag; the b
// subscript of an entry is val + col - row. Requires grassmannian_data(w).
TableauSum grassmannian_formula(const Permutation& w);

// beta = 0 shadow computed its own way: singleton fillings only, each entry
// contributing x_val + b_idx. Matches specialize(tableau_formula(w), 0).
Polynomial schubert_specialization(const Permutation& w);

// b = 0 shadow computed its own way: full set-valued sum with entry weight
// x_val. Matches specialize(tableau_formula(w), nullopt, /*kill_b=*/true).
Polynomial single_specialization(const Permutation& w);

// Divided difference of a product of factors x_i (+) b_{ell_v} expands into
// the predicted two-sum form, which is symmetric in x_i, x_{i+1}. True when
// both the expansion and its symmetry hold.
bool check_product_expansion(int i, const std::vector<int>& ell);

// Applying the divided difference at position t = f_i to the tableau sum of w
// reproduces the tableau sum of w s_t, under the flag growth preconditions.
bool check_tableau_recursion(const Permutation& w, int i);

struct VerificationReport {
  Permutation perm;
  Polynomial divided;
  Polynomial tableau;
  bool equal = false;
  std::uint64_t tableau_count = 0;
  std::int64_t elapsed_ms = 0;
};

// Runs both pipelines for one 321-avoiding permutation and compares exactly.
VerificationReport verify_theorem(const Permutation& w);

// "perm=... equal=... tableaux=..." (no timing, so output is reproducible).
std::string report_to_text(const VerificationReport& r);

// {"perm": [...], "equal": ..., "tableaux": ..., "ms": ..., "polynomial": ...}
std::string report_to_json(const VerificationReport& r, bool include_polynomial = true);

}  // namespace groth
