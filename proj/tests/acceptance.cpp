// Acceptance gate: every release-blocking property in one binary, one line of
// output per criterion. Exits nonzero when anything fails, including the two
// runtime budgets.

#include "groth/grothendieck.hpp"
#include "groth/identities.hpp"
#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace groth;

namespace {

bool agreement_sweep(int n_lo, int n_hi, std::uint64_t expected_perms) {
  std::uint64_t seen = 0;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const Permutation& w : all_321_avoiding(n)) {
      ++seen;
      if (!verify_theorem(w).equal) {
        std::cerr << "pipelines disagree at " << w.to_string() << '\n';
        return false;
      }
    }
  return seen == expected_perms;
}

bool running_example() {
  const Permutation w({3, 1, 2, 5, 4});
  const auto fs = flag_sequences(w);
  if (fs.f != std::vector<int>{1, 4} || fs.h != std::vector<int>{3, 5}) return false;

  const SkewShape shape = skew_shape(w);
  if (shape.lambda() != std::vector<int>{3, 1} || shape.mu() != std::vector<int>{1, 0})
    return false;

  const PrimedShape prime = shape_prime(w);
  if (prime.lambda != std::vector<int>{3, 2} || prime.mu != std::vector<int>{2, 0}) return false;

  // The four-entry filling {1}, {1}, {1,2} carries weight
  // beta (x1+b2) (x1+b1) (x1+b4) (x2+b3) with + read as the formal group sum.
  const SetValuedTableau fifth{{{1}, {1}, {1, 2}}};
  const auto all = enumerate_svt(shape);
  if (std::find(all.begin(), all.end(), fifth) == all.end()) return false;
  const int n = 5;
  auto ob = [n](int i, int j) { return oplus(Polynomial::x(n, i), Polynomial::b(n, j)); };
  const Polynomial expected =
      Polynomial::beta(n) * ob(1, 2) * ob(1, 1) * ob(1, 4) * ob(2, 3);
  return tableau_weight(shape, fifth, n) == expected;
}

bool grassmannian_coherence() {
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& w : all_321_avoiding(n)) {
      const auto data = grassmannian_data(w);
      if (!data) continue;
      const auto a = grassmannian_formula(w);
      const auto b = tableau_formula(w);
      const Polynomial c = groth_divided(w);
      if (!(a.poly == b.poly && b.poly == c)) return false;
      if (a.tableau_count != b.tableau_count) return false;
      for (int i = 1; i < data->descent; ++i)
        if (swap_adjacent(c, i) != c) return false;
    }
  return true;
}

bool operator_identities() {
  std::mt19937_64 rng(20260816);
  const int n = 4, deg = 4, terms = 5;
  auto draw = [&rng, n, deg, terms] { return random_polynomial(rng, n, deg, terms); };
  auto draw_i = [&rng] { return 1 + static_cast<int>(rng() % 3); };

  for (int c = 0; c < 100; ++c)
    if (!check_exactness(draw(), draw_i())) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_leibniz(draw(), draw(), draw_i())) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_symmetric_collapse(draw(), draw_i())) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_symmetric_factor(draw(), draw(), draw_i())) return false;
  for (int k = 0; k <= 5; ++k)
    for (int c = 0; c < 100; ++c)
      if (!check_power_rule(draw(), draw_i(), k)) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_double_application(draw(), draw_i())) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_braid(draw(), 1 + static_cast<int>(rng() % 2))) return false;
  for (int c = 0; c < 100; ++c)
    if (!check_distant_commutation(draw(), 1, 3)) return false;
  return true;
}

bool product_expansion() {
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> ell;
    for (int l = 1; l <= k; ++l) ell.push_back(l);
    for (int i : {1, 2, 3})
      if (!check_product_expansion(i, ell)) return false;
  }
  std::mt19937_64 rng(97531);
  for (int c = 0; c < 100; ++c) {
    const int i = 1 + static_cast<int>(rng() % 3);
    std::vector<int> ell(1 + rng() % 5);
    for (auto& l : ell) l = 1 + static_cast<int>(rng() % 5);
    if (!check_product_expansion(i, ell)) return false;
  }
  return true;
}

bool tableau_recursion() {
  // The documented two-step chain first.
  if (!check_tableau_recursion(Permutation({3, 5, 1, 2, 4}), 2)) return false;
  if (!check_tableau_recursion(Permutation({3, 1, 5, 2, 4}), 2)) return false;

  std::uint64_t pairs = 0;
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& w : all_321_avoiding(n)) {
      if (w.is_identity()) continue;
      const auto fs = flag_sequences(w);
      const int r = static_cast<int>(fs.f.size());
      for (int i = 1; i <= r; ++i) {
        const int next_f = (i < r) ? fs.f[i] : n + 1;
        if (fs.f[i - 1] + 1 >= next_f || w(fs.f[i - 1]) <= fs.f[i - 1] + 1) continue;
        if (!check_tableau_recursion(w, i)) return false;
        ++pairs;
      }
    }
  return pairs == 35;
}

bool specializations() {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_321_avoiding(n)) {
      const Polynomial full = tableau_formula(w).poly;
      const Polynomial inductive = groth_divided(w);
      if (schubert_specialization(w) != specialize(full, 0)) return false;
      if (schubert_specialization(w) != specialize(inductive, 0)) return false;
      const Polynomial single = single_specialization(w);
      if (single != specialize(full, std::nullopt, /*kill_b=*/true)) return false;
      if (single != specialize(inductive, std::nullopt, /*kill_b=*/true)) return false;
    }
  return true;
}

// Unpruned reference enumeration, independent of the backtracking order.
std::vector<SetValuedTableau> brute_force_svt(const SkewShape& shape) {
  const auto& boxes = shape.boxes();
  std::vector<std::uint64_t> limit(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k)
    limit[k] = (std::uint64_t{1} << shape.flag()[static_cast<std::size_t>(boxes[k].row - 1)]) - 1;
  std::vector<SetValuedTableau> out;
  std::vector<std::uint64_t> mask(boxes.size(), 1);
  for (;;) {
    SetValuedTableau t;
    t.cells.resize(boxes.size());
    for (std::size_t k = 0; k < boxes.size(); ++k)
      for (int bit = 0; bit < 62; ++bit)
        if (mask[k] >> bit & 1) t.cells[k].push_back(bit + 1);
    if (validate_svt(shape, t)) out.push_back(std::move(t));
    std::size_t k = 0;
    while (k < mask.size() && ++mask[k] > limit[k]) mask[k++] = 1;
    if (k == mask.size()) break;
  }
  return out;
}

bool combinatorial_oracles() {
  const std::vector<std::uint64_t> catalan = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (const Permutation& w : all_permutations(n))
      if (w.is_321_avoiding()) ++count;
    if (count != catalan[static_cast<std::size_t>(n - 1)]) return false;
    if (all_321_avoiding(n).size() != count) return false;
  }

  auto key = [](std::vector<SetValuedTableau> v) {
    std::sort(v.begin(), v.end(), [](const SetValuedTableau& a, const SetValuedTableau& b) {
      return a.cells < b.cells;
    });
    return v;
  };
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& w : all_321_avoiding(n)) {
      if (w.is_identity()) continue;
      const SkewShape shape = skew_shape(w);
      if (key(enumerate_svt(shape)) != key(brute_force_svt(shape))) return false;
      if (shape.size() != static_cast<std::uint64_t>(w.length())) return false;
    }
  for (const Permutation& w : all_321_avoiding(6)) {
    if (w.is_identity()) continue;
    if (skew_shape(w).size() != static_cast<std::uint64_t>(w.length())) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<bool()> body;
    std::int64_t budget_ms;  // <= 0 means no budget
  };
  const std::vector<Criterion> criteria = {
      {"pipelines-agree-through-n5", [] { return agreement_sweep(1, 5, 64); }, 60'000},
      {"pipelines-agree-at-n6", [] { return agreement_sweep(6, 6, 132); }, 600'000},
      {"running-example", running_example, 0},
      {"grassmannian-coherence", grassmannian_coherence, 0},
      {"operator-identities", operator_identities, 0},
      {"product-expansion", product_expansion, 0},
      {"tableau-recursion", tableau_recursion, 0},
      {"specializations", specializations, 0},
      {"combinatorial-oracles", combinatorial_oracles, 0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[k].body();
    } catch (const std::exception& e) {
      std::cerr << criteria[k].name << " threw: " << e.what() << '\n';
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (criteria[k].budget_ms > 0 && ms >= criteria[k].budget_ms) {
      std::cerr << criteria[k].name << " exceeded its budget of " << criteria[k].budget_ms
                << " ms\n";
      ok = false;
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << k + 1 << "/" << criteria.size() << " "
              << criteria[k].name << " (" << ms << " ms)\n";
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
