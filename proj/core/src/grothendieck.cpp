#include "groth/grothendieck.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace groth {

Polynomial groth_longest(int n) {
  Polynomial p = Polynomial::one(n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) p = p * oplus(Polynomial::x(n, i), Polynomial::b(n, j));
  return p;
}

Polynomial groth_divided(const Permutation& w, AscentRule rule) {
  const std::vector<int> path = ascent_path_to_longest(w, rule);
  Polynomial p = groth_longest(w.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = divided_difference(p, *it);
  return p;
}

namespace {

// Shared accumulator for the tableau-style sums; bindex maps an entry to its
// b subscript and with_beta switches the beta^(entries - boxes) factor.
template <typename BIndex, typename EntryFactor>
TableauSum accumulate_svt(const SkewShape& shape, int n, bool singletons_only, BIndex bindex,
                          EntryFactor factor) {
  TableauSum out{Polynomial::zero(n), 0};
  for_each_svt(shape, [&](const SetValuedTableau& t) {
    if (singletons_only) {
      for (const auto& cell : t.cells)
        if (cell.size() != 1) return;
    }
    Polynomial w = Polynomial::one(n);
    const auto& boxes = shape.boxes();
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      for (int val : t.cells[k]) {
        const int idx = bindex(boxes[k].row, boxes[k].col, val);
        if (val < 1 || val > n || idx < 1 || idx > n)
          throw std::out_of_range("entry " + std::to_string(val) + " / b subscript " +
                                  std::to_string(idx) + " outside ring of size " +
                                  std::to_string(n));
        w = w * factor(val, idx);
      }
    }
    if (!singletons_only) {
      const std::uint64_t extra = entry_count(t) - shape.size();
      for (std::uint64_t e = 0; e < extra; ++e) w = w * Polynomial::beta(n);
    }
    out.poly += w;
    out.tableau_count += 1;
  });
  return out;
}

Polynomial oplus_factor(int n, int val, int idx) {
  return oplus(Polynomial::x(n, val), Polynomial::b(n, idx));
}

}  // namespace

TableauSum tableau_formula(const Permutation& w) {
  const int n = w.size();
  if (!w.is_321_avoiding())
    throw std::invalid_argument("permutation " + w.to_string() + " contains a descending triple");
  if (w.is_identity()) return TableauSum{Polynomial::one(n), 1};
  const SkewShape shape = skew_shape(w);
  return accumulate_svt(
      shape, n, false,
      [&shape](int row, int col, int val) {
        return shape.lambda()[static_cast<std::size_t>(row - 1)] +
               shape.flag()[static_cast<std::size_t>(row - 1)] - col - val + 1;
      },
      [n](int val, int idx) { return oplus_factor(n, val, idx); });
}

TableauSum grassmannian_formula(const Permutation& w) {
  const int n = w.size();
  const auto data = grassmannian_data(w);
  if (!data)
    throw std::invalid_argument("permutation " + w.to_string() +
                                " is not a one-descent (Grassmannian) permutation");
  const SkewShape shape(data->lambda, std::vector<int>(data->lambda.size(), 0), data->flag);
  return accumulate_svt(
      shape, n, false, [](int row, int col, int val) { return val + col - row; },
      [n](int val, int idx) { return oplus_factor(n, val, idx); });
}

Polynomial schubert_specialization(const Permutation& w) {
  const int n = w.size();
  if (!w.is_321_avoiding())
    throw std::invalid_argument("permutation " + w.to_string() + " contains a descending triple");
  if (w.is_identity()) return Polynomial::one(n);
  const SkewShape shape = skew_shape(w);
  return accumulate_svt(
             shape, n, true,
             [&shape](int row, int col, int val) {
               return shape.lambda()[static_cast<std::size_t>(row - 1)] +
                      shape.flag()[static_cast<std::size_t>(row - 1)] - col - val + 1;
             },
             [n](int val, int idx) { return Polynomial::x(n, val) + Polynomial::b(n, idx); })
      .poly;
}

Polynomial single_specialization(const Permutation& w) {
  const int n = w.size();
  if (!w.is_321_avoiding())
    throw std::invalid_argument("permutation " + w.to_string() + " contains a descending triple");
  if (w.is_identity()) return Polynomial::one(n);
  const SkewShape shape = skew_shape(w);
  return accumulate_svt(
             shape, n, false, [](int, int, int) { return 1; },
             [n](int val, int) { return Polynomial::x(n, val); })
      .poly;
}

bool check_product_expansion(int i, const std::vector<int>& ell) {
  if (i < 1) throw std::invalid_argument("variable index must be positive");
  if (ell.empty()) throw std::invalid_argument("the factor list must not be empty");
  int n = i + 1;
  for (int l : ell) {
    if (l < 1) throw std::invalid_argument("b subscripts must be positive");
    n = std::max(n, l);
  }
  const int k = static_cast<int>(ell.size());
  auto fac = [&](int var, int v) {
    return oplus(Polynomial::x(n, var), Polynomial::b(n, ell[static_cast<std::size_t>(v - 1)]));
  };

  Polynomial lhs = Polynomial::one(n);
  for (int v = 1; v <= k; ++v) lhs = lhs * fac(i, v);
  lhs = divided_difference(lhs, i);

  Polynomial rhs = Polynomial::zero(n);
  for (int j = 1; j <= k; ++j) {
    Polynomial term = Polynomial::one(n);
    for (int v = 1; v < j; ++v) term = term * fac(i, v);
    for (int v = j + 1; v <= k; ++v) term = term * fac(i + 1, v);
    rhs += term;
  }
  for (int j = 1; j < k; ++j) {
    Polynomial term = Polynomial::beta(n);
    for (int v = 1; v <= j; ++v) term = term * fac(i, v);
    for (int v = j + 1; v <= k; ++v) term = term * fac(i + 1, v);
    rhs += term;
  }
  return lhs == rhs && swap_adjacent(rhs, i) == rhs;
}

bool check_tableau_recursion(const Permutation& w, int i) {
  const FlagGrowthStep step = flag_growth_step(w, i);
  const int t = flag_sequences(w).f[static_cast<std::size_t>(i - 1)];
  return divided_difference(tableau_formula(w).poly, t) == tableau_formula(step.next).poly;
}

VerificationReport verify_theorem(const Permutation& w) {
  const auto start = std::chrono::steady_clock::now();
  TableauSum rhs = tableau_formula(w);
  Polynomial lhs = groth_divided(w);
  const auto stop = std::chrono::steady_clock::now();
  VerificationReport r{w, std::move(lhs), std::move(rhs.poly), false, rhs.tableau_count,
                       std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
  r.equal = r.divided == r.tableau;
  return r;
}

std::string report_to_text(const VerificationReport& r) {
  return "perm=" + r.perm.to_string() + " equal=" + (r.equal ? "true" : "false") +
         " tableaux=" + std::to_string(r.tableau_count);
}

std::string report_to_json(const VerificationReport& r, bool include_polynomial) {
  nlohmann::ordered_json j;
  j["perm"] = r.perm.one_line();
  j["equal"] = r.equal;
  j["tableaux"] = r.tableau_count;
  j["ms"] = r.elapsed_ms;
  if (include_polynomial) j["polynomial"] = nlohmann::ordered_json::parse(to_json_string(r.divided));
  return j.dump();
}

}  // namespace groth
