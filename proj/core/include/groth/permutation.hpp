#pragma once

#include "groth/skew_shape.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace groth {

// Element of S_n in one-line notation, 1-based values.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);

  // Comma-separated one-line notation, e.g. "3,1,2,5,4".
  static Permutation parse(const std::string& text);
  std::string to_string() const;

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const;  // image of i, 1-based
  const std::vector<int>& one_line() const { return w_; }

  int length() const;  // inversion count
  bool is_identity() const;

  // True when no i < j < k has w(i) > w(j) > w(k).
  bool is_321_avoiding() const;

  // w * s_i: exchanges the entries at positions i, i+1.
  Permutation right_multiply(int i) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

// f: positions with w(i) > i (increasing); h = w restricted to f; the
// complements cover the rest. h and h_complement are increasing exactly for
// 321-avoiding input, which is required here.
struct FlagSequences {
  std::vector<int> f, h, f_complement, h_complement;
};

FlagSequences flag_sequences(const Permutation& w);

// The flagged skew diagram attached to a 321-avoiding, non-identity w: with
// r = |f| and f_r the last ascent position,
//   lambda_i = w(f_r) - r - (f_i - i),  mu_i = w(f_r) - r - (w(f_i) - i),
// flagged by f itself.
SkewShape skew_shape(const Permutation& w);

// The same diagram rotated 180 degrees:
//   lambda'_i = w(f_{r+1-i}) - (r+1-i),  mu'_i = f_{r+1-i} - (r+1-i).
struct PrimedShape {
  std::vector<int> lambda, mu;
};

PrimedShape shape_prime(const Permutation& w);

// For w with exactly one descent, at d: the rotated diagram shrinks to the
// partition lambda'-mu' with the constant flag (d,...,d).
struct GrassmannianData {
  int descent = 0;
  std::vector<int> lambda;
  std::vector<int> flag;
};

// none when w is the identity or has two or more descents.
std::optional<GrassmannianData> grassmannian_data(const Permutation& w);

enum class AscentRule { smallest, largest };

// Positions i_1..i_m with w s_{i_1} ... s_{i_m} = w0 and every step raising
// the length by one. The rule picks which ascent to take when several exist.
std::vector<int> ascent_path_to_longest(const Permutation& w,
                                        AscentRule rule = AscentRule::smallest);

struct FlagGrowthStep {
  Permutation next;
  SkewShape shape;  // skew_shape(next)
};

// Right-multiplies w by the transposition at position t = f_i. Valid when
// f_i + 1 < f_{i+1} (reading f_{r+1} as n+1) and w(f_i) > f_i + 1; then the
// result is again 321-avoiding with flag entry i bumped by one, h unchanged,
// and one box trimmed from row i of the diagram. Those facts are re-derived
// from the result and enforced.
FlagGrowthStep flag_growth_step(const Permutation& w, int i);

// Lexicographic order by one-line notation.
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_321_avoiding(int n);

}  // namespace groth
