#pragma once

#include "groth/polynomial.hpp"
#include "groth/skew_shape.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace groth {

// Set-valued filling of a skew shape: cells[k] is the sorted, nonempty value
// set of shape.boxes()[k].
struct SetValuedTableau {
  std::vector<std::vector<int>> cells;

  bool operator==(const SetValuedTableau&) const = default;
};

std::uint64_t entry_count(const SetValuedTableau& t);

// Rows weakly increase (max of a box <= min of its right neighbor), columns
// strictly increase (max above < min below), row i draws from {1..flag_i}.
// Neighbor constraints apply only between boxes both present in the diagram.
bool validate_svt(const SkewShape& shape, const SetValuedTableau& t);

// Backtracking enumeration in row-major box order; candidate value sets for a
// box are bitmask-generated in ascending mask order, so the overall sequence
// is deterministic. The visitor sees one tableau at a time.
void for_each_svt(const SkewShape& shape,
                  const std::function<void(const SetValuedTableau&)>& visit);

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape);

std::uint64_t count_svt(const SkewShape& shape);

// beta^(entries - boxes) * prod over entries of x_val (+) b_idx, where the b
// subscript is lambda_row + flag_row - col - val + 1. Subscripts must land in
// [1, ring_size]; shapes derived from permutations always satisfy that.
Polynomial tableau_weight(const SkewShape& shape, const SetValuedTableau& t, int ring_size);

// Grid rendering; boxes of mu print as dots, value sets join with commas.
std::string tableau_to_text(const SkewShape& shape, const SetValuedTableau& t);

// {"boxes": [{"row": ..., "col": ..., "vals": [...]}]} in row-major order.
std::string tableau_to_json(const SkewShape& shape, const SetValuedTableau& t);

}  // namespace groth
