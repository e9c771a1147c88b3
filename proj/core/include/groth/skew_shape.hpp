#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace groth {

struct Box {
  int row = 0;  // 1-based, row 1 on top
  int col = 0;

  bool operator==(const Box&) const = default;
};

// Skew diagram lambda/mu together with a row bound ("flag"): row i holds boxes
// in columns mu_i+1 .. lambda_i and admits fillings from {1..flag_i}.
class SkewShape {
 public:
  SkewShape(std::vector<int> lambda, std::vector<int> mu, std::vector<int> flag);

  int rows() const { return static_cast<int>(lambda_.size()); }
  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& mu() const { return mu_; }
  const std::vector<int>& flag() const { return flag_; }

  // Number of boxes, |lambda| - |mu|.
  std::uint64_t size() const;

  bool contains(int row, int col) const;

  // Row-major, the reading order used by the tableau enumerator.
  const std::vector<Box>& boxes() const { return boxes_; }

  // Position of (row, col) in boxes(), when present.
  std::optional<std::size_t> box_index(int row, int col) const;

  bool operator==(const SkewShape& o) const {
    return lambda_ == o.lambda_ && mu_ == o.mu_ && flag_ == o.flag_;
  }

 private:
  std::vector<int> lambda_, mu_, flag_;
  std::vector<Box> boxes_;
  std::vector<std::size_t> row_start_;  // index into boxes_ per row
};

}  // namespace groth
