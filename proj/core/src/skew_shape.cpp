#include "groth/skew_shape.hpp"

#include <stdexcept>
#include <string>

namespace groth {

SkewShape::SkewShape(std::vector<int> lambda, std::vector<int> mu, std::vector<int> flag)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), flag_(std::move(flag)) {
  const std::size_t r = lambda_.size();
  if (r == 0) throw std::invalid_argument("skew shape needs at least one row");
  if (mu_.size() != r || flag_.size() != r)
    throw std::invalid_argument("lambda, mu and flag must have equal length");
  for (std::size_t i = 0; i < r; ++i) {
    if (lambda_[i] < 1)
      throw std::invalid_argument("lambda parts must be positive, got " +
                                  std::to_string(lambda_[i]));
    if (mu_[i] < 0 || mu_[i] > lambda_[i])
      throw std::invalid_argument("mu must satisfy 0 <= mu_i <= lambda_i");
    if (flag_[i] < 1)
      throw std::invalid_argument("flag entries must be positive, got " +
                                  std::to_string(flag_[i]));
    if (i > 0) {
      if (lambda_[i] > lambda_[i - 1]) throw std::invalid_argument("lambda must weakly decrease");
      if (mu_[i] > mu_[i - 1]) throw std::invalid_argument("mu must weakly decrease");
      if (flag_[i] < flag_[i - 1]) throw std::invalid_argument("flag must weakly increase");
    }
  }
  row_start_.reserve(r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    row_start_.push_back(boxes_.size());
    for (int j = mu_[i] + 1; j <= lambda_[i]; ++j)
      boxes_.push_back(Box{static_cast<int>(i) + 1, j});
  }
  row_start_.push_back(boxes_.size());
}

std::uint64_t SkewShape::size() const { return boxes_.size(); }

bool SkewShape::contains(int row, int col) const {
  if (row < 1 || row > rows()) return false;
  return col > mu_[static_cast<std::size_t>(row - 1)] &&
         col <= lambda_[static_cast<std::size_t>(row - 1)];
}

std::optional<std::size_t> SkewShape::box_index(int row, int col) const {
  if (!contains(row, col)) return std::nullopt;
  const std::size_t i = static_cast<std::size_t>(row - 1);
  return row_start_[i] + static_cast<std::size_t>(col - mu_[i] - 1);
}

}  // namespace groth
