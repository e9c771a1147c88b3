#include "groth/tableau.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace groth {

namespace {

constexpr int kMaxFlagBits = 62;

void require_flag_width(const SkewShape& shape) {
  for (int fi : shape.flag())
    if (fi > kMaxFlagBits)
      throw std::invalid_argument("flag entry " + std::to_string(fi) +
                                  " exceeds the bitmask enumeration width of " +
                                  std::to_string(kMaxFlagBits));
}

}  // namespace

std::uint64_t entry_count(const SetValuedTableau& t) {
  std::uint64_t n = 0;
  for (const auto& cell : t.cells) n += cell.size();
  return n;
}

bool validate_svt(const SkewShape& shape, const SetValuedTableau& t) {
  const auto& boxes = shape.boxes();
  if (t.cells.size() != boxes.size()) return false;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto& cell = t.cells[k];
    if (cell.empty()) return false;
    const int flag = shape.flag()[static_cast<std::size_t>(boxes[k].row - 1)];
    for (std::size_t v = 0; v < cell.size(); ++v) {
      if (cell[v] < 1 || cell[v] > flag) return false;
      if (v > 0 && cell[v] <= cell[v - 1]) return false;
    }
    if (auto left = shape.box_index(boxes[k].row, boxes[k].col - 1))
      if (t.cells[*left].back() > cell.front()) return false;
    if (auto up = shape.box_index(boxes[k].row - 1, boxes[k].col))
      if (t.cells[*up].back() >= cell.front()) return false;
  }
  return true;
}

void for_each_svt(const SkewShape& shape,
                  const std::function<void(const SetValuedTableau&)>& visit) {
  require_flag_width(shape);
  const auto& boxes = shape.boxes();

  // Per box: lower bounds come from the row neighbor (weak) and the column
  // neighbor (strict); both precede the box in row-major order.
  struct Slot {
    int flag = 0;
    std::ptrdiff_t left = -1, up = -1;
  };
  std::vector<Slot> slots(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    slots[k].flag = shape.flag()[static_cast<std::size_t>(boxes[k].row - 1)];
    if (auto left = shape.box_index(boxes[k].row, boxes[k].col - 1))
      slots[k].left = static_cast<std::ptrdiff_t>(*left);
    if (auto up = shape.box_index(boxes[k].row - 1, boxes[k].col))
      slots[k].up = static_cast<std::ptrdiff_t>(*up);
  }

  SetValuedTableau t;
  t.cells.resize(boxes.size());

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == boxes.size()) {
      visit(t);
      return;
    }
    int low = 1;
    if (slots[k].left >= 0) low = std::max(low, t.cells[static_cast<std::size_t>(slots[k].left)].back());
    if (slots[k].up >= 0) low = std::max(low, t.cells[static_cast<std::size_t>(slots[k].up)].back() + 1);
    if (low > slots[k].flag) return;
    const int width = slots[k].flag - low + 1;
    auto& cell = t.cells[k];
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
      cell.clear();
      for (int bit = 0; bit < width; ++bit)
        if (mask >> bit & 1) cell.push_back(low + bit);
      self(self, k + 1);
    }
    cell.clear();
  };
  rec(rec, 0);
}

std::vector<SetValuedTableau> enumerate_svt(const SkewShape& shape) {
  std::vector<SetValuedTableau> out;
  for_each_svt(shape, [&out](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_svt(const SkewShape& shape) {
  std::uint64_t n = 0;
  for_each_svt(shape, [&n](const SetValuedTableau&) { ++n; });
  return n;
}

Polynomial tableau_weight(const SkewShape& shape, const SetValuedTableau& t, int ring_size) {
  if (!validate_svt(shape, t))
    throw std::invalid_argument("filling violates the tableau conditions for this shape");
  Polynomial w = Polynomial::one(ring_size);
  const auto& boxes = shape.boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const int row = boxes[k].row, col = boxes[k].col;
    const int lam = shape.lambda()[static_cast<std::size_t>(row - 1)];
    const int flag = shape.flag()[static_cast<std::size_t>(row - 1)];
    for (int val : t.cells[k]) {
      const int idx = lam + flag - col - val + 1;
      if (val < 1 || val > ring_size)
        throw std::out_of_range("tableau entry " + std::to_string(val) +
                                " outside ring of size " + std::to_string(ring_size));
      if (idx < 1 || idx > ring_size)
        throw std::out_of_range("b subscript " + std::to_string(idx) + " at row " +
                                std::to_string(row) + ", column " + std::to_string(col) +
                                " outside ring of size " + std::to_string(ring_size));
      w = w * oplus(Polynomial::x(ring_size, val), Polynomial::b(ring_size, idx));
    }
  }
  const std::uint64_t extra = entry_count(t) - shape.size();
  for (std::uint64_t e = 0; e < extra; ++e) w = w * Polynomial::beta(ring_size);
  return w;
}

std::string tableau_to_text(const SkewShape& shape, const SetValuedTableau& t) {
  if (!validate_svt(shape, t))
    throw std::invalid_argument("filling violates the tableau conditions for this shape");
  std::vector<std::vector<std::string>> grid;
  std::size_t width = 1;
  for (int row = 1; row <= shape.rows(); ++row) {
    std::vector<std::string> line;
    for (int col = 1; col <= shape.lambda()[static_cast<std::size_t>(row - 1)]; ++col) {
      if (auto k = shape.box_index(row, col)) {
        std::string cell;
        for (std::size_t v = 0; v < t.cells[*k].size(); ++v) {
          if (v) cell += ',';
          cell += std::to_string(t.cells[*k][v]);
        }
        line.push_back(std::move(cell));
      } else {
        line.push_back(".");
      }
      width = std::max(width, line.back().size());
    }
    grid.push_back(std::move(line));
  }
  std::string out;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out += "  ";
      out += line[c];
      if (c + 1 < line.size()) out.append(width - line[c].size(), ' ');
    }
    out += '\n';
  }
  return out;
}

std::string tableau_to_json(const SkewShape& shape, const SetValuedTableau& t) {
  if (!validate_svt(shape, t))
    throw std::invalid_argument("filling violates the tableau conditions for this shape");
  nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < shape.boxes().size(); ++k) {
    nlohmann::ordered_json o;
    o["row"] = shape.boxes()[k].row;
    o["col"] = shape.boxes()[k].col;
    o["vals"] = t.cells[k];
    boxes.push_back(std::move(o));
  }
  nlohmann::ordered_json j;
  j["boxes"] = std::move(boxes);
  return j.dump();
}

}  // namespace groth
