#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace groth;

namespace {

// Reference enumeration: odometer over every assignment of a nonempty subset
// of {1..flag_row} per box, filtered by validate_svt. No pruning, no sharing
// of logic with the backtracking enumerator beyond the validity predicate.
std::vector<SetValuedTableau> brute_force_svt(const SkewShape& shape) {
  const auto& boxes = shape.boxes();
  std::vector<std::uint64_t> limit(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const int flag = shape.flag()[static_cast<std::size_t>(boxes[k].row - 1)];
    limit[k] = (std::uint64_t{1} << flag) - 1;
  }
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

std::vector<SetValuedTableau> sorted_by_cells(std::vector<SetValuedTableau> v) {
  std::sort(v.begin(), v.end(),
            [](const SetValuedTableau& a, const SetValuedTableau& b) { return a.cells < b.cells; });
  return v;
}

}  // namespace

TEST_CASE("skew shape validation and geometry") {
  const SkewShape s({3, 1}, {1, 0}, {1, 4});
  CHECK(s.rows() == 2);
  CHECK(s.size() == 3);
  CHECK(s.boxes() == std::vector<Box>{{1, 2}, {1, 3}, {2, 1}});
  CHECK(s.contains(1, 2));
  CHECK_FALSE(s.contains(1, 1));
  CHECK_FALSE(s.contains(2, 2));
  CHECK(s.box_index(2, 1) == std::size_t{2});
  CHECK_FALSE(s.box_index(1, 1).has_value());
  CHECK_FALSE(s.box_index(3, 1).has_value());

  CHECK_THROWS_AS(SkewShape({1, 2}, {0, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({2}, {3}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({2, 1}, {0, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({2}, {0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({2, 2}, {0, 0}, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({2}, {0, 0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape({0}, {0}, {1}), std::invalid_argument);
}

TEST_CASE("validate_svt") {
  const SkewShape column({1, 1}, {0, 0}, {2, 2});
  CHECK(validate_svt(column, SetValuedTableau{{{1}, {2}}}));
  CHECK_FALSE(validate_svt(column, SetValuedTableau{{{1}, {1}}}));
  CHECK_FALSE(validate_svt(column, SetValuedTableau{{{1, 2}, {2}}}));

  const SkewShape row({2}, {0}, {2});
  CHECK(validate_svt(row, SetValuedTableau{{{1}, {1}}}));
  CHECK(validate_svt(row, SetValuedTableau{{{1, 2}, {2}}}));
  CHECK_FALSE(validate_svt(row, SetValuedTableau{{{2}, {1}}}));
  CHECK_FALSE(validate_svt(row, SetValuedTableau{{{1}, {}}}));
  CHECK_FALSE(validate_svt(row, SetValuedTableau{{{1}, {3}}}));
  CHECK_FALSE(validate_svt(row, SetValuedTableau{{{1}}}));
  CHECK_FALSE(validate_svt(row, SetValuedTableau{{{2, 1}, {2}}}));

  // mu boxes separate neighbors: no constraint across a missing box. Here
  // column 1 skips row 1, so (2,1) may repeat the value printed above the gap,
  // while column 2 is intact and still forces strict growth.
  const SkewShape skew({2, 2}, {1, 0}, {2, 2});
  CHECK(validate_svt(skew, SetValuedTableau{{{1}, {1}, {2}}}));
  CHECK_FALSE(validate_svt(skew, SetValuedTableau{{{1}, {1}, {1}}}));
  const SkewShape gap_column({1, 1}, {1, 0}, {1, 1});
  CHECK(validate_svt(gap_column, SetValuedTableau{{{1}}}));
}

TEST_CASE("enumeration order and small counts") {
  const SkewShape one_box({1}, {0}, {2});
  const auto v = enumerate_svt(one_box);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == SetValuedTableau{{{1}}});
  CHECK(v[1] == SetValuedTableau{{{2}}});
  CHECK(v[2] == SetValuedTableau{{{1, 2}}});

  const SkewShape s({3, 1}, {1, 0}, {1, 4});
  const auto all = enumerate_svt(s);
  REQUIRE(all.size() == 15);
  CHECK(count_svt(s) == 15);
  CHECK(all[0].cells == std::vector<std::vector<int>>{{1}, {1}, {1}});
  CHECK(all[1].cells == std::vector<std::vector<int>>{{1}, {1}, {2}});
  CHECK(all[2].cells == std::vector<std::vector<int>>{{1}, {1}, {1, 2}});
}

TEST_CASE("enumeration agrees with the unpruned reference") {
  // Shapes of every non-identity 321-avoiding permutation in S_4, plus a few
  // handmade ones.
  std::vector<SkewShape> shapes;
  for (const Permutation& w : all_321_avoiding(4))
    if (!w.is_identity()) shapes.push_back(skew_shape(w));
  shapes.push_back(SkewShape({2, 1}, {0, 0}, {2, 3}));
  shapes.push_back(SkewShape({3, 2}, {1, 0}, {1, 3}));
  shapes.push_back(SkewShape({2, 2, 1}, {1, 1, 0}, {1, 2, 4}));

  for (const SkewShape& s : shapes) {
    const auto fast = sorted_by_cells(enumerate_svt(s));
    const auto slow = sorted_by_cells(brute_force_svt(s));
    CHECK(fast == slow);
  }
}

TEST_CASE("weights") {
  const int n = 2;
  const SkewShape one_box({1}, {0}, {1});
  const Polynomial expected = oplus(Polynomial::x(n, 1), Polynomial::b(n, 1));
  CHECK(tableau_weight(one_box, SetValuedTableau{{{1}}}, n) == expected);

  // Entry 2 with subscript lambda + flag - col - val + 1 = 1.
  const SkewShape one_tall({1}, {0}, {2});
  CHECK(tableau_weight(one_tall, SetValuedTableau{{{2}}}, 2) ==
        oplus(Polynomial::x(2, 2), Polynomial::b(2, 1)));

  CHECK_THROWS_AS(tableau_weight(one_box, SetValuedTableau{{{1, 2}}}, n), std::invalid_argument);
  // Subscript overflow: lambda = flag = 2 pushes the b index to 3 in a ring of 2.
  const SkewShape wide({2}, {0}, {2});
  CHECK_THROWS_AS(tableau_weight(wide, SetValuedTableau{{{1}, {1}}}, 2), std::out_of_range);
}

TEST_CASE("four-entry filling of the running five-letter example") {
  // Shape of 3,1,2,5,4 filled with {1}, {1}, {1,2}: one extra entry, so one
  // factor of beta, and subscripts 2, 1, 4, 3.
  const int n = 5;
  const SkewShape s({3, 1}, {1, 0}, {1, 4});
  const SetValuedTableau t{{{1}, {1}, {1, 2}}};
  auto ob = [n](int i, int j) { return oplus(Polynomial::x(n, i), Polynomial::b(n, j)); };
  const Polynomial expected =
      Polynomial::beta(n) * ob(1, 2) * ob(1, 1) * ob(1, 4) * ob(2, 3);
  CHECK(tableau_weight(s, t, n) == expected);
  CHECK(entry_count(t) == 4);
}

TEST_CASE("beta exponent grading") {
  const SkewShape s({3, 1}, {1, 0}, {1, 4});
  for (const auto& t : enumerate_svt(s)) {
    const Polynomial w = tableau_weight(s, t, 5);
    const std::uint64_t extra = entry_count(t) - s.size();
    std::uint32_t min_beta = UINT32_MAX;
    for (const Term& term : w.terms()) min_beta = std::min(min_beta, term.mono.beta());
    CHECK(min_beta == extra);
  }
}

TEST_CASE("flag growth is monotone") {
  const auto small = enumerate_svt(SkewShape({3, 1}, {1, 0}, {1, 4}));
  const auto large = sorted_by_cells(enumerate_svt(SkewShape({3, 1}, {1, 0}, {2, 4})));
  for (const auto& t : small)
    CHECK(std::binary_search(large.begin(), large.end(), t,
                             [](const SetValuedTableau& a, const SetValuedTableau& b) {
                               return a.cells < b.cells;
                             }));
  CHECK(small.size() < large.size());
}

TEST_CASE("rendering") {
  const SkewShape s({3, 1}, {1, 0}, {1, 4});
  const SetValuedTableau t{{{1}, {1}, {1, 2}}};
  CHECK(tableau_to_text(s, t) == ".    1    1\n1,2\n");
  CHECK(tableau_to_json(s, t) ==
        "{\"boxes\":[{\"row\":1,\"col\":2,\"vals\":[1]},"
        "{\"row\":1,\"col\":3,\"vals\":[1]},"
        "{\"row\":2,\"col\":1,\"vals\":[1,2]}]}");
  CHECK_THROWS_AS(tableau_to_text(s, SetValuedTableau{{{1}, {1}}}), std::invalid_argument);
}

TEST_CASE("flag width guard") {
  const SkewShape deep({1}, {0}, {63});
  CHECK_THROWS_AS(count_svt(deep), std::invalid_argument);
}
