#include <algorithm>
#include <set>

#include "doctest.h"
#include "spatch/errors.hh"
#include "spatch/labels.hh"
#include "spatch/types.hh"

using namespace spatch;

namespace {

Label L(std::vector<int> v) { return Label(std::move(v)); }

}  // namespace

TEST_SUITE_BEGIN("labels");

TEST_CASE("enumeration order and size") {
  LabelIndex small(3, 1);
  REQUIRE(small.size() == 3);
  CHECK(small.label(0) == L({1, 0, 0}));
  CHECK(small.label(1) == L({0, 1, 0}));
  CHECK(small.label(2) == L({0, 0, 1}));

  CHECK(LabelIndex(6, 5).size() == 252);
  CHECK(LabelIndex(5, 8).size() == 495);
}

TEST_CASE("counts match the binomial formula, ordinals round-trip") {
  for (int n = 3; n <= 8; ++n)
    for (int d = 1; d <= 8; ++d) {
      LabelIndex index(n, d);
      REQUIRE(index.size() == static_cast<int>(binomial(n + d - 1, d)));
      std::set<std::uint64_t> seen;
      for (int o = 0; o < index.size(); ++o) {
        Label lab = index.label(o);
        CHECK(lab.depth() == d);
        CHECK(index.ordinal(lab) == o);
        seen.insert(pack_label(lab));
        if (o > 0) CHECK(canonical_before(index.label(o - 1), lab));
      }
      CHECK(static_cast<int>(seen.size()) == index.size());
    }
}

TEST_CASE("size caps are rejected with a clear error") {
  CHECK_THROWS_AS(LabelIndex(2, 4), ValidationError);
  CHECK_THROWS_AS(LabelIndex(13, 4), ValidationError);
  CHECK_THROWS_AS(LabelIndex(5, 0), ValidationError);
  CHECK_THROWS_AS(LabelIndex(5, 17), ValidationError);
}

TEST_CASE("shift operators") {
  // positions are 0-based here; the worked examples use sigma_2^+ and
  // sigma_1^- on (1,1,1) and (1,0,2)
  CHECK(L({1, 1, 1}).shifted(1, +1) == L({1, 0, 2}));
  CHECK(L({1, 0, 2}).shifted(0, -1) == L({0, 0, 3}));
  CHECK_THROWS_AS(L({1, 0, 2}).shifted(1, +1), std::invalid_argument);
}

TEST_CASE("shift round-trip wherever applicable") {
  LabelIndex index(4, 3);
  for (int o = 0; o < index.size(); ++o) {
    Label lab = index.label(o);
    for (int p = 0; p < 4; ++p) {
      if (lab.s[p] == 0) continue;
      CHECK(lab.shifted(p, +1).shifted((p + 1) % 4, -1) == lab);
    }
  }
}

TEST_CASE("neighbors") {
  auto nb = label_neighbors(L({3, 0, 0}));
  CHECK(nb.size() == 2);
  CHECK(std::find(nb.begin(), nb.end(), L({2, 1, 0})) != nb.end());
  CHECK(std::find(nb.begin(), nb.end(), L({2, 0, 1})) != nb.end());

  auto nb2 = label_neighbors(L({1, 1, 0}));
  REQUIRE(nb2.size() == 4);
  for (const Label& expect : {L({0, 2, 0}), L({0, 1, 1}), L({1, 0, 1}), L({2, 0, 0})})
    CHECK(std::find(nb2.begin(), nb2.end(), expect) != nb2.end());
}

TEST_CASE("adjacency is symmetric") {
  LabelIndex index(4, 3);
  for (int o = 0; o < index.size(); ++o) {
    Label lab = index.label(o);
    for (const Label& nb : label_neighbors(lab)) {
      auto back = label_neighbors(nb);
      CHECK(std::find(back.begin(), back.end(), lab) != back.end());
    }
  }
}

TEST_CASE("boundary labels") {
  // spec side numbers are 1-based; side i there is side i-1 here
  CHECK(boundary_label(2, 2, 5, 3) == L({0, 0, 1, 2, 0}));
  CHECK(boundary_label(2, 3, 6, 5) == L({0, 0, 2, 3, 0, 0}));
  CHECK(boundary_label(2, 2, 6, 5) == L({0, 0, 3, 2, 0, 0}));
  CHECK(boundary_label(0, 0, 3, 4) == L({4, 0, 0}));
  CHECK(boundary_label(4, 2, 5, 3) == L({2, 0, 0, 0, 1}));  // wraps cyclically
  CHECK_THROWS_AS(boundary_label(0, 5, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(boundary_label(0, -1, 3, 4), std::invalid_argument);
}

TEST_CASE("panel of the five-sided cubic") {
  auto panel = panel_labels(2, 2, 5, 3);
  REQUIRE(panel.size() == 5);
  CHECK(panel[0] == L({0, 0, 1, 2, 0}));
  CHECK(panel[1] == L({0, 0, 0, 3, 0}));
  CHECK(panel[2] == L({0, 0, 0, 2, 1}));
  CHECK(panel[3] == L({1, 0, 0, 2, 0}));
  CHECK(panel[4] == L({0, 1, 0, 2, 0}));
  // one more shift returns to the start
  CHECK(panel[4].shifted((2 + 4) % 5, +1) == panel[0]);
}

TEST_CASE("panel by hand for the cubic triangle") {
  auto panel = panel_labels(0, 0, 3, 2);
  REQUIRE(panel.size() == 3);
  CHECK(panel[0] == L({2, 0, 0}));
  CHECK(panel[1] == L({1, 1, 0}));
  CHECK(panel[2] == L({1, 0, 1}));
}

TEST_CASE("panel structure properties") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {4, 4}, {6, 5}}) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) {
        auto panel = panel_labels(i, j, n, d);
        REQUIRE(static_cast<int>(panel.size()) == n);
        // element 2 is the next boundary point
        CHECK(panel[1] == boundary_label(i, j + 1, n, d));
        std::set<std::uint64_t> distinct;
        for (const Label& lab : panel) {
          distinct.insert(pack_label(lab));
          CHECK(lab.at(i) + lab.at(i + 1) >= d - 1);
        }
        CHECK(static_cast<int>(distinct.size()) == n);
        for (int e = 0; e + 1 < n; ++e) {
          auto nb = label_neighbors(panel[e]);
          CHECK(std::find(nb.begin(), nb.end(), panel[e + 1]) != nb.end());
        }
      }
  }
  CHECK_THROWS_AS(panel_labels(0, 3, 5, 3), std::invalid_argument);
}

TEST_CASE("classification") {
  CHECK(classify_label(L({0, 0, 2, 3, 0, 0})) == LabelClass::Boundary);
  CHECK(classify_label(L({1, 0, 0, 2, 0})) == LabelClass::PanelRing);
  CHECK(classify_label(L({2, 2, 2, 0, 2})) == LabelClass::Free);

  LabelIndex index(5, 8);
  int boundary = 0, ring = 0, free_count = 0;
  for (int o = 0; o < index.size(); ++o) {
    switch (classify_label(index.label(o))) {
      case LabelClass::Boundary: ++boundary; break;
      case LabelClass::PanelRing: ++ring; break;
      case LabelClass::Free: ++free_count; break;
    }
  }
  CHECK(boundary + ring == 135);
  CHECK(free_count == 360);
}

TEST_CASE("union of panels equals the fixed classification") {
  const int n = 5, d = 8;
  LabelIndex index(n, d);
  std::set<std::uint64_t> in_panels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      for (const Label& lab : panel_labels(i, j, n, d)) in_panels.insert(pack_label(lab));
  for (int o = 0; o < index.size(); ++o) {
    Label lab = index.label(o);
    bool fixed = classify_label(lab) != LabelClass::Free;
    CHECK(fixed == (in_panels.count(pack_label(lab)) > 0));
  }
}

TEST_CASE("label text round-trip") {
  Label lab = L({0, 0, 1, 2, 0});
  CHECK(lab.str() == "0,0,1,2,0");
  CHECK(Label::parse("0,0,1,2,0") == lab);
  CHECK_THROWS_AS(Label::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(Label::parse("1,-2"), ParseError);
  CHECK_THROWS_AS(Label::parse(""), ParseError);
}

TEST_SUITE_END();
