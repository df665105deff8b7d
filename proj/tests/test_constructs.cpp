#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <orthoposet/constructs.hpp>
#include <orthoposet/ortho.hpp>
#include <orthoposet/poset.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace orthoposet;

namespace {

int at(const OrthoPoset& op, const std::string& label) {
  return *op.poset().index_of_label(label);
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int c = 0;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);)
    if (line.find(needle) != std::string::npos) ++c;
  return c;
}

}  // namespace

TEST_CASE("fixture registry") {
  CHECK(fixture_names() ==
        std::vector<std::string>{"fig1", "fig2", "fig3", "fig5", "fig6", "fig7_o6"});
  for (const auto& name : fixture_names()) CHECK(fixture(name).size() > 0);
  CHECK_THROWS_AS(fixture("fig4"), UnknownFixtureError);
}

TEST_CASE("fig1 is the 12-subset inclusion model") {
  OrthoPoset op = fixture("fig1");
  REQUIRE(op.size() == 12);

  const std::map<std::string, std::set<int>> model = {
      {"0", {}},          {"a", {1}},        {"b", {2}},
      {"c", {3}},         {"d", {4}},        {"e", {1, 2}},
      {"e'", {3, 4}},     {"d'", {1, 2, 3}}, {"c'", {1, 2, 4}},
      {"b'", {1, 3, 4}},  {"a'", {2, 3, 4}}, {"1", {1, 2, 3, 4}}};

  const Poset& p = op.poset();
  for (const auto& [xl, xs] : model) {
    int x = *p.index_of_label(xl);
    for (const auto& [yl, ys] : model) {
      int y = *p.index_of_label(yl);
      bool incl = std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
      CHECK(p.leq(x, y) == incl);
    }
    // ' is set complement in {1,2,3,4}.
    std::set<int> comp;
    for (int v : {1, 2, 3, 4})
      if (!xs.count(v)) comp.insert(v);
    CHECK(model.at(p.label(op.prime(x))) == comp);
  }
}

TEST_CASE("fig2 is the balanced-subset model") {
  OrthoPoset op = fixture("fig2");
  const Poset& p = op.poset();
  REQUIRE(op.size() == 20);
  CHECK(p.label(p.bottom()) == "0");
  CHECK(p.label(p.top()) == "1");
  int a = *p.index_of_label("{1,4}");
  int b = *p.index_of_label("{1,5}");
  CHECK(p.label(op.prime(a)) == "{2,3,5,6}");
  CHECK_FALSE(p.join(a, b).has_value());
  CHECK(p.leq(a, *p.index_of_label("{1,2,4,5}")));
}

TEST_CASE("fig3 shape") {
  OrthoPoset op = fixture("fig3");
  const Poset& p = op.poset();
  REQUIRE(op.size() == 18);
  CHECK(p.cover_list().size() == 40);
  CHECK(p.height(p.top()) == 3);

  // The element names pair up under '.
  for (const char* l : {"a", "b", "c", "d", "e", "f", "g", "h"})
    CHECK(p.label(op.prime(*p.index_of_label(l))) == std::string(l) + "'");

  SUBCASE("defining joins") {
    auto join_is = [&](const char* x, const char* y, const char* z) {
      CAPTURE(x);
      CAPTURE(y);
      auto j = p.join(at(op, x), at(op, y));
      REQUIRE(j.has_value());
      CHECK(p.label(*j) == z);
    };
    join_is("b", "c", "h'");
    join_is("a", "d", "h'");
    join_is("b", "e", "g'");
    join_is("a", "f", "g'");
    join_is("b", "h", "c'");
    join_is("a", "h", "d'");
    join_is("b", "g", "e'");
    join_is("a", "g", "f'");
    join_is("h", "c", "b'");
    join_is("h", "d", "a'");
    join_is("g", "e", "b'");
    join_is("g", "f", "a'");
  }

  SUBCASE("cone spot checks") {
    Subset ab = Subset::of(18, {at(op, "a'"), at(op, "b'")});
    CHECK(p.lower_cone(ab) ==
          Subset::of(18, {p.bottom(), at(op, "g"), at(op, "h")}));
    Subset gh = Subset::of(18, {at(op, "g"), at(op, "h")});
    CHECK(p.min_elements(p.upper_cone(gh)) == ab);
  }
}

TEST_CASE("gen_boolean") {
  CHECK(gen_boolean(0).size() == 1);
  CHECK(gen_boolean(1).size() == 2);
  OrthoPoset b3 = gen_boolean(3);
  REQUIRE(b3.size() == 8);
  const Poset& p = b3.poset();
  CHECK(p.label(p.bottom()) == "0");
  CHECK(p.label(p.top()) == "1");
  CHECK(is_lattice(p).verdict);
  CHECK(is_boolean(b3).verdict);
  // atoms a,b,c; meets/joins behave like set ops
  int x = *p.index_of_label("ab");
  int y = *p.index_of_label("ac");
  CHECK(p.meet(x, y) == *p.index_of_label("a"));
  CHECK(p.join(x, y) == p.top());
  CHECK_THROWS_AS(gen_boolean(-1), std::invalid_argument);
  CHECK_THROWS_AS(gen_boolean(10), std::invalid_argument);
}

TEST_CASE("horizontal sums") {
  HorizontalSum hs = horizontal_sum({gen_boolean(2), gen_boolean(3)});
  // 2 shared bounds + 2 + 6 interior elements
  REQUIRE(hs.op.size() == 10);
  CHECK(hs.blocks == 2);
  const Poset& p = hs.op.poset();
  CHECK(hs.block_of[static_cast<std::size_t>(p.bottom())] == -1);
  CHECK(hs.block_of[static_cast<std::size_t>(p.top())] == -1);

  int b1 = 0, b2 = 0;
  for (int x = 0; x < hs.op.size(); ++x) {
    if (hs.block_of[static_cast<std::size_t>(x)] == 0) ++b1;
    if (hs.block_of[static_cast<std::size_t>(x)] == 1) ++b2;
  }
  CHECK(b1 == 2);
  CHECK(b2 == 6);

  // Interior elements from different blocks are incomparable.
  for (int x = 0; x < hs.op.size(); ++x)
    for (int y = 0; y < hs.op.size(); ++y)
      if (hs.block_of[static_cast<std::size_t>(x)] == 0 &&
          hs.block_of[static_cast<std::size_t>(y)] == 1)
        CHECK_FALSE(p.comparable(x, y));

  CHECK(hs.same_block(p.bottom(), 3));
  CHECK(validate_orthoposet(p, hs.op.involution()).verdict);

  SUBCASE("degenerate families") {
    CHECK_THROWS_AS(horizontal_sum({}), EmptyFamilyError);
    HorizontalSum one = horizontal_sum({gen_boolean(2)});
    CHECK(one.op.size() == 4);
    CHECK(one.blocks == 1);
  }

  SUBCASE("two-element blocks collapse onto the bounds") {
    HorizontalSum degen = horizontal_sum({gen_boolean(1), gen_boolean(2)});
    CHECK(degen.op.size() == 4);
  }
}

TEST_CASE("gen_mo") {
  HorizontalSum mo3 = gen_mo(3);
  CHECK(mo3.op.size() == 8);
  CHECK(mo3.blocks == 3);
  CHECK(is_lattice(mo3.op.poset()).verdict);
  CHECK_FALSE(is_boolean(mo3.op).verdict);
  CHECK(gen_mo(1).op.size() == 4);
}

TEST_CASE("decompose_blocks") {
  HorizontalSum built = horizontal_sum({fixture("fig6"), fixture("fig6")});
  HorizontalSum found = decompose_blocks(built.op);
  CHECK(found.blocks == 2);
  for (int x = 0; x < built.op.size(); ++x)
    CHECK(found.same_block(x, x) == built.same_block(x, x));

  // fig3 is horizontally indecomposable.
  CHECK(decompose_blocks(fixture("fig3")).blocks == 1);
  CHECK(decompose_blocks(gen_mo(4).op).blocks == 4);

  // fig3 is not a horizontal sum of Boolean posets: its single block is
  // not Boolean.
  CHECK_FALSE(is_boolean(fixture("fig3")).verdict);
}

TEST_CASE("serialize and parse round-trip") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    OrthoPoset op = fixture(name);
    std::string doc = serialize(op, name);
    NamedOrtho back = parse_document(doc);
    CHECK(back.name == name);
    REQUIRE(back.op.size() == op.size());
    for (int x = 0; x < op.size(); ++x) {
      CHECK(back.op.poset().label(x) == op.poset().label(x));
      CHECK(back.op.prime(x) == op.prime(x));
      for (int y = 0; y < op.size(); ++y)
        CHECK(back.op.poset().leq(x, y) == op.poset().leq(x, y));
    }
    CHECK(serialize(back.op, back.name) == doc);
  }
}

TEST_CASE("parser reports line numbers") {
  auto expect_error = [](const std::string& doc, int line) {
    try {
      parse_document(doc);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("posett x\n", 1);
  expect_error("orthoposet x\nm 4\n", 2);
  expect_error("orthoposet x\nn 4\nlabels 0 a b 1\nprime 3 2 1\n", 4);
  expect_error("orthoposet x\nn 4\nlabels 0 a b 1\nprime 3 2 1 0\ncover 0 oops\n", 5);

  // Comments and blank lines do not shift the count.
  NamedOrtho ok = parse_document(
      "# header comment\n\northoposet tiny\nn 2\nlabels 0 1\nprime 1 0\ncover 0 1\n");
  CHECK(ok.op.size() == 2);

  // Structural errors surface as poset exceptions, not ParseError.
  CHECK_THROWS_AS(parse_document("orthoposet x\nn 3\nlabels 0 z 1\nprime 2 1 0\n"
                                 "cover 0 1\ncover 1 2\ncover 2 0\n"),
                  CycleError);
}

TEST_CASE("export_dot") {
  OrthoPoset f3 = fixture("fig3");
  std::string dot = export_dot(f3, "fig3");
  CHECK(dot.rfind("digraph \"fig3\"", 0) == 0);
  CHECK(count_lines_with(dot, " [label=") == 18);
  CHECK(count_lines_with(dot, " -> ") == 40);

  std::string o6 = export_dot(fixture("fig7_o6"), "o6");
  CHECK(count_lines_with(o6, " [label=") == 6);
  CHECK(count_lines_with(o6, " -> ") == 6);
  CHECK(o6.find("rank=same") != std::string::npos);
}
