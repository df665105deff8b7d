#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <orthoposet/constructs.hpp>
#include <orthoposet/logic_ops.hpp>

#include <string>
#include <vector>

using namespace orthoposet;

namespace {

OrthoPoset three_chain() {
  Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}}, 0, 2, {"0", "m", "1"});
  return OrthoPoset(std::move(p), Involution(std::vector<int>{2, 1, 0}));
}

int at(const OrthoPoset& op, const std::string& label) {
  return *op.poset().index_of_label(label);
}

}  // namespace

TEST_CASE("order implies compatibility") {
  std::vector<OrthoPoset> corpus;
  for (const auto& name : fixture_names()) corpus.push_back(fixture(name));
  corpus.push_back(three_chain());
  for (const OrthoPoset& op : corpus) {
    for (int a = 0; a < op.size(); ++a)
      for (int b = 0; b < op.size(); ++b)
        if (op.poset().leq(a, b)) CHECK(compatible(op, a, b));
  }
}

TEST_CASE("compatibility is stable under priming the right argument") {
  std::vector<OrthoPoset> corpus;
  for (const auto& name : fixture_names()) corpus.push_back(fixture(name));
  corpus.push_back(three_chain());
  for (const OrthoPoset& op : corpus) {
    for (int a = 0; a < op.size(); ++a)
      for (int b = 0; b < op.size(); ++b)
        CHECK(compatible(op, a, b) == compatible(op, a, op.prime(b)));
  }
}

TEST_CASE("bounds are compatible with everything under complementation") {
  for (const auto& name : fixture_names()) {
    OrthoPoset op = fixture(name);
    const int bot = op.poset().bottom();
    const int top = op.poset().top();
    for (int b = 0; b < op.size(); ++b) {
      CHECK(compatible(op, bot, b));
      CHECK(compatible(op, top, b));
      CHECK(compatible(op, b, bot));
      CHECK(compatible(op, b, top));
    }
  }

  // Complementation is needed: in the involutive 3-chain, 1 C m fails.
  OrthoPoset tc = three_chain();
  CHECK_FALSE(compatible(tc, 2, 1));
  CHECK(compatible(tc, 1, 2));
}

TEST_CASE("Boolean posets are compatible everywhere") {
  for (const char* name : {"fig1", "fig6"}) {
    OrthoPoset op = fixture(name);
    for (int a = 0; a < op.size(); ++a)
      for (int b = 0; b < op.size(); ++b) CHECK(compatible(op, a, b));
  }
}

TEST_CASE("compatibility is not symmetric in general") {
  OrthoPoset o6 = fixture("fig7_o6");
  int a = at(o6, "a"), bp = at(o6, "b'");
  CHECK(compatible(o6, a, bp));
  CHECK_FALSE(compatible(o6, bp, a));
}

TEST_CASE("commutator spot values") {
  OrthoPoset f3 = fixture("fig3");
  CommutatorValue c = commutator(f3, at(f3, "a"), at(f3, "b"));
  CHECK(c.mins ==
        Subset::of(f3.size(), {at(f3, "a'"), at(f3, "b'")}));
  CHECK_FALSE(c.as_element.has_value());

  OrthoPoset o6 = fixture("fig7_o6");
  Subset top6 = Subset::single(o6.size(), o6.poset().top());
  for (int x = 0; x < o6.size(); ++x) {
    for (int y = 0; y < o6.size(); ++y) {
      CommutatorValue v = commutator(o6, x, y);
      CHECK(v.mins == top6);
      CHECK(v.as_element == o6.poset().top());
    }
  }
}

TEST_CASE("commutator symmetries") {
  std::vector<OrthoPoset> corpus;
  for (const auto& name : fixture_names()) corpus.push_back(fixture(name));
  corpus.push_back(three_chain());
  for (const OrthoPoset& op : corpus) {
    for (int a = 0; a < op.size(); ++a) {
      for (int b = 0; b < op.size(); ++b) {
        Subset base = commutator(op, a, b).mins;
        CHECK(commutator(op, b, a).mins == base);
        CHECK(commutator(op, a, op.prime(b)).mins == base);
        CHECK(commutator(op, op.prime(a), b).mins == base);
        CHECK(commutator(op, op.prime(a), op.prime(b)).mins == base);
      }
    }
  }
}

TEST_CASE("commutator at the bounds, complemented scope") {
  for (const auto& name : fixture_names()) {
    OrthoPoset op = fixture(name);
    Subset top = Subset::single(op.size(), op.poset().top());
    for (int b = 0; b < op.size(); ++b) {
      CHECK(commutator(op, op.poset().bottom(), b).mins == top);
      CHECK(commutator(op, op.poset().top(), b).mins == top);
    }
  }

  // Without complementation the conclusion is false: c(m,m)={m} in the
  // 3-chain with m'=m.
  OrthoPoset tc = three_chain();
  CHECK(commutator(tc, 1, 1).mins == Subset::single(3, 1));
}

TEST_CASE("two-sided compatibility forces full commutator") {
  for (const auto& name : fixture_names()) {
    OrthoPoset op = fixture(name);
    Subset top = Subset::single(op.size(), op.poset().top());
    for (int a = 0; a < op.size(); ++a)
      for (int b = 0; b < op.size(); ++b)
        if (compatible(op, a, b) && compatible(op, op.prime(a), b))
          CHECK(commutator(op, a, b).mins == top);
  }
}

TEST_CASE("commutator_sets") {
  OrthoPoset f3 = fixture("fig3");
  const int n = f3.size();
  int a = at(f3, "a"), b = at(f3, "b"), c = at(f3, "c");

  CHECK(commutator_sets(f3, Subset::single(n, a), Subset::single(n, b)) ==
        commutator(f3, a, b).mins);
  CHECK(commutator_sets(f3, Subset(n), Subset::single(n, b)).empty());

  Subset lhs = Subset::of(n, {a, c});
  Subset rhs = Subset::single(n, b);
  Subset expect = commutator(f3, a, b).mins | commutator(f3, c, b).mins;
  CHECK(commutator_sets(f3, lhs, rhs) == expect);
}

TEST_CASE("two-valued commutator characterization") {
  CHECK(commutator_two_valued(gen_boolean(3)).verdict);
  CHECK(commutator_two_valued(gen_mo(3).op).verdict);
  CHECK(commutator_two_valued(horizontal_sum({fixture("fig6"), fixture("fig6")}).op).verdict);

  CheckReport r = commutator_two_valued(fixture("fig3"));
  CHECK_FALSE(r.verdict);
  CHECK(r.warnings.empty());  // both routes agree even when the verdict fails
}

TEST_CASE("discriminator") {
  OrthoPoset o6 = fixture("fig7_o6");
  for (int x = 0; x < o6.size(); ++x)
    for (int y = 0; y < o6.size(); ++y)
      for (int z = 0; z < o6.size(); ++z)
        CHECK(discriminator(o6, x, y, z) == Subset::single(o6.size(), z));

  OrthoPoset f3 = fixture("fig3");
  CHECK(discriminator(f3, at(f3, "a"), at(f3, "b"), f3.poset().top()) ==
        Subset::of(f3.size(), {at(f3, "a'"), at(f3, "b'")}));

  // x C x always, so t(x,x,z) = {z} wherever the commutator is {top}.
  OrthoPoset hs = horizontal_sum({gen_boolean(2), gen_boolean(3)}).op;
  for (int x = 0; x < hs.size(); ++x)
    for (int z = 0; z < hs.size(); ++z)
      CHECK(discriminator(hs, x, x, z) == Subset::single(hs.size(), z));
}

TEST_CASE("compat and commutator agree exactly on Boolean block sums") {
  CHECK(compat_commutator_agreement(fixture("fig1")).verdict);
  CHECK(compat_commutator_agreement(fixture("fig6")).verdict);
  CheckReport hsr =
      compat_commutator_agreement(horizontal_sum({fixture("fig1"), fixture("fig6")}).op);
  CHECK(hsr.verdict);
  CHECK(hsr.warnings.empty());

  // Outside that scope the check still runs; O6 is a counterexample.
  CheckReport r = compat_commutator_agreement(fixture("fig7_o6"));
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.warnings.empty());
  OrthoPoset o6 = fixture("fig7_o6");
  CHECK(r.witnesses.front().elements == std::vector<int>{at(o6, "b'"), at(o6, "a")});

  // fig3 satisfies the equivalence although it is no Boolean sum.
  CheckReport f3 = compat_commutator_agreement(fixture("fig3"));
  CHECK(f3.verdict);
  CHECK_FALSE(f3.warnings.empty());
}
