#include "orthoposet/logic_ops.hpp"

#include "orthoposet/constructs.hpp"

namespace orthoposet {

bool compatible(const OrthoPoset& op, int a, int b) {
  const Poset& p = op.poset();
  Subset cones = (p.down(a) & p.down(b)) | (p.down(a) & p.down(op.prime(b)));
  return p.upper_cone(cones) == p.up(a);
}

CommutatorValue commutator(const OrthoPoset& op, int x, int y) {
  const Poset& p = op.poset();
  int xp = op.prime(x), yp = op.prime(y);
  Subset cones = (p.down(x) & p.down(y)) | (p.down(x) & p.down(yp)) |
                 (p.down(xp) & p.down(y)) | (p.down(xp) & p.down(yp));
  CommutatorValue v;
  v.mins = p.min_elements(p.upper_cone(cones));
  v.as_element = v.mins.sole();
  return v;
}

Subset commutator_sets(const OrthoPoset& op, const Subset& a, const Subset& b) {
  Subset out(op.size());
  a.for_each([&](int x) {
    b.for_each([&](int y) { out |= commutator(op, x, y).mins; });
  });
  return out;
}

CheckReport commutator_two_valued(const OrthoPoset& op) {
  CheckReport r;
  r.property = "commutator-two-valued";
  const Poset& p = op.poset();
  const int n = p.size();
  Subset bot = Subset::single(n, p.bottom());
  Subset top = Subset::single(n, p.top());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      CommutatorValue v = commutator(op, x, y);
      bool two_valued = v.mins == bot || v.mins == top;

      // Second route: the four cones collapse to {bottom}, or their union's
      // upper cone is {top}.
      int xp = op.prime(x), yp = op.prime(y);
      Subset cones = (p.down(x) & p.down(y)) | (p.down(x) & p.down(yp)) |
                     (p.down(xp) & p.down(y)) | (p.down(xp) & p.down(yp));
      bool cond = cones == bot || p.upper_cone(cones) == top;

      if (two_valued != cond) {
        r.warnings.push_back("two-valued routes disagree at (" + p.label(x) + "," + p.label(y) +
                             "); this should be impossible");
      }
      if (!two_valued && r.verdict) {
        r.fail({x, y}, "c = " + p.label_set(v.mins));
      }
    }
  }
  return r;
}

Subset discriminator(const OrthoPoset& op, int x, int y, int z) {
  const Poset& p = op.poset();
  Subset m = commutator(op, x, y).mins;
  Subset cones = (p.lower_cone(op.prime_image(m), x)) | (p.lower_cone(m, z));
  return p.min_elements(p.upper_cone(cones));
}

CheckReport compat_commutator_agreement(const OrthoPoset& op) {
  CheckReport r;
  r.property = "compat-commutator-agreement";
  const Poset& p = op.poset();
  const int n = p.size();

  HorizontalSum hs = decompose_blocks(op);
  for (int blockIdx = 0; blockIdx < hs.blocks; ++blockIdx) {
    // Induced sub-poset on block + bounds.
    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
      if (x == p.bottom() || x == p.top() || hs.block_of[static_cast<std::size_t>(x)] == blockIdx) {
        members.push_back(x);
      }
    }
    const int m = static_cast<int>(members.size());
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    std::vector<int> inv(static_cast<std::size_t>(m));
    int sub_bottom = 0, sub_top = 0;
    for (int i = 0; i < m; ++i) {
      if (members[static_cast<std::size_t>(i)] == p.bottom()) sub_bottom = i;
      if (members[static_cast<std::size_t>(i)] == p.top()) sub_top = i;
      for (int j = 0; j < m; ++j) {
        if (p.leq(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)])) {
          leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] = 1;
        }
      }
      for (int j = 0; j < m; ++j) {
        if (members[static_cast<std::size_t>(j)] == op.prime(members[static_cast<std::size_t>(i)])) {
          inv[static_cast<std::size_t>(i)] = j;
        }
      }
    }
    Poset sub = Poset::from_relation(m, leq, sub_bottom, sub_top);
    OrthoPoset sub_op(std::move(sub), Involution(std::move(inv)));
    CheckReport boolean_check = is_boolean(sub_op);
    if (!boolean_check.verdict) {
      r.warnings.push_back("precondition: block " + std::to_string(blockIdx + 1) +
                           " is not a Boolean poset");
    }
  }

  Subset top = Subset::single(n, p.top());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool c = compatible(op, a, b);
      bool one = commutator(op, a, b).mins == top;
      if (c != one) {
        r.fail({a, b}, std::string(c ? "compatible" : "incompatible") + " but c = " +
                           p.label_set(commutator(op, a, b).mins));
      }
    }
  }
  return r;
}

}  // namespace orthoposet
