#include "orthoposet/ortho.hpp"

namespace orthoposet {

Involution::Involution(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  for (int x = 0; x < n; ++x) {
    int y = map_[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n) {
      throw ValidationError("involution image out of range at " + std::to_string(x));
    }
    if (map_[static_cast<std::size_t>(y)] != x) {
      throw ValidationError("mapping is not an involution at " + std::to_string(x));
    }
  }
}

Involution Involution::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return Involution(std::move(m));
}

OrthoPoset::OrthoPoset(Poset p, Involution inv) : p_(std::move(p)), inv_(std::move(inv)) {
  if (inv_.size() != p_.size()) {
    throw ValidationError("involution size does not match poset size");
  }
  if (inv_(p_.bottom()) != p_.top()) {
    throw ValidationError("involution must swap bottom and top");
  }
  const int n = p_.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p_.leq(x, y) && !p_.leq(inv_(y), inv_(x))) {
        throw ValidationError("involution is not antitone at (" + p_.label(x) + "," +
                              p_.label(y) + ")");
      }
    }
  }
}

Subset OrthoPoset::prime_image(const Subset& a) const {
  Subset out(p_.size());
  a.for_each([&](int x) { out.set(inv_(x)); });
  return out;
}

CheckReport validate_orthoposet(const Poset& p, const Involution& inv) {
  CheckReport r;
  r.property = "valid-orthoposet";
  const int n = p.size();
  if (inv.size() != n) {
    r.fail({}, "involution size does not match poset size");
    return r;
  }
  if (inv(p.bottom()) != p.top()) {
    r.fail({p.bottom()}, "involution does not swap bottom and top");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(inv(y), inv(x))) {
        r.fail({x, y}, "antitonicity fails: x<=y but not y'<=x'");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    Subset lo = p.down(x) & p.down(inv(x));
    if (!(lo == Subset::single(n, p.bottom()))) {
      r.fail({x}, "complementation fails: L(x,x') = " + p.label_set(lo));
    }
    Subset hi = p.up(x) & p.up(inv(x));
    if (!(hi == Subset::single(n, p.top()))) {
      r.fail({x}, "complementation fails: U(x,x') = " + p.label_set(hi));
    }
  }
  return r;
}

bool orthogonal(const OrthoPoset& op, int x, int y) {
  return op.poset().leq(x, op.prime(y));
}

CheckReport is_orthogonal_poset(const OrthoPoset& op) {
  CheckReport r;
  r.property = "orthogonal-poset";
  const Poset& p = op.poset();
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (!orthogonal(op, x, y)) continue;
      if (!p.join(x, y)) {
        Subset mins = p.min_elements(p.up(x) & p.up(y));
        r.fail({x, y}, "orthogonal pair without join; minimal upper bounds " +
                           p.label_set(mins));
        return r;
      }
    }
  }
  return r;
}

CheckReport check_om(const OrthoPoset& op) {
  CheckReport r;
  r.property = "orthomodular";
  const Poset& p = op.poset();
  const int n = p.size();
  bool primal_ok = true;
  bool dual_ok = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      // y = x v (y ^ x')
      auto m = p.meet(y, op.prime(x));
      if (!m) {
        primal_ok = false;
        r.fail({x, y}, "meet y^x' undefined; maximal lower bounds " +
                           p.label_set(p.max_elements(p.down(y) & p.down(op.prime(x)))));
      } else {
        auto j = p.join(x, *m);
        if (!j) {
          primal_ok = false;
          r.fail({x, y}, "join x v (y^x') undefined; minimal upper bounds " +
                             p.label_set(p.min_elements(p.up(x) & p.up(*m))));
        } else if (*j != y) {
          primal_ok = false;
          r.fail({x, y}, "x v (y^x') = " + p.label(*j) + " != y");
        }
      }
      // dual: x = y ^ (x v y')
      auto jd = p.join(x, op.prime(y));
      if (!jd) {
        dual_ok = false;
        r.fail({x, y}, "dual: join x v y' undefined; minimal upper bounds " +
                           p.label_set(p.min_elements(p.up(x) & p.up(op.prime(y)))));
      } else {
        auto md = p.meet(y, *jd);
        if (!md) {
          dual_ok = false;
          r.fail({x, y}, "dual: meet y ^ (x v y') undefined");
        } else if (*md != x) {
          dual_ok = false;
          r.fail({x, y}, "dual: y ^ (x v y') = " + p.label(*md) + " != x");
        }
      }
    }
  }
  // Substituting (y',x') for (x,y) carries each form into the other, so the
  // two verdicts can never split.
  if (primal_ok != dual_ok) {
    r.warnings.push_back("primal and dual orthomodular verdicts disagree; this should be impossible");
  }
  r.verdict = primal_ok && dual_ok;
  return r;
}

CheckReport check_gom(const OrthoPoset& op) {
  CheckReport r;
  r.property = "generalized-orthomodular";
  const Poset& p = op.poset();
  const int n = p.size();
  bool primal_ok = true;
  bool dual_ok = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      // U(y) = U(x, L(y,x'))
      Subset s = p.down(y) & p.down(op.prime(x));
      Subset lhs = p.upper_cone(s, x);
      if (!(lhs == p.up(y))) {
        primal_ok = false;
        r.fail({x, y}, "U(x,L(y,x')) = " + p.label_set(lhs) + " but U(y) = " +
                           p.label_set(p.up(y)));
      }
      // dual: L(x) = L(y, U(x,y'))
      Subset t = p.up(x) & p.up(op.prime(y));
      Subset lhsd = p.lower_cone(t, y);
      if (!(lhsd == p.down(x))) {
        dual_ok = false;
        r.fail({x, y}, "dual: L(y,U(x,y')) = " + p.label_set(lhsd) + " but L(x) = " +
                           p.label_set(p.down(x)));
      }
    }
  }
  if (primal_ok != dual_ok) {
    r.warnings.push_back("primal and dual generalized verdicts disagree; this should be impossible");
  }
  r.verdict = primal_ok && dual_ok;
  return r;
}

CheckReport is_boolean(const OrthoPoset& op) {
  CheckReport r;
  r.property = "boolean";
  CheckReport dist = is_distributive(op.poset());
  if (!dist.verdict) {
    r.verdict = false;
    for (auto& w : dist.witnesses) r.witnesses.push_back(std::move(w));
  }
  const Poset& p = op.poset();
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    Subset lo = p.down(x) & p.down(op.prime(x));
    Subset hi = p.up(x) & p.up(op.prime(x));
    if (!(lo == Subset::single(n, p.bottom())) || !(hi == Subset::single(n, p.top()))) {
      r.fail({x}, "' is not a complementation: L(x,x')=" + p.label_set(lo) +
                      ", U(x,x')=" + p.label_set(hi));
    }
  }
  return r;
}

Subset complements_of(const Poset& p, int a) {
  const int n = p.size();
  Subset out(n);
  Subset bot = Subset::single(n, p.bottom());
  Subset top = Subset::single(n, p.top());
  for (int b = 0; b < n; ++b) {
    if ((p.down(a) & p.down(b)) == bot && (p.up(a) & p.up(b)) == top) out.set(b);
  }
  return out;
}

Classification classify(const OrthoPoset& op) {
  Classification c;
  c.valid = validate_orthoposet(op.poset(), op.involution());
  c.lattice = is_lattice(op.poset());
  c.distributive = is_distributive(op.poset());
  c.boolean_poset = is_boolean(op);
  c.orthogonal = is_orthogonal_poset(op);
  c.om = check_om(op);
  c.gom = check_gom(op);
  return c;
}

}  // namespace orthoposet
