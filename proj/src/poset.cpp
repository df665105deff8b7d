#include "orthoposet/poset.hpp"

#include <algorithm>
#include <deque>

namespace orthoposet {

namespace {

std::vector<std::string> default_labels(int n, int bottom, int top) {
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "x" + std::to_string(i);
  labels[static_cast<std::size_t>(bottom)] = "0";
  if (top != bottom) labels[static_cast<std::size_t>(top)] = "1";
  return labels;
}

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         int bottom, int top, std::vector<std::string> labels) {
  if (n <= 0) throw BoundsError("poset needs at least one element");
  if (bottom < 0 || bottom >= n || top < 0 || top >= n) {
    throw BoundsError("bound index out of range");
  }
  if (n >= 2 && bottom == top) throw BoundsError("bottom and top coincide");

  std::vector<Subset> succ(static_cast<std::size_t>(n), Subset(n));
  for (auto [u, v] : covers) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw BoundsError("cover index out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    }
    if (u == v) throw CycleError("self-loop at element " + std::to_string(u));
    succ[static_cast<std::size_t>(u)].set(v);
  }

  // Kahn's algorithm; leftovers mean a cycle.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    succ[static_cast<std::size_t>(u)].for_each([&](int v) { ++indeg[static_cast<std::size_t>(v)]; });
  }
  std::deque<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  }
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop_front();
    topo.push_back(u);
    succ[static_cast<std::size_t>(u)].for_each([&](int v) {
      if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    });
  }
  if (static_cast<int>(topo.size()) != n) {
    std::string stuck;
    for (int i = 0; i < n; ++i) {
      if (indeg[static_cast<std::size_t>(i)] > 0) {
        if (!stuck.empty()) stuck += ",";
        stuck += std::to_string(i);
      }
    }
    throw CycleError("cover relation is cyclic through elements {" + stuck + "}");
  }

  Poset p;
  p.n_ = n;
  p.bottom_ = bottom;
  p.top_ = top;
  p.above_.assign(static_cast<std::size_t>(n), Subset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int u = *it;
    Subset& a = p.above_[static_cast<std::size_t>(u)];
    a.set(u);
    succ[static_cast<std::size_t>(u)].for_each([&](int v) { a |= p.above_[static_cast<std::size_t>(v)]; });
  }
  p.below_.assign(static_cast<std::size_t>(n), Subset(n));
  for (int u = 0; u < n; ++u) {
    p.above_[static_cast<std::size_t>(u)].for_each([&](int v) { p.below_[static_cast<std::size_t>(v)].set(u); });
  }

  if (labels.empty()) {
    p.labels_ = default_labels(n, bottom, top);
  } else {
    if (static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("label count does not match element count");
    }
    p.labels_ = std::move(labels);
  }

  p.check_bounds();
  p.derive_covers_and_heights();
  return p;
}

Poset Poset::from_relation(int n, const std::vector<std::uint8_t>& leq,
                           int bottom, int top, std::vector<std::string> labels) {
  if (n <= 0) throw BoundsError("poset needs at least one element");
  if (static_cast<int>(leq.size()) != n * n) {
    throw std::invalid_argument("relation matrix has wrong size");
  }
  if (bottom < 0 || bottom >= n || top < 0 || top >= n) {
    throw BoundsError("bound index out of range");
  }
  if (n >= 2 && bottom == top) throw BoundsError("bottom and top coincide");

  auto at = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] != 0; };
  for (int x = 0; x < n; ++x) {
    if (!at(x, x)) throw std::invalid_argument("relation is not reflexive at " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      if (x != y && at(x, y) && at(y, x)) {
        throw CycleError("antisymmetry fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }

  Poset p;
  p.n_ = n;
  p.bottom_ = bottom;
  p.top_ = top;
  p.above_.assign(static_cast<std::size_t>(n), Subset(n));
  p.below_.assign(static_cast<std::size_t>(n), Subset(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (at(x, y)) {
        p.above_[static_cast<std::size_t>(x)].set(y);
        p.below_[static_cast<std::size_t>(y)].set(x);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    Subset reach(n);
    p.above_[static_cast<std::size_t>(x)].for_each([&](int y) { reach |= p.above_[static_cast<std::size_t>(y)]; });
    if (!reach.is_subset_of(p.above_[static_cast<std::size_t>(x)])) {
      throw std::invalid_argument("relation is not transitive at " + std::to_string(x));
    }
  }

  if (labels.empty()) {
    p.labels_ = default_labels(n, bottom, top);
  } else {
    if (static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("label count does not match element count");
    }
    p.labels_ = std::move(labels);
  }

  p.check_bounds();
  p.derive_covers_and_heights();
  return p;
}

void Poset::check_bounds() const {
  if (above_[static_cast<std::size_t>(bottom_)].count() != n_) {
    for (int x = 0; x < n_; ++x) {
      if (!leq(bottom_, x)) {
        throw BoundsError("declared bottom is not below element " + std::to_string(x));
      }
    }
  }
  if (below_[static_cast<std::size_t>(top_)].count() != n_) {
    for (int x = 0; x < n_; ++x) {
      if (!leq(x, top_)) {
        throw BoundsError("declared top is not above element " + std::to_string(x));
      }
    }
  }
}

void Poset::derive_covers_and_heights() {
  cov_up_.assign(static_cast<std::size_t>(n_), Subset(n_));
  cov_dn_.assign(static_cast<std::size_t>(n_), Subset(n_));
  for (int x = 0; x < n_; ++x) {
    Subset strict = above_[static_cast<std::size_t>(x)];
    strict.reset(x);
    strict.for_each([&](int v) {
      // v covers x iff nothing sits strictly between them.
      Subset between = strict & below_[static_cast<std::size_t>(v)];
      between.reset(v);
      if (between.empty()) {
        cov_up_[static_cast<std::size_t>(x)].set(v);
        cov_dn_[static_cast<std::size_t>(v)].set(x);
      }
    });
  }

  // Elements in order of |down(x)| form a linear extension.
  std::vector<int> order(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return below_[static_cast<std::size_t>(a)].count() < below_[static_cast<std::size_t>(b)].count();
  });
  height_.assign(static_cast<std::size_t>(n_), 0);
  for (int x : order) {
    int h = 0;
    cov_dn_[static_cast<std::size_t>(x)].for_each([&](int u) { h = std::max(h, height_[static_cast<std::size_t>(u)] + 1); });
    height_[static_cast<std::size_t>(x)] = h;
  }
}

Subset Poset::lower_cone(const Subset& a) const {
  Subset r = Subset::full(n_);
  a.for_each([&](int x) { r &= below_[static_cast<std::size_t>(x)]; });
  return r;
}

Subset Poset::upper_cone(const Subset& a) const {
  Subset r = Subset::full(n_);
  a.for_each([&](int x) { r &= above_[static_cast<std::size_t>(x)]; });
  return r;
}

Subset Poset::lower_cone(const Subset& a, int extra) const {
  Subset r = lower_cone(a);
  r &= below_[static_cast<std::size_t>(extra)];
  return r;
}

Subset Poset::upper_cone(const Subset& a, int extra) const {
  Subset r = upper_cone(a);
  r &= above_[static_cast<std::size_t>(extra)];
  return r;
}

Subset Poset::min_elements(const Subset& a) const {
  Subset r(n_);
  a.for_each([&](int x) {
    if ((below_[static_cast<std::size_t>(x)] & a).count() == 1) r.set(x);
  });
  return r;
}

Subset Poset::max_elements(const Subset& a) const {
  Subset r(n_);
  a.for_each([&](int x) {
    if ((above_[static_cast<std::size_t>(x)] & a).count() == 1) r.set(x);
  });
  return r;
}

std::optional<int> Poset::join(int x, int y) const {
  Subset ub = above_[static_cast<std::size_t>(x)] & above_[static_cast<std::size_t>(y)];
  return min_elements(ub).sole();
}

std::optional<int> Poset::meet(int x, int y) const {
  Subset lb = below_[static_cast<std::size_t>(x)] & below_[static_cast<std::size_t>(y)];
  return max_elements(lb).sole();
}

std::optional<int> Poset::index_of_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

std::string Poset::label_set(const Subset& a) const {
  std::string out = "{";
  bool first = true;
  a.for_each([&](int x) {
    if (!first) out += ",";
    first = false;
    out += labels_[static_cast<std::size_t>(x)];
  });
  out += "}";
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    cov_up_[static_cast<std::size_t>(u)].for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

namespace {

// The four cone identities equivalent to distributivity. Each returns both
// sides so reports can show them.
struct SidePair {
  Subset lhs;
  Subset rhs;
  bool ok() const { return lhs == rhs; }
};

SidePair dist_form(const Poset& p, int form, int x, int y, int z) {
  switch (form) {
    case 0: {  // L(U(x,y),z) = LU(L(x,z),L(y,z))
      Subset lhs = p.lower_cone(p.up(x) & p.up(y)) & p.down(z);
      Subset rhs = p.lower_cone(p.upper_cone((p.down(x) & p.down(z)) | (p.down(y) & p.down(z))));
      return {lhs, rhs};
    }
    case 1: {  // UL(U(x,y),z) = U(L(x,z),L(y,z))
      Subset lhs = p.upper_cone(p.lower_cone(p.up(x) & p.up(y)) & p.down(z));
      Subset rhs = p.upper_cone((p.down(x) & p.down(z)) | (p.down(y) & p.down(z)));
      return {lhs, rhs};
    }
    case 2: {  // U(L(x,y),z) = UL(U(x,z),U(y,z))
      Subset lhs = p.upper_cone(p.down(x) & p.down(y)) & p.up(z);
      Subset rhs = p.upper_cone(p.lower_cone((p.up(x) & p.up(z)) | (p.up(y) & p.up(z))));
      return {lhs, rhs};
    }
    default: {  // LU(L(x,y),z) = L(U(x,z),U(y,z))
      Subset lhs = p.lower_cone(p.upper_cone(p.down(x) & p.down(y)) & p.up(z));
      Subset rhs = p.lower_cone((p.up(x) & p.up(z)) | (p.up(y) & p.up(z)));
      return {lhs, rhs};
    }
  }
}

const char* kDistFormName[4] = {
    "L(U(x,y),z)=LU(L(x,z),L(y,z))",
    "UL(U(x,y),z)=U(L(x,z),L(y,z))",
    "U(L(x,y),z)=UL(U(x,z),U(y,z))",
    "LU(L(x,y),z)=L(U(x,z),U(y,z))",
};

}  // namespace

CheckReport is_lattice(const Poset& p) {
  CheckReport r;
  r.property = "lattice";
  const int n = p.size();
  for (int x = 0; x < n && r.verdict; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Subset ub = p.up(x) & p.up(y);
      Subset mins = p.min_elements(ub);
      if (mins.count() != 1) {
        r.fail({x, y}, "join undefined; minimal upper bounds " + p.label_set(mins));
        break;
      }
      Subset lb = p.down(x) & p.down(y);
      Subset maxs = p.max_elements(lb);
      if (maxs.count() != 1) {
        r.fail({x, y}, "meet undefined; maximal lower bounds " + p.label_set(maxs));
        break;
      }
    }
  }
  return r;
}

CheckReport is_distributive(const Poset& p) {
  CheckReport r;
  r.property = "distributive";
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        SidePair s = dist_form(p, 0, x, y, z);
        if (!s.ok()) {
          r.fail({x, y, z}, "L(U(x,y),z)=" + p.label_set(s.lhs) +
                                " but LU(L(x,z),L(y,z))=" + p.label_set(s.rhs));
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport check_distributivity_variants(const Poset& p) {
  CheckReport r;
  r.property = "distributive-variants";
  const int n = p.size();
  bool verdict[4] = {true, true, true, true};
  Witness first[4];
  for (int form = 0; form < 4; ++form) {
    for (int x = 0; x < n && verdict[form]; ++x) {
      for (int y = 0; y < n && verdict[form]; ++y) {
        for (int z = 0; z < n; ++z) {
          SidePair s = dist_form(p, form, x, y, z);
          if (!s.ok()) {
            verdict[form] = false;
            first[form] = Witness{{x, y, z}, std::string(kDistFormName[form]) + ": " +
                                                 p.label_set(s.lhs) + " vs " + p.label_set(s.rhs)};
            break;
          }
        }
      }
    }
  }
  for (int form = 1; form < 4; ++form) {
    if (verdict[form] != verdict[0]) {
      r.warnings.push_back("equivalent forms disagree; this should be impossible");
    }
  }
  r.verdict = verdict[0] && verdict[1] && verdict[2] && verdict[3];
  for (int form = 0; form < 4; ++form) {
    if (verdict[form]) {
      r.info({}, std::string(kDistFormName[form]) + ": holds");
    } else {
      r.witnesses.push_back(first[form]);
    }
  }
  return r;
}

std::string to_text(const CheckReport& r, const Poset& p) {
  std::string out = r.property + ": " + (r.verdict ? "pass" : "fail") + "\n";
  for (const auto& w : r.witnesses) {
    out += "  ";
    if (!w.elements.empty()) {
      out += "witness (";
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        if (i) out += ",";
        out += p.label(w.elements[i]);
      }
      out += "): ";
    }
    out += w.note + "\n";
  }
  for (const auto& w : r.warnings) out += "  warning: " + w + "\n";
  return out;
}

}  // namespace orthoposet
