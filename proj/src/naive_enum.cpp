// Brute-force reference enumerator. Deliberately avoids the orderly-search
// and canonical-form machinery: labeled structures are generated directly and
// bucketed with a standalone backtracking isomorphism test, so its counts are
// an independent check on `enumerate`.

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "orthoposet/enumerate.hpp"
#include "orthoposet/ortho.hpp"

namespace orthoposet {

namespace {

using Mask = std::uint32_t;

// Interior order relations as closed down/up masks over 0..m-1.
struct InteriorPoset {
  int m = 0;
  std::array<Mask, 6> dn{}, up{};
};

void gen_interiors(int m, int k, InteriorPoset& cur,
                   std::vector<InteriorPoset>& out) {
  if (k == m) {
    out.push_back(cur);
    return;
  }
  const Mask all_prev = (Mask{1} << k) - 1;
  for (Mask d = 0; d <= all_prev; ++d) {
    bool down_closed = true;
    for (Mask t = d; t && down_closed; t &= t - 1) {
      const int i = std::countr_zero(t);
      if (cur.dn[i] & ~d & ~(Mask{1} << i)) down_closed = false;
    }
    if (!down_closed) continue;
    Mask allowed = all_prev & ~d;
    for (Mask t = d; t; t &= t - 1) allowed &= cur.up[std::countr_zero(t)];
    for (Mask u = 0; u <= all_prev; ++u) {
      if (u & ~allowed) continue;
      bool up_closed = true;
      for (Mask t = u; t && up_closed; t &= t - 1) {
        const int i = std::countr_zero(t);
        if (cur.up[i] & ~u & ~(Mask{1} << i)) up_closed = false;
      }
      if (!up_closed) continue;
      cur.dn[k] = d | (Mask{1} << k);
      cur.up[k] = u | (Mask{1} << k);
      for (Mask t = d; t; t &= t - 1) cur.up[std::countr_zero(t)] |= Mask{1} << k;
      for (Mask t = u; t; t &= t - 1) cur.dn[std::countr_zero(t)] |= Mask{1} << k;
      gen_interiors(m, k + 1, cur, out);
      for (Mask t = d; t; t &= t - 1)
        cur.up[std::countr_zero(t)] &= ~(Mask{1} << k);
      for (Mask t = u; t; t &= t - 1)
        cur.dn[std::countr_zero(t)] &= ~(Mask{1} << k);
    }
  }
}

void gen_involutions(int m, int next, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  while (next < m && cur[next] >= 0) ++next;
  if (next == m) {
    out.push_back(cur);
    return;
  }
  cur[next] = next;
  gen_involutions(m, next + 1, cur, out);
  cur[next] = -1;
  for (int j = next + 1; j < m; ++j) {
    if (cur[j] >= 0) continue;
    cur[next] = j;
    cur[j] = next;
    gen_involutions(m, next + 1, cur, out);
    cur[next] = -1;
    cur[j] = -1;
  }
}

// Full labeled structure: 0 = bottom, interiors 1..m, top = n-1.
struct Labeled {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<int> pm;
  std::vector<long long> inv_elem;  // per-element local invariant
  std::vector<long long> fingerprint;

  bool le(int x, int y) const { return leq[static_cast<std::size_t>(x) * n + y]; }
};

Labeled assemble(const InteriorPoset& ip, const std::vector<int>& sigma) {
  Labeled s;
  const int m = ip.m;
  s.n = m + 2;
  s.leq.assign(static_cast<std::size_t>(s.n) * s.n, 0);
  for (int x = 0; x < s.n; ++x) {
    s.leq[static_cast<std::size_t>(x) * s.n + x] = 1;
    s.leq[x * s.n + (s.n - 1)] = 1;
    s.leq[0 * s.n + x] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ip.up[i] >> j & 1) s.leq[(i + 1) * s.n + (j + 1)] = 1;
  s.pm.assign(s.n, 0);
  s.pm[0] = s.n - 1;
  s.pm[s.n - 1] = 0;
  for (int i = 0; i < m; ++i) s.pm[i + 1] = sigma[i] + 1;

  std::vector<long long> base(s.n, 0);
  for (int x = 0; x < s.n; ++x) {
    int down = 0, up = 0;
    for (int y = 0; y < s.n; ++y) {
      down += s.le(y, x);
      up += s.le(x, y);
    }
    base[x] = (static_cast<long long>(down) << 16) | up;
  }
  s.inv_elem.assign(s.n, 0);
  for (int x = 0; x < s.n; ++x)
    s.inv_elem[x] = (base[x] << 34) | (base[s.pm[x]] << 2) |
                    (s.pm[x] == x ? 1 : 0);
  s.fingerprint = s.inv_elem;
  std::sort(s.fingerprint.begin(), s.fingerprint.end());
  s.fingerprint.push_back(s.n);
  return s;
}

bool antitone(const InteriorPoset& ip, const std::vector<int>& sigma) {
  for (int i = 0; i < ip.m; ++i)
    for (Mask t = ip.up[i] & ~(Mask{1} << i); t; t &= t - 1) {
      const int j = std::countr_zero(t);
      if (!(ip.up[sigma[j]] >> sigma[i] & 1)) return false;
    }
  return true;
}

bool extend_iso(const Labeled& a, const Labeled& b, std::vector<int>& phi,
                std::vector<char>& used, int x) {
  if (x == a.n) return true;
  if (phi[x] >= 0) return extend_iso(a, b, phi, used, x + 1);
  for (int u = 0; u < b.n; ++u) {
    if (used[u] || a.inv_elem[x] != b.inv_elem[u]) continue;
    bool ok = true;
    for (int y = 0; y < a.n && ok; ++y) {
      if (phi[y] < 0) continue;
      if (a.le(x, y) != b.le(u, phi[y]) || a.le(y, x) != b.le(phi[y], u))
        ok = false;
    }
    const int sx = a.pm[x], su = b.pm[u];
    if (ok && phi[sx] >= 0 && phi[sx] != su) ok = false;
    if (!ok) continue;
    const bool pair_new = phi[sx] < 0 && sx != x;
    phi[x] = u;
    used[u] = 1;
    if (pair_new) {
      if (used[su]) {
        phi[x] = -1;
        used[u] = 0;
        continue;
      }
      phi[sx] = su;
      used[su] = 1;
    }
    if (extend_iso(a, b, phi, used, x + 1)) return true;
    phi[x] = -1;
    used[u] = 0;
    if (pair_new) {
      phi[sx] = -1;
      used[su] = 0;
    }
  }
  return false;
}

bool isomorphic(const Labeled& a, const Labeled& b) {
  if (a.n != b.n || a.fingerprint != b.fingerprint) return false;
  std::vector<int> phi(a.n, -1);
  std::vector<char> used(a.n, 0);
  phi[0] = 0;
  used[0] = 1;
  phi[a.n - 1] = a.n - 1;
  used[a.n - 1] = 1;
  return extend_iso(a, b, phi, used, 0);
}

bool passes(const OrthoPoset& op, const std::vector<EnumFilter>& fs) {
  for (EnumFilter f : fs) {
    switch (f) {
      case EnumFilter::omp:
        if (!validate_orthoposet(op.poset(), op.involution()).verdict ||
            !is_orthogonal_poset(op).verdict || !check_om(op).verdict)
          return false;
        break;
      case EnumFilter::gom:
        if (!validate_orthoposet(op.poset(), op.involution()).verdict ||
            !check_gom(op).verdict)
          return false;
        break;
      case EnumFilter::boolean_poset:
        if (!is_boolean(op).verdict) return false;
        break;
      case EnumFilter::orthogonal:
        if (!is_orthogonal_poset(op).verdict) return false;
        break;
      case EnumFilter::non_lattice:
        if (is_lattice(op.poset()).verdict) return false;
        break;
    }
  }
  return true;
}

}  // namespace

EnumResult naive_enumerate(const EnumJob& job) {
  if (job.max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  if (job.max_n > 8)
    throw FeasibilityError("naive reference enumeration is capped at 8 elements");

  EnumResult result;
  for (int n = 2; n <= job.max_n; ++n) {
    const int m = n - 2;
    std::vector<InteriorPoset> interiors;
    {
      InteriorPoset cur;
      cur.m = m;
      gen_interiors(m, 0, cur, interiors);
    }
    std::vector<std::vector<int>> sigmas;
    {
      std::vector<int> cur(m, -1);
      gen_involutions(m, 0, cur, sigmas);
    }

    std::map<std::vector<long long>, std::vector<Labeled>> classes;
    long long count = 0;
    for (const InteriorPoset& ip : interiors) {
      for (const std::vector<int>& sigma : sigmas) {
        if (!antitone(ip, sigma)) continue;
        Labeled s = assemble(ip, sigma);
        OrthoPoset op(Poset::from_relation(s.n, s.leq, 0, s.n - 1),
                      Involution(s.pm));
        if (!passes(op, job.filters)) continue;
        auto& bucket = classes[s.fingerprint];
        bool fresh = true;
        for (const Labeled& rep : bucket)
          if (isomorphic(s, rep)) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        bucket.push_back(s);
        count += 1;
        if (job.store_representatives)
          result.representatives.push_back(
              canonical_form(op.poset(), op.involution()));
      }
    }
    if (count > 0) result.counts_by_size[n] = count;
  }
  std::sort(result.representatives.begin(), result.representatives.end());
  result.certificate.push_back("naive reference enumeration, sizes 2.." +
                               std::to_string(job.max_n));
  for (const auto& [n, c] : result.counts_by_size)
    result.certificate.push_back("n=" + std::to_string(n) + ": " +
                                 std::to_string(c));
  return result;
}

}  // namespace orthoposet
