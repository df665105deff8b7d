#include "orthoposet/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace orthoposet {

namespace {

constexpr int kMaxN = 64;

struct Searcher {
  int n = 0;
  bool has_inv = false;
  bool has_mark = false;
  std::array<std::uint64_t, kMaxN> up{}, dn{}, covu{}, covd{};
  std::array<int, kMaxN> pr{};
  std::uint64_t marked = 0;
  std::array<int, kMaxN> height{}, depth{};
  int bottom = 0, top = 0;

  std::vector<std::uint8_t> best;
  std::vector<int> best_pos;
  bool have_best = false;

  void load(const Poset& p, const Involution* inv, const Subset* mark) {
    n = p.size();
    if (n < 1 || n > kMaxN) {
      throw std::invalid_argument("canonical form supports 1..64 elements, got " +
                                  std::to_string(n));
    }
    bottom = p.bottom();
    top = p.top();
    for (int i = 0; i < n; ++i) {
      up[static_cast<std::size_t>(i)] = 0;
      dn[static_cast<std::size_t>(i)] = 0;
      covu[static_cast<std::size_t>(i)] = 0;
      covd[static_cast<std::size_t>(i)] = 0;
      p.up(i).for_each([&](int j) { up[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; });
      p.down(i).for_each([&](int j) { dn[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; });
      p.covers_up(i).for_each([&](int j) { covu[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; });
      p.covers_down(i).for_each([&](int j) { covd[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; });
      pr[static_cast<std::size_t>(i)] = inv ? (*inv)(i) : -1;
      height[static_cast<std::size_t>(i)] = p.height(i);
    }
    has_inv = inv != nullptr;
    has_mark = mark != nullptr;
    marked = 0;
    if (mark) {
      mark->for_each([&](int j) { marked |= std::uint64_t{1} << j; });
    }
    // Longest chain up to top, computed over elements by shrinking up-cone.
    std::array<int, kMaxN> order{};
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
      return std::popcount(up[static_cast<std::size_t>(a)]) < std::popcount(up[static_cast<std::size_t>(b)]);
    });
    for (int idx = 0; idx < n; ++idx) {
      int x = order[static_cast<std::size_t>(idx)];
      int d = 0;
      std::uint64_t m = covu[static_cast<std::size_t>(x)];
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        d = std::max(d, depth[static_cast<std::size_t>(v)] + 1);
      }
      depth[static_cast<std::size_t>(x)] = d;
    }
  }

  std::vector<int> initial_colors() const {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int bclass = i == bottom ? 0 : (i == top ? 2 : 1);
      int self_paired = has_inv ? (pr[static_cast<std::size_t>(i)] == i ? 1 : 2) : 0;
      int mk = (marked >> i) & 1;
      keys[static_cast<std::size_t>(i)] = {
          bclass,
          height[static_cast<std::size_t>(i)],
          depth[static_cast<std::size_t>(i)],
          std::popcount(dn[static_cast<std::size_t>(i)]),
          std::popcount(up[static_cast<std::size_t>(i)]),
          std::popcount(covd[static_cast<std::size_t>(i)]),
          std::popcount(covu[static_cast<std::size_t>(i)]),
          self_paired,
          mk,
      };
    }
    return rank_keys(keys);
  }

  static std::vector<int> rank_keys(const std::vector<std::vector<int>>& keys) {
    const int n = static_cast<int>(keys.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    std::vector<int> color(static_cast<std::size_t>(n));
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] !=
                       keys[static_cast<std::size_t>(idx[static_cast<std::size_t>(i - 1)])]) {
        ++c;
      }
      color[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = c;
    }
    return color;
  }

  void refine(std::vector<int>& color) const {
    int classes = 1 + *std::max_element(color.begin(), color.end());
    for (;;) {
      std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        std::vector<int>& k = keys[static_cast<std::size_t>(i)];
        k.push_back(color[static_cast<std::size_t>(i)]);
        std::vector<int> nb;
        std::uint64_t m = covu[static_cast<std::size_t>(i)];
        while (m) {
          nb.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
          m &= m - 1;
        }
        std::sort(nb.begin(), nb.end());
        k.push_back(static_cast<int>(nb.size()));
        k.insert(k.end(), nb.begin(), nb.end());
        nb.clear();
        m = covd[static_cast<std::size_t>(i)];
        while (m) {
          nb.push_back(color[static_cast<std::size_t>(std::countr_zero(m))]);
          m &= m - 1;
        }
        std::sort(nb.begin(), nb.end());
        k.push_back(static_cast<int>(nb.size()));
        k.insert(k.end(), nb.begin(), nb.end());
        k.push_back(has_inv ? color[static_cast<std::size_t>(pr[static_cast<std::size_t>(i)])] : -1);
      }
      std::vector<int> next = rank_keys(keys);
      int next_classes = 1 + *std::max_element(next.begin(), next.end());
      color = std::move(next);
      if (next_classes == classes) return;
      classes = next_classes;
    }
  }

  void search(std::vector<int>& color) {
    // First non-singleton cell, by color id.
    std::array<int, kMaxN> count{};
    for (int i = 0; i < n; ++i) count[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])]++;
    int cell = -1;
    for (int c = 0; c < n; ++c) {
      if (count[static_cast<std::size_t>(c)] >= 2) {
        cell = c;
        break;
      }
    }
    if (cell < 0) {
      leaf(color);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (color[static_cast<std::size_t>(e)] != cell) continue;
      std::vector<int> child(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int c = color[static_cast<std::size_t>(i)];
        if (c > cell) {
          child[static_cast<std::size_t>(i)] = c + 1;
        } else if (c == cell) {
          child[static_cast<std::size_t>(i)] = i == e ? cell : cell + 1;
        } else {
          child[static_cast<std::size_t>(i)] = c;
        }
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<std::uint8_t> enc = encode(color);
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_pos = color;
      have_best = true;
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& pos) const {
    std::array<int, kMaxN> elem{};
    for (int i = 0; i < n; ++i) elem[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint8_t> out;
    out.reserve(2 + static_cast<std::size_t>(n * n + 7) / 8 + static_cast<std::size_t>(n) + 8);
    out.push_back(static_cast<std::uint8_t>(n));
    out.push_back(static_cast<std::uint8_t>((has_inv ? 1 : 0) | (has_mark ? 2 : 0)));
    std::uint8_t acc = 0;
    int nbits = 0;
    auto push_bit = [&](bool b) {
      acc = static_cast<std::uint8_t>((acc << 1) | (b ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(acc);
        acc = 0;
        nbits = 0;
      }
    };
    for (int i = 0; i < n; ++i) {
      int ei = elem[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        push_bit((up[static_cast<std::size_t>(ei)] >> elem[static_cast<std::size_t>(j)]) & 1);
      }
    }
    if (has_mark) {
      for (int i = 0; i < n; ++i) push_bit((marked >> elem[static_cast<std::size_t>(i)]) & 1);
    }
    if (nbits) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    if (has_inv) {
      for (int i = 0; i < n; ++i) {
        out.push_back(static_cast<std::uint8_t>(
            pos[static_cast<std::size_t>(pr[static_cast<std::size_t>(elem[static_cast<std::size_t>(i)])])]));
      }
    }
    return out;
  }
};

}  // namespace

CanonicalResult canonical_form_full(const Poset& p, const Involution* inv, const Subset* marked) {
  Searcher s;
  s.load(p, inv, marked);
  std::vector<int> color = s.initial_colors();
  s.refine(color);
  s.search(color);
  return CanonicalResult{std::move(s.best), std::move(s.best_pos)};
}

std::vector<std::uint8_t> canonical_form(const Poset& p) {
  return canonical_form_full(p, nullptr, nullptr).bytes;
}

std::vector<std::uint8_t> canonical_form(const Poset& p, const Involution& inv) {
  return canonical_form_full(p, &inv, nullptr).bytes;
}

std::vector<std::uint8_t> canonical_form_marked(const Poset& p, const Involution& inv,
                                                const Subset& marked) {
  return canonical_form_full(p, &inv, &marked).bytes;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  }
  return out;
}

DecodedForm decode_canonical(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 2) throw std::invalid_argument("canonical form too short");
  const int n = bytes[0];
  const bool has_inv = bytes[1] & 1;
  const bool has_mark = bytes[1] & 2;
  const int relbits = n * n + (has_mark ? n : 0);
  const std::size_t relbytes = static_cast<std::size_t>(relbits + 7) / 8;
  if (bytes.size() != 2 + relbytes + (has_inv ? static_cast<std::size_t>(n) : 0)) {
    throw std::invalid_argument("canonical form has wrong length");
  }
  auto bit = [&](int k) { return (bytes[2 + static_cast<std::size_t>(k) / 8] >> (7 - k % 8)) & 1; };
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(bit(i * n + j));
    }
  }
  DecodedForm d{Poset::from_relation(n, leq, 0, n == 1 ? 0 : n - 1), std::nullopt};
  if (has_inv) {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)] = bytes[2 + relbytes + static_cast<std::size_t>(i)];
    d.involution = Involution(std::move(inv));
  }
  return d;
}

}  // namespace orthoposet
