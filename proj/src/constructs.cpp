#include "orthoposet/constructs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace orthoposet {

namespace {

using CoverList = std::vector<std::pair<int, int>>;

OrthoPoset make_fixture(int n, const CoverList& covers, std::vector<std::string> labels) {
  Poset p = Poset::from_covers(n, covers, 0, n - 1, std::move(labels));
  // Every fixture pairs x with x' mirror-wise: i <-> n-1-i.
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)] = n - 1 - i;
  return OrthoPoset(std::move(p), Involution(std::move(inv)));
}

// 12-element non-lattice Boolean poset; realized by the twelve subsets
// {},{1},{2},{3},{4},{1,2},{3,4},{1,2,3},{1,2,4},{1,3,4},{2,3,4},{1,2,3,4}
// under inclusion with set complement as '.
OrthoPoset fig1() {
  // 0:0 1:a 2:b 3:c 4:d 5:e 6:e' 7:d' 8:c' 9:b' 10:a' 11:1
  CoverList covers = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4},
      {1, 5}, {1, 9},          // a < e, a < b'
      {2, 5}, {2, 10},         // b < e, b < a'
      {3, 6}, {3, 7},          // c < e', c < d'
      {4, 6}, {4, 8},          // d < e', d < c'
      {5, 8}, {5, 7},          // e < c', e < d'
      {6, 10}, {6, 9},         // e' < a', e' < b'
      {7, 11}, {8, 11}, {9, 11}, {10, 11},
  };
  return make_fixture(12, covers,
                      {"0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"});
}

// The 18-element structure: 8 atoms a..h, 8 coatoms, mirror pairing.
OrthoPoset fig3() {
  // 0:0 1:a 2:b 3:c 4:d 5:e 6:f 7:g 8:h 9:h' 10:g' 11:f' 12:e' 13:d' 14:c' 15:b' 16:a' 17:1
  CoverList covers;
  for (int atom = 1; atom <= 8; ++atom) covers.emplace_back(0, atom);
  // atom -> coatom incidences
  const int a = 1, b = 2, c = 3, d = 4, e = 5, f = 6, g = 7, h = 8;
  const int hp = 9, gp = 10, fp = 11, ep = 12, dp = 13, cp = 14, bp = 15, ap = 16;
  for (auto [u, v] : CoverList{{a, hp}, {a, gp}, {a, fp}, {a, dp},
                               {b, hp}, {b, gp}, {b, ep}, {b, cp},
                               {c, hp}, {c, bp},
                               {d, hp}, {d, ap},
                               {e, gp}, {e, bp},
                               {f, gp}, {f, ap},
                               {g, fp}, {g, ep}, {g, bp}, {g, ap},
                               {h, dp}, {h, cp}, {h, bp}, {h, ap}}) {
    covers.emplace_back(u, v);
  }
  for (int co = 9; co <= 16; ++co) covers.emplace_back(co, 17);
  return make_fixture(18, covers,
                      {"0", "a", "b", "c", "d", "e", "f", "g", "h",
                       "h'", "g'", "f'", "e'", "d'", "c'", "b'", "a'", "1"});
}

// 10-element configuration: two atom pairs below/above crossed coatoms.
OrthoPoset fig5() {
  // 0:0 1:a 2:b 3:g 4:h 5:h' 6:g' 7:b' 8:a' 9:1
  CoverList covers = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4},
      {1, 5}, {1, 6},  // a < h', g'
      {2, 5}, {2, 6},  // b < h', g'
      {3, 7}, {3, 8},  // g < b', a'
      {4, 7}, {4, 8},  // h < b', a'
      {5, 9}, {6, 9}, {7, 9}, {8, 9},
  };
  return make_fixture(10, covers, {"0", "a", "b", "g", "h", "h'", "g'", "b'", "a'", "1"});
}

// 10-element non-lattice Boolean poset: four atoms, each below the three
// coatoms other than its own prime.
OrthoPoset fig6() {
  // 0:0 1:a 2:b 3:c 4:d 5:d' 6:c' 7:b' 8:a' 9:1
  CoverList covers = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4},
      {1, 5}, {1, 6}, {1, 7},  // a < d', c', b'
      {2, 5}, {2, 6}, {2, 8},  // b < d', c', a'
      {3, 5}, {3, 7}, {3, 8},  // c < d', b', a'
      {4, 6}, {4, 7}, {4, 8},  // d < c', b', a'
      {5, 9}, {6, 9}, {7, 9}, {8, 9},
  };
  return make_fixture(10, covers, {"0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"});
}

// Benzene ring O6: 0 < a < b' < 1 and 0 < b < a' < 1.
OrthoPoset fig7_o6() {
  CoverList covers = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
  return make_fixture(6, covers, {"0", "a", "b", "b'", "a'", "1"});
}

}  // namespace

OrthoPoset gen_fig2() {
  // Subsets of {1..6} with equally many members in {1,2,3} and {4,5,6}:
  // the empty set, nine 2-element sets, nine 4-element sets, and N itself.
  std::vector<std::vector<int>> sets;
  for (int mask = 0; mask < 64; ++mask) {
    int lo = 0, hi = 0;
    std::vector<int> members;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1 << i)) {
        members.push_back(i + 1);
        (i < 3 ? lo : hi) += 1;
      }
    }
    if (lo == hi) sets.push_back(std::move(members));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });

  const int n = static_cast<int>(sets.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (contains(sets[static_cast<std::size_t>(y)], sets[static_cast<std::size_t>(x)])) {
        leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = 1;
      }
    }
  }

  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    std::vector<int> comp;
    for (int v = 1; v <= 6; ++v) {
      if (!std::binary_search(sets[static_cast<std::size_t>(x)].begin(),
                              sets[static_cast<std::size_t>(x)].end(), v)) {
        comp.push_back(v);
      }
    }
    for (int y = 0; y < n; ++y) {
      if (sets[static_cast<std::size_t>(y)] == comp) inv[static_cast<std::size_t>(x)] = y;
    }
  }

  // Interior elements are named by their member sets, e.g. {1,4}.
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "0";
  labels[static_cast<std::size_t>(n - 1)] = "1";
  for (int x = 1; x < n - 1; ++x) {
    std::string text = "{";
    for (std::size_t i = 0; i < sets[static_cast<std::size_t>(x)].size(); ++i) {
      if (i) text += ",";
      text += std::to_string(sets[static_cast<std::size_t>(x)][i]);
    }
    text += "}";
    labels[static_cast<std::size_t>(x)] = std::move(text);
  }

  Poset p = Poset::from_relation(n, leq, 0, n - 1, std::move(labels));
  return OrthoPoset(std::move(p), Involution(std::move(inv)));
}

OrthoPoset gen_boolean(int k) {
  if (k < 0 || k > 9) throw std::invalid_argument("gen_boolean: k must be in 0..9");
  const int n = 1 << k;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  // Atoms are a, b, c, ...; proper joins concatenate ("ab"). Keeps every
  // interior label distinct from the bound labels 0 and 1.
  auto key = [&](int mask) {
    std::string word;
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i)) word += static_cast<char>('a' + i);
    }
    return std::make_pair(std::popcount(static_cast<unsigned>(mask)), word);
  };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  const int full = n - 1;
  for (int x = 0; x < n; ++x) {
    int mx = order[static_cast<std::size_t>(x)];
    for (int y = 0; y < n; ++y) {
      int my = order[static_cast<std::size_t>(y)];
      if ((mx & my) == mx) {
        leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = 1;
      }
    }
    inv[static_cast<std::size_t>(x)] = pos[static_cast<std::size_t>(full & ~mx)];
    if (mx == 0) {
      labels[static_cast<std::size_t>(x)] = "0";
    } else if (mx == full) {
      labels[static_cast<std::size_t>(x)] = "1";
    } else {
      labels[static_cast<std::size_t>(x)] = key(mx).second;
    }
  }
  Poset p = Poset::from_relation(n, leq, 0, n - 1, std::move(labels));
  return OrthoPoset(std::move(p), Involution(std::move(inv)));
}

HorizontalSum horizontal_sum(const std::vector<OrthoPoset>& parts) {
  if (parts.empty()) throw EmptyFamilyError("horizontal sum of an empty family");

  int n = 2;
  for (const auto& part : parts) n += part.size() - 2;

  // Element map: bottom -> 0, each part's interior in index order, top last.
  std::vector<std::vector<int>> to_sum(parts.size());
  int next = 1;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& part = parts[b];
    to_sum[b].assign(static_cast<std::size_t>(part.size()), -1);
    to_sum[b][static_cast<std::size_t>(part.bottom())] = 0;
    to_sum[b][static_cast<std::size_t>(part.top())] = n - 1;
    for (int x = 0; x < part.size(); ++x) {
      if (x != part.bottom() && x != part.top()) to_sum[b][static_cast<std::size_t>(x)] = next++;
    }
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto set_leq = [&](int x, int y) {
    leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = 1;
  };
  for (int x = 0; x < n; ++x) set_leq(x, x);
  for (int x = 0; x < n; ++x) {
    set_leq(0, x);
    set_leq(x, n - 1);
  }
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const Poset& pp = parts[b].poset();
    for (int x = 0; x < pp.size(); ++x) {
      for (int y = 0; y < pp.size(); ++y) {
        if (pp.leq(x, y)) set_leq(to_sum[b][static_cast<std::size_t>(x)], to_sum[b][static_cast<std::size_t>(y)]);
      }
    }
  }

  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  inv[0] = n - 1;
  inv[static_cast<std::size_t>(n - 1)] = 0;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[0] = "0";
  labels[static_cast<std::size_t>(n - 1)] = "1";
  for (std::size_t b = 0; b < parts.size(); ++b) {
    const auto& part = parts[b];
    for (int x = 0; x < part.size(); ++x) {
      int sx = to_sum[b][static_cast<std::size_t>(x)];
      if (sx == 0 || sx == n - 1) continue;
      inv[static_cast<std::size_t>(sx)] = to_sum[b][static_cast<std::size_t>(part.prime(x))];
      block_of[static_cast<std::size_t>(sx)] = static_cast<int>(b);
      labels[static_cast<std::size_t>(sx)] =
          parts.size() == 1 ? part.label(x) : part.label(x) + "@" + std::to_string(b + 1);
    }
  }

  Poset p = Poset::from_relation(n, leq, 0, n - 1, std::move(labels));
  HorizontalSum hs{OrthoPoset(std::move(p), Involution(std::move(inv))), std::move(block_of),
                   static_cast<int>(parts.size())};
  return hs;
}

HorizontalSum gen_mo(int k) {
  if (k < 1) throw EmptyFamilyError("MO(k) needs k >= 1");
  std::vector<OrthoPoset> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) parts.push_back(gen_boolean(2));
  return horizontal_sum(parts);
}

HorizontalSum decompose_blocks(const OrthoPoset& op) {
  const Poset& p = op.poset();
  const int n = p.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };

  auto interior = [&](int x) { return x != p.bottom() && x != p.top(); };
  for (int x = 0; x < n; ++x) {
    if (!interior(x)) continue;
    unite(x, op.prime(x));
    for (int y = x + 1; y < n; ++y) {
      if (interior(y) && p.comparable(x, y)) unite(x, y);
    }
  }

  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::map<int, int> root_to_block;
  for (int x = 0; x < n; ++x) {
    if (!interior(x)) continue;
    int r = find(x);
    auto [it, fresh] = root_to_block.try_emplace(r, static_cast<int>(root_to_block.size()));
    block_of[static_cast<std::size_t>(x)] = it->second;
    (void)fresh;
  }
  return HorizontalSum{op, std::move(block_of), static_cast<int>(root_to_block.size())};
}

OrthoPoset fixture(const std::string& name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return gen_fig2();
  if (name == "fig3") return fig3();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  if (name == "fig7_o6") return fig7_o6();
  throw UnknownFixtureError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"fig1", "fig2", "fig3", "fig5", "fig6", "fig7_o6"};
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line_no, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

NamedOrtho parse_document(std::istream& in) {
  std::string line;
  int line_no = 0;
  int stage = 0;  // 0: name, 1: n, 2: labels, 3: prime, 4: covers
  std::string name;
  int n = -1;
  std::vector<std::string> labels;
  std::vector<int> prime;
  std::vector<std::pair<int, int>> covers;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;

    switch (stage) {
      case 0:
        if (toks[0] != "orthoposet" || toks.size() != 2) {
          throw ParseError(line_no, "expected 'orthoposet <name>'");
        }
        name = toks[1];
        stage = 1;
        break;
      case 1:
        if (toks[0] != "n" || toks.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
        n = parse_int(toks[1], line_no);
        if (n < 1) throw ParseError(line_no, "element count must be positive");
        stage = 2;
        break;
      case 2: {
        if (toks[0] != "labels") throw ParseError(line_no, "expected 'labels ...'");
        labels.assign(toks.begin() + 1, toks.end());
        if (static_cast<int>(labels.size()) != n) {
          throw ParseError(line_no, "expected " + std::to_string(n) + " labels, got " +
                                        std::to_string(labels.size()));
        }
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw ParseError(line_no, "labels are not unique");
        }
        stage = 3;
        break;
      }
      case 3:
        if (toks[0] != "prime") throw ParseError(line_no, "expected 'prime ...'");
        if (static_cast<int>(toks.size()) != n + 1) {
          throw ParseError(line_no, "expected " + std::to_string(n) + " prime entries");
        }
        for (std::size_t i = 1; i < toks.size(); ++i) prime.push_back(parse_int(toks[i], line_no));
        stage = 4;
        break;
      default:
        if (toks[0] != "cover" || toks.size() != 3) {
          throw ParseError(line_no, "expected 'cover <u> <v>'");
        }
        covers.emplace_back(parse_int(toks[1], line_no), parse_int(toks[2], line_no));
        break;
    }
  }
  if (stage != 4) throw ParseError(line_no, "document ended before the prime line");

  Poset p = Poset::from_covers(n, covers, 0, n - 1, std::move(labels));
  return NamedOrtho{OrthoPoset(std::move(p), Involution(std::move(prime))), name};
}

NamedOrtho parse_document(const std::string& text) {
  std::istringstream ss(text);
  return parse_document(ss);
}

namespace {

bool good_token(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch == '#' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') return false;
  }
  return true;
}

// Identity unless the bounds sit away from the 0 / n-1 slots.
std::vector<int> normal_positions(const OrthoPoset& op) {
  const int n = op.size();
  std::vector<int> pos(static_cast<std::size_t>(n));
  int next = 1;
  for (int x = 0; x < n; ++x) {
    if (x == op.bottom()) {
      pos[static_cast<std::size_t>(x)] = 0;
    } else if (x == op.top()) {
      pos[static_cast<std::size_t>(x)] = n - 1;
    } else {
      pos[static_cast<std::size_t>(x)] = next++;
    }
  }
  if (n == 1) pos[0] = 0;
  return pos;
}

}  // namespace

std::string serialize(const OrthoPoset& op, const std::string& name) {
  const Poset& p = op.poset();
  const int n = p.size();
  std::vector<int> pos = normal_positions(op);
  std::vector<int> elem(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) elem[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])] = x;

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  bool keep = true;
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = p.label(elem[static_cast<std::size_t>(i)]);
    if (!good_token(labels[static_cast<std::size_t>(i)])) keep = false;
  }
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) keep = false;
  }
  if (!keep) {
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
  }

  std::ostringstream out;
  out << "orthoposet " << (good_token(name) ? name : "poset") << "\n";
  out << "n " << n << "\n";
  out << "labels";
  for (const auto& l : labels) out << " " << l;
  out << "\n";
  out << "prime";
  for (int i = 0; i < n; ++i) {
    out << " " << pos[static_cast<std::size_t>(op.prime(elem[static_cast<std::size_t>(i)]))];
  }
  out << "\n";

  std::vector<std::pair<int, int>> covlines;
  for (auto [u, v] : p.cover_list()) {
    covlines.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  }
  std::sort(covlines.begin(), covlines.end());
  for (auto [u, v] : covlines) out << "cover " << u << " " << v << "\n";
  return out.str();
}

std::string export_dot(const OrthoPoset& op, const std::string& name) {
  const Poset& p = op.poset();
  const int n = p.size();
  std::ostringstream out;
  out << "digraph \"" << (name.empty() ? "poset" : name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";

  int max_h = 0;
  for (int x = 0; x < n; ++x) max_h = std::max(max_h, p.height(x));
  for (int h = 0; h <= max_h; ++h) {
    std::string row;
    for (int x = 0; x < n; ++x) {
      if (p.height(x) == h) row += " n" + std::to_string(x) + ";";
    }
    if (!row.empty()) out << "  { rank=same;" << row << " }\n";
  }
  for (int x = 0; x < n; ++x) {
    out << "  n" << x << " [label=\"" << p.label(x) << "  ['=" << p.label(op.prime(x))
        << "]\"];\n";
  }
  for (auto [u, v] : p.cover_list()) {
    out << "  n" << u << " -> n" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orthoposet
