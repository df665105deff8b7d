#pragma once

// Constructions and named fixtures: horizontal sums, the even-subset
// generator, small Boolean lattices and MO(k), plus the line-oriented text
// format and DOT export.

#include <iosfwd>
#include <string>
#include <vector>

#include "orthoposet/ortho.hpp"

namespace orthoposet {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

struct UnknownFixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A horizontal sum remembers which summand each element came from.
// block_of is -1 for the shared bounds, which belong to every block.
struct HorizontalSum {
  OrthoPoset op;
  std::vector<int> block_of;
  int blocks = 0;

  bool same_block(int x, int y) const {
    int bx = block_of[static_cast<std::size_t>(x)];
    int by = block_of[static_cast<std::size_t>(y)];
    return bx == -1 || by == -1 || bx == by;
  }
};

// Bounds identified, interiors kept disjoint in input order, involution
// acting blockwise. Result size = sum of (part size - 2) + 2.
HorizontalSum horizontal_sum(const std::vector<OrthoPoset>& parts);

// Groups interior elements by comparability and involution closure; the
// finest decomposition of op as a horizontal sum. Returns block ids per
// element (-1 for bounds) through the same HorizontalSum shape.
HorizontalSum decompose_blocks(const OrthoPoset& op);

// Subsets A of {1..6} with |A cap {1,2,3}| = |A cap {4,5,6}|, ordered by
// inclusion, set complement as involution. 20 elements.
OrthoPoset gen_fig2();

// Power set of {1..k} under inclusion; 2^k elements.
OrthoPoset gen_boolean(int k);

// Horizontal sum of k four-element Boolean posets (k >= 1).
HorizontalSum gen_mo(int k);

OrthoPoset fixture(const std::string& name);
std::vector<std::string> fixture_names();

struct NamedOrtho {
  OrthoPoset op;
  std::string name;
};

// Document grammar (UTF-8, line oriented, '#' starts a comment):
//   orthoposet <name>
//   n <count>
//   labels <n unique tokens>      element 0 = bottom, element n-1 = top
//   prime <n integers>
//   cover <u> <v>                 v covers u; any order on input
NamedOrtho parse_document(std::istream& in);
NamedOrtho parse_document(const std::string& text);

// Emits the grammar above with covers in ascending (u,v) order. Elements
// are renumbered so bottom is 0 and top is n-1; otherwise input order.
std::string serialize(const OrthoPoset& op, const std::string& name);

// Layered digraph of the cover relation, edges bottom-up, one rank per
// height level. Deterministic.
std::string export_dot(const OrthoPoset& op, const std::string& name);

}  // namespace orthoposet
