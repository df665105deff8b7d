#pragma once

// Finite bounded poset stored as a dense order relation plus both cone
// tables. Sizes stay small (tens of elements), so every query is a handful
// of word operations and nothing here tries to be clever about memory.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthoposet/subset.hpp"

namespace orthoposet {

// Input relation contains a directed cycle (or breaks antisymmetry).
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declared bottom/top is not a least/greatest element, or an index is bad.
struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Witness {
  std::vector<int> elements;
  std::string note;
};

// Outcome of one property check. verdict==false guarantees at least one
// witness; verdict==true may still carry informational witnesses.
struct CheckReport {
  std::string property;
  bool verdict = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> warnings;

  void fail(std::vector<int> elements, std::string note) {
    verdict = false;
    witnesses.push_back(Witness{std::move(elements), std::move(note)});
  }

  void info(std::vector<int> elements, std::string note) {
    witnesses.push_back(Witness{std::move(elements), std::move(note)});
  }
};

class Poset {
 public:
  Poset() = default;

  // covers holds (u, v) pairs meaning v covers u; redundant (transitive)
  // pairs are tolerated and dropped when the Hasse diagram is rebuilt.
  // Throws CycleError on cyclic input, BoundsError when bottom/top fail to
  // be least/greatest.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           int bottom, int top,
                           std::vector<std::string> labels = {});

  // leq is the full relation, row-major: leq[x*n+y] != 0 iff x <= y.
  // Must be reflexive, antisymmetric and transitive.
  static Poset from_relation(int n, const std::vector<std::uint8_t>& leq,
                             int bottom, int top,
                             std::vector<std::string> labels = {});

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return above_[static_cast<std::size_t>(x)].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  // Closed cones: down(x) = {z : z <= x}, up(x) = {z : x <= z}.
  const Subset& down(int x) const { return below_[static_cast<std::size_t>(x)]; }
  const Subset& up(int x) const { return above_[static_cast<std::size_t>(x)]; }

  const Subset& covers_up(int x) const { return cov_up_[static_cast<std::size_t>(x)]; }
  const Subset& covers_down(int x) const { return cov_dn_[static_cast<std::size_t>(x)]; }

  // Longest cover chain from bottom.
  int height(int x) const { return height_[static_cast<std::size_t>(x)]; }

  // L(A) and U(A); by convention L({}) = U({}) = the whole carrier.
  Subset lower_cone(const Subset& a) const;
  Subset upper_cone(const Subset& a) const;
  Subset lower_cone(const Subset& a, int extra) const;
  Subset upper_cone(const Subset& a, int extra) const;

  Subset min_elements(const Subset& a) const;
  Subset max_elements(const Subset& a) const;

  // Least upper / greatest lower bound, when it exists.
  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;

  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of_label(const std::string& label) const;

  // Renders "{a,b,c}" in index order.
  std::string label_set(const Subset& a) const;

  // Hasse diagram, ascending pairs (u, v) with v covering u.
  std::vector<std::pair<int, int>> cover_list() const;

 private:
  void derive_covers_and_heights();
  void check_bounds() const;

  int n_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<Subset> below_;
  std::vector<Subset> above_;
  std::vector<Subset> cov_up_;
  std::vector<Subset> cov_dn_;
  std::vector<int> height_;
  std::vector<std::string> labels_;
};

// Pairwise joins and meets all exist. First failing pair (index order) is
// the witness, with the minimal upper / maximal lower bounds in the note.
CheckReport is_lattice(const Poset& p);

// L(U(x,y),z) = LU(L(x,z),L(y,z)) for all triples. Witness = first failing
// triple with both sides rendered.
CheckReport is_distributive(const Poset& p);

// Evaluates the four equivalent cone forms of distributivity and checks
// they agree triple-by-triple; the report carries one verdict line per form.
CheckReport check_distributivity_variants(const Poset& p);

std::string to_text(const CheckReport& r, const Poset& p);

}  // namespace orthoposet
