#pragma once

// Antitone involutions over a bounded poset and the laws built from them:
// complementation, orthogonality, orthomodularity and its generalized form,
// Boolean-ness. Checks return CheckReports with first-class witnesses; the
// OrthoPoset type itself only guarantees the involution is antitone and
// swaps the bounds, so the weaker structures that show up during an
// enumeration sweep can still be carried around and interrogated.

#include <optional>
#include <string>
#include <vector>

#include "orthoposet/poset.hpp"

namespace orthoposet {

// Structural law violated while assembling a checked object.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Involution {
 public:
  // map must be a permutation with map[map[x]] == x.
  explicit Involution(std::vector<int> map);

  static Involution identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& mapping() const { return map_; }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::vector<int> map_;
};

class OrthoPoset {
 public:
  // Requires ' to be antitone (x <= y implies y' <= x') and to swap the
  // bounds. Complementation is deliberately not required here; use
  // validate_orthoposet / classify to test for it.
  OrthoPoset(Poset p, Involution inv);

  const Poset& poset() const { return p_; }
  const Involution& involution() const { return inv_; }

  int size() const { return p_.size(); }
  int bottom() const { return p_.bottom(); }
  int top() const { return p_.top(); }
  int prime(int x) const { return inv_(x); }
  const std::string& label(int x) const { return p_.label(x); }

  // Image of a subset under '.
  Subset prime_image(const Subset& a) const;

 private:
  Poset p_;
  Involution inv_;
};

// Reports on the three unary-operation laws: involution shape (given by the
// type), antitonicity, and complementation (L(x,x') = {0}, U(x,x') = {1}).
// Works on a raw pair so invalid candidates can be diagnosed too.
CheckReport validate_orthoposet(const Poset& p, const Involution& inv);

// x is orthogonal to y iff x <= y'.
bool orthogonal(const OrthoPoset& op, int x, int y);

// Every orthogonal pair has a join.
CheckReport is_orthogonal_poset(const OrthoPoset& op);

// Orthomodular law: x <= y implies y = x v (y ^ x'), where both the meet
// and the join must exist. The dual form (x = y ^ (x v y')) is evaluated
// alongside; its failures are recorded with a "dual:" prefix.
CheckReport check_om(const OrthoPoset& op);

// Generalized orthomodular law: x <= y implies U(y) = U(x, L(y,x')),
// together with its dual L(x) = L(y, U(x,y')).
CheckReport check_gom(const OrthoPoset& op);

// Distributive and ' is a complementation. Lattice-ness is not required.
CheckReport is_boolean(const OrthoPoset& op);

// All b with L(a,b) = {0} and U(a,b) = {1}. Needs no involution.
Subset complements_of(const Poset& p, int a);

struct Classification {
  CheckReport valid;
  CheckReport lattice;
  CheckReport distributive;
  CheckReport boolean_poset;
  CheckReport orthogonal;
  CheckReport om;
  CheckReport gom;

  bool orthomodular_poset() const {
    return valid.verdict && orthogonal.verdict && om.verdict;
  }
  bool gom_poset() const { return valid.verdict && gom.verdict; }
  bool ortholattice() const { return valid.verdict && lattice.verdict; }
  bool orthomodular_lattice() const { return ortholattice() && om.verdict; }
};

Classification classify(const OrthoPoset& op);

}  // namespace orthoposet
