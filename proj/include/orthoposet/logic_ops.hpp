#pragma once

// Relational operators over an involutive bounded poset: compatibility C,
// the commutator c on elements and on sets, the ternary term t, and their
// characterization checks on horizontal sums.

#include "orthoposet/ortho.hpp"

namespace orthoposet {

struct CommutatorValue {
  // Min of the upper cone over the four lower cones; nonempty for finite
  // carriers because the cone always contains top.
  Subset mins;
  // Set exactly when mins is a singleton, following the convention of
  // identifying singletons with their element.
  std::optional<int> as_element;
};

// a C b iff U(a) = U(L(a,b), L(a,b')).
bool compatible(const OrthoPoset& op, int a, int b);

// c(x,y) = Min U(L(x,y), L(x,y'), L(x',y), L(x',y')).
CommutatorValue commutator(const OrthoPoset& op, int x, int y);

// c(A,B) = union of c(a,b).mins over a in A, b in B; empty when either
// side is empty.
Subset commutator_sets(const OrthoPoset& op, const Subset& a, const Subset& b);

// Verdict true iff every pair's commutator is {bottom} or {top}. Evaluates
// the equivalent cone condition (all four cones = {bottom}, or the upper
// cone of their union = {top}) on a separate route and checks agreement.
CheckReport commutator_two_valued(const OrthoPoset& op);

// t(x,y,z) = Min U( L(M',x), L(M,z) ) with M = c(x,y).mins and M' the
// elementwise primes. A Subset because nothing guarantees a singleton
// outside horizontal sums of Boolean posets.
Subset discriminator(const OrthoPoset& op, int x, int y, int z);

// a C b iff c(a,b) = {top}, over all pairs. Meaningful on horizontal sums
// of Boolean posets; when op does not decompose that way the report gets a
// precondition warning and the verdict is computed anyway.
CheckReport compat_commutator_agreement(const OrthoPoset& op);

}  // namespace orthoposet
