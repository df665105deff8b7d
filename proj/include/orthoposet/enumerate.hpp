#pragma once

// Canonical enumeration of bounded posets with an antitone involution,
// the independent brute-force reference enumerator, and the two theorem
// verification drivers built on top.

#include <map>
#include <string>
#include <vector>

#include "orthoposet/canonical.hpp"

namespace orthoposet {

// Exhaustive work beyond the configured size cap.
struct FeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EnumFilter { omp, gom, boolean_poset, orthogonal, non_lattice };
enum class ExtensionOrder { lex, reverse };
enum class EnumMode { exhaustive, proof_guided };

EnumFilter filter_from_name(const std::string& name);
std::string filter_name(EnumFilter f);

struct EnumJob {
  int max_n = 8;
  std::vector<EnumFilter> filters;
  EnumMode mode = EnumMode::exhaustive;
  ExtensionOrder order = ExtensionOrder::lex;
  // OpenMP worker count; 0 picks the runtime default.
  int jobs = 1;
  bool store_representatives = true;
  // Optional path for resume / cross-run diffing.
  std::string checkpoint;
  // 0 falls back to ORTHOPOSET_FEASIBILITY_LIMIT or the built-in default.
  int feasibility_limit = 0;
};

struct EnumResult {
  std::map<int, long long> counts_by_size;
  // Sorted canonical forms of everything counted (when requested).
  std::vector<std::vector<std::uint8_t>> representatives;
  std::vector<std::string> certificate;
  bool ok = true;

  long long total() const {
    long long t = 0;
    for (const auto& [sz, c] : counts_by_size) t += c;
    return t;
  }
};

int default_feasibility_limit();

// One representative per isomorphism class (bounds fixed, involution
// respected), sizes 2..max_n, orderly generation by involution orbits.
EnumResult enumerate(const EnumJob& job);

// Same contract, no canonical machinery: generates labeled structures and
// buckets them with a backtracking isomorphism test. Only sane for small
// max_n; exists to cross-check `enumerate`.
EnumResult naive_enumerate(const EnumJob& job);

// Structures rebuilt from result.representatives.
std::vector<OrthoPoset> decode_representatives(const EnumResult& result);

// Exhaustive sweep up to n_max with the orthomodular filter; certifies
// that every representative found is a lattice.
EnumResult verify_minimality(int n_max, int jobs = 1,
                             ExtensionOrder order = ExtensionOrder::lex);

// Mechanized replay of the three-stage uniqueness argument at size 18.
EnumResult verify_uniqueness_18();

}  // namespace orthoposet
