#pragma once

// Canonical labeling for bounded posets, optionally carrying an involution
// and a marked element set. Two structures get equal byte strings exactly
// when an isomorphism exists that fixes bottom and top, commutes with the
// involution, and preserves the mark. Carrier size is capped at 64 so rows
// fit in one word.

#include <cstdint>
#include <vector>

#include "orthoposet/ortho.hpp"

namespace orthoposet {

struct CanonicalResult {
  std::vector<std::uint8_t> bytes;
  // element index -> canonical position; bottom lands at 0, top at n-1.
  std::vector<int> positions;
};

CanonicalResult canonical_form_full(const Poset& p, const Involution* inv = nullptr,
                                    const Subset* marked = nullptr);

std::vector<std::uint8_t> canonical_form(const Poset& p);
std::vector<std::uint8_t> canonical_form(const Poset& p, const Involution& inv);
std::vector<std::uint8_t> canonical_form_marked(const Poset& p, const Involution& inv,
                                                const Subset& marked);

std::string to_hex(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

struct DecodedForm {
  Poset poset;
  std::optional<Involution> involution;
};

// Inverse of the encoding, for checkpoint files.
DecodedForm decode_canonical(const std::vector<std::uint8_t>& bytes);

}  // namespace orthoposet
