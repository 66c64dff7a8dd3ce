#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdecomp/tournament.hpp"

namespace tdecomp {

/// Isomorphism-invariant fingerprint of a tournament.
///
/// Byte 0 is the vertex count. The remaining bytes pack, most significant bit
/// first, the orientation bits of the relabelled tournament column by column:
/// for j = 1..n-1 and i = 0..j-1 the bit is set iff i -> j. The code is the
/// lexicographic minimum of that bit string over all n! relabellings, so the
/// code of T[{0..k-1}] is a prefix of the code of T whenever T is in
/// canonical labelling.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  int vertex_count() const { return bytes_.empty() ? 0 : bytes_.front(); }
  std::string hex() const;

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalForm {
  CanonicalCode code;
  /// order[p] is the original vertex placed at position p.
  std::vector<int> order;
};

CanonicalForm canonical_form(const Tournament& t);
CanonicalCode canonical_code(const Tournament& t);

/// The canonical representative itself: relabel(t, inverse of order).
Tournament canonical_tournament(const Tournament& t);

/// The column code of `t` under its own labelling (no minimisation).
CanonicalCode labelled_code(const Tournament& t);

/// True iff the identity labelling attains the canonical code. Aborts as soon
/// as a strictly smaller labelling prefix is found.
bool is_canonical(const Tournament& t);

bool is_isomorphic(const Tournament& a, const Tournament& b);

/// An isomorphism f from a onto b (f[v] is the image of v), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Tournament& a, const Tournament& b);

/// Sorted out-degree sequence; equal for isomorphic tournaments.
std::vector<int> score_sequence(const Tournament& t);

}  // namespace tdecomp
