#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdecomp/tournament.hpp"
#include "tdecomp/verification.hpp"

namespace tdecomp {

/// One-line text record: decimal n, a space, and the orientation bits of the
/// pairs (i, j), i < j, in lexicographic order as uppercase hex, first pair
/// in the most significant bit, zero-padded on the right to whole nibbles.
/// Bit 1 means i -> j. The record of a 1-vertex tournament is "1 ".
std::string format_record(const Tournament& t);

/// Inverse of format_record. Accepts "1" for the 1-vertex record. Rejects
/// lowercase digits, wrong lengths and nonzero padding (ParseError).
Tournament parse_record(std::string_view line);

/// Records read from a stream, skipping blank lines and lines starting with
/// '#'. A bad line raises ParseError naming its 1-based line number.
std::vector<Tournament> parse_records(std::istream& in);

/// digraph with one node per vertex labelled by its index and one edge per arc.
std::string to_dot(const Tournament& t);

struct AnalysisReport {
  int n = 0;
  bool indecomposable = false;
  std::size_t interval_count = 0;
  /// Present for indecomposable T on at least 3 vertices.
  std::optional<VertexSet> support;
  VertexSet w5;
  bool family_t = false;
  std::optional<int> c_invariant;
  std::string canonical;
};

AnalysisReport analyze(const Tournament& t);

/// key=value pairs on one line.
std::string render_text(const AnalysisReport& report);
/// One JSON object on one line with the fields n, indecomposable, support,
/// w5_set, w5_size, family_t, c_invariant, canonical.
std::string render_json(const AnalysisReport& report);

/// Human-readable lines prefixed by "# " followed by one record per
/// counterexample, so the output is itself a record stream.
std::string render_verdict(const VerdictReport& report);

}  // namespace tdecomp
