#include "tdecomp/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "tdecomp/canonical.hpp"
#include "tdecomp/decomposition.hpp"
#include "tdecomp/error.hpp"
#include "tdecomp/w5.hpp"

namespace tdecomp {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

std::string format_record(const Tournament& t) {
  const int n = t.size();
  std::string hex;
  int nibble = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      nibble = (nibble << 1) | (t.arc(i, j) ? 1 : 0);
      if (++filled == 4) {
        hex.push_back(kHexDigits[nibble]);
        nibble = filled = 0;
      }
    }
  }
  if (filled > 0) hex.push_back(kHexDigits[nibble << (4 - filled)]);
  return std::to_string(n) + " " + hex;
}

Tournament parse_record(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  const std::size_t space = line.find(' ');
  const std::string_view count = line.substr(0, space);
  int n = 0;
  const auto [end, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || end != count.data() + count.size() || count.empty()) {
    parse_error("bad vertex count '" + std::string(count) + "'");
  }
  if (n < 1 || n > 64) parse_error("vertex count must be in 1..64");
  const std::string_view hex = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (hex.size() != (bits + 3) / 4) {
    parse_error("expected " + std::to_string((bits + 3) / 4) + " hex digits for n=" + std::to_string(n) + ", got " +
                std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const int digit = hex_value(hex[k / 4]);
      if (digit < 0) parse_error(std::string("bad hex digit '") + hex[k / 4] + "'");
      if ((digit >> (3 - k % 4)) & 1) {
        out[i] |= std::uint64_t{1} << j;
      } else {
        out[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bits % 4 != 0) {
    const int digit = hex_value(hex.back());
    if (digit < 0) parse_error(std::string("bad hex digit '") + hex.back() + "'");
    if (digit & ((1 << (4 - bits % 4)) - 1)) parse_error("nonzero padding bits");
  }
  return Tournament::from_out_masks(std::move(out));
}

std::vector<Tournament> parse_records(std::istream& in) {
  std::vector<Tournament> records;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      records.push_back(parse_record(line));
    } catch (const Error& e) {
      parse_error("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return records;
}

std::string to_dot(const Tournament& t) {
  std::ostringstream os;
  os << "digraph T {\n";
  for (int v = 0; v < t.size(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (int x = 0; x < t.size(); ++x) {
    for (int y : t.out(x)) os << "  " << x << " -> " << y << ";\n";
  }
  os << "}\n";
  return os.str();
}

AnalysisReport analyze(const Tournament& t) {
  AnalysisReport report;
  report.n = t.size();
  report.indecomposable = is_indecomposable(t);
  report.interval_count = nontrivial_intervals(t).size();
  if (report.indecomposable && report.n >= 3) report.support = support(t);
  report.w5 = w5_vertices(t);
  report.family_t = is_family_t_member(t);
  if (report.family_t) report.c_invariant = c_invariant(t);
  report.canonical = canonical_code(t).hex();
  return report;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " indecomposable=" << (r.indecomposable ? "true" : "false")
     << " intervals=" << r.interval_count << " support=" << (r.support ? r.support->to_string() : "-")
     << " w5_size=" << r.w5.size() << " w5_set=" << r.w5.to_string()
     << " family_t=" << (r.family_t ? "true" : "false")
     << " c_invariant=" << (r.c_invariant ? std::to_string(*r.c_invariant) : "-") << " canonical=" << r.canonical;
  return os.str();
}

std::string render_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["indecomposable"] = r.indecomposable;
  j["support"] = r.support ? nlohmann::ordered_json(r.support->to_vector()) : nlohmann::ordered_json(nullptr);
  j["w5_set"] = r.w5.to_vector();
  j["w5_size"] = r.w5.size();
  j["family_t"] = r.family_t;
  j["c_invariant"] = r.c_invariant ? nlohmann::ordered_json(*r.c_invariant) : nlohmann::ordered_json(nullptr);
  j["canonical"] = r.canonical;
  return j.dump();
}

std::string render_verdict(const VerdictReport& r) {
  std::ostringstream os;
  os << "# theorem=" << r.theorem << " n=" << r.n_min;
  if (r.n_max != r.n_min) os << ".." << r.n_max;
  os << " verdict=" << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& [name, value] : r.counts) os << "# count " << name << " = " << value << "\n";
  for (const auto& code : r.classes) os << "# class " << code.hex() << "\n";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    os << "# counterexample: " << r.counterexample_notes[i] << "\n" << format_record(r.counterexamples[i]) << "\n";
  }
  return os.str();
}

}  // namespace tdecomp
