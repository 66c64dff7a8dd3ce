#include "tdecomp/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace tdecomp {

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string s;
  s.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

namespace {

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

// Column p of a labelling holds the bits [order[i] -> order[p]] for i < p,
// the bit of i = 0 being the most significant. Comparing codes
// lexicographically is the same as comparing the column values in turn.
//
// Only the vertices whose pending column is minimal can extend a minimal
// prefix, so each level branches over the ties of the minimum.
class MinimalLabelling {
 public:
  explicit MinimalLabelling(const Tournament& t) : t_(t), n_(t.size()) {
    best_.fill(kUnset);
    order_.resize(static_cast<std::size_t>(n_));
    best_order_.resize(static_cast<std::size_t>(n_));
  }

  // Full search for the minimal labelling.
  void run() {
    std::array<std::uint64_t, 64> pending{};
    search(0, t_.vertices(), pending, false);
  }

  // Returns false as soon as some labelling beats `reference`.
  bool cannot_beat(const std::array<std::uint64_t, 64>& reference) {
    best_ = reference;
    check_only_ = true;
    std::array<std::uint64_t, 64> pending{};
    search(0, t_.vertices(), pending, false);
    return !beaten_;
  }

  const std::array<std::uint64_t, 64>& columns() const { return best_; }
  const std::vector<int>& order() const { return best_order_; }

 private:
  void search(int depth, VertexSet remaining, std::array<std::uint64_t, 64>& pending, bool improved) {
    if (beaten_) return;
    if (depth == n_) {
      if (improved || !have_leaf_) {
        best_order_ = order_;
        have_leaf_ = true;
      }
      return;
    }
    std::uint64_t low = kUnset;
    for (int v : remaining) low = std::min(low, pending[v]);
    if (low > best_[depth]) return;
    if (low < best_[depth]) {
      if (check_only_) {
        beaten_ = true;
        return;
      }
      best_[depth] = low;
      for (int d = depth + 1; d < n_; ++d) best_[d] = kUnset;
      improved = true;
    }
    for (int v : remaining) {
      if (pending[v] != low) continue;
      order_[depth] = v;
      const VertexSet rest = remaining.without(v);
      std::array<std::uint64_t, 64> next;
      const std::uint64_t beats = t_.out(v).bits();
      for (int w : rest) next[w] = (pending[w] << 1) | ((beats >> w) & 1U);
      search(depth + 1, rest, next, improved);
      if (beaten_) return;
      // After the first completed branch the prefix up to `depth` already
      // matches the best, so siblings are only an improvement if strictly
      // smaller deeper down.
      improved = false;
    }
  }

  const Tournament& t_;
  int n_;
  std::array<std::uint64_t, 64> best_{};
  std::vector<int> order_;
  std::vector<int> best_order_;
  bool have_leaf_ = false;
  bool check_only_ = false;
  bool beaten_ = false;
};

std::array<std::uint64_t, 64> identity_columns(const Tournament& t) {
  std::array<std::uint64_t, 64> cols{};
  for (int p = 1; p < t.size(); ++p) {
    std::uint64_t c = 0;
    for (int i = 0; i < p; ++i) c = (c << 1) | (t.arc(i, p) ? 1U : 0U);
    cols[p] = c;
  }
  return cols;
}

CanonicalCode pack(int n, const std::array<std::uint64_t, 64>& cols) {
  std::vector<std::uint8_t> bytes;
  const int bits = n * (n - 1) / 2;
  bytes.reserve(1 + static_cast<std::size_t>((bits + 7) / 8));
  bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int filled = 0;
  for (int p = 1; p < n; ++p) {
    for (int i = p - 1; i >= 0; --i) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((cols[p] >> i) & 1U));
      if (++filled == 8) {
        bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return CanonicalCode(std::move(bytes));
}

}  // namespace

CanonicalForm canonical_form(const Tournament& t) {
  if (t.size() == 0) return {CanonicalCode({0}), {}};
  MinimalLabelling search(t);
  search.run();
  return {pack(t.size(), search.columns()), search.order()};
}

CanonicalCode canonical_code(const Tournament& t) { return canonical_form(t).code; }

Tournament canonical_tournament(const Tournament& t) {
  const CanonicalForm form = canonical_form(t);
  std::vector<int> position(form.order.size());
  for (std::size_t p = 0; p < form.order.size(); ++p) position[form.order[p]] = static_cast<int>(p);
  return relabel(t, position);
}

CanonicalCode labelled_code(const Tournament& t) { return pack(t.size(), identity_columns(t)); }

bool is_canonical(const Tournament& t) {
  if (t.size() <= 1) return true;
  MinimalLabelling search(t);
  return search.cannot_beat(identity_columns(t));
}

std::vector<int> score_sequence(const Tournament& t) {
  std::vector<int> scores;
  scores.reserve(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) scores.push_back(t.out(v).size());
  std::sort(scores.begin(), scores.end());
  return scores;
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size()) return false;
  if (score_sequence(a) != score_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<int>> find_isomorphism(const Tournament& a, const Tournament& b) {
  if (a.size() != b.size() || score_sequence(a) != score_sequence(b)) return std::nullopt;
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (fa.code != fb.code) return std::nullopt;
  std::vector<int> f(static_cast<std::size_t>(a.size()));
  for (std::size_t p = 0; p < fa.order.size(); ++p) f[fa.order[p]] = fb.order[p];
  return f;
}

}  // namespace tdecomp
