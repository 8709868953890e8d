#include "spatch/labels.hh"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "spatch/errors.hh"
#include "spatch/types.hh"

namespace spatch {

namespace {

constexpr int kMaxSides = 12;
constexpr int kMaxDepth = 16;

std::uint64_t pack_raw(const std::int8_t* e, int n) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key = (key << 5) | static_cast<std::uint64_t>(e[i]);
  return key;
}

}  // namespace

int Label::depth() const { return std::accumulate(s.begin(), s.end(), 0); }

int Label::at(int pos) const {
  int n = static_cast<int>(s.size());
  return s[((pos % n) + n) % n];
}

Label Label::shifted(int pos, int dir) const {
  int n = static_cast<int>(s.size());
  pos = ((pos % n) + n) % n;
  if (dir != 1 && dir != -1) throw std::invalid_argument("shift direction must be +1 or -1");
  if (s[pos] == 0)
    throw std::invalid_argument("shift at position " + std::to_string(pos) +
                                " not applicable to " + str() + " (entry is zero)");
  Label out = *this;
  --out.s[pos];
  ++out.s[((pos + dir) % n + n) % n];
  return out;
}

std::string Label::str() const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Label Label::parse(std::string_view text) {
  Label out;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || value < 0)
      throw ParseError("invalid label text '" + std::string(text) + "'");
    out.s.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',') throw ParseError("invalid label text '" + std::string(text) + "'");
      ++p;
      if (p == end) throw ParseError("invalid label text '" + std::string(text) + "'");
    }
  }
  if (out.s.empty()) throw ParseError("empty label text");
  return out;
}

std::uint64_t pack_label(const Label& lab) {
  std::uint64_t key = 0;
  for (int v : lab.s) key = (key << 5) | static_cast<std::uint64_t>(v);
  return key;
}

bool canonical_before(const Label& a, const Label& b) { return a.s > b.s; }

std::vector<Label> label_neighbors(const Label& lab) {
  std::vector<Label> out;
  int n = lab.n();
  out.reserve(2 * n);
  for (int p = 0; p < n; ++p) {
    if (lab.s[p] == 0) continue;
    out.push_back(lab.shifted(p, +1));
    out.push_back(lab.shifted(p, -1));
  }
  std::sort(out.begin(), out.end(), canonical_before);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Label boundary_label(int side, int j, int n, int d) {
  if (n < 3) throw std::invalid_argument("boundary_label: n must be at least 3");
  if (j < 0 || j > d)
    throw std::invalid_argument("boundary position " + std::to_string(j) + " outside [0, " +
                                std::to_string(d) + "]");
  side = ((side % n) + n) % n;
  std::vector<int> e(n, 0);
  e[side] = d - j;
  e[(side + 1) % n] += j;
  return Label(std::move(e));
}

std::vector<Label> panel_labels(int side, int j, int n, int d) {
  if (j < 0 || j > d - 1)
    throw std::invalid_argument("panel index " + std::to_string(j) + " outside [0, " +
                                std::to_string(d - 1) + "]");
  side = ((side % n) + n) % n;
  std::vector<Label> out;
  out.reserve(n);
  out.push_back(boundary_label(side, j, n, d));
  for (int k = 1; k < n; ++k) out.push_back(out.back().shifted((side + k - 1) % n, +1));
  return out;
}

LabelClass classify_label(const Label& lab) {
  int n = lab.n();
  int d = lab.depth();
  int best = 0;
  for (int i = 0; i < n; ++i) best = std::max(best, lab.s[i] + lab.s[(i + 1) % n]);
  if (best == d) return LabelClass::Boundary;
  if (best == d - 1) return LabelClass::PanelRing;
  return LabelClass::Free;
}

LabelIndex::LabelIndex(int n, int d) : n_(n), d_(d) {
  if (n < 3 || n > kMaxSides)
    throw ValidationError("label set needs 3 <= n <= " + std::to_string(kMaxSides) + ", got n = " +
                          std::to_string(n));
  if (d < 1 || d > kMaxDepth)
    throw ValidationError("label set needs 1 <= depth <= " + std::to_string(kMaxDepth) +
                          ", got depth = " + std::to_string(d));

  std::size_t expected = static_cast<std::size_t>(binomial(n + d - 1, d));
  flat_.reserve(expected * n);

  std::vector<std::int8_t> cur(n);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n_ - 1) {
      cur[pos] = static_cast<std::int8_t>(left);
      flat_.insert(flat_.end(), cur.begin(), cur.end());
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = static_cast<std::int8_t>(v);
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);

  count_ = static_cast<int>(flat_.size() / n);
  ordinals_.reserve(2 * expected);
  for (int o = 0; o < count_; ++o)
    ordinals_.emplace(pack_raw(flat_.data() + static_cast<std::size_t>(o) * n, n), o);
}

Label LabelIndex::label(int ordinal) const {
  const std::int8_t* e = flat_.data() + static_cast<std::size_t>(ordinal) * n_;
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = e[i];
  return Label(std::move(out));
}

int LabelIndex::ordinal(const Label& lab) const {
  int o = find(lab);
  if (o < 0)
    throw std::out_of_range("label " + lab.str() + " not in L_{" + std::to_string(n_) + "," +
                            std::to_string(d_) + "}");
  return o;
}

int LabelIndex::find(const Label& lab) const {
  if (lab.n() != n_) return -1;
  for (int v : lab.s)
    if (v < 0 || v > d_) return -1;
  auto it = ordinals_.find(pack_label(lab));
  return it == ordinals_.end() ? -1 : it->second;
}

}  // namespace spatch
