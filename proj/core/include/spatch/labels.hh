#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spatch {

/// Control-point multi-index: n non-negative entries summing to the depth of
/// the owning net. Entry positions are cyclic.
struct Label {
  std::vector<int> s;

  Label() = default;
  explicit Label(std::vector<int> entries) : s(std::move(entries)) {}

  int n() const { return static_cast<int>(s.size()); }
  int depth() const;

  /// Cyclic accessor; any integer position is reduced mod n.
  int at(int pos) const;

  /// sigma_pos^dir: decrements entry pos, increments entry pos+dir (cyclic).
  /// dir is +1 or -1; throws if entry pos is zero.
  Label shifted(int pos, int dir) const;

  std::string str() const;  // "0,0,1,2,0"
  static Label parse(std::string_view text);

  bool operator==(const Label&) const = default;
};

/// 60-bit key, 5 bits per entry. Valid for n <= 12 and entries <= 16.
std::uint64_t pack_label(const Label&);

/// Canonical order: lexicographically descending entry tuples.
bool canonical_before(const Label& a, const Label& b);

/// All labels one shift away, deduplicated, in canonical order.
std::vector<Label> label_neighbors(const Label&);

/// j-th point on boundary side `side` (0-based): entry side = d-j,
/// entry side+1 = j, 0 <= j <= d.
Label boundary_label(int side, int j, int n, int d);

/// The n labels of boundary panel (side, j), 0 <= j <= d-1. Starts at
/// boundary_label(side, j); element k is produced by forward shifts at
/// positions side, side+1, ..., side+k-1. One further shift returns to the
/// start.
std::vector<Label> panel_labels(int side, int j, int n, int d);

enum class LabelClass { Boundary, PanelRing, Free };

/// Boundary: some adjacent entry pair sums to the depth. PanelRing: the
/// maximal adjacent pair sum is depth-1. Free: everything else; these are
/// the interior solver's unknowns. Boundary plus ring is exactly the union
/// of all boundary panels.
LabelClass classify_label(const Label&);

/// Enumerates all of L_{n,d} in canonical order with ordinal lookup.
/// Supported sizes: 3 <= n <= 12, 1 <= d <= 16.
class LabelIndex {
 public:
  LabelIndex(int n, int d);

  int n() const { return n_; }
  int depth() const { return d_; }
  int size() const { return count_; }

  Label label(int ordinal) const;
  int entry(int ordinal, int pos) const { return flat_[static_cast<std::size_t>(ordinal) * n_ + pos]; }

  int ordinal(const Label&) const;  // throws if the label is not in L_{n,d}
  int find(const Label&) const;     // -1 if absent

 private:
  int n_ = 0, d_ = 0, count_ = 0;
  std::vector<std::int8_t> flat_;
  std::unordered_map<std::uint64_t, std::int32_t> ordinals_;
};

}  // namespace spatch
