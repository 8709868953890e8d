#include "spatch/types.hh"

#include <array>
#include <limits>
#include <stdexcept>

namespace spatch {

namespace {

constexpr int kMaxBinomialRow = 40;

// Pascal's triangle; every entry up to row 40 is below 2^53, so exact.
const std::array<std::array<double, kMaxBinomialRow + 1>, kMaxBinomialRow + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<double, kMaxBinomialRow + 1>, kMaxBinomialRow + 1> t{};
    for (int n = 0; n <= kMaxBinomialRow; ++n) {
      t[n][0] = 1.0;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
    }
    return t;
  }();
  return table;
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n > kMaxBinomialRow) throw std::invalid_argument("binomial: n exceeds supported range");
  return pascal()[n][k];
}

double bounding_box_diagonal(const std::vector<Point3>& pts) {
  if (pts.empty()) return 0.0;
  Point3 lo = pts.front(), hi = pts.front();
  for (const Point3& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

}  // namespace spatch
