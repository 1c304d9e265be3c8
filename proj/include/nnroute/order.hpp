#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nnroute {

/// A qubit order: pos[q] is the physical location of qubit q on the linear
/// array. Both qubits and locations are 0-based; pos is a bijection onto
/// {0, ..., n-1}. The inverse view (location -> qubit) is derived on demand.
struct QubitOrder {
  std::vector<int> pos;

  QubitOrder() = default;
  explicit QubitOrder(std::vector<int> p) : pos(std::move(p)) {}

  int n() const { return static_cast<int>(pos.size()); }

  static QubitOrder identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return QubitOrder(std::move(p));
  }

  bool is_permutation() const {
    std::vector<char> seen(pos.size(), 0);
    for (int v : pos) {
      if (v < 0 || v >= n() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  /// location -> qubit
  std::vector<int> inverse() const {
    std::vector<int> inv(pos.size());
    for (int q = 0; q < n(); ++q) inv[pos[q]] = q;
    return inv;
  }

  friend bool operator==(const QubitOrder& x, const QubitOrder& y) { return x.pos == y.pos; }
  friend bool operator!=(const QubitOrder& x, const QubitOrder& y) { return x.pos != y.pos; }
  friend bool operator<(const QubitOrder& x, const QubitOrder& y) { return x.pos < y.pos; }
};

/// An adjacent transposition: swap the contents of locations `location` and
/// `location + 1` (0-based, so location is in [0, n-2]).
struct SwapStep {
  int location = 0;
};

inline void check_same_size(const QubitOrder& a, const QubitOrder& b) {
  if (a.n() != b.n()) throw std::invalid_argument("qubit orders of different size");
}

/// Kendall tau distance, reference implementation: count qubit pairs whose
/// relative order differs between a and b. O(n^2).
inline std::int64_t kendall_tau_naive(const QubitOrder& a, const QubitOrder& b) {
  check_same_size(a, b);
  const int n = a.n();
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((a.pos[i] < a.pos[j]) != (b.pos[i] < b.pos[j])) ++count;
  return count;
}

namespace detail {

// Counts inversions of v in place via merge sort.
inline std::int64_t merge_count(std::vector<int>& v, std::vector<int>& tmp, int lo, int hi) {
  if (hi - lo <= 1) return 0;
  const int mid = lo + (hi - lo) / 2;
  std::int64_t inv = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  int i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      tmp[k++] = v[i++];
    } else {
      inv += mid - i;
      tmp[k++] = v[j++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return inv;
}

}  // namespace detail

/// Kendall tau distance via merge-sort inversion counting, O(n log n).
/// Relabels so that a becomes the identity, then counts inversions of b.
inline std::int64_t kendall_tau(const QubitOrder& a, const QubitOrder& b) {
  check_same_size(a, b);
  const int n = a.n();
  std::vector<int> v(n);
  for (int q = 0; q < n; ++q) v[a.pos[q]] = b.pos[q];
  std::vector<int> tmp(n);
  return detail::merge_count(v, tmp, 0, n);
}

inline std::int64_t max_kendall_tau(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// Exchange the qubits sitting at locations step.location and step.location+1.
inline QubitOrder apply_swap(const QubitOrder& order, SwapStep step) {
  if (step.location < 0 || step.location + 1 >= order.n())
    throw std::invalid_argument("swap location out of range");
  QubitOrder out = order;
  int qa = -1, qb = -1;
  for (int q = 0; q < order.n(); ++q) {
    if (order.pos[q] == step.location) qa = q;
    if (order.pos[q] == step.location + 1) qb = q;
  }
  out.pos[qa] = step.location + 1;
  out.pos[qb] = step.location;
  return out;
}

/// Minimal sequence of adjacent transpositions turning a into b, produced by
/// bubble sort. Ties resolve to the leftmost out-of-place adjacent pair, so
/// the result is deterministic. Length always equals kendall_tau(a, b).
inline std::vector<SwapStep> realize_swaps(const QubitOrder& a, const QubitOrder& b) {
  check_same_size(a, b);
  const int n = a.n();
  // v[loc] = target location (under b) of the qubit currently at loc under a.
  std::vector<int> v(n);
  for (int q = 0; q < n; ++q) v[a.pos[q]] = b.pos[q];
  std::vector<SwapStep> steps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int l = 0; l + 1 < n; ++l) {
      if (v[l] > v[l + 1]) {
        std::swap(v[l], v[l + 1]);
        steps.push_back(SwapStep{l});
        moved = true;
        break;  // restart at the leftmost pair
      }
    }
  }
  return steps;
}

}  // namespace nnroute
