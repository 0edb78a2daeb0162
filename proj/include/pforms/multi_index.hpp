#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pforms {

/// Strictly increasing tuple of 1-based axis indices. The canonical key for
/// antisymmetric tensor components: every non-canonical index tuple is a
/// signed permutation of exactly one of these.
class MultiIndex {
public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> axes) : axes_(std::move(axes)) {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
      if (axes_[i] < 1) throw std::invalid_argument("MultiIndex: axes are 1-based");
      if (i > 0 && axes_[i] <= axes_[i - 1])
        throw std::invalid_argument("MultiIndex: axes must be strictly increasing");
    }
  }

  /// Sorts an arbitrary tuple into a canonical index and the permutation sign.
  /// A repeated entry yields sign 0 (the component is identically zero).
  static std::pair<MultiIndex, int> from_unsorted(std::vector<int> axes) {
    int sign = 1;
    // insertion sort, counting swaps
    for (std::size_t i = 1; i < axes.size(); ++i) {
      for (std::size_t j = i; j > 0 && axes[j] < axes[j - 1]; --j) {
        std::swap(axes[j], axes[j - 1]);
        sign = -sign;
      }
    }
    for (std::size_t i = 1; i < axes.size(); ++i)
      if (axes[i] == axes[i - 1]) return {MultiIndex(), 0};
    return {MultiIndex(std::move(axes)), sign};
  }

  std::size_t size() const { return axes_.size(); }
  bool empty() const { return axes_.empty(); }
  int operator[](std::size_t i) const { return axes_[i]; }
  const std::vector<int>& axes() const { return axes_; }

  bool contains(int axis) const {
    return std::binary_search(axes_.begin(), axes_.end(), axis);
  }

  int max_axis() const { return axes_.empty() ? 0 : axes_.back(); }

  /// Index with `axis` inserted, plus the sign (-1)^(entries preceding axis).
  /// Precondition: axis not already present.
  std::pair<MultiIndex, int> insert(int axis) const {
    std::vector<int> out;
    out.reserve(axes_.size() + 1);
    int sign = 1;
    std::size_t i = 0;
    for (; i < axes_.size() && axes_[i] < axis; ++i) {
      out.push_back(axes_[i]);
      sign = -sign;
    }
    out.push_back(axis);
    for (; i < axes_.size(); ++i) {
      if (axes_[i] == axis) throw std::invalid_argument("MultiIndex::insert: axis present");
      out.push_back(axes_[i]);
    }
    return {MultiIndex(std::move(out)), sign};
  }

  /// Index with `axis` removed. Precondition: axis present.
  MultiIndex erase(int axis) const {
    std::vector<int> out;
    out.reserve(axes_.size() - 1);
    bool found = false;
    for (int a : axes_) {
      if (a == axis) {
        found = true;
        continue;
      }
      out.push_back(a);
    }
    if (!found) throw std::invalid_argument("MultiIndex::erase: axis absent");
    return MultiIndex(std::move(out));
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.axes_ == b.axes_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.axes_.size() != b.axes_.size()) return a.axes_.size() < b.axes_.size();
    return a.axes_ < b.axes_;
  }

private:
  std::vector<int> axes_;
};

/// Sign of the shuffle merging two disjoint increasing indices I and J into
/// sorted(I u J): (-1)^(number of pairs i in I, j in J with i > j).
inline int shuffle_sign(const MultiIndex& a, const MultiIndex& b) {
  int inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == b[j]) return 0;
      if (a[i] > b[j]) ++inversions;
    }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Merged index sorted(I u J) together with the shuffle sign; sign 0 when the
/// indices overlap (and the merged index is then empty and meaningless).
inline std::pair<MultiIndex, int> merge_indices(const MultiIndex& a, const MultiIndex& b) {
  int sign = shuffle_sign(a, b);
  if (sign == 0) return {MultiIndex(), 0};
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.axes().begin(), a.axes().end(), b.axes().begin(), b.axes().end(),
             std::back_inserter(merged));
  return {MultiIndex(std::move(merged)), sign};
}

/// All strictly increasing r-tuples from 1..n, in lexicographic order.
inline std::vector<MultiIndex> all_multi_indices(int n, int r) {
  std::vector<MultiIndex> out;
  if (r < 0 || n < 0 || r > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur);
    if (r == 0) break;
    int i = r - 1;
    while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Sign of the permutation taking (1..r) to `perm` (a permutation of 0-based
/// positions); 0 if entries repeat.
inline int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] == perm[j]) return 0;
      if (perm[i] > perm[j]) sign = -sign;
    }
  return sign;
}

/// n!/(r!(n-r)!) for 0 <= r <= n, else 0. Negative arguments are rejected.
inline long long alt_dimension(long long n, long long r) {
  if (n < 0 || r < 0) throw std::invalid_argument("alt_dimension: negative argument");
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  long long v = 1;
  for (long long i = 0; i < r; ++i) {
    if (v > (std::int64_t{1} << 62) / (n - i))
      throw std::overflow_error("alt_dimension: result does not fit 64 bits");
    v = v * (n - i) / (i + 1);
  }
  return v;
}

}  // namespace pforms
