#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <type_traits>
#include <vector>

namespace vknot {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free determinant. Each step pivots on the nonzero candidate
/// with the fewest terms; T needs ring operations, is_zero(), term_count()
/// and an exact_div(T, T) found by argument-dependent lookup.
template <class T>
T bareiss_det(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (best == n || m[r][k].term_count() < m[best][k].term_count())) best = r;
    if (best == n) return T(0);
    if (best != k) {
      std::swap(m[best], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(std::move(v), prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Index subsets of {0..n-1} of the given size in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > n) return out;
  std::vector<std::size_t> cur(size);
  for (std::size_t i = 0; i < size; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = size;
    while (i > 0 && cur[i - 1] == n - size + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
}

/// Runs body(i) for i in [0, count) on a small thread pool.
template <class F>
void parallel_for(std::size_t count, F body) {
  const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    });
  for (auto& t : pool) t.join();
}

/// All size x size minors of a matrix, computed concurrently.
template <class T, class Det>
auto all_minors(const Matrix<T>& m, std::size_t size, Det det) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const auto rsets = index_subsets(rows, size), csets = index_subsets(cols, size);
  std::vector<std::invoke_result_t<Det, Matrix<T>>> out(rsets.size() * csets.size());
  parallel_for(out.size(), [&](std::size_t idx) {
    const auto& rs = rsets[idx / csets.size()];
    const auto& cs = csets[idx % csets.size()];
    Matrix<T> sub(size, std::vector<T>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) sub[i][j] = m[rs[i]][cs[j]];
    out[idx] = det(std::move(sub));
  });
  return out;
}

}  // namespace vknot
