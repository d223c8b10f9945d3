#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "u2u/errors.hpp"

namespace u2u {

/// Dense row-major matrix. Vectors are represented as 1 x n.
template <typename T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(size_t(r) * size_t(c), T(0)) {}

  T* row(int i) { return data.data() + size_t(i) * cols; }
  const T* row(int i) const { return data.data() + size_t(i) * cols; }
  T& operator()(int i, int j) { return data[size_t(i) * cols + j]; }
  T operator()(int i, int j) const { return data[size_t(i) * cols + j]; }

  size_t size() const { return data.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  template <typename U>
  Mat<U> cast() const {
    Mat<U> out(rows, cols);
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = U(data[i]);
    return out;
  }
};

using MatF = Mat<float>;
using MatD = Mat<double>;

/// Runs fn over [0, n) split into contiguous chunks. threads <= 1 runs inline;
/// results are identical either way for row-partitioned kernels.
inline void parallel_for(int n, int threads,
                         const std::function<void(int, int)>& fn) {
  if (threads <= 1 || n < 2 * threads) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& th : pool) th.join();
}

namespace detail {

template <typename T>
void check_mm(int ar, int ac, int br, int bc, int cr, int cc) {
  if (ac != br || cr != ar || cc != bc)
    throw ShapeMismatch("matmul shape mismatch");
}

}  // namespace detail

/// out = a * b
template <typename T>
void matmul_nn(const Mat<T>& a, const Mat<T>& b, Mat<T>& out, int threads = 1) {
  detail::check_mm<T>(a.rows, a.cols, b.rows, b.cols, out.rows, out.cols);
  parallel_for(a.rows, threads, [&](int i0, int i1) {
    for (int i = i0; i < i1; ++i) {
      T* ci = out.row(i);
      std::fill(ci, ci + out.cols, T(0));
      const T* ai = a.row(i);
      for (int k = 0; k < a.cols; ++k) {
        const T aik = ai[k];
        const T* bk = b.row(k);
        for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
      }
    }
  });
}

/// out = a * b^T
template <typename T>
void matmul_nt(const Mat<T>& a, const Mat<T>& b, Mat<T>& out, int threads = 1) {
  detail::check_mm<T>(a.rows, a.cols, b.cols, b.rows, out.rows, out.cols);
  parallel_for(a.rows, threads, [&](int i0, int i1) {
    for (int i = i0; i < i1; ++i) {
      const T* ai = a.row(i);
      T* ci = out.row(i);
      for (int j = 0; j < b.rows; ++j) {
        const T* bj = b.row(j);
        T acc = 0;
        for (int k = 0; k < a.cols; ++k) acc += ai[k] * bj[k];
        ci[j] = acc;
      }
    }
  });
}

/// out (+)= a^T * b, where a is (p x m) and b is (p x n).
template <typename T>
void matmul_tn(const Mat<T>& a, const Mat<T>& b, Mat<T>& out, bool accumulate = false,
               int threads = 1) {
  detail::check_mm<T>(a.cols, a.rows, b.rows, b.cols, out.rows, out.cols);
  if (!accumulate) out.fill(T(0));
  // Column-partitioned so threads never write the same output row.
  parallel_for(out.rows, threads, [&](int i0, int i1) {
    for (int k = 0; k < a.rows; ++k) {
      const T* ak = a.row(k);
      const T* bk = b.row(k);
      for (int i = i0; i < i1; ++i) {
        const T aki = ak[i];
        T* ci = out.row(i);
        for (int j = 0; j < b.cols; ++j) ci[j] += aki * bk[j];
      }
    }
  });
}

template <typename T>
void add_inplace(Mat<T>& a, const Mat<T>& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("add shape mismatch");
  for (size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
}

}  // namespace u2u
