#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

#include "ffpair/rational.hpp"

namespace ffpair {

// Dense row-major N x N matrix. N is 2 or 4 throughout the project.
template <typename T, std::size_t N>
class SquareMatrix {
 public:
  using value_type = T;
  static constexpr std::size_t size = N;

  SquareMatrix() { data_.fill(T(0)); }

  static SquareMatrix zero() { return SquareMatrix(); }
  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }
  static SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * N + col]; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const T& s) { return a *= s; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.data_ == b.data_; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j && !((*this)(i, j) == T(0))) return false;
    return true;
  }

  std::size_t nonzeros_in_row(std::size_t row) const {
    std::size_t count = 0;
    for (std::size_t j = 0; j < N; ++j)
      if (!((*this)(row, j) == T(0))) ++count;
    return count;
  }

 private:
  std::array<T, N * N> data_;
};

using Complex = std::complex<double>;
using Matrix2 = SquareMatrix<Complex, 2>;
using Matrix4 = SquareMatrix<Complex, 4>;
using ExactMatrix2 = SquareMatrix<GaussianRational, 2>;
using ExactMatrix4 = SquareMatrix<GaussianRational, 4>;

// (A (x) B)_{(i1 i2),(j1 j2)} = A_{i1 j1} B_{i2 j2}
template <typename T>
SquareMatrix<T, 4> kronecker_product(const SquareMatrix<T, 2>& a, const SquareMatrix<T, 2>& b) {
  SquareMatrix<T, 4> out;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) out(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

template <std::size_t N>
double max_abs_difference(const SquareMatrix<Complex, N>& a, const SquareMatrix<Complex, N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

template <std::size_t N>
SquareMatrix<Complex, N> to_complex(const SquareMatrix<GaussianRational, N>& m) {
  SquareMatrix<Complex, N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

}  // namespace ffpair
