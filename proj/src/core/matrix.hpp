#pragma once

#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace tsa {

// Minimal dense row-major matrix. The networks in this project are small
// enough that plain loops beat pulling in a linear-algebra dependency.
struct Matrix {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int64_t r, int64_t c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r * c), fill) {
    check(r >= 0 && c >= 0, ErrorCode::InvalidArgument, "matrix: negative shape");
  }

  double& at(int64_t r, int64_t c) { return data[static_cast<size_t>(r * cols + c)]; }
  double at(int64_t r, int64_t c) const { return data[static_cast<size_t>(r * cols + c)]; }

  static Matrix identity(int64_t n) {
    Matrix m(n, n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static Matrix ones(int64_t r, int64_t c) { return Matrix(r, c, 1.0); }
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  check(a.cols == b.rows, ErrorCode::Dimension, "matrix multiply: inner dimensions differ");
  Matrix out(a.rows, b.cols);
  for (int64_t i = 0; i < a.rows; ++i) {
    for (int64_t k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int64_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

// diag(scale) * m, i.e. row i of m multiplied by scale[i].
inline Matrix scale_rows(const std::vector<double>& scale, const Matrix& m) {
  check(static_cast<int64_t>(scale.size()) == m.rows, ErrorCode::Dimension,
        "scale_rows: scale length does not match row count");
  Matrix out = m;
  for (int64_t i = 0; i < m.rows; ++i) {
    for (int64_t j = 0; j < m.cols; ++j) {
      out.at(i, j) *= scale[static_cast<size_t>(i)];
    }
  }
  return out;
}

// Dense binary matrix, used for spike-train inputs.
struct BinaryMatrix {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<uint8_t> data;

  BinaryMatrix() = default;
  BinaryMatrix(int64_t r, int64_t c, uint8_t fill = 0)
      : rows(r), cols(c), data(static_cast<size_t>(r * c), fill) {
    check(r >= 0 && c >= 0, ErrorCode::InvalidArgument, "binary matrix: negative shape");
  }

  uint8_t& at(int64_t r, int64_t c) { return data[static_cast<size_t>(r * cols + c)]; }
  uint8_t at(int64_t r, int64_t c) const { return data[static_cast<size_t>(r * cols + c)]; }

  // Column slice [first, last], inclusive.
  BinaryMatrix slice_cols(int64_t first, int64_t last) const {
    check(first >= 0 && first <= last && last < cols, ErrorCode::InvalidArgument,
          "binary matrix: slice out of range");
    BinaryMatrix out(rows, last - first + 1);
    for (int64_t r = 0; r < rows; ++r) {
      for (int64_t c = first; c <= last; ++c) {
        out.at(r, c - first) = at(r, c);
      }
    }
    return out;
  }
};

}  // namespace tsa
