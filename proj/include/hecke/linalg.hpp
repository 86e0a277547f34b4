#ifndef HECKE_LINALG_HPP
#define HECKE_LINALG_HPP

#include <optional>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

inline RationalMatrix mat_zero(int rows, int cols) {
  return RationalMatrix(static_cast<size_t>(rows), RationalVector(static_cast<size_t>(cols)));
}

inline RationalMatrix mat_identity(int n) {
  RationalMatrix m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RationalMatrix c(rows, RationalVector(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline RationalVector mat_apply(const RationalMatrix& a, const RationalVector& v) {
  RationalVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
  return r;
}

inline bool vec_is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Exact rank by Gauss-Jordan elimination over the rationals.
inline int mat_rank(RationalMatrix m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = m[rank][col].inverse();
    for (int j = col; j < cols; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::optional<RationalMatrix> mat_inverse(const RationalMatrix& a) {
  int n = static_cast<int>(a.size());
  RationalMatrix m = a;
  RationalMatrix inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rational f = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational g = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

/// Incremental row space with coordinate extraction: rows added in order, kept
/// alongside a reduced echelon copy so membership queries can express a vector
/// as an exact combination of the *original* rows.
class SpanBasis {
 public:
  explicit SpanBasis(int width) : width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(echelon_.size()); }
  const std::vector<RationalVector>& rows() const { return original_; }

  /// Adds a row if it enlarges the span; returns true when it did.
  bool add(const RationalVector& v) {
    RationalVector red = v;
    RationalVector combo(original_.size());
    reduce(red, combo);
    if (vec_is_zero(red)) return false;
    // normalize the new echelon row on its pivot
    int p = pivot_of(red);
    Rational inv = red[p].inverse();
    for (auto& x : red) x *= inv;
    for (auto& c : combo) c *= inv;
    // store: echelon row = inv * (v - combo·original)
    original_.push_back(v);
    combo.push_back(-inv);  // coefficients of original rows producing -echelon row
    for (auto& c : combo) c = -c;
    // now combo holds coefficients over original_ (size rank+… ) s.t. echelon = combo·original
    echelon_.push_back(std::move(red));
    echelon_combo_.push_back(std::move(combo));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const RationalVector& v) const {
    RationalVector red = v;
    RationalVector combo(original_.size());
    reduce(red, combo);
    return vec_is_zero(red);
  }

  /// Exact coordinates of v over the original rows, or nullopt if outside the span.
  std::optional<RationalVector> coordinates(const RationalVector& v) const {
    RationalVector red = v;
    RationalVector combo(original_.size());
    reduce(red, combo);
    if (!vec_is_zero(red)) return std::nullopt;
    return combo;
  }

 private:
  static int pivot_of(const RationalVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  // Subtracts echelon rows from v, accumulating the coefficients over the
  // original rows into combo (so that v_in = v_out + combo·original).
  void reduce(RationalVector& v, RationalVector& combo) const {
    for (size_t r = 0; r < echelon_.size(); ++r) {
      Rational f = v[static_cast<size_t>(pivots_[r])];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j)
        if (!echelon_[r][j].is_zero()) v[j] -= f * echelon_[r][j];
      for (size_t j = 0; j < echelon_combo_[r].size(); ++j)
        if (!echelon_combo_[r][j].is_zero()) combo[j] += f * echelon_combo_[r][j];
    }
  }

  int width_;
  std::vector<RationalVector> original_;
  std::vector<RationalVector> echelon_;
  std::vector<RationalVector> echelon_combo_;  // echelon[r] = echelon_combo_[r] · original_
  std::vector<int> pivots_;
};

}  // namespace hecke

#endif
