#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uecsm {

using Complex = std::complex<double>;
using Vector  = std::vector<Complex>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
// Internal failure: the sorted spectra of T*T and TT* disagree, which signals
// an eigensolver problem rather than a property of the input.
struct SpectrumMismatch : Error { using Error::Error; };
struct PhaseInconsistency : Error { using Error::Error; };
struct SymmetryFailure : Error { using Error::Error; };
struct ConstructionFailure : Error { using Error::Error; };
struct NotCertified : Error { using Error::Error; };

/// Numeric policy shared by the whole pipeline.
struct Tolerances {
  double eig_residual = 1e-10;  ///< eigensolver residual bound
  double gap_rel      = 1e-8;   ///< relative gap below which singular values count as repeated
  double test_tol     = 1e-8;   ///< verdict threshold on the gram-matrix conditions
  double zero_tol     = 1e-10;  ///< gram entries below this are structural zeros

  void validate() const {
    if (!(eig_residual >= 0.0) || !(gap_rel >= 0.0) || !(test_tol >= 0.0) || !(zero_tol >= 0.0))
      throw Error("Tolerances: all fields must be nonnegative");
    if (!(gap_rel < 1.0))
      throw Error("Tolerances: gap_rel must be < 1");
  }
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense row-major complex matrix. Immutable by convention once built:
/// all algorithms below take matrices by const reference and return new values.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("Matrix: dimensions must be positive");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Builds from row lists and rejects non-finite entries; this is the
  /// validation boundary for externally supplied data.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() == 0) throw DimensionMismatch("from_rows: no rows");
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw DimensionMismatch("from_rows: ragged rows");
      std::size_t j = 0;
      for (Complex z : row) {
        if (!is_finite(z)) throw NotFinite("from_rows: non-finite entry");
        m(i, j++) = z;
      }
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }

  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, std::span<const Complex> v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Complex trace() const {
    if (!square()) throw DimensionMismatch("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("multiply: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "add");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "subtract");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend Matrix operator*(Complex s, const Matrix& a) {
    Matrix c = a;
    for (auto& z : c.data_) z *= s;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DimensionMismatch(std::string(op) + ": shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline Matrix conj_entrywise(const Matrix& m) {
  Matrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = std::conj(m(i, j));
  return c;
}

inline Matrix adjoint(const Matrix& m) {
  Matrix a(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(j, i) = std::conj(m(i, j));
  return a;
}

/// T + c*I without forming an identity matrix.
inline Matrix add_scaled_identity(const Matrix& m, Complex c) {
  if (!m.square()) throw DimensionMismatch("add_scaled_identity: matrix not square");
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += c;
  return r;
}

inline Vector operator*(const Matrix& m, std::span<const Complex> x) {
  if (m.cols() != x.size()) throw DimensionMismatch("matvec: dimensions differ");
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

inline Vector operator*(const Matrix& m, const Vector& x) {
  return m * std::span<const Complex>(x);
}

/// <x, y> = sum_k x_k * conj(y_k); linear in the first argument.
inline Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner: lengths differ");
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

inline double norm2(std::span<const Complex> x) {
  double s = 0.0;
  for (Complex z : x) s += std::norm(z);
  return std::sqrt(s);
}

/// Max-abs entry norm; the residual norm used throughout.
inline double max_abs(const Matrix& m) {
  double r = 0.0;
  for (Complex z : m.entries()) r = std::max(r, std::abs(z));
  return r;
}

/// ||M - M^t||_max; zero exactly when M is complex symmetric.
inline double symmetry_residual(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("symmetry_residual: matrix not square");
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      r = std::max(r, std::abs(m(i, j) - m(j, i)));
  return r;
}

/// ||M*M - I||_max.
inline double unitarity_residual(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("unitarity_residual: matrix not square");
  const std::size_t n = m.rows();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < n; ++k) g += std::conj(m(k, i)) * m(k, j);
      if (i == j) g -= 1.0;
      r = std::max(r, std::abs(g));
    }
  }
  return r;
}

inline void check_finite(const Matrix& m, const char* what) {
  for (Complex z : m.entries())
    if (!is_finite(z)) throw NotFinite(std::string(what) + ": non-finite entry");
}

}  // namespace uecsm
