#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lmi {

// Dense real matrix, row-major. Square use is the norm; rectangular shapes
// show up for eigenvector bases and compressions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Throws InvalidArgument on ragged rows or non-finite entries.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<std::vector<double>> to_rows() const;

  Matrix transpose() const;
  double frobenius() const;
  double max_abs() const;
  bool all_finite() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select(const std::vector<std::size_t>& idx) const;  // principal submatrix
  Matrix column(std::size_t j) const;
  void set_column(std::size_t j, const Matrix& v);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix sym_part(const Matrix& a);
Matrix skew_part(const Matrix& a);
Matrix block_diag(const Matrix& a, const Matrix& b);
double dot_columns(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j);

// LU with partial pivoting. Throw Singular when a pivot underflows
// rel_tol * max|A|.
Matrix solve(const Matrix& a, const Matrix& b, double rel_tol = 1e-14);
Matrix inverse(const Matrix& a, double rel_tol = 1e-14);
double determinant(const Matrix& a);

// Triangular solves for T lower triangular.
Matrix solve_lower(const Matrix& t, const Matrix& b);
Matrix solve_lower_transposed(const Matrix& t, const Matrix& b);  // Tᵀ X = B

}  // namespace lmi
