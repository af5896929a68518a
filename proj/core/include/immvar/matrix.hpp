#pragma once

#include "immvar/errors.hpp"
#include "immvar/mvpoly.hpp"
#include "immvar/rational.hpp"

#include <vector>

namespace immvar {

// Dense row-major matrix over an exact entry ring; access is 1-based to match
// the index conventions everywhere else.
template <typename R> class Matrix {
public:
  Matrix(int rows, int cols, const R& fill = R())
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 1 || cols < 1) throw InvalidArgumentError("Matrix: dimensions must be positive");
  }

  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw InvalidArgumentError("Matrix: empty row list");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size())
        throw InvalidArgumentError("Matrix: ragged rows");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& at(int i, int j) {
    check(i, j);
    return data_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j - 1)];
  }
  const R& at(int i, int j) const {
    check(i, j);
    return data_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j - 1)];
  }

private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw InvalidArgumentError("Matrix: index out of range");
  }

  int rows_, cols_;
  std::vector<R> data_;
};

// Variable list a_1_1 .. a_n_k of the generic n x k matrix, row-major.
VarsPtr generic_vars(int n, int k);

// The generic matrix A with A(i,j) the variable a_i_j.
Matrix<MVPoly> generic_matrix(int n, int k);

} // namespace immvar
