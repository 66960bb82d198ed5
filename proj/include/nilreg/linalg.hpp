#pragma once

#include <optional>
#include <vector>

#include "nilreg/scalar.hpp"

namespace nilreg {

/// Dense matrix over an exact field, row-major.
class ScalarMatrix {
  public:
    ScalarMatrix(Field field, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

    static ScalarMatrix identity(Field field, std::size_t n);

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(ScalarMatrix& m);

std::size_t rank(ScalarMatrix m);

Scalar determinant(ScalarMatrix m);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

}  // namespace nilreg
