#ifndef PRODREC_INT_MATRIX_HPP
#define PRODREC_INT_MATRIX_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "prodrec/errors.hpp"

namespace prodrec {

// All integer arithmetic in this project is arbitrary precision.
using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    static IntMatrix column(const IntVector& v);
    static IntMatrix diagonal(const IntVector& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(int i, int j);
    const Int& at(int i, int j) const;
    Int& operator()(int i, int j) { return at(i, j); }
    const Int& operator()(int i, int j) const { return at(i, j); }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_identity() const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    IntVector row(int i) const;
    IntVector col(int j) const;
    void set_row(int i, const IntVector& v);
    void set_col(int j, const IntVector& v);
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    /// Columns [c0, c1) as a new matrix.
    IntMatrix columns(int c0, int c1) const;
    /// Rows [r0, r1) as a new matrix.
    IntMatrix row_slice(int r0, int r1) const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// Small vector helpers used throughout.
Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Int& c, const IntVector& v);
IntVector negate(const IntVector& v);
bool is_zero(const IntVector& v);
Int content(const IntVector& v); // gcd of entries, 0 for the zero vector
IntVector unit_vector(int n, int k);
std::string to_string(const IntVector& v);

} // namespace prodrec

#endif
