#include "prodrec/int_matrix.hpp"

#include <sstream>

namespace prodrec {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionMismatch("matrix dimensions must be nonnegative");
    e_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionMismatch("ragged initializer");
        for (long x : r)
            e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(const IntVector& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i)
        m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Int& IntMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionMismatch("index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const Int& IntMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionMismatch("index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix p(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != static_cast<int>(v.size()))
        throw DimensionMismatch("matrix-vector shape mismatch");
    IntVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] + other.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] - other.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = -e_[i];
    return r;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

IntVector IntMatrix::row(int i) const {
    IntVector r(cols_);
    for (int j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

IntVector IntMatrix::col(int j) const {
    IntVector c(rows_);
    for (int i = 0; i < rows_; ++i)
        c[i] = at(i, j);
    return c;
}

void IntMatrix::set_row(int i, const IntVector& v) {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("row length mismatch");
    for (int j = 0; j < cols_; ++j)
        at(i, j) = v[j];
}

void IntMatrix::set_col(int j, const IntVector& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw DimensionMismatch("column length mismatch");
    for (int i = 0; i < rows_; ++i)
        at(i, j) = v[i];
}

void IntMatrix::swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    for (int k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

IntMatrix IntMatrix::columns(int c0, int c1) const {
    if (c0 < 0 || c1 < c0 || c1 > cols_)
        throw DimensionMismatch("bad column range");
    IntMatrix m(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j)
            m.at(i, j - c0) = at(i, j);
    return m;
}

IntMatrix IntMatrix::row_slice(int r0, int r1) const {
    if (r0 < 0 || r1 < r0 || r1 > rows_)
        throw DimensionMismatch("bad row range");
    IntMatrix m(r1 - r0, cols_);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(i - r0, j) = at(i, j);
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j)
                os << ' ';
            os << at(i, j);
        }
        if (i + 1 < rows_)
            os << '\n';
    }
    return os.str();
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot product length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector sum length mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector difference length mismatch");
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVector scale(const Int& c, const IntVector& v) {
    IntVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

IntVector negate(const IntVector& v) {
    return scale(-1, v);
}

bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

Int content(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector unit_vector(int n, int k) {
    IntVector v(n);
    v[k] = 1;
    return v;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ' ';
        os << v[i];
    }
    return os.str();
}

} // namespace prodrec
