#include "prodrec/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace prodrec {

int SmithResult::rank() const {
    int r = 0;
    int n = std::min(s.rows(), s.cols());
    for (int i = 0; i < n; ++i)
        if (s(i, i) != 0)
            ++r;
    return r;
}

namespace {

Int abs_int(const Int& x) {
    return x < 0 ? Int(-x) : x;
}

// Position of a nonzero entry of smallest absolute value in a[t.., t..],
// or nullopt if that block is zero.
std::optional<std::pair<int, int>> smallest_pivot(const IntMatrix& a, int t) {
    std::optional<std::pair<int, int>> best;
    Int best_abs = 0;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            Int v = abs_int(a(i, j));
            if (!best || v < best_abs) {
                best = {{i, j}};
                best_abs = v;
            }
        }
    return best;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        auto piv = smallest_pivot(a, t);
        if (!piv)
            break;
        a.swap_rows(t, piv->first);
        u.swap_rows(t, piv->first);
        a.swap_cols(t, piv->second);
        v.swap_cols(t, piv->second);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Clear the pivot column.
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (int j = 0; j < a.cols(); ++j) {
                        a(i, j) -= q * a(t, j);
                    }
                for (int j = 0; j < u.cols(); ++j)
                    u(i, j) -= q * u(t, j);
                if (a(i, t) != 0) {
                    // Remainder smaller than pivot: promote it and restart.
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            // Clear the pivot row.
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0)
                    for (int i = 0; i < a.rows(); ++i)
                        a(i, j) -= q * a(i, t);
                for (int i = 0; i < v.rows(); ++i)
                    v(i, j) -= q * v(i, t);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Enforce divisibility: fold any non-multiple into the pivot row.
            for (int i = t + 1; i < a.rows() && clean; ++i)
                for (int j = t + 1; j < a.cols() && clean; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        for (int k = 0; k < a.cols(); ++k)
                            a(t, k) += a(i, k);
                        for (int k = 0; k < u.cols(); ++k)
                            u(t, k) += u(i, k);
                        clean = false;
                    }
                }
        }
        if (a(t, t) < 0) {
            for (int j = 0; j < a.cols(); ++j)
                a(t, j) = -a(t, j);
            for (int j = 0; j < u.cols(); ++j)
                u(t, j) = -u(t, j);
        }
    }
    return {u, a, v};
}

Inertia inertia(const IntMatrix& g) {
    if (!g.is_square() || !g.is_symmetric())
        throw NotSymmetric("inertia requires a symmetric matrix");
    const int n = g.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(g(i, j));

    std::vector<bool> done(n, false);
    Inertia result;
    int remaining = n;

    while (remaining > 0) {
        // Prefer a nonzero diagonal pivot.
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) {
                p = i;
                break;
            }
        if (p >= 0) {
            const Rat d = a[p][p];
            if (d > 0)
                ++result.n_plus;
            else
                ++result.n_minus;
            done[p] = true;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (done[i] || a[i][p] == 0)
                    continue;
                const Rat f = a[i][p] / d;
                for (int j = 0; j < n; ++j)
                    if (!done[j])
                        a[i][j] -= f * a[p][j];
                a[i][p] = 0;
            }
            for (int j = 0; j < n; ++j)
                a[p][j] = 0;
            continue;
        }
        // All remaining diagonal entries vanish; use a hyperbolic 2x2 block.
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i) {
            if (done[i])
                continue;
            for (int j = i + 1; j < n; ++j)
                if (!done[j] && a[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi < 0) {
            result.n_zero += remaining;
            break;
        }
        // Block [[0, b], [b, 0]] contributes one +1 and one -1. Eliminate the
        // rest by its Schur complement:
        //   a'(i,j) = a(i,j) - (a(i,bi)a(j,bj) + a(i,bj)a(j,bi)) / b.
        const Rat b = a[bi][bj];
        ++result.n_plus;
        ++result.n_minus;
        done[bi] = done[bj] = true;
        remaining -= 2;
        std::vector<Rat> ci(n), cj(n);
        for (int i = 0; i < n; ++i) {
            ci[i] = a[i][bi];
            cj[i] = a[i][bj];
        }
        for (int i = 0; i < n; ++i) {
            if (done[i])
                continue;
            for (int j = 0; j < n; ++j) {
                if (done[j])
                    continue;
                a[i][j] -= (ci[i] * cj[j] + cj[i] * ci[j]) / b;
            }
        }
        for (int i = 0; i < n; ++i) {
            a[i][bi] = a[i][bj] = 0;
            a[bi][i] = a[bj][i] = 0;
        }
    }
    return result;
}

IntMatrix extend_primitive_to_basis(const IntVector& f) {
    if (f.empty() || is_zero(f))
        throw NotPrimitive("vector is zero");
    if (content(f) != 1)
        throw NotPrimitive("gcd of entries is " + content(f).get_str());
    const int n = static_cast<int>(f.size());
    // Smith of the column: u * f * v = (1, 0, ..., 0)^T with v = (+-1).
    SmithResult sr = smith_normal_form(IntMatrix::column(f));
    // f = u^{-1} * e1 * v^{-1}; since v is 1x1 = +-1, u^{-1} * (v^{-1} e1)
    // has first column +-f. Build p = u^{-1}, fix the sign.
    IntMatrix p = inverse_unimodular(sr.u);
    if (sr.v(0, 0) < 0)
        for (int i = 0; i < n; ++i)
            p(i, 0) = -p(i, 0);
    // First column now equals f exactly.
    for (int i = 0; i < n; ++i)
        if (p(i, 0) != f[i])
            throw Error("internal: basis extension failed");
    return p;
}

IntegerSolution solve_with_nullspace(const IntMatrix& a, const IntVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("right-hand side length mismatch");
    SmithResult sr = smith_normal_form(a);
    const int n = std::min(a.rows(), a.cols());
    IntVector c = sr.u * b;
    IntVector y(a.cols(), 0);
    IntegerSolution out;
    for (int i = 0; i < a.rows(); ++i) {
        if (i < n && sr.s(i, i) != 0) {
            if (c[i] % sr.s(i, i) != 0)
                return out; // divisibility certificate fails
            y[i] = c[i] / sr.s(i, i);
        } else if (c[i] != 0) {
            return out;
        }
    }
    out.solvable = true;
    out.particular = sr.v * y;
    for (int j = 0; j < a.cols(); ++j)
        if (j >= n || sr.s(j, j) == 0)
            out.nullspace.push_back(sr.v.col(j));
    return out;
}

std::optional<IntVector> solve_integer_linear(const IntMatrix& a, const IntVector& b) {
    IntegerSolution s = solve_with_nullspace(a, b);
    if (!s.solvable)
        return std::nullopt;
    return s.particular;
}

std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve shape mismatch");
    IntMatrix x(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto xj = solve_integer_linear(a, b.col(j));
        if (!xj)
            return std::nullopt;
        x.set_col(j, *xj);
    }
    return x;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square())
        throw NotSquare("unimodularity requires a square matrix");
    Int d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (!u.is_square())
        throw NotUnimodular("not square");
    SmithResult sr = smith_normal_form(u);
    if (!sr.s.is_identity())
        throw NotUnimodular("matrix is not invertible over the integers");
    // u_smith * u * v_smith = I  =>  u^{-1} = v_smith * u_smith.
    return sr.v * sr.u;
}

std::optional<std::vector<uint8_t>> solve_mod2(const IntMatrix& a, const std::vector<uint8_t>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("mod-2 system shape mismatch");
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<uint8_t>> m(rows, std::vector<uint8_t>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            m[i][j] = static_cast<uint8_t>(mpz_odd_p(a(i, j).get_mpz_t()) ? 1 : 0);
        m[i][cols] = b[i] & 1;
    }
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][j]) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[r], m[p]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][j])
                for (int k = j; k <= cols; ++k)
                    m[i][k] ^= m[r][k];
        pivot_col_of_row.push_back(j);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (m[i][cols])
            return std::nullopt;
    std::vector<uint8_t> x(cols, 0);
    for (int i = 0; i < r; ++i)
        x[pivot_col_of_row[i]] = m[i][cols];
    return x;
}

} // namespace prodrec
