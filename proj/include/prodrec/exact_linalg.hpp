#ifndef PRODREC_EXACT_LINALG_HPP
#define PRODREC_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "prodrec/int_matrix.hpp"

namespace prodrec {

/// Smith decomposition u*m*v = s with u, v unimodular and s diagonal,
/// nonnegative, with d1 | d2 | ... along the diagonal.
struct SmithResult {
    IntMatrix u, s, v;
    int rank() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Signature data of a symmetric form: counts of positive, negative, and
/// zero eigenvalue signs of the real extension.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    int signature() const { return n_plus - n_minus; }
    int rank() const { return n_plus + n_minus + n_zero; }
    bool operator==(const Inertia&) const = default;
};

/// Exact inertia of a symmetric integer matrix, computed by rational
/// symmetric elimination with 1x1 and 2x2 pivot blocks. No floating point.
/// Throws NotSymmetric.
Inertia inertia(const IntMatrix& g);

/// Returns a unimodular matrix whose first column is f, provided gcd of the
/// entries of f is 1 (throws NotPrimitive otherwise). The remaining columns
/// represent a basis of the quotient lattice Z^n / <f>.
IntMatrix extend_primitive_to_basis(const IntVector& f);

/// Integer solution x of a*x = b via the Smith form, or nullopt when no
/// integer solution exists. Throws DimensionMismatch.
std::optional<IntVector> solve_integer_linear(const IntMatrix& a, const IntVector& b);

/// General integer solve with solution lattice: a*(particular + nullspace*y) = b
/// for all integer y. solvable == false means no integer solution exists.
struct IntegerSolution {
    bool solvable = false;
    IntVector particular;
    std::vector<IntVector> nullspace;
};

IntegerSolution solve_with_nullspace(const IntMatrix& a, const IntVector& b);

/// Columnwise integer solve of a*X = b; nullopt if any column has no solution.
std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination). Throws NotSquare.
Int determinant(const IntMatrix& m);

/// True iff the determinant is +1 or -1. The 0x0 matrix is unimodular.
/// Throws NotSquare.
bool is_unimodular(const IntMatrix& m);

/// Inverse of a unimodular matrix, exact over the integers.
/// Throws NotUnimodular.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// One solution of a*x = b over the field with two elements, or nullopt if
/// inconsistent. Entries of a and b are taken mod 2.
std::optional<std::vector<uint8_t>> solve_mod2(const IntMatrix& a, const std::vector<uint8_t>& b);

} // namespace prodrec

#endif
