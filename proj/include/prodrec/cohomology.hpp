#ifndef PRODREC_COHOMOLOGY_HPP
#define PRODREC_COHOMOLOGY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "prodrec/forms.hpp"
#include "prodrec/int_matrix.hpp"

namespace prodrec {

/// Structure constants of one degree pair (k,l): the coefficient vector of
/// e_i cup e_j in the basis of degree k+l.
struct CupTensor {
    int bk = 0, bl = 0, bout = 0;
    std::vector<Int> c;

    CupTensor() = default;
    CupTensor(int bk_, int bl_, int bout_)
        : bk(bk_), bl(bl_), bout(bout_),
          c(static_cast<size_t>(bk_) * bl_ * bout_) {}

    Int& at(int i, int j, int t) {
        return c[(static_cast<size_t>(i) * bl + j) * bout + t];
    }
    const Int& at(int i, int j, int t) const {
        return c[(static_cast<size_t>(i) * bl + j) * bout + t];
    }
};

/// Finite model of a graded-commutative ring in degrees 0..6 with top-degree
/// evaluation against the fundamental class. The unit of degree 0 is
/// implicit; structure constants are stored for 1 <= k <= l and synthesized
/// for k > l by graded commutativity.
class GradedRing {
  public:
    GradedRing() { betti_.fill(0); }

    int betti(int k) const { return betti_[k]; }
    const std::array<int, 7>& betti_vector() const { return betti_; }
    void set_betti(const std::array<int, 7>& b);

    const std::vector<Int>& torsion(int k) const { return torsion_[k]; }
    void set_torsion(int k, std::vector<Int> t) { torsion_[k] = std::move(t); }
    bool torsion_free() const;

    /// Highest degree with nonzero rank (0 for the zero ring).
    int top_degree() const;

    bool has_tensor(int k, int l) const;
    const CupTensor& tensor(int k, int l) const; // requires 1 <= k <= l
    CupTensor& tensor_mut(int k, int l);
    void init_tensors(); // allocate zero tensors for all stored pairs

    /// Cup product of classes of degrees k and l (any order, k+l <= 6).
    IntVector cup(int k, int l, const IntVector& x, const IntVector& y) const;
    /// Product of two basis elements; avoids building coefficient vectors.
    IntVector cup_basis(int k, int l, int i, int j) const;

    const IntVector& eval_vector() const { return eval_; }
    void set_eval(IntVector e) { eval_ = std::move(e); }
    /// Pairing of a top-degree class with the fundamental class.
    Int evaluate(const IntVector& top_class) const;
    /// <x cup y cup z, [N]> for three degree-2 classes (top degree 6).
    Int triple_evaluate(const IntVector& x, const IntVector& y, const IntVector& z) const;

  private:
    std::array<int, 7> betti_;
    std::array<std::vector<Int>, 7> torsion_;
    std::map<std::pair<int, int>, CupTensor> cup_;
    IntVector eval_;
};

/// A named ring-axiom violation, witnessed by basis indices.
struct Violation {
    std::string axiom;
    std::vector<int> where;
    std::string detail;
    std::string to_string() const;
};

/// Checks all GradedRing invariants: unit degree, graded commutativity,
/// associativity on basis triples of total degree <= 6, and top-degree
/// orientation. Empty result means the ring is valid.
std::vector<Violation> validate_ring(const GradedRing& r);

/// Cohomology ring of a closed oriented surface of genus g >= 1, on the
/// symplectic basis a_1..a_g, b_1..b_g with a_i b_i = [F].
GradedRing surface_ring(int genus); // throws GenusZero

/// Complete recognition input: a ring together with the classifying-map and
/// bundle data of the candidate 6-manifold.
struct ManifoldData {
    GradedRing ring;
    int genus = 0;
    IntMatrix u1;                 // matrix of u* on degree 1, b1 x 2g
    IntVector f;                  // u*[F] in the degree-2 basis
    std::vector<uint8_t> w2;      // mod-2 vector, length b2
    IntVector p1;                 // <e_i cup p1, [N]> pairings, length b2
    std::vector<IntMatrix> action; // 2g matrices on H_2 of the cover
    int cover_h2_rank = 0;        // declared rank of H_2 of the cover
};

/// The Kunneth ring data of (4-manifold with intersection form gram) x
/// (genus-g surface). No unimodularity requirement; used by the fixture
/// corpus to build intentionally defective inputs as well.
ManifoldData product_manifold_data(const IntMatrix& gram, int genus); // throws GenusZero

/// Kunneth construction of the product candidate M x F for a unimodular
/// intersection form. Throws NotUnimodular, GenusZero.
ManifoldData kunneth_product(const IntegralForm& s, int genus);

/// Splitting of degree 2 along a primitive vector f: an invertible basis
/// change with first column f, the projection to the quotient V, and an
/// integral section of it.
struct QuotientData {
    IntMatrix basis_change; // b2 x b2, first column f
    IntMatrix projection;   // r x b2, kills f
    IntMatrix lift;         // b2 x r, projection * lift = identity
    int quotient_rank() const { return projection.rows(); }
};

QuotientData quotient_by_f(const GradedRing& ring, const IntVector& f); // throws NotPrimitive

/// The symmetric form (x, y) -> <f cup lift(x) cup lift(y), [N]> on the
/// quotient basis. Verifies well-definedness (<f cup f cup e_i> = 0 for all
/// basis e_i) first and throws IllDefined with the witnessing index.
IntegralForm triple_form(const GradedRing& ring, const IntVector& f, const QuotientData& q);

/// Pairing matrix <x cup y, [N]> for x of degree k, y of degree 6-k.
/// Throws TorsionPresent if either degree carries torsion.
IntMatrix poincare_pairing(const GradedRing& ring, int k);

long euler_characteristic(const GradedRing& ring);

} // namespace prodrec

#endif
