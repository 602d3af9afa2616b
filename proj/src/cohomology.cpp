#include "prodrec/cohomology.hpp"

#include <sstream>

namespace prodrec {

namespace {

// Stored degree pairs: 1 <= k <= l, k + l <= 6.
const std::vector<std::pair<int, int>> kStoredPairs = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4}, {3, 3}};

int koszul_sign(int k, int l) {
    return (k * l) % 2 == 0 ? 1 : -1;
}

} // namespace

void GradedRing::set_betti(const std::array<int, 7>& b) {
    for (int x : b)
        if (x < 0)
            throw DimensionMismatch("negative rank");
    betti_ = b;
}

bool GradedRing::torsion_free() const {
    for (const auto& t : torsion_)
        if (!t.empty())
            return false;
    return true;
}

int GradedRing::top_degree() const {
    for (int k = 6; k >= 0; --k)
        if (betti_[k] > 0)
            return k;
    return 0;
}

bool GradedRing::has_tensor(int k, int l) const {
    return cup_.count({k, l}) > 0;
}

const CupTensor& GradedRing::tensor(int k, int l) const {
    auto it = cup_.find({k, l});
    if (it == cup_.end())
        throw DimensionMismatch("no structure constants for degree pair (" +
                                std::to_string(k) + "," + std::to_string(l) + ")");
    return it->second;
}

CupTensor& GradedRing::tensor_mut(int k, int l) {
    auto it = cup_.find({k, l});
    if (it == cup_.end())
        throw DimensionMismatch("no structure constants for degree pair");
    return it->second;
}

void GradedRing::init_tensors() {
    cup_.clear();
    for (auto [k, l] : kStoredPairs)
        cup_[{k, l}] = CupTensor(betti_[k], betti_[l], betti_[k + l]);
}

IntVector GradedRing::cup_basis(int k, int l, int i, int j) const {
    if (k + l > 6)
        throw DimensionMismatch("cup product beyond top degree");
    IntVector out(betti_[k + l]);
    if (k == 0 || l == 0)
        throw DimensionMismatch("cup_basis is for positive degrees");
    if (k <= l) {
        const CupTensor& t = tensor(k, l);
        for (int s = 0; s < t.bout; ++s)
            out[s] = t.at(i, j, s);
    } else {
        const CupTensor& t = tensor(l, k);
        const int sign = koszul_sign(k, l);
        for (int s = 0; s < t.bout; ++s)
            out[s] = sign * t.at(j, i, s);
    }
    return out;
}

IntVector GradedRing::cup(int k, int l, const IntVector& x, const IntVector& y) const {
    if (k + l > 6)
        throw DimensionMismatch("cup product beyond top degree");
    if (static_cast<int>(x.size()) != betti_[k] || static_cast<int>(y.size()) != betti_[l])
        throw DimensionMismatch("cup operand length mismatch");
    if (k == 0)
        return scale(x.empty() ? Int(0) : x[0], y);
    if (l == 0)
        return scale(y.empty() ? Int(0) : y[0], x);
    IntVector out(betti_[k + l]);
    const bool flip = k > l;
    const CupTensor& t = flip ? tensor(l, k) : tensor(k, l);
    const int sign = flip ? koszul_sign(k, l) : 1;
    for (int i = 0; i < betti_[k]; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < betti_[l]; ++j) {
            if (y[j] == 0)
                continue;
            Int c = sign * x[i] * y[j];
            for (int s = 0; s < t.bout; ++s) {
                const Int& v = flip ? t.at(j, i, s) : t.at(i, j, s);
                if (v != 0)
                    out[s] += c * v;
            }
        }
    }
    return out;
}

Int GradedRing::evaluate(const IntVector& top_class) const {
    if (top_class.size() != eval_.size())
        throw DimensionMismatch("evaluation length mismatch");
    return dot(eval_, top_class);
}

Int GradedRing::triple_evaluate(const IntVector& x, const IntVector& y, const IntVector& z) const {
    return evaluate(cup(2, 4, x, cup(2, 2, y, z)));
}

std::string Violation::to_string() const {
    std::ostringstream os;
    os << axiom;
    if (!where.empty()) {
        os << " at (";
        for (size_t i = 0; i < where.size(); ++i) {
            if (i)
                os << ",";
            os << where[i];
        }
        os << ")";
    }
    if (!detail.empty())
        os << ": " << detail;
    return os.str();
}

std::vector<Violation> validate_ring(const GradedRing& r) {
    std::vector<Violation> out;
    if (r.betti(0) != 1)
        out.push_back({"unit", {}, "rank of degree 0 must be 1, got " + std::to_string(r.betti(0))});

    // Structure-constant shapes.
    for (auto [k, l] : kStoredPairs) {
        if (!r.has_tensor(k, l)) {
            out.push_back({"structure", {k, l}, "missing structure constants"});
            continue;
        }
        const CupTensor& t = r.tensor(k, l);
        if (t.bk != r.betti(k) || t.bl != r.betti(l) || t.bout != r.betti(k + l))
            out.push_back({"structure", {k, l}, "tensor shape disagrees with ranks"});
    }
    if (!out.empty())
        return out; // shape problems make the remaining checks meaningless

    // Graded commutativity within equal-degree tensors (the mixed pairs are
    // synthesized and cannot disagree).
    for (int k : {1, 2, 3}) {
        if (2 * k > 6)
            break;
        const int sign = koszul_sign(k, k);
        for (int i = 0; i < r.betti(k); ++i)
            for (int j = 0; j < r.betti(k); ++j)
                for (int s = 0; s < r.betti(2 * k); ++s)
                    if (r.tensor(k, k).at(j, i, s) != sign * r.tensor(k, k).at(i, j, s)) {
                        out.push_back({"commutativity", {k, i, j}, "sign rule violated"});
                        goto next_k;
                    }
    next_k:;
    }

    // Associativity on all basis triples of total degree <= 6.
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d1 + d2 <= 5; ++d2)
            for (int d3 = 1; d1 + d2 + d3 <= 6; ++d3)
                for (int i = 0; i < r.betti(d1); ++i)
                    for (int j = 0; j < r.betti(d2); ++j) {
                        const IntVector xy = r.cup_basis(d1, d2, i, j);
                        for (int k = 0; k < r.betti(d3); ++k) {
                            const IntVector lhs =
                                r.cup(d1 + d2, d3, xy, unit_vector(r.betti(d3), k));
                            const IntVector yz =
                                r.cup_basis(d2, d3, j, k);
                            const IntVector rhs =
                                r.cup(d1, d2 + d3, unit_vector(r.betti(d1), i), yz);
                            if (lhs != rhs) {
                                out.push_back({"associativity", {d1, d2, d3, i, j, k}, ""});
                                if (out.size() > 20)
                                    return out;
                            }
                        }
                    }

    // Orientation: the top class evaluates onto the integers.
    const int top = r.top_degree();
    if (static_cast<int>(r.eval_vector().size()) != r.betti(top))
        out.push_back({"orientation", {top}, "evaluation vector length mismatch"});
    else if (top > 0 && r.betti(top) == 1) {
        const Int& e = r.eval_vector()[0];
        if (e != 1 && e != -1)
            out.push_back({"orientation", {top}, "top class evaluates to " + e.get_str()});
    }
    return out;
}

GradedRing surface_ring(int genus) {
    if (genus < 1)
        throw GenusZero("surface genus must be >= 1");
    GradedRing r;
    r.set_betti({1, 2 * genus, 1, 0, 0, 0, 0});
    r.init_tensors();
    CupTensor& t = r.tensor_mut(1, 1);
    for (int i = 0; i < genus; ++i) {
        t.at(i, genus + i, 0) = 1;
        t.at(genus + i, i, 0) = -1;
    }
    r.set_eval({Int(1)});
    return r;
}

ManifoldData product_manifold_data(const IntMatrix& gram, int genus) {
    if (genus < 1)
        throw GenusZero("surface genus must be >= 1");
    const int r = gram.rows();
    const int tg = 2 * genus;
    ManifoldData d;
    d.genus = genus;
    GradedRing& ring = d.ring;
    ring.set_betti({1, tg, r + 1, tg * r, r + 1, tg, 1});
    ring.init_tensors();

    // Degree bases: H1 = t_k; H2 = e_0..e_{r-1}, f; H3 = t_k e_i at k*r + i;
    // H4 = m, then e_i f at 1 + i; H5 = m t_k; H6 = m f.
    auto omega = [&](int k, int l) -> int {
        if (k < genus && l == k + genus)
            return 1;
        if (l < genus && k == l + genus)
            return -1;
        return 0;
    };

    CupTensor& c11 = ring.tensor_mut(1, 1);
    for (int k = 0; k < tg; ++k)
        for (int l = 0; l < tg; ++l)
            c11.at(k, l, r) = omega(k, l);

    CupTensor& c12 = ring.tensor_mut(1, 2);
    for (int k = 0; k < tg; ++k)
        for (int i = 0; i < r; ++i)
            c12.at(k, i, k * r + i) = 1;

    CupTensor& c13 = ring.tensor_mut(1, 3);
    for (int k = 0; k < tg; ++k)
        for (int l = 0; l < tg; ++l)
            for (int i = 0; i < r; ++i)
                c13.at(k, l * r + i, 1 + i) = omega(k, l);

    CupTensor& c14 = ring.tensor_mut(1, 4);
    for (int k = 0; k < tg; ++k)
        c14.at(k, 0, k) = 1;

    CupTensor& c15 = ring.tensor_mut(1, 5);
    for (int k = 0; k < tg; ++k)
        for (int l = 0; l < tg; ++l)
            c15.at(k, l, 0) = omega(k, l);

    CupTensor& c22 = ring.tensor_mut(2, 2);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            c22.at(i, j, 0) = gram(i, j);
    for (int i = 0; i < r; ++i) {
        c22.at(i, r, 1 + i) = 1;
        c22.at(r, i, 1 + i) = 1;
    }

    CupTensor& c23 = ring.tensor_mut(2, 3);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < tg; ++k)
            for (int j = 0; j < r; ++j)
                c23.at(i, k * r + j, k) = gram(i, j);

    CupTensor& c24 = ring.tensor_mut(2, 4);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            c24.at(i, 1 + j, 0) = gram(i, j);
    c24.at(r, 0, 0) = 1;

    CupTensor& c33 = ring.tensor_mut(3, 3);
    for (int k = 0; k < tg; ++k)
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < tg; ++l)
                for (int j = 0; j < r; ++j)
                    c33.at(k * r + i, l * r + j, 0) = Int(omega(k, l)) * gram(i, j);

    ring.set_eval({Int(1)});

    d.u1 = IntMatrix::identity(tg);
    d.f = unit_vector(r + 1, r);
    d.w2.assign(r + 1, 0);
    Int det = determinant(gram);
    if (det == 1 || det == -1) {
        auto cv = characteristic_vector(IntegralForm(gram));
        for (int i = 0; i < r; ++i)
            d.w2[i] = cv[i];
    }
    d.p1.assign(r + 1, 0);
    d.p1[r] = 3 * inertia(gram).signature();
    d.action.assign(tg, IntMatrix::identity(r));
    d.cover_h2_rank = r;
    return d;
}

ManifoldData kunneth_product(const IntegralForm& s, int genus) {
    if (!s.is_unimodular())
        throw NotUnimodular("Kunneth candidate requires a unimodular form");
    return product_manifold_data(s.gram(), genus);
}

QuotientData quotient_by_f(const GradedRing& ring, const IntVector& f) {
    if (static_cast<int>(f.size()) != ring.betti(2))
        throw DimensionMismatch("f must live in degree 2");
    QuotientData q;
    q.basis_change = extend_primitive_to_basis(f);
    IntMatrix inv = inverse_unimodular(q.basis_change);
    q.projection = inv.row_slice(1, inv.rows());
    q.lift = q.basis_change.columns(1, q.basis_change.cols());
    return q;
}

IntegralForm triple_form(const GradedRing& ring, const IntVector& f, const QuotientData& q) {
    const int b2 = ring.betti(2);
    for (int i = 0; i < b2; ++i) {
        Int v = ring.triple_evaluate(f, f, unit_vector(b2, i));
        if (v != 0)
            throw IllDefined("<f cup f cup e_" + std::to_string(i) + ", [N]> = " + v.get_str());
    }
    const int r = q.quotient_rank();
    IntMatrix gram(r, r);
    std::vector<IntVector> lifts(r);
    for (int i = 0; i < r; ++i)
        lifts[i] = q.lift.col(i);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            gram(i, j) = ring.triple_evaluate(f, lifts[i], lifts[j]);
            gram(j, i) = gram(i, j);
        }
    return IntegralForm(gram);
}

IntMatrix poincare_pairing(const GradedRing& ring, int k) {
    if (k < 0 || k > 6)
        throw DimensionMismatch("degree out of range");
    if (!ring.torsion(k).empty() || !ring.torsion(6 - k).empty())
        throw TorsionPresent("duality pairing requires torsion-free degrees " +
                             std::to_string(k) + " and " + std::to_string(6 - k));
    if (static_cast<int>(ring.eval_vector().size()) != ring.betti(6))
        throw Error("ring has no degree-6 evaluation");
    IntMatrix m(ring.betti(k), ring.betti(6 - k));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            IntVector prod = ring.cup(k, 6 - k, unit_vector(ring.betti(k), i),
                                      unit_vector(ring.betti(6 - k), j));
            m(i, j) = ring.evaluate(prod);
        }
    return m;
}

long euler_characteristic(const GradedRing& ring) {
    long chi = 0;
    for (int k = 0; k <= 6; ++k)
        chi += (k % 2 == 0 ? 1 : -1) * ring.betti(k);
    return chi;
}

} // namespace prodrec
