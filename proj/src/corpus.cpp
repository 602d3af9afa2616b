#include "prodrec/corpus.hpp"

namespace prodrec {

std::string mutation_name(MutationKind k) {
    switch (k) {
    case MutationKind::Action:
        return "action";
    case MutationKind::Det:
        return "det";
    case MutationKind::W2:
        return "w2";
    case MutationKind::P1AtF:
        return "p1-at-f";
    case MutationKind::P1AtLattice:
        return "p1-at-lattice";
    case MutationKind::Orientation:
        return "orientation";
    case MutationKind::Torsion:
        return "torsion";
    }
    return "?";
}

MutationKind parse_mutation(const std::string& name) {
    for (MutationKind k :
         {MutationKind::Action, MutationKind::Det, MutationKind::W2, MutationKind::P1AtF,
          MutationKind::P1AtLattice, MutationKind::Orientation, MutationKind::Torsion})
        if (mutation_name(k) == name)
            return k;
    throw UnknownMutation("unknown mutation '" + name + "'");
}

Fixture product_fixture(const std::string& name, const IntegralForm& s, int genus) {
    Fixture f;
    f.name = name;
    f.data = kunneth_product(s, genus);
    f.expected.kind = Expected::Kind::Recognized;
    f.expected.rank = s.rank();
    f.expected.signature = s.signature();
    f.expected.parity = s.parity();
    f.expected.genus = genus;
    return f;
}

std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    const IntegralForm one = unit_form(1);
    const IntegralForm h = hyperbolic_form();
    const IntegralForm k3 =
        block_sum({e8_form(false), e8_form(false), hyperbolic_form(), hyperbolic_form(),
                   hyperbolic_form()});

    out.push_back(product_fixture("cp2_torus", one, 1));
    out.back().note = "complex projective plane x torus";
    out.push_back(product_fixture("cp2_genus2", one, 2));
    out.push_back(product_fixture("cp2_genus3", one, 3));
    out.push_back(product_fixture("s2s2_torus", h, 1));
    out.back().note = "sphere product x torus";
    out.push_back(product_fixture("s2s2_genus2", h, 2));
    out.push_back(product_fixture("k3_torus", k3, 1));
    out.back().note = "K3 surface x torus; <f cup p1> = -48";
    out.push_back(product_fixture("s4_genus2", empty_form(), 2));
    out.back().note = "4-sphere x genus-2 surface";

    // Sphere-bundle ring with nonzero w2: same ring as the trivial bundle,
    // distinguished exactly by the Stiefel-Whitney clause.
    {
        Fixture f = product_fixture("s4bundle_w2", empty_form(), 2);
        f.data.w2.back() = 1;
        f.expected = {Expected::Kind::Rejected, Condition::C4iii, 0, 0, Parity::Even, 2};
        f.note = "nontrivial 4-sphere bundle: w2 != 0";
        out.push_back(f);
    }
    // Spin ring whose form has signature 8: smoothability proxy fails.
    {
        Fixture f = product_fixture("e8_spin_torus", e8_form(true), 1);
        f.expected = {Expected::Kind::Rejected, Condition::C3, 0, 0, Parity::Even, 1};
        f.note = "spin, sign I(N) = 8, not 0 mod 16";
        out.push_back(f);
    }
    out.push_back(mutate(product_fixture("cp2_torus", one, 1), MutationKind::Action));
    out.back().name = "action_twist";
    out.push_back(mutate(product_fixture("cp2_torus", one, 1), MutationKind::Det));
    out.back().name = "det2_ring";
    out.push_back(mutate(product_fixture("cp2_torus", one, 1), MutationKind::P1AtLattice));
    out.back().name = "p1_perturbed";
    return out;
}

Fixture mutate(const Fixture& base, MutationKind kind) {
    Fixture f = base;
    f.name = base.name + "__" + mutation_name(kind);
    f.expected.kind = Expected::Kind::Rejected;
    f.expected.genus = base.data.genus;
    switch (kind) {
    case MutationKind::Action: {
        if (f.data.cover_h2_rank < 1)
            throw Error("action mutation needs a nontrivial cover lattice");
        f.data.action[0] = -IntMatrix::identity(f.data.cover_h2_rank);
        f.expected.condition = Condition::C2;
        break;
    }
    case MutationKind::Det: {
        // Rebuild the ring over the doubled Gram: every triple product
        // scales, all ring axioms survive, unimodularity of I(N) does not.
        const int r = f.data.cover_h2_rank;
        QuotientData q = quotient_by_f(base.data.ring, base.data.f);
        IntegralForm i_n = triple_form(base.data.ring, base.data.f, q);
        IntMatrix doubled(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                doubled(i, j) = 2 * i_n.gram()(i, j);
        ManifoldData rebuilt = product_manifold_data(doubled, base.data.genus);
        rebuilt.w2 = base.data.w2;
        rebuilt.p1 = base.data.p1;
        f.data = rebuilt;
        f.expected.condition = Condition::C3;
        break;
    }
    case MutationKind::W2: {
        if (f.data.w2.empty() || f.data.ring.betti(2) < 2)
            throw Error("w2 mutation needs rank >= 1");
        f.data.w2[0] ^= 1;
        f.expected.condition = Condition::C4iii;
        break;
    }
    case MutationKind::P1AtF: {
        // Shift the pairing against f by 1: <f cup p1> != 3 sign.
        Int shift = 0;
        for (size_t i = 0; i < f.data.p1.size(); ++i)
            if (f.data.f[i] != 0) {
                f.data.p1[i] += 1;
                shift = f.data.f[i];
                break;
            }
        if (shift == 0)
            throw Error("p1-at-f mutation needs a nonzero f");
        f.expected.condition = Condition::C4iv;
        break;
    }
    case MutationKind::P1AtLattice: {
        if (f.data.ring.betti(2) < 2)
            throw Error("p1-at-lattice mutation needs rank >= 1");
        f.data.p1[0] += 1;
        f.expected.condition = Condition::C4iv;
        break;
    }
    case MutationKind::Orientation: {
        f.data.ring.set_eval(negate(f.data.ring.eval_vector()));
        f.expected.condition = Condition::Orientation;
        break;
    }
    case MutationKind::Torsion: {
        f.data.ring.set_torsion(3, {Int(2)});
        f.expected.condition = Condition::Torsion;
        break;
    }
    }
    return f;
}

ManifoldData change_h2_basis(const ManifoldData& d, const IntMatrix& u) {
    const int b2 = d.ring.betti(2);
    if (u.rows() != b2 || u.cols() != b2)
        throw DimensionMismatch("basis change must be b2 x b2");
    IntMatrix uinv = inverse_unimodular(u);
    ManifoldData out = d;
    GradedRing& ring = out.ring;

    // New basis vectors are the columns of u (in old coordinates); classes
    // transform by u^{-1}, pairings by u^T.
    const GradedRing& old = d.ring;
    CupTensor& c22 = ring.tensor_mut(2, 2);
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < b2; ++j) {
            IntVector prod = old.cup(2, 2, u.col(i), u.col(j));
            for (int s = 0; s < old.betti(4); ++s)
                c22.at(i, j, s) = prod[s];
        }
    CupTensor& c12 = ring.tensor_mut(1, 2);
    for (int k = 0; k < old.betti(1); ++k)
        for (int i = 0; i < b2; ++i) {
            IntVector prod = old.cup(1, 2, unit_vector(old.betti(1), k), u.col(i));
            for (int s = 0; s < old.betti(3); ++s)
                c12.at(k, i, s) = prod[s];
        }
    CupTensor& c23 = ring.tensor_mut(2, 3);
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < old.betti(3); ++j) {
            IntVector prod = old.cup(2, 3, u.col(i), unit_vector(old.betti(3), j));
            for (int s = 0; s < old.betti(5); ++s)
                c23.at(i, j, s) = prod[s];
        }
    CupTensor& c24 = ring.tensor_mut(2, 4);
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < old.betti(4); ++j) {
            IntVector prod = old.cup(2, 4, u.col(i), unit_vector(old.betti(4), j));
            for (int s = 0; s < old.betti(6); ++s)
                c24.at(i, j, s) = prod[s];
        }
    out.f = uinv * d.f;
    IntVector w2_lift(b2);
    for (int i = 0; i < b2; ++i)
        w2_lift[i] = d.w2[i];
    IntVector w2_new = uinv * w2_lift;
    for (int i = 0; i < b2; ++i)
        out.w2[i] = static_cast<uint8_t>(mpz_odd_p(w2_new[i].get_mpz_t()) ? 1 : 0);
    out.p1 = u.transpose() * d.p1;
    return out;
}

} // namespace prodrec
