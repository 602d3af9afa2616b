#ifndef PRODREC_CORPUS_HPP
#define PRODREC_CORPUS_HPP

#include <string>
#include <vector>

#include "prodrec/recognizer.hpp"

namespace prodrec {

enum class MutationKind {
    Action,      // one deck-transformation generator acts by -identity
    Det,         // triple products scaled: I(N) loses unimodularity
    W2,          // w2 replaced by a non-characteristic vector
    P1AtF,       // <f cup p1> off by one
    P1AtLattice, // p1 perturbed on a lattice vector
    Orientation, // fundamental-class evaluation negated
    Torsion,     // invariant factor 2 injected in degree 3
};

std::string mutation_name(MutationKind k);
MutationKind parse_mutation(const std::string& name); // throws UnknownMutation

/// What recognize() is expected to return on a fixture.
struct Expected {
    enum class Kind { Recognized, Rejected } kind = Kind::Recognized;
    Condition condition = Condition::C1; // for Rejected
    int rank = 0, signature = 0;         // for Recognized
    Parity parity = Parity::Even;
    int genus = 0;
};

struct Fixture {
    std::string name;
    ManifoldData data;
    Expected expected;
    std::string note;
};

/// Canonical corpus: the positive product examples and the named negative
/// examples, self-validating against recognize().
std::vector<Fixture> standard_fixtures();

/// A positive product fixture for an arbitrary named form.
Fixture product_fixture(const std::string& name, const IntegralForm& s, int genus);

/// Applies exactly one structured violation to a positive fixture and sets
/// the expected rejection code. Throws UnknownMutation for bad kinds.
Fixture mutate(const Fixture& base, MutationKind kind);

/// Rewrites all degree-2 data of a manifold in the basis given by the
/// columns of u (unimodular): cup tensors, f, w2, p1. Used for invariance
/// testing: the data describes the same ring in new coordinates.
ManifoldData change_h2_basis(const ManifoldData& d, const IntMatrix& u);

} // namespace prodrec

#endif
