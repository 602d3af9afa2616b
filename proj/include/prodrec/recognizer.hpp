#ifndef PRODREC_RECOGNIZER_HPP
#define PRODREC_RECOGNIZER_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "prodrec/cohomology.hpp"
#include "prodrec/forms.hpp"

namespace prodrec {

enum class Condition {
    C1,        // fundamental group / classifying map structure
    C2,        // trivial action on H_2 of the cover
    C3,        // I(N) unimodular, spin signature 0 mod 16
    C4,        // no ring isomorphism compatible with clauses (i)-(iv)
    C4i,       // orientation clause of the ring isomorphism
    C4ii,      // compatibility with u*
    C4iii,     // second Stiefel-Whitney class
    C4iv,      // first Pontrjagin pairings
    RingAxioms,
    Torsion,
    Orientation,
};

std::string condition_name(Condition c);

/// Witness-carrying pass/fail result of a single condition check.
struct CheckOutcome {
    bool passed = true;
    std::string witness;
};

CheckOutcome check_condition1(const ManifoldData& d);
CheckOutcome check_condition2(const ManifoldData& d);
CheckOutcome check_condition3(const IntegralForm& i_n, const std::vector<uint8_t>& w2);

/// Graded pieces of a ring map in degrees 0..6; degree[k] maps the model
/// basis into input coordinates.
struct PhiMaps {
    std::array<IntMatrix, 7> degree;
};

struct RecognizedVerdict {
    FormClass form_class;
    int genus = 0;
    PhiMaps phi;
    IntMatrix psi;
    IntVector lift_coeffs;
};

struct RejectedVerdict {
    Condition condition = Condition::C1;
    std::string witness;
};

struct InconclusiveVerdict {
    long entry_bound = 0;
    std::string note;
};

struct RecognitionReport {
    std::variant<RecognizedVerdict, RejectedVerdict, InconclusiveVerdict> verdict;
    std::vector<std::string> diagnostics;

    bool is_recognized() const { return std::holds_alternative<RecognizedVerdict>(verdict); }
    bool is_rejected() const { return std::holds_alternative<RejectedVerdict>(verdict); }
    bool is_inconclusive() const { return std::holds_alternative<InconclusiveVerdict>(verdict); }
    const RecognizedVerdict* recognized() const { return std::get_if<RecognizedVerdict>(&verdict); }
    const RejectedVerdict* rejected() const { return std::get_if<RejectedVerdict>(&verdict); }
    const InconclusiveVerdict* inconclusive() const {
        return std::get_if<InconclusiveVerdict>(&verdict);
    }
};

struct PhiSearchResult {
    enum class Kind { Found, Obstructed, Inconclusive } kind = Kind::Inconclusive;
    PhiMaps phi;
    IntMatrix psi;
    IntVector lift_coeffs;
    Condition condition = Condition::C4;
    std::string witness;
};

/// Constructs the constrained ring isomorphism phi degree by degree:
/// degree 1 is forced to u1, the degree-2 image of the surface class is
/// forced to f, and candidates for the quotient map are enumerated over the
/// automorphisms of I(N), identity first. For each candidate the lift
/// coefficients and the degree-4 image are solved from an integer linear
/// system (Pontrjagin rows, product rows, orientation row), the
/// Stiefel-Whitney constraint is imposed mod 2, and the completed maps are
/// verified multiplicative, invertible, and orientation-preserving.
PhiSearchResult search_phi(const ManifoldData& model, const ManifoldData& input,
                           const SearchBound& bound = {});

/// Full decision pipeline. Never throws on data-level failures; every
/// outcome is a verdict.
RecognitionReport recognize(const ManifoldData& d, const SearchBound& bound = {});

/// The graded ring automorphism of the product candidate induced by an
/// isometry psi of s, extended by the identity on the surface factor.
/// Verified multiplicative and orientation-preserving before return.
/// Throws NotAnIsometry.
PhiMaps realize_isometry(const IntegralForm& s, int genus, const IntMatrix& psi);

} // namespace prodrec

#endif
