#ifndef PRODREC_FORMS_HPP
#define PRODREC_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prodrec/exact_linalg.hpp"
#include "prodrec/int_matrix.hpp"

namespace prodrec {

enum class Parity { Even, Odd };

std::string parity_name(Parity p);

/// A symmetric integral bilinear form given by its Gram matrix, with cached
/// determinant, inertia, and parity.
class IntegralForm {
  public:
    explicit IntegralForm(IntMatrix gram); // throws NotSymmetric

    const IntMatrix& gram() const { return gram_; }
    int rank() const { return gram_.rows(); }
    const Int& determinant() const { return det_; }
    const Inertia& inertia() const { return inertia_; }
    int signature() const { return inertia_.signature(); }
    Parity parity() const { return parity_; }
    bool is_even() const { return parity_ == Parity::Even; }
    bool is_unimodular() const { return det_ == 1 || det_ == -1; }
    bool is_definite() const;

    bool operator==(const IntegralForm& o) const { return gram_ == o.gram_; }

  private:
    IntMatrix gram_;
    Int det_;
    Inertia inertia_;
    Parity parity_;
};

// Standard building blocks. e8_form(true) is the positive definite form on
// the usual root diagram basis (2 on the diagonal, -1 on diagram edges).
IntegralForm unit_form(int sign);
IntegralForm hyperbolic_form();
IntegralForm e8_form(bool positive = true);
IntegralForm empty_form();
IntegralForm block_sum(const std::vector<IntegralForm>& parts);

/// Parses "<1>", "<-1>", "H", "E8", "-E8" joined by '+', e.g.
/// "-E8+-E8+H+H+H". Throws Error on malformed input.
IntegralForm parse_form_spec(const std::string& spec);

/// Classification verdict of a unimodular form.
struct FormClass {
    enum class Kind { Empty, OddIndefinite, EvenIndefinite, Definite };
    Kind kind = Kind::Empty;
    // Odd indefinite: p<1> + q<-1>. Even indefinite: a*E8 + b*H, a may be
    // negative (orientation of the E8 summands).
    int p = 0, q = 0, a = 0, b = 0;
    IntMatrix gram; // representative; for Definite this is the input Gram
    int rank = 0;
    int signature = 0;
    Parity parity = Parity::Even;

    std::string name() const;
    /// Lowercase machine token, e.g. "odd_indefinite(1,1)".
    std::string token() const;
};

/// Classifies a unimodular form: indefinite forms by rank/signature/parity,
/// definite forms by their Gram representative. Throws NotUnimodular, and
/// EvenSignatureViolation on inconsistent input (even, signature not 0 mod 8).
FormClass classify_unimodular(const IntegralForm& f);

/// The unique mod-2 vector v with f(v,x) = f(x,x) mod 2 for all x.
/// Throws NotUnimodular.
std::vector<uint8_t> characteristic_vector(const IntegralForm& f);
/// The same vector lifted to 0/1 integers.
IntVector characteristic_vector_lift(const IntegralForm& f);

/// Verified isometry: matrix^T * gram1 * matrix == gram2 and det = +-1,
/// checked on construction (throws NotAnIsometry).
class IsometryMap {
  public:
    IsometryMap(IntMatrix m, const IntMatrix& gram1, const IntMatrix& gram2);
    const IntMatrix& matrix() const { return m_; }

  private:
    IntMatrix m_;
};

/// Search limits. entry_bound caps matrix entries for indefinite searches;
/// the other caps keep exhaustive phases at desk scale.
struct SearchBound {
    long entry_bound = 3;
    long max_candidates = 2000000;  // boxed-search enumeration cap
    long max_group_elements = 20000; // group closure / word enumeration cap
};

enum class SearchStatus { Found, None, Inconclusive };

struct IsometryResult {
    SearchStatus status = SearchStatus::None;
    std::optional<IsometryMap> map;
    std::string certificate; // for None: which invariant differs; for
                             // Inconclusive: what was exhausted
};

/// Isometry search between unimodular forms. Definite pairs are decided
/// completely by backtracking; indefinite pairs are searched within the
/// entry bound and report Inconclusive on exhaustion with matching
/// invariants. Throws NotUnimodular.
IsometryResult isometry(const IntegralForm& f1, const IntegralForm& f2,
                        const SearchBound& bound = {});

struct AutGroup {
    std::vector<IsometryMap> generators;
    std::optional<Int> order; // nullopt = Unknown
    bool complete = false;    // exact enumeration finished
};

/// Automorphism group of a unimodular form. Definite: complete backtracking
/// enumeration with the exact order. Indefinite: all isometries within the
/// entry bound; order reported only if that set is closed under the group
/// operations. Throws NotUnimodular.
AutGroup automorphism_group(const IntegralForm& f, const SearchBound& bound = {});

/// Deterministic stream of automorphisms of a unimodular form: identity
/// first, then generators and their products in breadth-first word order,
/// deduplicated. Used by the recognizer's candidate enumeration. The group
/// is only computed when an element beyond the identity is requested.
class IsometryStream {
  public:
    IsometryStream(const IntegralForm& f, const SearchBound& bound);
    std::optional<IntMatrix> next();
    /// True when the stream ended only after enumerating the whole group.
    bool exhausted_completely() const { return complete_; }

  private:
    void expand();
    const IntegralForm form_;
    SearchBound bound_;
    bool started_ = false;
    bool expanded_ = false;
    bool complete_ = false;
    size_t pos_ = 0;
    std::vector<IntMatrix> elements_;
};

/// All vectors v with v^T g v = norm in a positive definite lattice,
/// enumerated exactly from the rational Cholesky bound and cached per norm.
class NormVectorTable {
  public:
    explicit NormVectorTable(const IntMatrix& g); // g positive definite
    const std::vector<IntVector>& vectors_of_norm(const Int& norm);

  private:
    IntMatrix g_;
    int n_;
    std::vector<Rat> d_;
    std::vector<std::vector<Rat>> r_;
    std::map<Int, std::vector<IntVector>> cache_;
};

} // namespace prodrec

#endif
