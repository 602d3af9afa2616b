#include "prodrec/forms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace prodrec {

std::string parity_name(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

IntegralForm::IntegralForm(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square() || !gram_.is_symmetric())
        throw NotSymmetric("Gram matrix must be symmetric");
    det_ = prodrec::determinant(gram_);
    inertia_ = prodrec::inertia(gram_);
    parity_ = Parity::Even;
    for (int i = 0; i < gram_.rows(); ++i)
        if (mpz_odd_p(gram_(i, i).get_mpz_t())) {
            parity_ = Parity::Odd;
            break;
        }
}

bool IntegralForm::is_definite() const {
    return rank() > 0 && inertia_.n_zero == 0 &&
           (inertia_.n_plus == 0 || inertia_.n_minus == 0);
}

IntegralForm unit_form(int sign) {
    IntMatrix m(1, 1);
    m(0, 0) = sign >= 0 ? 1 : -1;
    return IntegralForm(m);
}

IntegralForm hyperbolic_form() {
    return IntegralForm(IntMatrix{{0, 1}, {1, 0}});
}

IntegralForm e8_form(bool positive) {
    // Root basis of the E8 diagram: a chain of seven nodes with the eighth
    // attached to the fifth.
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        m(i, i) = 2;
    auto edge = [&](int i, int j) { m(i, j) = m(j, i) = -1; };
    for (int i = 0; i < 6; ++i)
        edge(i, i + 1);
    edge(4, 7);
    if (!positive)
        m = -m;
    return IntegralForm(m);
}

IntegralForm empty_form() {
    return IntegralForm(IntMatrix(0, 0));
}

IntegralForm block_sum(const std::vector<IntegralForm>& parts) {
    int n = 0;
    for (const auto& p : parts)
        n += p.rank();
    IntMatrix m(n, n);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j)
                m(off + i, off + j) = p.gram()(i, j);
        off += p.rank();
    }
    return IntegralForm(m);
}

IntegralForm parse_form_spec(const std::string& spec) {
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::vector<IntegralForm> parts;
    std::string rest = spec;
    while (true) {
        size_t plus = rest.find('+');
        // "-E8+-E8": a '+' immediately followed by nothing is malformed, but
        // a leading '-' belongs to the token, so split plainly on '+'.
        std::string tok = trim(plus == std::string::npos ? rest : rest.substr(0, plus));
        if (tok == "<1>")
            parts.push_back(unit_form(1));
        else if (tok == "<-1>")
            parts.push_back(unit_form(-1));
        else if (tok == "H")
            parts.push_back(hyperbolic_form());
        else if (tok == "E8")
            parts.push_back(e8_form(true));
        else if (tok == "-E8")
            parts.push_back(e8_form(false));
        else if (tok == "empty")
            ; // rank-0 summand
        else
            throw Error("unknown form token '" + tok + "'");
        if (plus == std::string::npos)
            break;
        rest = rest.substr(plus + 1);
    }
    return block_sum(parts);
}

std::string FormClass::name() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Empty:
        os << "Empty";
        break;
    case Kind::OddIndefinite:
        os << "Odd-indefinite(" << p << "," << q << ")";
        break;
    case Kind::EvenIndefinite:
        os << "Even-indefinite(" << a << "," << b << ")";
        break;
    case Kind::Definite:
        os << "Definite(rank " << rank << ", signature " << signature << ")";
        break;
    }
    return os.str();
}

std::string FormClass::token() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Empty:
        os << "empty";
        break;
    case Kind::OddIndefinite:
        os << "odd_indefinite(" << p << "," << q << ")";
        break;
    case Kind::EvenIndefinite:
        os << "even_indefinite(" << a << "," << b << ")";
        break;
    case Kind::Definite:
        os << "definite";
        break;
    }
    return os.str();
}

FormClass classify_unimodular(const IntegralForm& f) {
    if (!f.is_unimodular())
        throw NotUnimodular("form is not unimodular (det = " + f.determinant().get_str() + ")");
    FormClass c;
    c.rank = f.rank();
    c.signature = f.signature();
    c.parity = f.parity();
    c.gram = f.gram();
    if (f.rank() == 0) {
        c.kind = FormClass::Kind::Empty;
        return c;
    }
    const int p = f.inertia().n_plus, q = f.inertia().n_minus;
    if (p == 0 || q == 0) {
        c.kind = FormClass::Kind::Definite;
        return c;
    }
    if (f.parity() == Parity::Odd) {
        c.kind = FormClass::Kind::OddIndefinite;
        c.p = p;
        c.q = q;
        return c;
    }
    if (c.signature % 8 != 0)
        throw EvenSignatureViolation("even unimodular form with signature " +
                                     std::to_string(c.signature) + " (not 0 mod 8)");
    c.kind = FormClass::Kind::EvenIndefinite;
    c.a = c.signature / 8;
    c.b = (c.rank - std::abs(c.signature)) / 2;
    return c;
}

std::vector<uint8_t> characteristic_vector(const IntegralForm& f) {
    if (!f.is_unimodular())
        throw NotUnimodular("characteristic vector requires a unimodular form");
    std::vector<uint8_t> diag(f.rank());
    for (int i = 0; i < f.rank(); ++i)
        diag[i] = static_cast<uint8_t>(mpz_odd_p(f.gram()(i, i).get_mpz_t()) ? 1 : 0);
    auto v = solve_mod2(f.gram(), diag);
    if (!v)
        throw Error("internal: characteristic system unsolvable for unimodular form");
    return *v;
}

IntVector characteristic_vector_lift(const IntegralForm& f) {
    auto v = characteristic_vector(f);
    IntVector lift(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        lift[i] = v[i];
    return lift;
}

IsometryMap::IsometryMap(IntMatrix m, const IntMatrix& gram1, const IntMatrix& gram2)
    : m_(std::move(m)) {
    if (m_.rows() != gram1.rows() || m_.cols() != gram2.cols())
        throw NotAnIsometry("isometry matrix has wrong shape");
    if (m_.transpose() * gram1 * m_ != gram2)
        throw NotAnIsometry("congruence m^T g1 m = g2 fails");
    if (m_.is_square() && m_.rows() > 0) {
        Int d = determinant(m_);
        if (d != 1 && d != -1)
            throw NotAnIsometry("isometry matrix must have determinant +-1");
    }
}

// ---------------------------------------------------------------------------
// Vector enumeration in positive definite lattices.

namespace {

// Largest k >= 0 with k*k <= q. Requires q >= 0.
Int floor_sqrt_rat(const Rat& q) {
    const Int num = q.get_num(), den = q.get_den();
    Int nd = num * den;
    Int k;
    mpz_sqrt(k.get_mpz_t(), nd.get_mpz_t());
    k /= den;
    if (k < 0)
        k = 0;
    while (k > 0 && k * k * den > num)
        --k;
    while ((k + 1) * (k + 1) * den <= num)
        ++k;
    return k;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

} // namespace

NormVectorTable::NormVectorTable(const IntMatrix& g) : g_(g), n_(g.rows()) {
    std::vector<std::vector<Rat>> q(n_, std::vector<Rat>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            q[i][j] = Rat(g(i, j));
    d_.resize(n_);
    r_.assign(n_, std::vector<Rat>(n_));
    for (int i = 0; i < n_; ++i) {
        d_[i] = q[i][i];
        if (d_[i] <= 0)
            throw Error("internal: norm enumeration needs a positive definite Gram");
        for (int j = i + 1; j < n_; ++j)
            r_[i][j] = q[i][j] / d_[i];
        for (int k = i + 1; k < n_; ++k)
            for (int l = k; l < n_; ++l) {
                q[k][l] -= d_[i] * r_[i][k] * r_[i][l];
                q[l][k] = q[k][l];
            }
    }
}

const std::vector<IntVector>& NormVectorTable::vectors_of_norm(const Int& norm) {
    auto it = cache_.find(norm);
    if (it != cache_.end())
        return it->second;
    std::vector<IntVector> out;
    if (norm >= 0 && n_ > 0) {
        IntVector x(n_);
        // Q(x) = sum_i d_i (x_i + sum_{j>i} r_ij x_j)^2, filled from the top.
        auto rec = [&](auto&& self, int i, const Rat& rem) -> void {
            if (i < 0) {
                if (rem == 0)
                    out.push_back(x);
                return;
            }
            Rat t = 0;
            for (int j = i + 1; j < n_; ++j)
                if (x[j] != 0)
                    t += r_[i][j] * Rat(x[j]);
            const Rat beta = rem / d_[i];
            const Int s = floor_sqrt_rat(beta);
            Int hi = floor_rat(-t) + s + 1;
            while (Rat(Rat(hi) + t) * (Rat(hi) + t) > beta)
                --hi;
            Int lo = floor_rat(-t) - s - 1;
            while (Rat(Rat(lo) + t) * (Rat(lo) + t) > beta)
                ++lo;
            for (Int xi = lo; xi <= hi; ++xi) {
                x[i] = xi;
                Rat used = d_[i] * (Rat(xi) + t) * (Rat(xi) + t);
                self(self, i - 1, rem - used);
            }
            x[i] = 0;
        };
        rec(rec, n_ - 1, Rat(norm));
        std::sort(out.begin(), out.end());
    } else if (norm == 0 && n_ == 0) {
        out.push_back(IntVector{});
    }
    return cache_.emplace(norm, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Definite backtracking: isometries and the automorphism stabilizer chain.

namespace {

// Maps the basis of g2 into the lattice of g1, both positive definite.
// Basis positions are processed by increasing diagonal norm and candidates
// pruned by partial inner-product agreement.
class DefiniteSearch {
  public:
    DefiniteSearch(const IntMatrix& g1, const IntMatrix& g2)
        : g1_(g1), g2_(g2), n_(g2.rows()), table_(g1) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g2(a, a) < g2(b, b); });
        chosen_.resize(n_);
        gchosen_.resize(n_);
    }

    bool candidate_fits(int k, const IntVector& v) const {
        for (int i = 0; i < k; ++i)
            if (dot(gchosen_[i], v) != g2_(order_[i], order_[k]))
                return false;
        return true;
    }

    void select(int k, const IntVector& v) {
        chosen_[k] = v;
        gchosen_[k] = g1_ * v;
    }

    // Depth-first completion from level k; leaves the found images in place.
    bool extend(int k) {
        if (k == n_)
            return true;
        const int pos = order_[k];
        for (const IntVector& v : table_.vectors_of_norm(g2_(pos, pos))) {
            if (!candidate_fits(k, v))
                continue;
            select(k, v);
            if (extend(k + 1))
                return true;
        }
        return false;
    }

    const std::vector<IntVector>& candidates(int k) {
        return table_.vectors_of_norm(g2_(order_[k], order_[k]));
    }

    IntMatrix current_matrix() const {
        IntMatrix m(g1_.rows(), n_);
        for (int k = 0; k < n_; ++k)
            m.set_col(order_[k], chosen_[k]);
        return m;
    }

    int size() const { return n_; }
    int position(int k) const { return order_[k]; }

  private:
    const IntMatrix g1_, g2_;
    const int n_;
    NormVectorTable table_;
    std::vector<int> order_;
    std::vector<IntVector> chosen_;
    std::vector<IntVector> gchosen_;
};

struct DefiniteAutChain {
    Int order = 1;
    std::vector<IntMatrix> transversal;
};

// Exact |Aut(g)| for positive definite g, as the product of level counts of
// the pointwise stabilizer chain along the ordered basis. Each counted image
// is certified by extending it to one full automorphism (the transversal),
// and the transversal elements generate the group.
DefiniteAutChain definite_automorphism_chain(const IntMatrix& g) {
    DefiniteSearch search(g, g);
    DefiniteAutChain out;
    const int n = search.size();
    for (int k = 0; k < n; ++k) {
        const IntVector id_image = unit_vector(n, search.position(k));
        Int count = 0;
        for (const IntVector& v : search.candidates(k)) {
            if (!search.candidate_fits(k, v))
                continue;
            if (v == id_image) {
                ++count; // the identity always extends
                continue;
            }
            search.select(k, v);
            if (search.extend(k + 1)) {
                ++count;
                out.transversal.push_back(search.current_matrix());
            }
        }
        out.order *= count;
        // Continue the chain with the identity image at this level.
        search.select(k, id_image);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bounded-entry search for indefinite forms.

struct BoxedVectors {
    bool overflow = false;
    std::map<Int, std::vector<IntVector>> by_norm;
};

BoxedVectors boxed_vectors(const IntMatrix& g, long entry_bound, long cap) {
    BoxedVectors out;
    const int n = g.rows();
    double total = 1;
    for (int i = 0; i < n; ++i)
        total *= 2 * entry_bound + 1;
    if (total > static_cast<double>(cap)) {
        out.overflow = true;
        return out;
    }
    IntVector x(n, Int(-entry_bound));
    if (n == 0)
        return out;
    while (true) {
        Int norm = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0)
                continue;
            for (int j = 0; j < n; ++j)
                norm += x[i] * g(i, j) * x[j];
        }
        out.by_norm[norm].push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == entry_bound) {
            x[i] = -entry_bound;
            --i;
        }
        if (i < 0)
            break;
        x[i] += 1;
    }
    return out;
}

// All matrices p with entries in [-B, B] and p^T g1 p = g2, in lexicographic
// column order. stop_after limits the number of solutions collected.
struct BoxedSearchResult {
    bool overflow = false;
    std::vector<IntMatrix> solutions;
};

BoxedSearchResult boxed_isometries(const IntMatrix& g1, const IntMatrix& g2,
                                   const SearchBound& bound, size_t stop_after) {
    BoxedSearchResult out;
    BoxedVectors vecs = boxed_vectors(g1, bound.entry_bound, bound.max_candidates);
    if (vecs.overflow) {
        out.overflow = true;
        return out;
    }
    const int n = g2.rows();
    std::vector<IntVector> chosen(n), gchosen(n);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) {
            IntMatrix m(n, n);
            for (int j = 0; j < n; ++j)
                m.set_col(j, chosen[j]);
            out.solutions.push_back(m);
            return out.solutions.size() >= stop_after;
        }
        auto it = vecs.by_norm.find(g2(k, k));
        if (it == vecs.by_norm.end())
            return false;
        for (const IntVector& v : it->second) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                ok = dot(gchosen[i], v) == g2(i, k);
            if (!ok)
                continue;
            chosen[k] = v;
            gchosen[k] = g1 * v;
            if (self(self, k + 1))
                return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

std::string matrix_key(const IntMatrix& m) {
    return m.to_string();
}

// Breadth-first closure of a generating set under right multiplication,
// identity first. Returns nullopt if the cap is exceeded.
std::optional<std::vector<IntMatrix>> bfs_closure(int n, const std::vector<IntMatrix>& gens,
                                                  long cap) {
    std::vector<IntMatrix> elements;
    std::set<std::string> seen;
    IntMatrix id = IntMatrix::identity(n);
    elements.push_back(id);
    seen.insert(matrix_key(id));
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const IntMatrix& g : gens) {
            IntMatrix prod = elements[head] * g;
            if (seen.insert(matrix_key(prod)).second) {
                if (static_cast<long>(elements.size()) >= cap)
                    return std::nullopt;
                elements.push_back(prod);
            }
        }
    }
    return elements;
}

} // namespace

IsometryResult isometry(const IntegralForm& f1, const IntegralForm& f2,
                        const SearchBound& bound) {
    if (!f1.is_unimodular() || !f2.is_unimodular())
        throw NotUnimodular("isometry search requires unimodular forms");
    IsometryResult out;
    if (f1.rank() != f2.rank()) {
        out.certificate = "rank differs: " + std::to_string(f1.rank()) + " vs " +
                          std::to_string(f2.rank());
        return out;
    }
    if (f1.signature() != f2.signature()) {
        out.certificate = "signature differs: " + std::to_string(f1.signature()) + " vs " +
                          std::to_string(f2.signature());
        return out;
    }
    if (f1.parity() != f2.parity()) {
        out.certificate = "parity differs: " + parity_name(f1.parity()) + " vs " +
                          parity_name(f2.parity());
        return out;
    }
    if (f1.rank() == 0 || f1.gram() == f2.gram()) {
        out.status = SearchStatus::Found;
        out.map = IsometryMap(IntMatrix::identity(f1.rank()), f1.gram(), f2.gram());
        return out;
    }
    if (f1.is_definite()) {
        const bool neg = f1.inertia().n_plus == 0;
        IntMatrix g1 = neg ? IntMatrix(-f1.gram()) : f1.gram();
        IntMatrix g2 = neg ? IntMatrix(-f2.gram()) : f2.gram();
        DefiniteSearch search(g1, g2);
        if (search.extend(0)) {
            out.status = SearchStatus::Found;
            out.map = IsometryMap(search.current_matrix(), f1.gram(), f2.gram());
        } else {
            out.certificate = "no isometry: complete definite backtracking exhausted";
        }
        return out;
    }
    BoxedSearchResult res = boxed_isometries(f1.gram(), f2.gram(), bound, 1);
    if (!res.solutions.empty()) {
        out.status = SearchStatus::Found;
        out.map = IsometryMap(res.solutions.front(), f1.gram(), f2.gram());
        return out;
    }
    out.status = SearchStatus::Inconclusive;
    out.certificate = res.overflow
                          ? "entry box exceeds the candidate cap"
                          : ("no isometry with entries in [-" + std::to_string(bound.entry_bound) +
                             "," + std::to_string(bound.entry_bound) +
                             "]; invariants match (classification guarantees existence)");
    return out;
}

AutGroup automorphism_group(const IntegralForm& f, const SearchBound& bound) {
    if (!f.is_unimodular())
        throw NotUnimodular("automorphism search requires a unimodular form");
    AutGroup out;
    if (f.rank() == 0) {
        out.order = 1;
        out.complete = true;
        return out;
    }
    if (f.is_definite()) {
        const bool neg = f.inertia().n_plus == 0;
        IntMatrix g = neg ? IntMatrix(-f.gram()) : f.gram();
        DefiniteAutChain chain = definite_automorphism_chain(g);
        for (const IntMatrix& m : chain.transversal)
            out.generators.emplace_back(m, f.gram(), f.gram());
        out.order = chain.order;
        out.complete = true;
        return out;
    }
    BoxedSearchResult res =
        boxed_isometries(f.gram(), f.gram(), bound, static_cast<size_t>(bound.max_group_elements));
    if (res.overflow) {
        // Box too large to enumerate; +-identity are always present.
        out.generators.emplace_back(IntMatrix::identity(f.rank()), f.gram(), f.gram());
        out.generators.emplace_back(-IntMatrix::identity(f.rank()), f.gram(), f.gram());
        return out;
    }
    for (const IntMatrix& m : res.solutions)
        out.generators.emplace_back(m, f.gram(), f.gram());
    // Order of the generated group, when it closes within the cap.
    std::vector<IntMatrix> gens = res.solutions;
    auto closure = bfs_closure(f.rank(), gens, bound.max_group_elements);
    if (closure) {
        bool within_box = true;
        for (const IntMatrix& m : *closure)
            for (int i = 0; i < m.rows() && within_box; ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (abs(m(i, j)) > bound.entry_bound) {
                        within_box = false;
                        break;
                    }
        // If the closure stays inside the box it coincides with the search
        // result, so the found set is a finite group; report its order.
        if (within_box)
            out.order = Int(static_cast<long>(closure->size()));
    }
    return out;
}

IsometryStream::IsometryStream(const IntegralForm& f, const SearchBound& bound)
    : form_(f), bound_(bound) {}

void IsometryStream::expand() {
    expanded_ = true;
    AutGroup g = automorphism_group(form_, bound_);
    std::vector<IntMatrix> gens;
    gens.reserve(g.generators.size());
    for (const auto& iso : g.generators)
        gens.push_back(iso.matrix());
    auto closure = bfs_closure(form_.rank(), gens, bound_.max_group_elements);
    if (closure) {
        elements_ = std::move(*closure);
        complete_ = g.complete;
    } else {
        // Cap reached: fall back to the generators themselves, flagged
        // incomplete.
        elements_.push_back(IntMatrix::identity(form_.rank()));
        for (const auto& m : gens)
            if (!m.is_identity())
                elements_.push_back(m);
        complete_ = false;
    }
    pos_ = 1; // identity was already handed out
}

std::optional<IntMatrix> IsometryStream::next() {
    if (!started_) {
        started_ = true;
        return IntMatrix::identity(form_.rank());
    }
    if (!expanded_)
        expand();
    if (pos_ >= elements_.size())
        return std::nullopt;
    return elements_[pos_++];
}

} // namespace prodrec
