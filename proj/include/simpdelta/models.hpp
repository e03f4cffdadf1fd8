#pragma once

// Finite truncated simplicial F2-vector spaces and algebras with explicit
// bases, used as the ground on which words and EM transforms are evaluated.
//
//   Delta(n)          all nondecreasing vertex sequences in [n]
//   BoundaryDelta(n)  the non-surjective ones
//   Sphere(n)         the surjective ones; a face that loses a vertex is 0
//
// A degree-m simplex of Sphere(n) is a degeneracy word applied to the
// fundamental simplex (0,1,...,n), and is labelled by that word.

#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simpdelta/em_transform.hpp"
#include "simpdelta/errors.hpp"
#include "simpdelta/words.hpp"

namespace simpdelta {

using Simplex = std::vector<int>;

inline int key_degree(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// Degeneracy word s_{j_r}...s_{j_1} with s = (that word)(collapsed s).
SimplicialWord degeneracy_word(const Simplex& s);

enum class ModelKind { Delta, BoundaryDelta, Sphere };

template <class Key>
class KeyIndex {
public:
    std::vector<Key> keys;
    std::map<Key, std::size_t> position;

    explicit KeyIndex(std::vector<Key> sorted) : keys(std::move(sorted)) {
        for (std::size_t k = 0; k < keys.size(); ++k) position.emplace(keys[k], k);
    }
};

// Lazily built per-degree bases, shared between copies of a model.
template <class Key>
class BasisCache {
public:
    template <class Build>
    const KeyIndex<Key>& get(int degree, Build&& build) const {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(degree);
        if (it == cache_.end())
            it = cache_.emplace(degree, std::make_unique<KeyIndex<Key>>(build(degree))).first;
        return *it->second;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<KeyIndex<Key>>> cache_;
};

class SimplicialSetModel {
public:
    using Key = Simplex;

    static SimplicialSetModel delta(int n, int max_degree);
    static SimplicialSetModel boundary_delta(int n, int max_degree);
    static SimplicialSetModel sphere(int n, int max_degree);

    ModelKind kind() const { return kind_; }
    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    std::string name() const;

    // Whether s is a (nonzero) basis simplex of the model, ignoring truncation.
    bool contains(const Simplex& s) const;

    // Degree-m basis in lexicographic order; empty outside 0..max_degree.
    const std::vector<Simplex>& basis(int degree) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;

    // nullopt is the zero vector. Throw OutOfRange for i > degree.
    std::optional<Simplex> face(const Simplex& s, int i) const;
    // Also throws TruncationOverflow past max_degree.
    std::optional<Simplex> degeneracy(const Simplex& s, int i) const;

    std::string label(const Simplex& s) const;

    Simplex fundamental_simplex() const;

private:
    SimplicialSetModel(ModelKind kind, int n, int max_degree);
    std::vector<Simplex> build_basis(int degree) const;

    ModelKind kind_;
    int n_;
    int max_degree_;
    std::shared_ptr<BasisCache<Simplex>> cache_;
};

SimplicialSetModel sphere_model(int n, int max_degree);

// A commutative monomial: factors of a common degree, sorted descending.
struct Monomial {
    std::vector<Simplex> factors;

    int degree() const { return factors.empty() ? -1 : key_degree(factors.front()); }
    std::size_t polynomial_degree() const { return factors.size(); }

    static Monomial of(std::vector<Simplex> factors);

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline int key_degree(const Monomial& m) { return m.degree(); }

// Non-unital free commutative algebra on a simplicial set model, truncated at
// polynomial degree max_poly. basis() lists monomials of polynomial degree
// min_poly..max_poly; since faces and degeneracies preserve polynomial degree
// each such range spans a simplicial subspace.
class AlgebraModel {
public:
    using Key = Monomial;

    AlgebraModel(SimplicialSetModel base, int max_poly, int min_poly = 1);

    const SimplicialSetModel& base() const { return base_; }
    int max_degree() const { return base_.max_degree(); }
    int max_poly() const { return max_poly_; }
    int min_poly() const { return min_poly_; }
    std::string name() const;

    const std::vector<Monomial>& basis(int degree) const;
    std::optional<std::size_t> index_of(const Monomial& m) const;

    std::optional<Monomial> face(const Monomial& m, int i) const;
    std::optional<Monomial> degeneracy(const Monomial& m, int i) const;

    std::string label(const Monomial& m) const;
    std::vector<std::string> factor_labels(const Monomial& m) const;

private:
    std::vector<Monomial> build_basis(int degree) const;

    SimplicialSetModel base_;
    int max_poly_;
    int min_poly_;
    std::shared_ptr<BasisCache<Monomial>> cache_;
};

AlgebraModel algebra_model(int n, int max_degree, int max_poly);

// ---- elements ----

template <class Key>
class F2Element {
public:
    F2Element() = default;
    explicit F2Element(int degree) : degree_(degree) {}
    F2Element(int degree, std::initializer_list<Key> keys) : degree_(degree) {
        for (const auto& k : keys) toggle(k);
    }

    int degree() const { return degree_; }
    const std::set<Key>& support() const { return support_; }
    std::size_t size() const { return support_.size(); }
    bool is_zero() const { return support_.empty(); }
    bool contains(const Key& k) const { return support_.count(k) != 0; }

    void toggle(const Key& k) {
        if (key_degree(k) != degree_) throw DegreeMismatch("element key of the wrong degree");
        auto [it, inserted] = support_.insert(k);
        if (!inserted) support_.erase(it);
    }

    F2Element& operator+=(const F2Element& other) {
        if (other.degree_ != degree_ && !other.is_zero()) {
            if (!is_zero()) throw DegreeMismatch("adding elements of different degrees");
            degree_ = other.degree_;
        }
        for (const auto& k : other.support_) toggle(k);
        return *this;
    }
    friend F2Element operator+(F2Element a, const F2Element& b) { return a += b; }

    // Zero elements compare equal regardless of degree.
    friend bool operator==(const F2Element& a, const F2Element& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.support_ == b.support_;
    }

private:
    int degree_ = 0;
    std::set<Key> support_;
};

using SimplexElement = F2Element<Simplex>;
using AlgebraElement = F2Element<Monomial>;

template <class KL, class KR>
class TensorElement {
public:
    TensorElement() = default;
    explicit TensorElement(Bidegree b) : bidegree_(b) {}

    Bidegree bidegree() const { return bidegree_; }
    const std::set<std::pair<KL, KR>>& support() const { return support_; }
    std::size_t size() const { return support_.size(); }
    bool is_zero() const { return support_.empty(); }

    void toggle(const KL& l, const KR& r) {
        if (key_degree(l) != bidegree_.i || key_degree(r) != bidegree_.j)
            throw DegreeMismatch("tensor key of the wrong bidegree");
        auto [it, inserted] = support_.emplace(l, r);
        if (!inserted) support_.erase(it);
    }

    TensorElement& operator+=(const TensorElement& other) {
        if (other.bidegree_ != bidegree_ && !other.is_zero()) {
            if (!is_zero()) throw DegreeMismatch("adding tensors of different bidegrees");
            bidegree_ = other.bidegree_;
        }
        for (const auto& [l, r] : other.support_) toggle(l, r);
        return *this;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.bidegree_ == b.bidegree_ && a.support_ == b.support_;
    }

private:
    Bidegree bidegree_;
    std::set<std::pair<KL, KR>> support_;
};

template <class KL, class KR>
TensorElement<KL, KR> tensor(const F2Element<KL>& x, const F2Element<KR>& y) {
    TensorElement<KL, KR> out({x.degree(), y.degree()});
    for (const auto& l : x.support())
        for (const auto& r : y.support()) out.toggle(l, r);
    return out;
}

// ---- generic evaluation ----

template <class M>
concept SimplicialModel = requires(const M& m, const typename M::Key& k, int d) {
    { m.max_degree() } -> std::convertible_to<int>;
    { m.basis(d) } -> std::same_as<const std::vector<typename M::Key>&>;
    { m.index_of(k) } -> std::same_as<std::optional<std::size_t>>;
    { m.face(k, d) } -> std::same_as<std::optional<typename M::Key>>;
    { m.degeneracy(k, d) } -> std::same_as<std::optional<typename M::Key>>;
    { m.label(k) } -> std::convertible_to<std::string>;
    { m.name() } -> std::convertible_to<std::string>;
};

template <SimplicialModel M>
std::optional<typename M::Key> apply_generator(const M& m, const typename M::Key& k, Generator g) {
    return g.is_face() ? m.face(k, g.index) : m.degeneracy(k, g.index);
}

// Applies the factors of w right to left. The caller guarantees w is defined
// and stays in non-negative degrees.
template <SimplicialModel M>
std::optional<typename M::Key> apply_factors(const M& m, const SimplicialWord& w,
                                             typename M::Key k) {
    const auto factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        auto next = apply_generator(m, k, *it);
        if (!next) return std::nullopt;
        k = std::move(*next);
    }
    return k;
}

namespace detail {

// Throws TruncationOverflow if w passes through a degree above max_degree.
inline void check_truncation(const SimplicialWord& w, int source, int max_degree) {
    int d = source;
    if (d > max_degree) throw TruncationOverflow("source degree above the model truncation");
    const auto factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        d += it->degree_shift();
        if (d > max_degree)
            throw TruncationOverflow("word " + w.to_string() + " leaves the truncation (degree " +
                                     std::to_string(d) + " > " + std::to_string(max_degree) +
                                     ")");
    }
}

}  // namespace detail

// Factor-by-factor action on an element, linear over F2. Throws OutOfRange
// when w is not defined on degree(x), TruncationOverflow when it leaves the
// model.
template <SimplicialModel M>
F2Element<typename M::Key> apply_word(const M& m, const SimplicialWord& w,
                                      const F2Element<typename M::Key>& x) {
    const NormalForm nf = normalize(w, x.degree());
    const int target = x.degree() + w.degree_shift();
    F2Element<typename M::Key> out(target);
    if (nf.is_null()) return out;
    detail::check_truncation(w, x.degree(), m.max_degree());
    for (const auto& k : x.support())
        if (auto image = apply_factors(m, w, k)) out.toggle(*image);
    return out;
}

// The same action computed through the normal form of w.
template <SimplicialModel M>
F2Element<typename M::Key> apply_normal_form(const M& m, const SimplicialWord& w,
                                             const F2Element<typename M::Key>& x) {
    const NormalForm nf = normalize(w, x.degree());
    F2Element<typename M::Key> out(x.degree() + w.degree_shift());
    if (nf.is_null()) return out;
    const SimplicialWord reduced = nf.word();
    detail::check_truncation(reduced, x.degree(), m.max_degree());
    for (const auto& k : x.support())
        if (auto image = apply_factors(m, reduced, k)) out.toggle(*image);
    return out;
}

// F applied to x termwise. Terms whose target has a negative component
// contribute zero. Throws TruncationOverflow when the target leaves either
// model.
template <SimplicialModel ML, SimplicialModel MR>
TensorElement<typename ML::Key, typename MR::Key> evaluate_em(
    const EMTransform& f, const TensorElement<typename ML::Key, typename MR::Key>& x,
    const ML& left, const MR& right) {
    const Bidegree s = x.bidegree();
    const Bidegree t = f.target(s);
    TensorElement<typename ML::Key, typename MR::Key> out(t);
    if (!s.nonnegative() || !t.nonnegative()) return out;
    if (t.i > left.max_degree() || t.j > right.max_degree())
        throw TruncationOverflow("target bidegree " + to_string(t) + " leaves the truncation");
    const TermSet terms = canonical_terms(f, s);
    for (const auto& term : terms.terms()) {
        detail::check_truncation(term.left, s.i, left.max_degree());
        detail::check_truncation(term.right, s.j, right.max_degree());
        for (const auto& [l, r] : x.support()) {
            auto a = apply_factors(left, term.left, l);
            if (!a) continue;
            auto b = apply_factors(right, term.right, r);
            if (!b) continue;
            out.toggle(*a, *b);
        }
    }
    return out;
}

// ---- algebra structure ----

AlgebraElement generator_element(const Simplex& s);
AlgebraElement fundamental_class(const AlgebraModel& a);

// Throws DegreeMismatch, TruncationOverflow (polynomial degree).
AlgebraElement multiply(const AlgebraModel& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement power(const AlgebraModel& a, const AlgebraElement& x, int exponent);
// mu(x (x) y) summed over the tensor's support.
AlgebraElement multiply_tensor(const AlgebraModel& a,
                               const TensorElement<Monomial, Monomial>& x);

// Delta(n) -> Sphere(n): keeps surjective simplices, sends the rest to 0.
SimplexElement quotient_to_sphere(const SimplicialSetModel& sphere, const SimplexElement& x);

// ---- tables and JSON ----

// Basis labels and action tables of a model up to a degree; -1 marks zero.
struct ModelTables {
    std::string name;
    int max_degree = 0;
    std::vector<std::vector<std::string>> labels;
    // faces[m][i][b]: index in degree m-1 of d_i(basis_m[b])
    std::vector<std::vector<std::vector<long>>> faces;
    // degeneracies[m][i][b]: index in degree m+1 (m < max_degree only)
    std::vector<std::vector<std::vector<long>>> degeneracies;

    std::size_t dim(int m) const { return labels[static_cast<std::size_t>(m)].size(); }
};

template <SimplicialModel M>
ModelTables tabulate(const M& m, int max_degree) {
    if (max_degree > m.max_degree()) throw TruncationOverflow("tabulating past max_degree");
    ModelTables t;
    t.name = m.name();
    t.max_degree = max_degree;
    auto index = [&](const auto& image) -> long {
        if (!image) return -1;
        auto k = m.index_of(*image);
        if (!k) throw std::logic_error("action leaves the basis in " + m.name());
        return static_cast<long>(*k);
    };
    for (int d = 0; d <= max_degree; ++d) {
        const auto& basis = m.basis(d);
        std::vector<std::string> labels;
        for (const auto& k : basis) labels.push_back(m.label(k));
        t.labels.push_back(std::move(labels));
        std::vector<std::vector<long>> faces;
        if (d > 0) {
            for (int i = 0; i <= d; ++i) {
                std::vector<long> row;
                for (const auto& k : basis) row.push_back(index(m.face(k, i)));
                faces.push_back(std::move(row));
            }
        }
        t.faces.push_back(std::move(faces));
        std::vector<std::vector<long>> degens;
        if (d < max_degree) {
            for (int i = 0; i <= d; ++i) {
                std::vector<long> row;
                for (const auto& k : basis) row.push_back(index(m.degeneracy(k, i)));
                degens.push_back(std::move(row));
            }
        }
        t.degeneracies.push_back(std::move(degens));
    }
    return t;
}

// Checks the five simplicial identities on every basis element; on failure
// describes the first violation in *failure.
bool check_simplicial_identities(const ModelTables& t, std::string* failure = nullptr,
                                 std::size_t* checks = nullptr);

// {"model":..., "max_degree":..., "degrees":[{"degree":m,"basis":[...],
//  "faces":[[...],...],"degeneracies":[[...],...]}]}; zero is null.
std::string model_json(const ModelTables& t);

}  // namespace simpdelta
