#pragma once

// EM type transformations: bidegree-indexed families of natural maps
// V_i (x) W_j -> V_k (x) W_l written as mod-2 sums of pairs of simplicial
// words, together with an affine index function (i,j) -> (k,l).
//
// Transforms are infinite families, so they are stored as expression graphs
// (primitive / sum / composite / suspension / twist) and materialized lazily,
// one bidegree at a time, with a per-node cache. Terms are kept in reduced
// formal form; a term whose target has a negative component is still kept in
// the formal sum (its suspension may be non-zero) but denotes the zero map,
// so it is skipped by evaluation, comparison, and JSON output.

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpdelta/words.hpp"

namespace simpdelta {

struct Bidegree {
    int i = 0;
    int j = 0;

    bool nonnegative() const { return i >= 0 && j >= 0; }
    int total() const { return i + j; }

    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& b);

// n -> a*i + b*j + c
struct AffineForm {
    int a = 0;
    int b = 0;
    int c = 0;

    constexpr int operator()(int i, int j) const { return a * i + b * j + c; }
    friend constexpr auto operator<=>(const AffineForm&, const AffineForm&) = default;
};

class IndexFunction {
public:
    constexpr IndexFunction() = default;
    constexpr IndexFunction(AffineForm left, AffineForm right) : left_(left), right_(right) {}

    // (i,j) -> (i + dl, j + dr)
    static constexpr IndexFunction shift(int dl, int dr) {
        return {{1, 0, dl}, {0, 1, dr}};
    }
    // (i,j) -> (i+j-k, i+j-k)
    static constexpr IndexFunction total(int k) { return {{1, 1, -k}, {1, 1, -k}}; }

    constexpr Bidegree operator()(Bidegree s) const {
        return {left_(s.i, s.j), right_(s.i, s.j)};
    }
    constexpr const AffineForm& left() const { return left_; }
    constexpr const AffineForm& right() const { return right_; }

    // (this after inner)(s) = this(inner(s))
    IndexFunction after(const IndexFunction& inner) const;
    // I'(i+1,j+1) = (1,1) + I(i,j)
    IndexFunction suspended() const;
    // I'(i,j) = swap(I(j,i))
    IndexFunction twisted() const;

    std::string to_string() const;

    friend constexpr auto operator<=>(const IndexFunction&, const IndexFunction&) = default;

private:
    AffineForm left_{1, 0, 0};
    AffineForm right_{0, 1, 0};
};

struct TensorWord {
    SimplicialWord left;
    SimplicialWord right;

    std::string to_string() const;
    friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
    friend bool operator==(const TensorWord&, const TensorWord&) = default;
};

// Sorted, duplicate-free set of reduced tensor words (a mod-2 sum).
class TermSet {
public:
    TermSet() = default;

    // Sorts and cancels equal terms in pairs.
    static TermSet from_multiset(std::vector<TensorWord> terms);

    const std::vector<TensorWord>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool contains(const TensorWord& t) const;

    // Symmetric difference.
    TermSet operator+(const TermSet& other) const;

    friend bool operator==(const TermSet&, const TermSet&) = default;

private:
    std::vector<TensorWord> terms_;
};

class EMTransform {
public:
    using TermGenerator = std::function<std::vector<TensorWord>(Bidegree)>;

    // Primitive transform given by a term generator, called only for
    // non-negative bidegrees. Returned words need not be reduced.
    static EMTransform primitive(std::string name, IndexFunction index_fn, TermGenerator gen);

    // The constant family left (x) right at every bidegree.
    static EMTransform word_pair(const SimplicialWord& left, const SimplicialWord& right,
                                 std::string name = {});

    static EMTransform zero(IndexFunction index_fn);

    const IndexFunction& index_fn() const;
    const std::string& name() const;

    // Formal terms at a bidegree (empty for negative bidegrees), including
    // terms whose target has a negative component.
    const TermSet& formal_terms_at(Bidegree s) const;

    // The natural transformation at s: empty when the target has a negative
    // component, otherwise the formal terms. Every returned term is defined
    // on s (checked; throws OutOfRange otherwise).
    TermSet terms_at(Bidegree s) const;

    Bidegree target(Bidegree s) const { return index_fn()(s); }

    // Same transform under a new display name.
    EMTransform renamed(std::string name) const;

    // Identity of the underlying expression node.
    const void* id() const { return node_.get(); }

    struct Node;

private:
    explicit EMTransform(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend EMTransform em_add(const EMTransform&, const EMTransform&);
    friend EMTransform em_compose(const EMTransform&, const EMTransform&);
    friend EMTransform em_twist(const EMTransform&);
    friend EMTransform em_suspend(const EMTransform&);
};

// Bidegree-wise mod-2 sum; throws IndexMismatch on differing index functions.
EMTransform em_add(const EMTransform& f, const EMTransform& g);
// f after g.
EMTransform em_compose(const EMTransform& f, const EMTransform& g);
// (T F)_{i,j} = T F_{j,i} T
EMTransform em_twist(const EMTransform& f);
// (S F)_{i+1,j+1} = S(F_{i,j}); zero on row and column 0.
EMTransform em_suspend(const EMTransform& f);
EMTransform em_suspend(const EMTransform& f, int times);

EMTransform operator+(const EMTransform& f, const EMTransform& g);
EMTransform operator*(const EMTransform& f, const EMTransform& g);

// Sum of several transforms with a common index function.
EMTransform em_sum(const std::vector<EMTransform>& parts);

// ---- primitive catalog ----

// Eilenberg-MacLane shuffle map, D_{i,j} = sum over (i,j)-shuffles of
// s_{nu_j}...s_{nu_1} (x) s_{mu_i}...s_{mu_1}; index (i+j, i+j).
EMTransform shuffle_D();
// Identity at (k,k), zero elsewhere; index (i+j-k, i+j-k).
EMTransform phi(int k);
// sum_{0<=r<=i} d_r (x) id; index (i-1, j).
EMTransform boundary_left();
// sum_{0<=r<=j} id (x) d_r; index (i, j-1).
EMTransform boundary_right();
// sum_{0<=r<=min(i,j)} d_r (x) d_r; index (i-1, j-1).
EMTransform diagonal_delta();
EMTransform identity_transform();
EMTransform face0_left();
EMTransform face0_right();
EMTransform degen0_left();
EMTransform degen0_right();
EMTransform face0_both();

// ---- higher Eilenberg-MacLane maps ----

// D^0 = S(D)(id (x) s_0); D^k = S(D^{k-1}) + D^{k-1}(d_0 (x) id) for k even,
// S(D^{k-1}) + D^{k-1}(id (x) d_0) for k odd. Index (i+j-k, i+j-k).
EMTransform build_Dk(int k);
// D^0 .. D^{kmax}, sharing subexpressions.
std::vector<EMTransform> build_D_sequence(int kmax);

// A^0 = D^0 + T D^0 + D;
// A^k = D^k + T D^k + delta D^{k-1} + D^{k-1}(bd (x) id) + D^{k-1}(id (x) bd).
EMTransform build_Ak(int k);
EMTransform build_Ak(int k, const std::vector<EMTransform>& d_sequence);

// ---- comparison ----

// Bidegrees (i,j) with i,j >= 0 and min_total <= i+j <= max_total.
struct Window {
    int max_total = 6;
    int min_total = 0;

    std::vector<Bidegree> bidegrees() const;
};

struct EqualityResult {
    bool equal = true;
    std::size_t bidegrees_checked = 0;
    std::optional<Bidegree> witness;  // first differing bidegree
    TermSet only_left;                 // at the witness
    TermSet only_right;
};

// Decides equality as natural transformations on every bidegree of the
// window: terms are re-normalized at their source bidegree, negative-target
// terms are dropped, and the canonical mod-2 sets are compared. Throws
// IndexMismatch on differing index functions. `threads` > 1 checks bidegrees
// concurrently; the result does not depend on it.
EqualityResult em_equal(const EMTransform& f, const EMTransform& g, const Window& window,
                        unsigned threads = 1);

// Canonical natural-transformation terms at s, built from the formal terms
// with the degree-aware normalize().
TermSet canonical_terms(const EMTransform& f, Bidegree s);

// {"bidegree":[i,j],"target":[k,l],"terms":[["s1 s0","id"],...]}
std::string dump_transform_json(const EMTransform& f, Bidegree s);

}  // namespace simpdelta
