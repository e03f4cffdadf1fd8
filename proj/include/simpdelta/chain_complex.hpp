#pragma once

// Associated and normalized (Moore) chain complexes of a model, cycle and
// boundary predicates, and homology ranks over F2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simpdelta/errors.hpp"
#include "simpdelta/f2.hpp"
#include "simpdelta/models.hpp"

namespace simpdelta {

class ChainComplexF2 {
public:
    ChainComplexF2() = default;
    ChainComplexF2(std::string name, std::vector<std::vector<std::string>> labels,
                   std::vector<std::vector<F2Vector>> boundary);

    const std::string& name() const { return name_; }
    int max_degree() const { return static_cast<int>(labels_.size()) - 1; }
    std::size_t dim(int q) const;
    const std::vector<std::string>& labels(int q) const;

    // Images of the basis of C_q in C_{q-1}; empty for q <= 0.
    const std::vector<F2Vector>& boundary(int q) const;
    F2Matrix boundary_matrix(int q) const;
    F2Vector apply_boundary(int q, const F2Vector& x) const;

    std::size_t rank_d(int q) const;   // rank of C_q -> C_{q-1}
    std::size_t kernel_dim(int q) const;
    // dim H_q; needs the boundary out of degree q+1, so q < max_degree.
    std::size_t betti(int q) const;

    bool d_squared_zero(std::string* failure = nullptr) const;
    bool is_cycle(int q, const F2Vector& x) const;
    bool is_boundary(int q, const F2Vector& x) const;
    // Throws NotACycle.
    bool same_class(int q, const F2Vector& a, const F2Vector& b) const;
    // Cycles completing a basis of the boundaries to one of the cycles, in
    // kernel order; their classes form a basis of H_q.
    std::vector<F2Vector> homology_representatives(int q) const;

    // For normalized complexes: the basis of N_q in ambient coordinates.
    std::vector<std::vector<F2Vector>> ambient;

private:
    std::string name_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<F2Vector>> boundary_;
};

// Differential sum_i d_i on every degree 0..tables.max_degree.
ChainComplexF2 associated_complex(const ModelTables& tables);
// N_q = kernel of d_1..d_q with differential d_0.
ChainComplexF2 normalized_complex(const ModelTables& tables);

template <SimplicialModel M>
ChainComplexF2 associated_complex(const M& model, int max_degree) {
    return associated_complex(tabulate(model, max_degree));
}

template <SimplicialModel M>
ChainComplexF2 normalized_complex(const M& model, int max_degree) {
    return normalized_complex(tabulate(model, max_degree));
}

struct BettiRow {
    int degree = 0;
    std::size_t dim = 0;
    std::size_t rank_d = 0;
    std::size_t betti = 0;
};

// Degrees 0..max_degree-1.
std::vector<BettiRow> betti_table(const ChainComplexF2& c);
// degree,dim,rank_d,betti
std::string betti_csv(const std::vector<BettiRow>& rows);

// Associated and normalized tables side by side with an agreement column.
std::string betti_comparison_csv(const std::vector<BettiRow>& associated,
                                 const std::vector<BettiRow>& normalized);

// ---- element-level predicates ----

enum class CycleMode { Normalized, Associated };

template <SimplicialModel M>
F2Element<typename M::Key> face_of(const M& m, const F2Element<typename M::Key>& x, int i) {
    F2Element<typename M::Key> out(x.degree() - 1);
    for (const auto& k : x.support())
        if (auto image = m.face(k, i)) out.toggle(*image);
    return out;
}

template <SimplicialModel M>
F2Element<typename M::Key> boundary_of(const M& m, const F2Element<typename M::Key>& x) {
    F2Element<typename M::Key> out(x.degree() - 1);
    for (int i = 0; i <= x.degree() && x.degree() > 0; ++i) out += face_of(m, x, i);
    return out;
}

// Normalized: every face d_0..d_q vanishes. Associated: their sum does.
template <SimplicialModel M>
bool is_cycle(const M& m, const F2Element<typename M::Key>& z,
              CycleMode mode = CycleMode::Normalized) {
    if (z.degree() <= 0) return true;
    if (mode == CycleMode::Associated) return boundary_of(m, z).is_zero();
    for (int i = 0; i <= z.degree(); ++i)
        if (!face_of(m, z, i).is_zero()) return false;
    return true;
}

// Indices j with d_j z != 0.
template <SimplicialModel M>
std::vector<int> nonzero_faces(const M& m, const F2Element<typename M::Key>& z) {
    std::vector<int> out;
    for (int i = 0; i <= z.degree() && z.degree() > 0; ++i)
        if (!face_of(m, z, i).is_zero()) out.push_back(i);
    return out;
}

// Coordinates in basis(degree). Throws DegreeMismatch for keys outside it.
template <SimplicialModel M>
F2Vector to_vector(const M& m, const F2Element<typename M::Key>& x) {
    F2Vector v(m.basis(x.degree()).size());
    for (const auto& k : x.support()) {
        auto idx = m.index_of(k);
        if (!idx) throw DegreeMismatch("'" + m.label(k) + "' is not in the basis of " + m.name());
        v.flip(*idx);
    }
    return v;
}

template <SimplicialModel M>
F2Element<typename M::Key> from_vector(const M& m, int degree, const F2Vector& v) {
    F2Element<typename M::Key> out(degree);
    const auto& basis = m.basis(degree);
    for (std::size_t k : v.support()) out.toggle(basis[k]);
    return out;
}

// Images under the associated differential of the degree-(q+1) basis.
template <SimplicialModel M>
std::vector<F2Vector> boundary_columns(const M& m, int q) {
    std::vector<F2Vector> out;
    for (const auto& k : m.basis(q + 1))
        out.push_back(to_vector(m, boundary_of(m, F2Element<typename M::Key>(q + 1, {k}))));
    return out;
}

template <SimplicialModel M>
bool is_boundary(const M& m, const F2Element<typename M::Key>& x) {
    if (x.is_zero()) return true;
    if (x.degree() + 1 > m.max_degree())
        throw TruncationOverflow("boundaries into degree " + std::to_string(x.degree()) +
                                 " need degree " + std::to_string(x.degree() + 1));
    F2Span span(m.basis(x.degree()).size());
    for (const auto& c : boundary_columns(m, x.degree())) span.add(c);
    return span.contains(to_vector(m, x));
}

// Whether z1 + z2 = bd(x) for some x in the associated complex. Throws
// NotACycle unless both are associated cycles of one degree.
template <SimplicialModel M>
bool same_class(const M& m, const F2Element<typename M::Key>& z1,
                const F2Element<typename M::Key>& z2) {
    if (!z1.is_zero() && !z2.is_zero() && z1.degree() != z2.degree())
        throw NotACycle("classes of different degrees");
    if (!is_cycle(m, z1, CycleMode::Associated) || !is_cycle(m, z2, CycleMode::Associated))
        throw NotACycle("same_class needs cycles");
    return is_boundary(m, z1 + z2);
}

template <SimplicialModel M>
std::size_t homology_rank(const M& m, int q) {
    return associated_complex(m, q + 1).betti(q);
}

}  // namespace simpdelta
