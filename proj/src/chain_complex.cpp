#include "simpdelta/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace simpdelta {

ChainComplexF2::ChainComplexF2(std::string name, std::vector<std::vector<std::string>> labels,
                               std::vector<std::vector<F2Vector>> boundary)
    : name_(std::move(name)), labels_(std::move(labels)), boundary_(std::move(boundary)) {
    if (boundary_.size() != labels_.size())
        throw std::invalid_argument("chain complex needs one boundary list per degree");
}

std::size_t ChainComplexF2::dim(int q) const {
    if (q < 0 || q > max_degree()) return 0;
    return labels_[static_cast<std::size_t>(q)].size();
}

const std::vector<std::string>& ChainComplexF2::labels(int q) const {
    return labels_.at(static_cast<std::size_t>(q));
}

const std::vector<F2Vector>& ChainComplexF2::boundary(int q) const {
    static const std::vector<F2Vector> empty;
    if (q <= 0 || q > max_degree()) return empty;
    return boundary_[static_cast<std::size_t>(q)];
}

F2Matrix ChainComplexF2::boundary_matrix(int q) const {
    return F2Matrix::from_columns(dim(q - 1), boundary(q));
}

F2Vector ChainComplexF2::apply_boundary(int q, const F2Vector& x) const {
    F2Vector out(dim(q - 1));
    if (q <= 0) return out;
    const auto& cols = boundary(q);
    for (std::size_t k : x.support()) out ^= cols[k];
    return out;
}

std::size_t ChainComplexF2::rank_d(int q) const {
    if (q <= 0 || q > max_degree()) return 0;
    F2Span span(dim(q - 1));
    for (const auto& c : boundary(q)) span.add(c);
    return span.rank();
}

std::size_t ChainComplexF2::kernel_dim(int q) const { return dim(q) - rank_d(q); }

std::size_t ChainComplexF2::betti(int q) const {
    if (q < 0 || q >= max_degree())
        throw BadRange("betti(" + std::to_string(q) + ") needs q < " +
                       std::to_string(max_degree()));
    return kernel_dim(q) - rank_d(q + 1);
}

bool ChainComplexF2::d_squared_zero(std::string* failure) const {
    for (int q = 2; q <= max_degree(); ++q) {
        const auto& cols = boundary(q);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (!apply_boundary(q - 1, cols[k]).is_zero()) {
                if (failure)
                    *failure = name_ + ": d d != 0 on " + labels(q)[k];
                return false;
            }
        }
    }
    return true;
}

bool ChainComplexF2::is_cycle(int q, const F2Vector& x) const {
    return apply_boundary(q, x).is_zero();
}

bool ChainComplexF2::is_boundary(int q, const F2Vector& x) const {
    if (x.is_zero()) return true;
    if (q + 1 > max_degree()) throw BadRange("no boundaries into the top degree");
    F2Span span(dim(q));
    for (const auto& c : boundary(q + 1)) span.add(c);
    return span.contains(x);
}

bool ChainComplexF2::same_class(int q, const F2Vector& a, const F2Vector& b) const {
    if (!is_cycle(q, a) || !is_cycle(q, b)) throw NotACycle("same_class needs cycles");
    return is_boundary(q, a ^ b);
}

std::vector<F2Vector> ChainComplexF2::homology_representatives(int q) const {
    if (q < 0 || q >= max_degree()) throw BadRange("homology needs q < max_degree");
    F2Span span(dim(q));
    for (const auto& c : boundary(q + 1)) span.add(c);
    std::vector<F2Vector> out;
    std::vector<F2Vector> columns = boundary(q);
    if (q == 0) columns.assign(dim(0), F2Vector(0));
    for (const auto& z : kernel_basis(dim(q - 1), columns))
        if (span.add(z)) out.push_back(z);
    return out;
}

ChainComplexF2 associated_complex(const ModelTables& t) {
    std::vector<std::vector<F2Vector>> boundary(static_cast<std::size_t>(t.max_degree) + 1);
    for (int q = 1; q <= t.max_degree; ++q) {
        auto& cols = boundary[static_cast<std::size_t>(q)];
        for (std::size_t b = 0; b < t.dim(q); ++b) {
            F2Vector v(t.dim(q - 1));
            for (const auto& face : t.faces[static_cast<std::size_t>(q)]) {
                const long image = face[b];
                if (image >= 0) v.flip(static_cast<std::size_t>(image));
            }
            cols.push_back(std::move(v));
        }
    }
    return ChainComplexF2(t.name + " associated", t.labels, std::move(boundary));
}

namespace {

// Label of an ambient vector: its support labels joined with '+'.
std::string vector_label(const std::vector<std::string>& labels, const F2Vector& v) {
    std::string out;
    for (std::size_t k : v.support()) {
        if (!out.empty()) out += " + ";
        out += labels[k];
    }
    return out.empty() ? "0" : out;
}

F2Vector face_image(const ModelTables& t, int q, int i, const F2Vector& v) {
    F2Vector out(t.dim(q - 1));
    const auto& face = t.faces[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
    for (std::size_t b : v.support())
        if (face[b] >= 0) out.flip(static_cast<std::size_t>(face[b]));
    return out;
}

}  // namespace

ChainComplexF2 normalized_complex(const ModelTables& t) {
    const auto top = static_cast<std::size_t>(t.max_degree) + 1;
    std::vector<std::vector<F2Vector>> ambient(top);
    std::vector<std::vector<std::string>> labels(top);
    std::vector<std::vector<F2Vector>> boundary(top);

    for (int q = 0; q <= t.max_degree; ++q) {
        const auto qi = static_cast<std::size_t>(q);
        const std::size_t n = t.dim(q);
        if (q == 0) {
            for (std::size_t b = 0; b < n; ++b) ambient[0].push_back(F2Vector::unit(n, b));
        } else {
            // Stack d_1..d_q into one map C_q -> C_{q-1}^q and take its kernel.
            const std::size_t below = t.dim(q - 1);
            std::vector<F2Vector> stacked;
            for (std::size_t b = 0; b < n; ++b) {
                F2Vector v(below * static_cast<std::size_t>(q));
                for (int i = 1; i <= q; ++i) {
                    const long image = t.faces[qi][static_cast<std::size_t>(i)][b];
                    if (image >= 0)
                        v.flip(below * static_cast<std::size_t>(i - 1) +
                               static_cast<std::size_t>(image));
                }
                stacked.push_back(std::move(v));
            }
            ambient[qi] = kernel_basis(below * static_cast<std::size_t>(q), stacked);

            F2Span lower(below, true);
            for (const auto& v : ambient[qi - 1]) lower.add(v);
            for (const auto& v : ambient[qi]) {
                auto coords = lower.express(face_image(t, q, 0, v));
                if (!coords) throw std::logic_error("d0 leaves the normalized complex");
                coords->resize(ambient[qi - 1].size());
                boundary[qi].push_back(std::move(*coords));
            }
        }
        for (const auto& v : ambient[qi]) labels[qi].push_back(vector_label(t.labels[qi], v));
    }
    ChainComplexF2 out(t.name + " normalized", std::move(labels), std::move(boundary));
    out.ambient = std::move(ambient);
    return out;
}

std::vector<BettiRow> betti_table(const ChainComplexF2& c) {
    std::vector<BettiRow> rows;
    for (int q = 0; q < c.max_degree(); ++q)
        rows.push_back({q, c.dim(q), c.rank_d(q), c.betti(q)});
    return rows;
}

std::string betti_csv(const std::vector<BettiRow>& rows) {
    std::ostringstream out;
    out << "degree,dim,rank_d,betti\n";
    for (const auto& r : rows)
        out << r.degree << ',' << r.dim << ',' << r.rank_d << ',' << r.betti << '\n';
    return out.str();
}

std::string betti_comparison_csv(const std::vector<BettiRow>& associated,
                                 const std::vector<BettiRow>& normalized) {
    if (associated.size() != normalized.size())
        throw std::invalid_argument("Betti tables of different lengths");
    std::ostringstream out;
    out << "degree,dim,rank_d,betti,dim_normalized,rank_d_normalized,betti_normalized,agree\n";
    for (std::size_t k = 0; k < associated.size(); ++k) {
        const auto& a = associated[k];
        const auto& n = normalized[k];
        out << a.degree << ',' << a.dim << ',' << a.rank_d << ',' << a.betti << ',' << n.dim
            << ',' << n.rank_d << ',' << n.betti << ',' << (a.betti == n.betti ? "true" : "false")
            << '\n';
    }
    return out.str();
}

}  // namespace simpdelta
