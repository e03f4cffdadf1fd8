#include "simpdelta/f2.hpp"

#include <bit>
#include <stdexcept>

namespace simpdelta {

F2Vector F2Vector::unit(std::size_t dim, std::size_t index) {
    F2Vector v(dim);
    v.set(index);
    return v;
}

void F2Vector::resize(std::size_t dim) {
    if (dim < dim_) {
        for (std::size_t k = dim; k < dim_; ++k) set(k, false);
    }
    dim_ = dim;
    words_.resize((dim + 63) / 64, 0);
}

void F2Vector::set(std::size_t k, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);
    if (value)
        words_[k / 64] |= bit;
    else
        words_[k / 64] &= ~bit;
}

bool F2Vector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t F2Vector::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t F2Vector::lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return dim_;
}

std::vector<std::size_t> F2Vector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
    if (other.dim_ > dim_) throw std::invalid_argument("F2Vector dimension mismatch");
    for (std::size_t k = 0; k < other.words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::string F2Vector::to_string() const {
    std::string out(dim_, '0');
    for (std::size_t k = 0; k < dim_; ++k)
        if (get(k)) out[k] = '1';
    return out;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

F2Matrix F2Matrix::from_columns(std::size_t rows, const std::vector<F2Vector>& columns) {
    F2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r : columns[c].support()) m.rows_[r].set(c);
    return m;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("F2Matrix::apply dimension mismatch");
    F2Vector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        F2Vector masked = rows_[r];
        bool parity = false;
        for (std::size_t c : x.support()) parity ^= masked.get(c);
        out.set(r, parity);
    }
    return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("F2Matrix product dimension mismatch");
    F2Matrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k : rows_[r].support()) out.rows_[r] ^= other.rows_[k];
    return out;
}

bool F2Matrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

std::size_t F2Matrix::rank() const {
    F2Span span(cols_);
    for (const auto& r : rows_) span.add(r);
    return span.rank();
}

F2Span::F2Span(std::size_t dim, bool track)
    : dim_(dim), track_(track), pivot_row_(dim, -1) {}

bool F2Span::add(const F2Vector& v) {
    if (v.dim() != dim_) throw std::invalid_argument("F2Span::add dimension mismatch");
    const std::size_t index = generators_++;
    F2Vector row = v;
    F2Vector combo;
    if (track_) {
        combo = F2Vector(generators_);
        combo.set(index);
    }
    for (std::size_t p = row.lowest(); p < dim_; p = row.lowest()) {
        const std::ptrdiff_t r = pivot_row_[p];
        if (r < 0) {
            pivot_row_[p] = static_cast<std::ptrdiff_t>(rows_.size());
            rows_.push_back(std::move(row));
            if (track_) combos_.push_back(std::move(combo));
            return true;
        }
        row ^= rows_[static_cast<std::size_t>(r)];
        if (track_) combo ^= combos_[static_cast<std::size_t>(r)];
    }
    if (track_) relations_.push_back(std::move(combo));
    return false;
}

bool F2Span::contains(const F2Vector& v) const {
    F2Vector row = v;
    for (std::size_t p = row.lowest(); p < dim_; p = row.lowest()) {
        const std::ptrdiff_t r = pivot_row_[p];
        if (r < 0) return false;
        row ^= rows_[static_cast<std::size_t>(r)];
    }
    return true;
}

std::optional<F2Vector> F2Span::express(const F2Vector& v) const {
    if (!track_) throw std::logic_error("F2Span::express needs tracking");
    F2Vector row = v;
    F2Vector combo(generators_);
    for (std::size_t p = row.lowest(); p < dim_; p = row.lowest()) {
        const std::ptrdiff_t r = pivot_row_[p];
        if (r < 0) return std::nullopt;
        row ^= rows_[static_cast<std::size_t>(r)];
        combo ^= combos_[static_cast<std::size_t>(r)];
    }
    return combo;
}

std::vector<F2Vector> kernel_basis(std::size_t rows, const std::vector<F2Vector>& columns) {
    F2Span span(rows, true);
    for (const auto& c : columns) span.add(c);
    std::vector<F2Vector> out = span.relations();
    for (auto& v : out) v.resize(columns.size());
    return out;
}

}  // namespace simpdelta
