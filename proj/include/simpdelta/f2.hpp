#pragma once

// Dense bit-packed linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simpdelta {

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static F2Vector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return dim_; }
    void resize(std::size_t dim);

    bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
    void set(std::size_t k, bool value = true);
    void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }

    bool is_zero() const;
    std::size_t count() const;
    // Index of the lowest set bit; dim() if zero.
    std::size_t lowest() const;
    std::vector<std::size_t> support() const;

    // Requires other.dim() <= dim().
    F2Vector& operator^=(const F2Vector& other);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major matrix; rows() x cols().
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    // Matrix whose k-th column is columns[k] (each of dimension `rows`).
    static F2Matrix from_columns(std::size_t rows, const std::vector<F2Vector>& columns);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    F2Vector& row(std::size_t r) { return rows_[r]; }
    const F2Vector& row(std::size_t r) const { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }

    F2Vector apply(const F2Vector& x) const;
    F2Matrix operator*(const F2Matrix& other) const;
    bool is_zero() const;
    std::size_t rank() const;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

// Incremental echelon basis of the span of a sequence of generators, keyed
// by lowest set bit. With tracking enabled it also records how each reduced
// row is built from the generators, which gives kernels and solutions.
class F2Span {
public:
    explicit F2Span(std::size_t dim, bool track = false);

    // Returns true if v is independent of the generators added so far.
    bool add(const F2Vector& v);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t generators() const { return generators_; }

    bool contains(const F2Vector& v) const;

    // A subset of the generators (as a vector over generator indices) that
    // sums to v, or nullopt. Requires tracking.
    std::optional<F2Vector> express(const F2Vector& v) const;

    // One relation among the generators per dependent generator; together a
    // basis of the kernel of (generator index -> generator). Requires tracking.
    const std::vector<F2Vector>& relations() const { return relations_; }

private:
    std::size_t dim_;
    bool track_;
    std::size_t generators_ = 0;
    std::vector<F2Vector> rows_;
    std::vector<F2Vector> combos_;
    std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
    std::vector<F2Vector> relations_;
};

// Basis of {x : sum x_k columns[k] = 0}.
std::vector<F2Vector> kernel_basis(std::size_t rows, const std::vector<F2Vector>& columns);

}  // namespace simpdelta
