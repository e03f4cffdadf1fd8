#include <doctest.h>

#include <random>
#include <set>

#include "simpdelta/f2.hpp"

using namespace simpdelta;

namespace {

F2Vector random_vector(std::mt19937_64& rng, std::size_t dim, double density = 0.4) {
    std::bernoulli_distribution bit(density);
    F2Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k)
        if (bit(rng)) v.set(k);
    return v;
}

F2Vector combination(const std::vector<F2Vector>& columns, std::size_t rows, unsigned mask) {
    F2Vector sum(rows);
    for (std::size_t k = 0; k < columns.size(); ++k)
        if ((mask >> k) & 1U) sum ^= columns[k];
    return sum;
}

// All 2^n subset sums; the span has 2^rank elements.
std::size_t brute_rank(const std::vector<F2Vector>& columns, std::size_t rows) {
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < (1U << columns.size()); ++mask)
        seen.insert(combination(columns, rows, mask).to_string());
    std::size_t r = 0;
    while ((std::size_t{1} << r) < seen.size()) ++r;
    return r;
}

}  // namespace

TEST_CASE("vector basics") {
    F2Vector v(130);
    CHECK(v.is_zero());
    CHECK(v.lowest() == 130);
    v.set(129);
    v.flip(3);
    CHECK(v.count() == 2);
    CHECK(v.lowest() == 3);
    CHECK(v.support() == std::vector<std::size_t>{3, 129});
    v ^= F2Vector::unit(130, 3);
    CHECK(v.support() == std::vector<std::size_t>{129});
    v.set(129, false);
    CHECK(v.is_zero());
    F2Vector w(3);
    w.set(1);
    CHECK(w.to_string() == "010");
    w.resize(70);
    CHECK(w.dim() == 70);
    CHECK(w.get(1));
    CHECK_FALSE(w.get(69));
}

TEST_CASE("matrix product and application") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 7, m = 1 + rng() % 7, p = 1 + rng() % 7;
        std::vector<F2Vector> ca, cb;
        for (std::size_t k = 0; k < m; ++k) ca.push_back(random_vector(rng, n));
        for (std::size_t k = 0; k < p; ++k) cb.push_back(random_vector(rng, m));
        const auto A = F2Matrix::from_columns(n, ca);
        const auto B = F2Matrix::from_columns(m, cb);
        const auto AB = A * B;
        CHECK(AB.rows() == n);
        CHECK(AB.cols() == p);
        const auto x = random_vector(rng, p);
        CHECK(AB.apply(x) == A.apply(B.apply(x)));
        CHECK(A.apply(F2Vector::unit(m, 0)) == ca[0]);
    }
}

TEST_CASE("rank and kernel against brute force") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
        std::vector<F2Vector> columns;
        for (std::size_t k = 0; k < cols; ++k) columns.push_back(random_vector(rng, rows));
        const std::size_t r = brute_rank(columns, rows);
        CHECK(F2Matrix::from_columns(rows, columns).rank() == r);

        F2Span span(rows, true);
        for (const auto& c : columns) span.add(c);
        CHECK(span.rank() == r);
        CHECK(span.generators() == cols);
        CHECK(span.relations().size() == cols - r);

        const auto kernel = kernel_basis(rows, columns);
        CHECK(kernel.size() == cols - r);
        for (const auto& x : kernel) {
            CHECK_FALSE(x.is_zero());
            CHECK(F2Matrix::from_columns(rows, columns).apply(x).is_zero());
        }
        CHECK(brute_rank(kernel, cols) == kernel.size());

        // membership and solutions
        for (unsigned mask = 0; mask < (1U << cols) && mask < 64; ++mask) {
            const auto target = combination(columns, rows, mask);
            CHECK(span.contains(target));
            const auto coeffs = span.express(target);
            REQUIRE(coeffs.has_value());
            CHECK(F2Matrix::from_columns(rows, columns).apply(*coeffs) == target);
        }
        const auto probe = random_vector(rng, rows);
        bool in_span = false;
        for (unsigned mask = 0; mask < (1U << cols); ++mask)
            in_span = in_span || combination(columns, rows, mask) == probe;
        CHECK(span.contains(probe) == in_span);
        CHECK(span.express(probe).has_value() == in_span);
    }
}

TEST_CASE("add reports independence") {
    F2Span span(4);
    F2Vector a(4), b(4);
    a.set(0);
    b.set(1);
    CHECK(span.add(a));
    CHECK(span.add(b));
    CHECK_FALSE(span.add(a ^ b));
    CHECK_FALSE(span.add(F2Vector(4)));
    CHECK(span.rank() == 2);
}

TEST_CASE("empty inputs") {
    CHECK(kernel_basis(3, {}).empty());
    CHECK(F2Matrix(0, 0).rank() == 0);
    CHECK(F2Matrix(2, 3).is_zero());
    std::vector<F2Vector> zeros(3, F2Vector(2));
    CHECK(kernel_basis(2, zeros).size() == 3);
}
