#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simpdelta/chain_complex.hpp"
#include "simpdelta/operations.hpp"

using namespace simpdelta;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// s_nu(z) s_mu(z) on the fundamental simplex, read off as vertex sequences.
AlgebraElement closed_form(int q, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
    AlgebraElement out(q + static_cast<int>(pairs.front().first.size()));
    for (const auto& [mu, nu] : pairs) {
        const auto l = oracle::monotone_map(oracle::degeneracies_of(nu), q);
        const auto r = oracle::monotone_map(oracle::degeneracies_of(mu), q);
        out.toggle(Monomial::of({*l, *r}));
    }
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> brute_U(int q, int i) {
    auto all = oracle::shuffles(i, i);
    for (auto& [mu, nu] : all) {
        for (int& v : mu) v += q - i;
        for (int& v : nu) v += q - i;
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> brute_V(int q, int i) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (auto& p : brute_U(q, i))
        if (p.first.front() == q - i) out.push_back(p);
    return out;
}

AlgebraElement graded_part(const AlgebraElement& x, std::size_t p) {
    AlgebraElement out(x.degree());
    for (const auto& m : x.support())
        if (m.polynomial_degree() == p) out.toggle(m);
    return out;
}

}  // namespace

TEST_CASE("enumeration of U and V") {
    for (int q = 1; q <= 5; ++q)
        for (int i = 1; i <= q; ++i) {
            const auto U = enumerate_U(q, i);
            const auto V = enumerate_V(q, i);
            CHECK(static_cast<long>(U.size()) == oracle::binomial(2 * i, i));
            CHECK(static_cast<long>(V.size()) == oracle::binomial(2 * i - 1, i - 1));
            const auto bu = brute_U(q, i);
            REQUIRE(bu.size() == U.size());
            for (std::size_t k = 0; k < U.size(); ++k) {
                CHECK(U[k].mu == bu[k].first);
                CHECK(U[k].nu == bu[k].second);
            }
            CHECK(std::is_sorted(U.begin(), U.end()));
            CHECK(V.size() == brute_V(q, i).size());
        }
    CHECK(enumerate_V(4, 3).size() == 10);
    CHECK(enumerate_V(3, 1) == std::vector<ShufflePair>{{{2}, {3}}});
    CHECK(enumerate_V(2, 2) ==
          std::vector<ShufflePair>{{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});
    CHECK_THROWS_AS(enumerate_U(2, 3), BadRange);
    CHECK_THROWS_AS(enumerate_V(2, 0), BadRange);
    CHECK(shuffle_word({0, 2}) == SimplicialWord::parse("s2 s0"));
}

TEST_CASE("delta_i examples") {
    const auto a = algebra_model(2, 6, 2);
    const auto z = fundamental_class(a);
    const auto d = delta_i(a, z, 2);
    CHECK_FALSE(d.warning.has_value());
    REQUIRE(d.value.size() == 3);
    std::set<std::vector<std::string>> terms;
    for (const auto& m : d.value.support()) terms.insert(a.factor_labels(m));
    CHECK(terms == std::set<std::vector<std::string>>{
                       {"s3 s2", "s1 s0"}, {"s3 s1", "s2 s0"}, {"s2 s1", "s3 s0"}});
    for (int q = 1; q <= 4; ++q) {
        const auto b = algebra_model(q, q + 2, 2);
        const auto zq = fundamental_class(b);
        const auto d1 = delta_i(b, zq, 1);
        const auto expected = multiply(b, apply_word(b, SimplicialWord::degeneracy(q), zq),
                                       apply_word(b, SimplicialWord::degeneracy(q - 1), zq));
        CHECK(d1.value == expected);
        REQUIRE(d1.warning.has_value());
        CHECK(*d1.warning == "not a cycle: d_" + std::to_string(q) + " \xce\xb4_1(z) = z^2");
    }
    CHECK(delta_i(a, AlgebraElement(2), 2).value.is_zero());
}

TEST_CASE("delta_i errors") {
    const auto a = algebra_model(2, 4, 2);
    const auto z = fundamental_class(a);
    CHECK_THROWS_AS(delta_i(a, z, 3), BadRange);
    CHECK_THROWS_AS(delta_i(a, z, 0), BadRange);
    const auto wide = algebra_model(2, 5, 2);
    CHECK_THROWS_AS(delta_i(wide, apply_word(wide, SimplicialWord::degeneracy(0), z), 2), NotNormalizedCycle);
    CHECK_THROWS_AS(delta_i(algebra_model(2, 3, 2), z, 2), TruncationOverflow);
    const auto z2 = multiply(algebra_model(2, 4, 2), z, z);
    CHECK_THROWS_AS(delta_i(a, z2, 2), TruncationOverflow);
}

TEST_CASE("delta_i matches the vertex-sequence closed form") {
    for (int q = 1; q <= 4; ++q)
        for (int i = 1; i <= q; ++i) {
            const auto a = algebra_model(q, q + i, 2);
            CHECK(delta_i(a, fundamental_class(a), i).value == closed_form(q, brute_V(q, i)));
        }
}

TEST_CASE("cycle lemma on a spanning set") {
    for (int q = 2; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 4);
        for (const auto& z : fixtures::spanning_cycles(a, 0)) {
            REQUIRE(is_cycle(a, z));
            for (int i = 2; i <= q; ++i) {
                INFO("q=" << q << " i=" << i);
                const auto d = delta_i(a, z, i);
                CHECK(d.value.degree() == q + i);
                CHECK(nonzero_faces(a, d.value).empty());
                CHECK_FALSE(d.warning.has_value());
            }
        }
    }
}

TEST_CASE("delta_1 fails to be a cycle exactly at d_q") {
    for (int q = 2; q <= 4; ++q) {
        const auto a = algebra_model(q, q + 1, 4);
        for (const auto& z : fixtures::spanning_cycles(a, 0)) {
            const auto d = delta_i(a, z, 1).value;
            for (int j = 0; j <= q + 1; ++j) {
                const auto f = face_of(a, d, j);
                if (j == q)
                    CHECK(f == multiply(a, z, z));
                else
                    CHECK(f.is_zero());
            }
        }
    }
}

TEST_CASE("delta_i equals theta_i") {
    for (int q = 1; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 4);
        const auto seq = build_D_sequence(q - 1);
        for (const auto& z : fixtures::spanning_cycles(a, 1))
            for (int i = 1; i <= q; ++i) {
                INFO("q=" << q << " i=" << i);
                CHECK(delta_i(a, z, i).value == theta_i(a, z, i, seq));
            }
        const auto z = fundamental_class(a);
        CHECK(theta_i(a, z, q) == theta_i(a, z, q, seq));
        CHECK(theta_i(a, AlgebraElement(q), 1).is_zero());
    }
}

TEST_CASE("D^k(z (x) z) = S^k(D^0)(z (x) z)") {
    for (int q = 1; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 2);
        const auto zz = tensor(fundamental_class(a), fundamental_class(a));
        const auto seq = build_D_sequence(q);
        for (int k = 0; k <= q; ++k)
            CHECK(evaluate_em(seq[static_cast<std::size_t>(k)], zz, a, a) ==
                  evaluate_em(em_suspend(seq[0], k), zz, a, a));
    }
}

TEST_CASE("mu D(z (x) z)") {
    for (int q = 1; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 2);
        const auto z = fundamental_class(a);
        const auto m = mu_D_square(a, z);
        CHECK(m == multiply_tensor(a, evaluate_em(shuffle_D(), tensor(z, z), a, a)));
        CHECK(m == closed_form(q, brute_U(q, q)));
        if (q <= 2) CHECK(m.is_zero());
        CHECK(mu_D_square(a, AlgebraElement(q)).is_zero());
    }
}

TEST_CASE("delta_i respects homology classes") {
    // normalized boundaries in degree q of the quadratic part
    for (int q = 2; q <= 3; ++q) {
        const AlgebraModel quad(sphere_model(q, q + 1), 2, 2);
        const auto n = normalized_complex(quad, q + 1);
        std::vector<AlgebraElement> boundaries;
        for (const auto& col : n.boundary(q + 1)) {
            F2Vector amb(quad.basis(q).size());
            for (std::size_t k : col.support()) amb ^= n.ambient[static_cast<std::size_t>(q)][k];
            if (!amb.is_zero()) boundaries.push_back(from_vector(quad, q, amb));
        }
        REQUIRE_FALSE(boundaries.empty());

        const auto a = algebra_model(q, q + 3, 4);
        const auto z = fundamental_class(a);
        for (int i = 2; i <= q && q + i + 1 <= q + 3; ++i)
            for (const auto& b : boundaries) {
                INFO("q=" << q << " i=" << i);
                REQUIRE(is_cycle(a, z + b));
                const auto diff = delta_i(a, z, i).value + delta_i(a, z + b, i).value;
                // faces preserve polynomial degree, so each graded piece is
                // checked in its own summand
                for (std::size_t p = 2; p <= 4; ++p) {
                    const auto part = graded_part(diff, p);
                    if (part.is_zero()) continue;
                    const AlgebraModel graded(sphere_model(q, q + i + 1), static_cast<int>(p),
                                              static_cast<int>(p));
                    CHECK(is_boundary(graded, part));
                }
            }
    }
}

TEST_CASE("report for the Sphere(2) fundamental class") {
    const auto r = delta_report(2, 2);
    CHECK(r.is_cycle);
    CHECK(r.equals_theta());
    REQUIRE(r.homology_class_nonzero.has_value());
    CHECK(*r.homology_class_nonzero);
    const auto j = nlohmann::json::parse(delta_report_json(r));
    CHECK(j["degree"] == 4);
    CHECK(j["terms"].size() == 3);
    const std::string golden = read_file(SIMPDELTA_GOLDEN_DIR "/delta_q2_i2.json");
    REQUIRE_FALSE(golden.empty());
    CHECK(delta_report_json(r) + "\n" == golden);

    const auto r1 = delta_report(3, 1);
    CHECK_FALSE(r1.is_cycle);
    CHECK(r1.nonzero_faces == std::vector<int>{3});
    CHECK_FALSE(r1.homology_class_nonzero.has_value());
    CHECK(nlohmann::json::parse(delta_report_json(r1))["warning"] == "not a cycle: d_3 \xce\xb4_1(z) = z^2");
    CHECK_THROWS_AS(delta_report(2, 3), BadRange);
}
