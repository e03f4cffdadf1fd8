#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "simpdelta/errors.hpp"
#include "simpdelta/words.hpp"

using namespace simpdelta;

namespace {

SimplicialWord W(const char* text) { return SimplicialWord::parse(text); }

// Every word of length <= max_length over d_0..d_r, s_0..s_r with r = max_index.
std::vector<SimplicialWord> all_words(int max_length, int max_index) {
    std::vector<Generator> alphabet;
    for (int r = 0; r <= max_index; ++r) {
        alphabet.push_back(Generator::face(r));
        alphabet.push_back(Generator::degeneracy(r));
    }
    std::vector<SimplicialWord> out{SimplicialWord::identity()};
    std::vector<std::vector<Generator>> layer{{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::vector<Generator>> next;
        for (const auto& w : layer)
            for (const auto& g : alphabet) {
                auto v = w;
                v.push_back(g);
                out.emplace_back(v);
                next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return out;
}

SimplicialWord random_word(std::mt19937_64& rng, int max_length, int max_index) {
    std::uniform_int_distribution<int> len(0, max_length), idx(0, max_index), coin(0, 1);
    std::vector<Generator> g;
    const int n = len(rng);
    for (int k = 0; k < n; ++k)
        g.push_back(coin(rng) ? Generator::face(idx(rng)) : Generator::degeneracy(idx(rng)));
    return SimplicialWord(g);
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(W("s3 s1 d0").to_string() == "s3 s1 d0");
    CHECK(W("id").is_identity());
    CHECK(W("").is_identity());
    CHECK(SimplicialWord::identity().to_string() == "id");
    CHECK(W("s3 s1 d0").length() == 3);
    CHECK(W("s3 s1 d0").factors()[2] == Generator::face(0));
    CHECK_THROWS_AS(W("x1"), ParseError);
    CHECK_THROWS_AS(W("s"), ParseError);
    CHECK_THROWS_AS(W("d-1"), ParseError);
}

TEST_CASE("compose") {
    CHECK(compose(W("d0"), W("s0")) == W("d0 s0"));
    CHECK(compose(SimplicialWord::identity(), W("s2 d1")) == W("s2 d1"));
    CHECK(compose(W("s1"), W("d2")) == W("s1 d2"));
    CHECK(compose(W("s1 s0"), W("d2 d0")).degree_shift() == 0);
}

TEST_CASE("normalize examples") {
    CHECK(normalize(W("d1 s0"), 2).is_identity());
    CHECK(normalize(W("d3 s0"), 3).word() == W("s0 d2"));
    CHECK(normalize(W("s0 s0"), 1).word() == W("s1 s0"));
    CHECK(normalize(W("s0 s0"), 1).degeneracies() == std::vector<int>{1, 0});
    CHECK(normalize(W("d0 d0"), 2).faces() == std::vector<int>{0, 1});
    CHECK(normalize(W("d0"), 0).is_null());
    CHECK(normalize(W("id"), 0).is_identity());
}

TEST_CASE("normalize rejects out-of-range indices") {
    CHECK_THROWS_AS(normalize(W("d3"), 2), OutOfRange);
    CHECK_THROWS_AS(normalize(W("s2 s0"), 0), OutOfRange);
    CHECK_THROWS_AS(normalize(W("d1 d1"), 1), OutOfRange);
    CHECK_FALSE(is_defined_on(W("d3"), 2));
    CHECK(is_defined_on(W("d2"), 2));
    // a negative intermediate degree is reached first, so this is Null
    CHECK(normalize(W("d5 d0"), 0).is_null());
}

TEST_CASE("target degree") {
    CHECK(target_degree(W("s0"), 2) == 3);
    CHECK(target_degree(W("d1 d0"), 5) == 3);
    CHECK(target_degree(W("d0"), 0) == -1);
}

TEST_CASE("suspend_word examples") {
    CHECK(suspend_word(W("s0 d1")) == W("s1 d2"));
    CHECK(suspend_word(SimplicialWord::identity()).is_identity());
    CHECK(suspend_word(W("d0 d0")) == W("d1 d1"));
    CHECK(suspend_word(W("s0"), 3) == W("s3"));
}

TEST_CASE("normal forms agree with monotone maps, exhaustively") {
    const auto words = all_words(4, 4);
    std::size_t maps = 0;
    for (const auto& w : words) {
        for (int n = 0; n <= 4; ++n) {
            switch (oracle::fate(w, n)) {
                case oracle::Fate::OutOfRange:
                    CHECK_THROWS_AS(normalize(w, n), OutOfRange);
                    CHECK_FALSE(is_defined_on(w, n));
                    break;
                case oracle::Fate::Negative:
                    CHECK(normalize(w, n).is_null());
                    break;
                case oracle::Fate::Map: {
                    const auto theta = oracle::monotone_map(w, n);
                    REQUIRE(theta.has_value());
                    const NormalForm nf = normalize(w, n);
                    CHECK(nf.to_string() == oracle::normal_form_of_map(*theta, n));
                    // the normal form induces the same map
                    CHECK(oracle::monotone_map(nf.word(), n) == theta);
                    CHECK(reduce_formal(w) == nf.word());
                    ++maps;
                    break;
                }
            }
        }
    }
    CHECK(maps > 10000);
}

TEST_CASE("equal maps iff equal normal forms") {
    const auto words = all_words(3, 3);
    for (int n = 0; n <= 3; ++n) {
        std::map<std::vector<int>, std::string> by_map;
        std::map<std::string, std::vector<int>> by_nf;
        for (const auto& w : words) {
            if (oracle::fate(w, n) != oracle::Fate::Map) continue;
            const auto theta = *oracle::monotone_map(w, n);
            const std::string nf = normalize(w, n).to_string();
            auto [a, fresh_a] = by_map.emplace(theta, nf);
            if (!fresh_a) CHECK(a->second == nf);
            auto [b, fresh_b] = by_nf.emplace(nf, theta);
            if (!fresh_b) CHECK(b->second == theta);
        }
    }
}

TEST_CASE("random long words against the map oracle") {
    std::mt19937_64 rng(7);
    int maps = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const auto w = random_word(rng, 10, 6);
        const int n = static_cast<int>(rng() % 7);
        if (oracle::fate(w, n) != oracle::Fate::Map) continue;
        ++maps;
        const auto theta = *oracle::monotone_map(w, n);
        CHECK(normalize(w, n).to_string() == oracle::normal_form_of_map(theta, n));
    }
    CHECK(maps > 500);
}

TEST_CASE("suspension transfers definedness and commutes with normalization") {
    const auto words = all_words(4, 3);
    for (const auto& w : words) {
        const auto sw = suspend_word(w);
        CHECK(sw.degree_shift() == w.degree_shift());
        CHECK(reduce_formal(sw) == suspend_word(reduce_formal(w)));
        for (int n = 0; n <= 4; ++n) {
            const auto f = oracle::fate(w, n);
            // stepping into degree -1 is the one place where suspension can
            // turn a zero map into an undefined word
            if (f == oracle::Fate::Negative) continue;
            CHECK(is_defined_on(w, n) == is_defined_on(sw, n + 1));
            if (f == oracle::Fate::Map)
                CHECK(normalize(sw, n + 1).word() == suspend_word(normalize(w, n).word()));
        }
    }
}

TEST_CASE("d0 after a suspended word equals the word after d0") {
    const auto words = all_words(3, 3);
    for (const auto& w : words)
        for (int n = 0; n <= 4; ++n) {
            if (oracle::fate(w, n) != oracle::Fate::Map) continue;
            const auto lhs = oracle::monotone_map(compose(W("d0"), suspend_word(w)), n + 1);
            const auto rhs = oracle::monotone_map(compose(w, W("d0")), n + 1);
            REQUIRE(lhs.has_value());
            REQUIRE(rhs.has_value());
            CHECK(*lhs == *rhs);
            CHECK(normalize(compose(W("d0"), suspend_word(w)), n + 1) ==
                  normalize(compose(w, W("d0")), n + 1));
        }
}

TEST_CASE("zero sums stay zero under suspension") {
    // words with a common normal form at n cancel in pairs; their
    // suspensions must still share a normal form at n+1
    const auto words = all_words(4, 3);
    for (int n = 0; n <= 3; ++n) {
        std::map<std::string, std::vector<SimplicialWord>> groups;
        for (const auto& w : words)
            if (oracle::fate(w, n) == oracle::Fate::Map)
                groups[normalize(w, n).to_string()].push_back(w);
        for (const auto& [nf, group] : groups) {
            const std::string first = normalize(suspend_word(group.front()), n + 1).to_string();
            for (const auto& w : group) CHECK(normalize(suspend_word(w), n + 1).to_string() == first);
        }
    }
}

TEST_CASE("reduce_formal reports a bounded number of rewrite steps") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = random_word(rng, 10, 6);
        std::size_t steps = 0;
        const auto r = reduce_formal(w, &steps);
        CHECK(steps <= w.length() * w.length() + w.length());
        CHECK(reduce_formal(r) == r);
        CHECK(r.degree_shift() == w.degree_shift());
    }
}

TEST_CASE("compose_reduced matches reducing the concatenation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = reduce_formal(random_word(rng, 5, 4));
        const auto b = reduce_formal(random_word(rng, 5, 4));
        CHECK(compose_reduced(a, b) == reduce_formal(compose(a, b)));
    }
}
