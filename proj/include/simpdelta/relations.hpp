#pragma once

// Catalog of identities between EM transforms, each decided with em_equal()
// over an explicit window of bidegrees.
//
//   simp0            (d0(x)id)(s0(x)id) = id(x)id
//   simp1            S F S(bd(x)id) + S F (d0(x)id) = S F (bd(x)id), and the
//                    twisted form, for several F (post-composed form only)
//   simp2            (id(x)bd)(id(x)d0) = (id(x)d0)(id(x)bd) + id(x)d0d0
//   simp3            (id(x)bd)(id(x)s0) = (id(x)s0)(id(x)bd) + id(x)s0d0
//   simp4            S(delta) = delta + d0(x)d0
//   simp5            (d0(x)d0) S F = F (d0(x)d0), for several F
//   d0-intertwining  d0 S(w) = w d0 for every short word w (word level)
//   D-chain-map      delta D + D(bd(x)id) + D(id(x)bd) = 0
//   dwyer-<k>        A^k = phi_k on i+j >= 2k
//   lemma3-<k>       A^k = S(A^{k-1}) + A^{k-1}(id(x)d0)  (k even)
//                    A^k = S(A^{k-1}) + A^{k-1}(d0(x)id)  (k odd)

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simpdelta/em_transform.hpp"

namespace simpdelta {

struct RelationInstance {
    std::string label;
    EMTransform lhs;
    EMTransform rhs;
    Window window;
};

struct Witness {
    std::string where;
    std::vector<std::string> lhs_only;
    std::vector<std::string> rhs_only;
};

struct InstanceReport {
    std::string label;
    std::size_t checked = 0;
    bool passed = true;
    std::optional<Witness> first_failure;
};

struct RelationReport {
    std::string name;
    int max_total = 0;
    std::vector<InstanceReport> instances;

    bool passed() const;
    std::size_t checked() const;
};

// Keys accepted by check_relation(); parameterized families are listed with
// a placeholder ("dwyer-<k>", "lemma3-<k>").
std::vector<std::string> relation_catalog();

// The transform pairs behind a catalog key. Throws UnknownRelation.
std::vector<RelationInstance> relation_instances(std::string_view name, int max_total);

// Checks a catalog relation on all bidegrees with i+j <= max_total (and the
// relation's own lower bound, e.g. 2k for dwyer-<k>). Throws UnknownRelation.
RelationReport check_relation(std::string_view name, int max_total, unsigned threads = 1);

// Seeded random words on Delta(n), n <= max_n, length <= max_length: evaluation
// through the normal form agrees with factor-by-factor evaluation on every
// basis simplex, and suspension transfers definedness and commutes with
// normalization.
RelationReport check_word_soundness(std::size_t count, std::uint64_t seed, int max_n = 6,
                                    int max_length = 10);

// Word-level check of d0 S(w) = w d0 over all words of length <= max_length
// defined on degrees 0..max_degree.
RelationReport check_d0_intertwining(int max_degree, int max_length = 3);

std::string report_text(const RelationReport& report);
std::string report_json(const RelationReport& report);

}  // namespace simpdelta
