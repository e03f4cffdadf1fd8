// One line per acceptance criterion; exit status 0 only if every line passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "numeric.hpp"
#include "oracles.hpp"
#include "simpdelta/chain_complex.hpp"
#include "simpdelta/operations.hpp"
#include "simpdelta/relations.hpp"

using namespace simpdelta;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

Verdict relations_pass(const std::vector<std::string>& names, int max_total) {
    Verdict v;
    std::size_t checks = 0;
    for (const auto& name : names) {
        const auto r = check_relation(name, max_total);
        checks += r.checked();
        if (!r.passed() && v.pass) {
            v.pass = false;
            for (const auto& inst : r.instances)
                if (inst.first_failure) {
                    v.detail = name + " [" + inst.label + "] at " + inst.first_failure->where;
                    break;
                }
        }
    }
    if (v.pass) v.detail = std::to_string(checks) + " checks";
    return v;
}

Verdict criterion1() {
    std::vector<std::string> names;
    for (int k = 0; k <= 4; ++k) names.push_back("dwyer-" + std::to_string(k));
    Verdict v = relations_pass(names, 10);
    // the same sums assembled independently from the case display
    oracle::DisplayA a;
    for (int k = 0; k <= 4 && v.pass; ++k)
        for (const auto& s : Window{10, 2 * k}.bidegrees()) {
            const auto got = oracle::as_maps(a.at(k, s.i, s.j), s.i, s.j);
            const auto want = s.i == k && s.j == k ? oracle::identity_at(k, k) : oracle::MapSum{};
            if (got != want) {
                v = {false, "reference assembly differs for k=" + std::to_string(k) + " at " + to_string(s)};
                break;
            }
        }
    if (v.pass) v.detail += ", reference assembly agrees";
    return v;
}

Verdict criterion2() {
    Verdict v;
    std::string failures;
    for (int k = 1; k <= 4; ++k) {
        const auto r = check_relation("lemma3-" + std::to_string(k), 10);
        if (r.passed()) continue;
        v.pass = false;
        const auto& w = *r.instances.front().first_failure;
        std::string diff;
        for (const auto& t : w.lhs_only) diff += " +" + t;
        for (const auto& t : w.rhs_only) diff += " -" + t;
        failures += (failures.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + " at " + w.where + ":" + diff;
    }
    if (v.pass) return {true, "k=1..4 on i+j <= 10"};
    // informational: where the recursion does hold
    const auto inst = relation_instances("lemma3-1", 10).front();
    const bool upper = em_equal(inst.lhs, inst.rhs, Window{10, 2}).equal;
    v.detail = failures + " (k=1 holds on 2 <= i+j <= 10: " + (upper ? "yes" : "no") + ")";
    return v;
}

Verdict criterion3() {
    Verdict v = relations_pass({"D-chain-map"}, 8);
    if (!v.pass) return v;
    const auto n = numeric::chain_map(4, 6);
    if (!n.ok()) return {false, "numeric: " + *n.first_difference};
    v.detail += "; numeric " + std::to_string(n.evaluations) +
                " basis tensors of Delta(a)(x)Delta(b), a,b <= 4, i+j <= 6";
    return v;
}

Verdict criterion4() {
    return relations_pass({"simp0", "simp1", "simp2", "simp3", "simp4", "simp5", "d0-intertwining"}, 8);
}

Verdict criterion5() {
    std::size_t count = 0;
    for (int q = 2; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 4);
        for (const auto& z : fixtures::spanning_cycles(a, 0))
            for (int i = 2; i <= q; ++i) {
                const auto d = delta_i(a, z, i).value;
                ++count;
                const auto bad = nonzero_faces(a, d);
                if (!bad.empty())
                    return {false, "q=" + std::to_string(q) + " i=" + std::to_string(i) + ": d_" +
                                       std::to_string(bad.front()) + " nonzero"};
            }
    }
    return {true, std::to_string(count) + " cycles, all faces zero"};
}

Verdict criterion6() {
    std::size_t count = 0;
    for (int q = 2; q <= 4; ++q) {
        const auto a = algebra_model(q, q + 1, 4);
        for (const auto& z : fixtures::spanning_cycles(a, 0)) {
            const auto d = delta_i(a, z, 1).value;
            ++count;
            for (int j = 0; j <= q + 1; ++j) {
                const auto f = face_of(a, d, j);
                const bool ok = j == q ? f == multiply(a, z, z) : f.is_zero();
                if (!ok) return {false, "q=" + std::to_string(q) + " j=" + std::to_string(j)};
            }
        }
    }
    return {true, std::to_string(count) + " cycles"};
}

Verdict criterion7() {
    std::size_t count = 0;
    for (int q = 1; q <= 4; ++q) {
        const auto a = algebra_model(q, 2 * q, 2);
        const auto z = fundamental_class(a);
        const auto seq = build_D_sequence(q);
        for (int i = 1; i <= q; ++i) {
            ++count;
            if (delta_i(a, z, i).value != theta_i(a, z, i, seq))
                return {false, "delta != theta for q=" + std::to_string(q) + " i=" + std::to_string(i)};
        }
        const auto zz = tensor(z, z);
        for (int k = 0; k <= q; ++k) {
            ++count;
            if (!(evaluate_em(seq[static_cast<std::size_t>(k)], zz, a, a) ==
                  evaluate_em(em_suspend(seq[0], k), zz, a, a)))
                return {false, "D^k != S^k(D^0) on z(x)z for q=" + std::to_string(q) +
                                   " k=" + std::to_string(k)};
        }
    }
    return {true, std::to_string(count) + " comparisons"};
}

Verdict criterion8() {
    const auto r = delta_report(2, 2);
    if (!r.is_cycle || !r.homology_class_nonzero || !*r.homology_class_nonzero)
        return {false, "delta_2(z) is not a nonzero class"};
    std::ifstream in(SIMPDELTA_GOLDEN_DIR "/delta_q2_i2.json");
    std::stringstream golden;
    golden << in.rdbuf();
    if (delta_report_json(r) + "\n" != golden.str()) return {false, "differs from the golden file"};

    std::vector<ModelTables> models{
        tabulate(SimplicialSetModel::delta(1, 4), 4), tabulate(SimplicialSetModel::delta(2, 5), 5),
        tabulate(SimplicialSetModel::boundary_delta(2, 5), 5), tabulate(sphere_model(2, 5), 5),
        tabulate(sphere_model(3, 6), 6), tabulate(algebra_model(2, 5, 2), 5),
        tabulate(algebra_model(3, 6, 2), 6)};
    for (const auto& t : models) {
        const auto a = betti_table(associated_complex(t));
        const auto n = betti_table(normalized_complex(t));
        for (std::size_t q = 0; q < a.size(); ++q)
            if (a[q].betti != n[q].betti)
                return {false, t.name + ": homology differs in degree " + std::to_string(q)};
    }
    return {true, "class nonzero, golden matches, " + std::to_string(models.size()) +
                      " models agree"};
}

Verdict criterion9() {
    const auto r = check_word_soundness(10000, 0);
    if (!r.passed()) return {false, report_text(r)};
    // the same kind of words against vertex-sequence maps
    std::mt19937_64 rng(0);
    std::size_t maps = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Generator> g;
        const int len = static_cast<int>(rng() % 11);
        for (int k = 0; k < len; ++k) {
            const int idx = static_cast<int>(rng() % 7);
            g.push_back(rng() % 2 ? Generator::face(idx) : Generator::degeneracy(idx));
        }
        const SimplicialWord w(g);
        const int n = static_cast<int>(rng() % 7);
        if (oracle::fate(w, n) != oracle::Fate::Map) continue;
        ++maps;
        if (normalize(w, n).to_string() != oracle::normal_form_of_map(*oracle::monotone_map(w, n), n))
            return {false, "normal form of " + w.to_string() + " on degree " + std::to_string(n)};
    }
    return {true, std::to_string(r.checked()) + " checks, " + std::to_string(maps) +
                      " oracle comparisons"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"Dwyer conditions A^k = phi_k on i+j >= 2k, k=0..4, i+j <= 10", criterion1},
        {"A^k recursion, k=1..4, i+j <= 10", criterion2},
        {"shuffle map is a chain map, symbolic and numeric", criterion3},
        {"simp0-simp5 and d0-intertwining, i+j <= 8", criterion4},
        {"delta_i(z) is a normalized cycle, q=2..4, 2 <= i <= q", criterion5},
        {"d_j delta_1(z) = 0 for j != q, d_q delta_1(z) = z^2", criterion6},
        {"delta_i = theta_i and D^k(z(x)z) = S^k(D^0)(z(x)z), q <= 4", criterion7},
        {"delta_2(z) nonzero in homology; normalized and associated homology agree", criterion8},
        {"word engine soundness, 10000 random words", criterion9},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << k + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  "
             << criteria[k].first << "  (" << v.detail << "; " << secs << " s)";
        std::cout << line.str() << std::endl;
        failures += v.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
