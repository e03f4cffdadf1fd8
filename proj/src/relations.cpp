#include "simpdelta/relations.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "simpdelta/errors.hpp"
#include "simpdelta/models.hpp"

namespace simpdelta {

bool RelationReport::passed() const {
    for (const auto& inst : instances)
        if (!inst.passed) return false;
    return true;
}

std::size_t RelationReport::checked() const {
    std::size_t n = 0;
    for (const auto& inst : instances) n += inst.checked;
    return n;
}

std::vector<std::string> relation_catalog() {
    return {"simp0",       "simp1",    "simp2",      "simp3",     "simp4", "simp5",
            "d0-intertwining", "D-chain-map", "dwyer-<k>", "lemma3-<k>"};
}

namespace {

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view digits = name.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || k < 0)
        return std::nullopt;
    return k;
}

EMTransform word_pair(std::string_view left, std::string_view right) {
    return EMTransform::word_pair(SimplicialWord::parse(left), SimplicialWord::parse(right));
}

// Transforms substituted for "any F" in simp1 / simp5.
std::vector<EMTransform> sample_transforms() {
    auto d = build_D_sequence(2);
    return {shuffle_D(), d[0], d[1], d[2], identity_transform(), degen0_right(),
            boundary_left()};
}

}  // namespace

std::vector<RelationInstance> relation_instances(std::string_view name, int max_total) {
    const Window window{max_total, 0};
    std::vector<RelationInstance> out;

    if (name == "simp0") {
        out.push_back({"simp0", face0_left() * degen0_left(), identity_transform(), window});
    } else if (name == "simp1") {
        for (const auto& f : sample_transforms()) {
            const EMTransform sf = em_suspend(f);
            out.push_back({"F=" + f.name(),
                           sf * em_suspend(boundary_left()) + sf * face0_left(),
                           sf * boundary_left(), window});
            out.push_back({"twisted F=" + f.name(),
                           sf * em_suspend(boundary_right()) + sf * face0_right(),
                           sf * boundary_right(), window});
        }
    } else if (name == "simp2") {
        out.push_back({"simp2", boundary_right() * face0_right(),
                       face0_right() * boundary_right() + word_pair("id", "d0 d0"), window});
        out.push_back({"twisted", boundary_left() * face0_left(),
                       face0_left() * boundary_left() + word_pair("d0 d0", "id"), window});
    } else if (name == "simp3") {
        out.push_back({"simp3", boundary_right() * degen0_right(),
                       degen0_right() * boundary_right() + word_pair("id", "s0 d0"), window});
    } else if (name == "simp4") {
        out.push_back({"simp4", em_suspend(diagonal_delta()), diagonal_delta() + face0_both(),
                       window});
    } else if (name == "simp5") {
        for (const auto& f : sample_transforms())
            out.push_back({"F=" + f.name(), face0_both() * em_suspend(f), f * face0_both(),
                           window});
    } else if (name == "D-chain-map") {
        const EMTransform d = shuffle_D();
        const EMTransform lhs =
            em_sum({diagonal_delta() * d, d * boundary_left(), d * boundary_right()});
        out.push_back({"D-chain-map", lhs, EMTransform::zero(lhs.index_fn()), window});
    } else if (auto k = parse_suffix(name, "dwyer-")) {
        out.push_back({"A^" + std::to_string(*k) + " = phi_" + std::to_string(*k), build_Ak(*k),
                       phi(*k), Window{max_total, 2 * *k}});
    } else if (auto k3 = parse_suffix(name, "lemma3-"); k3 && *k3 >= 1) {
        const int k = *k3;
        auto d = build_D_sequence(k);
        const EMTransform ak = build_Ak(k, d);
        const EMTransform prev = build_Ak(k - 1, d);
        const EMTransform face = (k % 2 == 0) ? face0_right() : face0_left();
        out.push_back({"A^" + std::to_string(k) + " recursion", ak,
                       em_suspend(prev) + prev * face, window});
    } else {
        throw UnknownRelation("unknown relation '" + std::string(name) + "'");
    }
    return out;
}

RelationReport check_relation(std::string_view name, int max_total, unsigned threads) {
    if (name == "d0-intertwining") return check_d0_intertwining(max_total);
    RelationReport report;
    report.name = std::string(name);
    report.max_total = max_total;
    for (const auto& inst : relation_instances(name, max_total)) {
        const EqualityResult eq = em_equal(inst.lhs, inst.rhs, inst.window, threads);
        InstanceReport ir;
        ir.label = inst.label;
        ir.checked = eq.bidegrees_checked;
        ir.passed = eq.equal;
        if (!eq.equal) {
            Witness w;
            w.where = "bidegree " + to_string(*eq.witness);
            for (const auto& t : eq.only_left.terms()) w.lhs_only.push_back(t.to_string());
            for (const auto& t : eq.only_right.terms()) w.rhs_only.push_back(t.to_string());
            ir.first_failure = std::move(w);
        }
        report.instances.push_back(std::move(ir));
    }
    return report;
}

RelationReport check_d0_intertwining(int max_degree, int max_length) {
    RelationReport report;
    report.name = "d0-intertwining";
    report.max_total = max_degree;
    InstanceReport ir;
    ir.label = "d0 S(w) = w d0, |w| <= " + std::to_string(max_length);

    const SimplicialWord d0 = SimplicialWord::face(0);
    std::vector<Generator> factors;  // built right to left, reversed on use

    std::function<void(int, int)> visit = [&](int source, int degree) {
        std::vector<Generator> written(factors.rbegin(), factors.rend());
        const SimplicialWord w(std::move(written));
        ++ir.checked;
        const NormalForm lhs = normalize(compose(d0, suspend_word(w)), source + 1);
        const NormalForm rhs = normalize(compose(w, d0), source + 1);
        if (lhs != rhs && ir.passed) {
            ir.passed = false;
            ir.first_failure = Witness{"degree " + std::to_string(source) + ", w = " +
                                           w.to_string(),
                                       {lhs.to_string()},
                                       {rhs.to_string()}};
        }
        if (static_cast<int>(factors.size()) >= max_length || degree < 0) return;
        for (int r = 0; r <= degree; ++r) {
            for (const Generator g : {Generator::face(r), Generator::degeneracy(r)}) {
                factors.push_back(g);
                visit(source, degree + g.degree_shift());
                factors.pop_back();
            }
        }
    };
    for (int n = 0; n <= max_degree; ++n) visit(n, n);
    report.instances.push_back(std::move(ir));
    return report;
}

RelationReport check_word_soundness(std::size_t count, std::uint64_t seed, int max_n,
                                    int max_length) {
    RelationReport report;
    report.name = "word-soundness";
    report.max_total = max_length;
    InstanceReport eval{"normal form vs direct evaluation", 0, true, std::nullopt};
    InstanceReport susp{"suspension vs definedness and normalization", 0, true, std::nullopt};

    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    for (std::size_t trial = 0; trial < count; ++trial) {
        const int n = uniform(0, max_n);
        const int source = uniform(0, 3);
        const int length = uniform(0, max_length);

        // A defined word, built right to left, and a perturbed one whose
        // indices may overshoot by one.
        std::vector<Generator> defined, loose;
        int degree = source;
        for (int k = 0; k < length; ++k) {
            const bool face = degree > 0 && uniform(0, 1) == 0;
            const int index = uniform(0, degree);
            defined.push_back(face ? Generator::face(index) : Generator::degeneracy(index));
            const int skew = uniform(0, degree + 1);
            loose.push_back(face ? Generator::face(skew) : Generator::degeneracy(skew));
            degree += face ? -1 : 1;
        }
        std::reverse(defined.begin(), defined.end());
        std::reverse(loose.begin(), loose.end());
        const SimplicialWord w(std::move(defined));
        const SimplicialWord v(std::move(loose));

        const auto model = SimplicialSetModel::delta(n, source + length);
        ++eval.checked;
        for (const auto& s : model.basis(source)) {
            const SimplexElement x(source, {s});
            const SimplexElement direct = apply_word(model, w, x);
            const SimplexElement via_nf = apply_normal_form(model, w, x);
            if (!(direct == via_nf) && eval.passed) {
                eval.passed = false;
                eval.first_failure = Witness{"Delta(" + std::to_string(n) + "), " + w.to_string() +
                                                 " on " + model.label(s),
                                             {}, {}};
            }
        }

        ++susp.checked;
        for (const SimplicialWord* u : {&w, &v}) {
            const bool here = is_defined_on(*u, source);
            const SimplicialWord su = suspend_word(*u);
            bool ok = here == is_defined_on(su, source + 1);
            if (ok && here) {
                const NormalForm a = normalize(*u, source);
                const NormalForm b = normalize(su, source + 1);
                ok = a.is_null() ? b.is_null()
                                 : (!b.is_null() && b.word() == suspend_word(a.word()));
            }
            if (!ok && susp.passed) {
                susp.passed = false;
                susp.first_failure =
                    Witness{"degree " + std::to_string(source) + ", w = " + u->to_string(), {}, {}};
            }
        }
    }
    report.instances.push_back(std::move(eval));
    report.instances.push_back(std::move(susp));
    return report;
}

std::string report_text(const RelationReport& report) {
    std::ostringstream out;
    out << (report.passed() ? "PASS " : "FAIL ") << report.name << " (i+j <= " << report.max_total
        << ", " << report.checked() << " checks)\n";
    for (const auto& inst : report.instances) {
        out << "  " << (inst.passed ? "ok   " : "FAIL ") << inst.label << " [" << inst.checked
            << "]\n";
        if (inst.first_failure) {
            const auto& w = *inst.first_failure;
            out << "    first failure at " << w.where << "\n";
            for (const auto& t : w.lhs_only) out << "      lhs only: " << t << "\n";
            for (const auto& t : w.rhs_only) out << "      rhs only: " << t << "\n";
        }
    }
    return out.str();
}

std::string report_json(const RelationReport& report) {
    nlohmann::ordered_json j;
    j["relation"] = report.name;
    j["max_total"] = report.max_total;
    j["passed"] = report.passed();
    j["checks"] = report.checked();
    auto instances = nlohmann::ordered_json::array();
    for (const auto& inst : report.instances) {
        nlohmann::ordered_json ij;
        ij["label"] = inst.label;
        ij["checks"] = inst.checked;
        ij["passed"] = inst.passed;
        if (inst.first_failure) {
            ij["first_failure"] = {{"where", inst.first_failure->where},
                                   {"lhs_only", inst.first_failure->lhs_only},
                                   {"rhs_only", inst.first_failure->rhs_only}};
        }
        instances.push_back(std::move(ij));
    }
    j["instances"] = std::move(instances);
    return j.dump();
}

}  // namespace simpdelta
