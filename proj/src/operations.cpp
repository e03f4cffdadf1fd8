#include "simpdelta/operations.hpp"

#include <functional>

#include <json.hpp>

#include "simpdelta/chain_complex.hpp"
#include "simpdelta/errors.hpp"

namespace simpdelta {

namespace {

void check_range(int q, int i) {
    if (i < 1 || i > q)
        throw BadRange("need 1 <= i <= q, got q=" + std::to_string(q) +
                       " i=" + std::to_string(i));
}

}  // namespace

std::vector<ShufflePair> enumerate_U(int q, int i) {
    check_range(q, i);
    const int lo = q - i;
    const int hi = q + i - 1;
    std::vector<ShufflePair> out;
    std::vector<int> mu;
    std::function<void(int)> choose = [&](int next) {
        if (static_cast<int>(mu.size()) == i) {
            std::vector<int> nu;
            std::size_t k = 0;
            for (int v = lo; v <= hi; ++v) {
                if (k < mu.size() && mu[k] == v)
                    ++k;
                else
                    nu.push_back(v);
            }
            out.push_back({mu, std::move(nu)});
            return;
        }
        for (int v = next; v <= hi; ++v) {
            mu.push_back(v);
            choose(v + 1);
            mu.pop_back();
        }
    };
    choose(lo);
    return out;
}

std::vector<ShufflePair> enumerate_V(int q, int i) {
    std::vector<ShufflePair> out;
    for (auto& p : enumerate_U(q, i))
        if (p.mu.front() == q - i) out.push_back(std::move(p));
    return out;
}

SimplicialWord shuffle_word(const std::vector<int>& increasing) {
    std::vector<Generator> gens;
    for (auto it = increasing.rbegin(); it != increasing.rend(); ++it)
        gens.push_back(Generator::degeneracy(*it));
    return SimplicialWord(std::move(gens));
}

namespace {

AlgebraElement shuffle_sum(const AlgebraModel& a, const AlgebraElement& z,
                           const std::vector<ShufflePair>& pairs) {
    AlgebraElement out(z.degree() + static_cast<int>(pairs.front().mu.size()));
    if (z.is_zero()) return out;
    for (const auto& p : pairs) {
        const AlgebraElement left = apply_word(a, shuffle_word(p.nu), z);
        const AlgebraElement right = apply_word(a, shuffle_word(p.mu), z);
        out += multiply(a, left, right);
    }
    return out;
}

}  // namespace

DeltaResult delta_i(const AlgebraModel& a, const AlgebraElement& z, int i) {
    const int q = z.degree();
    check_range(q, i);
    if (q + i > a.max_degree())
        throw TruncationOverflow("delta_" + std::to_string(i) + " needs degree " +
                                 std::to_string(q + i));
    if (!is_cycle(a, z, CycleMode::Normalized))
        throw NotNormalizedCycle("delta_i needs every face of z to vanish");
    DeltaResult r{shuffle_sum(a, z, enumerate_V(q, i)), std::nullopt};
    if (i == 1)
        r.warning = "not a cycle: d_" + std::to_string(q) + " \xce\xb4_1(z) = z^2";
    return r;
}

AlgebraElement theta_i(const AlgebraModel& a, const AlgebraElement& z, int i) {
    check_range(z.degree(), i);
    return theta_i(a, z, i, build_D_sequence(z.degree() - i));
}

AlgebraElement theta_i(const AlgebraModel& a, const AlgebraElement& z, int i,
                       const std::vector<EMTransform>& d_sequence) {
    const int q = z.degree();
    check_range(q, i);
    const int k = q - i;
    if (static_cast<int>(d_sequence.size()) <= k)
        throw BadRange("theta_i needs D^0..D^" + std::to_string(k));
    AlgebraElement out(q + i);
    out += multiply_tensor(a, evaluate_em(d_sequence[static_cast<std::size_t>(k)], tensor(z, z),
                                          a, a));
    if (k - 1 >= 0) {
        const AlgebraElement bd = boundary_of(a, z);
        out += multiply_tensor(
            a, evaluate_em(d_sequence[static_cast<std::size_t>(k - 1)], tensor(z, bd), a, a));
    }
    return out;
}

AlgebraElement mu_D_square(const AlgebraModel& a, const AlgebraElement& z) {
    const int q = z.degree();
    check_range(q, q);
    if (2 * q > a.max_degree()) throw TruncationOverflow("mu D(z (x) z) needs degree 2q");
    return shuffle_sum(a, z, enumerate_U(q, q));
}

DeltaReport delta_report(int q, int i) {
    if (q < 1) throw BadRange("q must be >= 1");
    check_range(q, i);
    const AlgebraModel a = algebra_model(q, q + i + 1, 2);
    const AlgebraElement z = fundamental_class(a);
    DeltaReport r;
    r.q = q;
    r.i = i;
    DeltaResult d = delta_i(a, z, i);
    r.delta = d.value;
    r.warning = d.warning;
    r.theta = theta_i(a, z, i);
    r.nonzero_faces = nonzero_faces(a, r.delta);
    r.is_cycle = r.nonzero_faces.empty();
    if (r.is_cycle) r.homology_class_nonzero = !is_boundary(a, r.delta);
    return r;
}

std::string delta_report_json(const DeltaReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["i"] = r.i;
    j["degree"] = r.q + r.i;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& m : r.delta.support()) {
        std::vector<std::string> factors;
        for (const auto& f : m.factors) factors.push_back(degeneracy_word(f).to_string());
        terms.push_back(std::move(factors));
    }
    j["terms"] = std::move(terms);
    j["is_cycle"] = r.is_cycle;
    if (!r.is_cycle) j["nonzero_faces"] = r.nonzero_faces;
    if (r.homology_class_nonzero)
        j["homology_class_nonzero"] = *r.homology_class_nonzero;
    else
        j["homology_class_nonzero"] = nullptr;
    j["equals_theta"] = r.equals_theta();
    if (r.warning) j["warning"] = *r.warning;
    return j.dump();
}

}  // namespace simpdelta
