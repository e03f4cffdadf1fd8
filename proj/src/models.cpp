#include "simpdelta/models.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace simpdelta {

SimplicialWord degeneracy_word(const Simplex& s) {
    std::vector<Generator> gens;
    for (int k = static_cast<int>(s.size()) - 2; k >= 0; --k)
        if (s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k) + 1])
            gens.push_back(Generator::degeneracy(k));
    return SimplicialWord(std::move(gens));
}

// ---- SimplicialSetModel ----

SimplicialSetModel::SimplicialSetModel(ModelKind kind, int n, int max_degree)
    : kind_(kind), n_(n), max_degree_(max_degree),
      cache_(std::make_shared<BasisCache<Simplex>>()) {}

SimplicialSetModel SimplicialSetModel::delta(int n, int max_degree) {
    if (n < 0 || max_degree < 0) throw BadRange("Delta(n) needs n >= 0 and max_degree >= 0");
    return SimplicialSetModel(ModelKind::Delta, n, max_degree);
}

SimplicialSetModel SimplicialSetModel::boundary_delta(int n, int max_degree) {
    if (n < 1 || max_degree < 0)
        throw BadRange("BoundaryDelta(n) needs n >= 1 and max_degree >= 0");
    return SimplicialSetModel(ModelKind::BoundaryDelta, n, max_degree);
}

SimplicialSetModel SimplicialSetModel::sphere(int n, int max_degree) {
    if (n < 1 || max_degree < n) throw BadRange("Sphere(n) needs n >= 1 and max_degree >= n");
    return SimplicialSetModel(ModelKind::Sphere, n, max_degree);
}

SimplicialSetModel sphere_model(int n, int max_degree) {
    return SimplicialSetModel::sphere(n, max_degree);
}

std::string SimplicialSetModel::name() const {
    switch (kind_) {
        case ModelKind::Delta: return "Delta(" + std::to_string(n_) + ")";
        case ModelKind::BoundaryDelta: return "BoundaryDelta(" + std::to_string(n_) + ")";
        case ModelKind::Sphere: return "Sphere(" + std::to_string(n_) + ")";
    }
    return {};
}

namespace {

bool surjective(const Simplex& s, int n) {
    return !s.empty() && s.front() == 0 && s.back() == n &&
           std::adjacent_find(s.begin(), s.end(),
                              [](int a, int b) { return b > a + 1; }) == s.end();
}

bool nondecreasing_in_range(const Simplex& s, int n) {
    return !s.empty() && s.front() >= 0 && s.back() <= n && std::is_sorted(s.begin(), s.end());
}

}  // namespace

bool SimplicialSetModel::contains(const Simplex& s) const {
    if (!nondecreasing_in_range(s, n_)) return false;
    switch (kind_) {
        case ModelKind::Delta: return true;
        case ModelKind::BoundaryDelta: return !surjective(s, n_);
        case ModelKind::Sphere: return surjective(s, n_);
    }
    return false;
}

std::vector<Simplex> SimplicialSetModel::build_basis(int degree) const {
    std::vector<Simplex> out;
    Simplex s;
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(s.size()) == degree + 1) {
            if (contains(s)) out.push_back(s);
            return;
        }
        for (int v = from; v <= n_; ++v) {
            s.push_back(v);
            extend(v);
            s.pop_back();
        }
    };
    extend(0);
    return out;
}

const std::vector<Simplex>& SimplicialSetModel::basis(int degree) const {
    static const std::vector<Simplex> empty;
    if (degree < 0 || degree > max_degree_) return empty;
    return cache_->get(degree, [this](int d) { return build_basis(d); }).keys;
}

std::optional<std::size_t> SimplicialSetModel::index_of(const Simplex& s) const {
    const int d = key_degree(s);
    if (d < 0 || d > max_degree_) return std::nullopt;
    const auto& idx = cache_->get(d, [this](int m) { return build_basis(m); });
    auto it = idx.position.find(s);
    if (it == idx.position.end()) return std::nullopt;
    return it->second;
}

std::optional<Simplex> SimplicialSetModel::face(const Simplex& s, int i) const {
    const int d = key_degree(s);
    if (i < 0 || i > d)
        throw OutOfRange("d" + std::to_string(i) + " on a degree-" + std::to_string(d) +
                         " simplex");
    if (d == 0) return std::nullopt;
    Simplex out = s;
    out.erase(out.begin() + i);
    if (!contains(out)) return std::nullopt;
    return out;
}

std::optional<Simplex> SimplicialSetModel::degeneracy(const Simplex& s, int i) const {
    const int d = key_degree(s);
    if (i < 0 || i > d)
        throw OutOfRange("s" + std::to_string(i) + " on a degree-" + std::to_string(d) +
                         " simplex");
    if (d + 1 > max_degree_)
        throw TruncationOverflow("s" + std::to_string(i) + " past max_degree " +
                                 std::to_string(max_degree_) + " in " + name());
    Simplex out = s;
    out.insert(out.begin() + i, s[static_cast<std::size_t>(i)]);
    return out;
}

std::string SimplicialSetModel::label(const Simplex& s) const {
    if (kind_ == ModelKind::Sphere) return degeneracy_word(s).to_string();
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k && n_ >= 10) out += ',';
        out += std::to_string(s[k]);
    }
    return out;
}

Simplex SimplicialSetModel::fundamental_simplex() const {
    Simplex s(static_cast<std::size_t>(n_) + 1);
    for (int v = 0; v <= n_; ++v) s[static_cast<std::size_t>(v)] = v;
    return s;
}

// ---- AlgebraModel ----

Monomial Monomial::of(std::vector<Simplex> factors) {
    if (factors.empty()) throw DegreeMismatch("empty monomial");
    const int d = key_degree(factors.front());
    for (const auto& f : factors)
        if (key_degree(f) != d) throw DegreeMismatch("monomial factors of different degrees");
    std::sort(factors.begin(), factors.end(), std::greater<>());
    return Monomial{std::move(factors)};
}

AlgebraModel::AlgebraModel(SimplicialSetModel base, int max_poly, int min_poly)
    : base_(std::move(base)), max_poly_(max_poly), min_poly_(min_poly),
      cache_(std::make_shared<BasisCache<Monomial>>()) {
    if (min_poly < 1 || max_poly < min_poly)
        throw BadRange("polynomial degrees need 1 <= min_poly <= max_poly");
}

AlgebraModel algebra_model(int n, int max_degree, int max_poly) {
    if (max_poly < 2) throw BadRange("algebra_model needs P >= 2");
    return AlgebraModel(sphere_model(n, max_degree), max_poly);
}

std::string AlgebraModel::name() const {
    std::string out = "Sym(" + base_.name() + ", P<=" + std::to_string(max_poly_);
    if (min_poly_ > 1) out += ", P>=" + std::to_string(min_poly_);
    return out + ")";
}

std::vector<Monomial> AlgebraModel::build_basis(int degree) const {
    const auto& gens = base_.basis(degree);
    std::vector<Monomial> out;
    std::vector<Simplex> factors;
    // Multisets as nonincreasing index sequences.
    std::function<void(std::size_t)> extend = [&](std::size_t top) {
        const int p = static_cast<int>(factors.size());
        if (p >= min_poly_) out.push_back(Monomial::of(factors));
        if (p == max_poly_) return;
        for (std::size_t k = 0; k <= top && k < gens.size(); ++k) {
            factors.push_back(gens[k]);
            extend(k);
            factors.pop_back();
        }
    };
    if (!gens.empty()) extend(gens.size() - 1);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Monomial>& AlgebraModel::basis(int degree) const {
    static const std::vector<Monomial> empty;
    if (degree < 0 || degree > max_degree()) return empty;
    return cache_->get(degree, [this](int d) { return build_basis(d); }).keys;
}

std::optional<std::size_t> AlgebraModel::index_of(const Monomial& m) const {
    const int d = m.degree();
    if (d < 0 || d > max_degree()) return std::nullopt;
    const auto& idx = cache_->get(d, [this](int k) { return build_basis(k); });
    auto it = idx.position.find(m);
    if (it == idx.position.end()) return std::nullopt;
    return it->second;
}

std::optional<Monomial> AlgebraModel::face(const Monomial& m, int i) const {
    std::vector<Simplex> out;
    out.reserve(m.factors.size());
    for (const auto& f : m.factors) {
        auto image = base_.face(f, i);
        if (!image) return std::nullopt;
        out.push_back(std::move(*image));
    }
    return Monomial::of(std::move(out));
}

std::optional<Monomial> AlgebraModel::degeneracy(const Monomial& m, int i) const {
    std::vector<Simplex> out;
    out.reserve(m.factors.size());
    for (const auto& f : m.factors) {
        auto image = base_.degeneracy(f, i);
        if (!image) return std::nullopt;
        out.push_back(std::move(*image));
    }
    return Monomial::of(std::move(out));
}

std::vector<std::string> AlgebraModel::factor_labels(const Monomial& m) const {
    std::vector<std::string> out;
    for (const auto& f : m.factors) out.push_back(base_.label(f));
    return out;
}

std::string AlgebraModel::label(const Monomial& m) const {
    std::string out;
    for (const auto& f : factor_labels(m)) {
        if (!out.empty()) out += " . ";
        out += f;
    }
    return out;
}

AlgebraElement generator_element(const Simplex& s) {
    AlgebraElement out(key_degree(s));
    out.toggle(Monomial{{s}});
    return out;
}

AlgebraElement fundamental_class(const AlgebraModel& a) {
    return generator_element(a.base().fundamental_simplex());
}

AlgebraElement multiply(const AlgebraModel& a, const AlgebraElement& x, const AlgebraElement& y) {
    if (x.degree() != y.degree())
        throw DegreeMismatch("multiplying degrees " + std::to_string(x.degree()) + " and " +
                             std::to_string(y.degree()));
    AlgebraElement out(x.degree());
    for (const auto& m : x.support()) {
        for (const auto& n : y.support()) {
            if (static_cast<int>(m.factors.size() + n.factors.size()) > a.max_poly())
                throw TruncationOverflow("product past polynomial degree " +
                                         std::to_string(a.max_poly()));
            std::vector<Simplex> factors = m.factors;
            factors.insert(factors.end(), n.factors.begin(), n.factors.end());
            out.toggle(Monomial::of(std::move(factors)));
        }
    }
    return out;
}

AlgebraElement power(const AlgebraModel& a, const AlgebraElement& x, int exponent) {
    if (exponent < 1) throw BadRange("power needs exponent >= 1");
    AlgebraElement out = x;
    for (int e = 1; e < exponent; ++e) out = multiply(a, out, x);
    return out;
}

AlgebraElement multiply_tensor(const AlgebraModel& a, const TensorElement<Monomial, Monomial>& x) {
    const Bidegree b = x.bidegree();
    if (b.i != b.j)
        throw DegreeMismatch("multiplying a tensor of bidegree " + to_string(b));
    AlgebraElement out(b.i);
    for (const auto& [l, r] : x.support())
        out += multiply(a, AlgebraElement(b.i, {l}), AlgebraElement(b.j, {r}));
    return out;
}

SimplexElement quotient_to_sphere(const SimplicialSetModel& sphere, const SimplexElement& x) {
    SimplexElement out(x.degree());
    for (const auto& s : x.support())
        if (sphere.contains(s)) out.toggle(s);
    return out;
}

// ---- tables ----

namespace {

long compose_faces(const ModelTables& t, int m, long b, std::initializer_list<std::pair<char, int>> ops) {
    // ops applied left to right on b, starting in degree m
    int d = m;
    for (auto [kind, i] : ops) {
        if (b < 0) return -1;
        if (kind == 'd') {
            b = t.faces[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]
                       [static_cast<std::size_t>(b)];
            --d;
        } else {
            b = t.degeneracies[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(b)];
            ++d;
        }
    }
    return b;
}

}  // namespace

bool check_simplicial_identities(const ModelTables& t, std::string* failure, std::size_t* checks) {
    std::size_t count = 0;
    auto fail = [&](int m, std::size_t b, const std::string& what) {
        if (failure)
            *failure = t.name + ": " + what + " fails on " + t.labels[static_cast<std::size_t>(m)][b];
        if (checks) *checks = count;
        return false;
    };
    for (int m = 0; m <= t.max_degree; ++m) {
        for (std::size_t b = 0; b < t.dim(m); ++b) {
            const long x = static_cast<long>(b);
            // d_i d_j = d_{j-1} d_i, i < j
            for (int j = 1; j <= m && m >= 2; ++j)
                for (int i = 0; i < j; ++i) {
                    ++count;
                    if (compose_faces(t, m, x, {{'d', j}, {'d', i}}) !=
                        compose_faces(t, m, x, {{'d', i}, {'d', j - 1}}))
                        return fail(m, b, "d" + std::to_string(i) + " d" + std::to_string(j));
                }
            if (m + 1 > t.max_degree) continue;
            for (int j = 0; j <= m; ++j) {
                for (int i = 0; i <= m + 1; ++i) {
                    ++count;
                    const long lhs = compose_faces(t, m, x, {{'s', j}, {'d', i}});
                    long rhs;
                    if (i < j)
                        rhs = m >= 1 ? compose_faces(t, m, x, {{'d', i}, {'s', j - 1}}) : -2;
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = compose_faces(t, m, x, {{'d', i - 1}, {'s', j}});
                    if (rhs != -2 && lhs != rhs)
                        return fail(m, b, "d" + std::to_string(i) + " s" + std::to_string(j));
                }
            }
            if (m + 2 > t.max_degree) continue;
            // s_i s_j = s_{j+1} s_i, i <= j
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= j; ++i) {
                    ++count;
                    if (compose_faces(t, m, x, {{'s', j}, {'s', i}}) !=
                        compose_faces(t, m, x, {{'s', i}, {'s', j + 1}}))
                        return fail(m, b, "s" + std::to_string(i) + " s" + std::to_string(j));
                }
        }
    }
    if (checks) *checks = count;
    return true;
}

std::string model_json(const ModelTables& t) {
    using nlohmann::ordered_json;
    auto entry = [](long v) { return v < 0 ? ordered_json(nullptr) : ordered_json(v); };
    ordered_json j;
    j["model"] = t.name;
    j["max_degree"] = t.max_degree;
    auto degrees = ordered_json::array();
    for (int m = 0; m <= t.max_degree; ++m) {
        const auto mi = static_cast<std::size_t>(m);
        ordered_json d;
        d["degree"] = m;
        d["basis"] = t.labels[mi];
        auto faces = ordered_json::array();
        for (const auto& row : t.faces[mi]) {
            auto r = ordered_json::array();
            for (long v : row) r.push_back(entry(v));
            faces.push_back(std::move(r));
        }
        d["faces"] = std::move(faces);
        auto degens = ordered_json::array();
        for (const auto& row : t.degeneracies[mi]) {
            auto r = ordered_json::array();
            for (long v : row) r.push_back(entry(v));
            degens.push_back(std::move(r));
        }
        d["degeneracies"] = std::move(degens);
        degrees.push_back(std::move(d));
    }
    j["degrees"] = std::move(degrees);
    return j.dump();
}

}  // namespace simpdelta
