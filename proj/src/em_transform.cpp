#include "simpdelta/em_transform.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "simpdelta/errors.hpp"

namespace simpdelta {

std::string to_string(const Bidegree& b) {
    return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

// ---- IndexFunction ----

IndexFunction IndexFunction::after(const IndexFunction& inner) const {
    auto compose_form = [&](const AffineForm& outer) {
        const AffineForm& l = inner.left_;
        const AffineForm& r = inner.right_;
        return AffineForm{outer.a * l.a + outer.b * r.a, outer.a * l.b + outer.b * r.b,
                          outer.a * l.c + outer.b * r.c + outer.c};
    };
    return {compose_form(left_), compose_form(right_)};
}

IndexFunction IndexFunction::suspended() const {
    // I'(i,j) = (1,1) + I(i-1, j-1)
    auto shift = [](const AffineForm& f) { return AffineForm{f.a, f.b, f.c + 1 - f.a - f.b}; };
    return {shift(left_), shift(right_)};
}

IndexFunction IndexFunction::twisted() const {
    // first component of I'(i,j) is the second component of I(j,i)
    return {AffineForm{right_.b, right_.a, right_.c}, AffineForm{left_.b, left_.a, left_.c}};
}

std::string IndexFunction::to_string() const {
    auto form = [](const AffineForm& f) {
        std::string out;
        auto term = [&](int coeff, const char* var) {
            if (coeff == 0) return;
            if (!out.empty()) out += coeff > 0 ? "+" : "-";
            else if (coeff < 0) out += "-";
            int mag = coeff < 0 ? -coeff : coeff;
            if (mag != 1) out += std::to_string(mag);
            out += var;
        };
        term(f.a, "i");
        term(f.b, "j");
        if (f.c != 0 || out.empty()) {
            if (!out.empty()) out += f.c > 0 ? "+" : "-";
            else if (f.c < 0) out += "-";
            out += std::to_string(f.c < 0 ? -f.c : f.c);
        }
        return out;
    };
    return "(" + form(left_) + "," + form(right_) + ")";
}

// ---- TensorWord / TermSet ----

std::string TensorWord::to_string() const {
    return "[" + left.to_string() + "] (x) [" + right.to_string() + "]";
}

TermSet TermSet::from_multiset(std::vector<TensorWord> terms) {
    std::sort(terms.begin(), terms.end());
    TermSet out;
    out.terms_.reserve(terms.size());
    for (std::size_t k = 0; k < terms.size();) {
        std::size_t run = k + 1;
        while (run < terms.size() && terms[run] == terms[k]) ++run;
        if ((run - k) % 2 == 1) out.terms_.push_back(std::move(terms[k]));
        k = run;
    }
    return out;
}

bool TermSet::contains(const TensorWord& t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
}

TermSet TermSet::operator+(const TermSet& other) const {
    TermSet out;
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

// ---- expression nodes ----

struct EMTransform::Node {
    enum class Kind { Primitive, Sum, Compose, Suspend, Twist, Alias };

    Kind kind = Kind::Primitive;
    std::string name;
    IndexFunction index_fn;
    TermGenerator generator;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;

    mutable std::mutex mutex;
    mutable std::map<Bidegree, std::unique_ptr<const TermSet>> cache;

    const TermSet& terms(Bidegree s) const {
        static const TermSet empty;
        if (!s.nonnegative()) return empty;
        if (kind == Kind::Alias) return first->terms(s);
        {
            std::lock_guard lock(mutex);
            auto it = cache.find(s);
            if (it != cache.end()) return *it->second;
        }
        auto computed = std::make_unique<const TermSet>(compute(s));
        std::lock_guard lock(mutex);
        auto [it, inserted] = cache.emplace(s, std::move(computed));
        return *it->second;
    }

    TermSet compute(Bidegree s) const {
        switch (kind) {
            case Kind::Primitive: {
                auto raw = generator(s);
                for (auto& t : raw) {
                    t.left = reduce_formal(t.left);
                    t.right = reduce_formal(t.right);
                }
                return TermSet::from_multiset(std::move(raw));
            }
            case Kind::Sum:
                return first->terms(s) + second->terms(s);
            case Kind::Compose: {
                std::vector<TensorWord> out;
                const Bidegree mid = second->index_fn(s);
                if (!mid.nonnegative()) return {};
                const TermSet& inner = second->terms(s);
                if (inner.empty()) return {};
                const TermSet& outer = first->terms(mid);
                out.reserve(inner.size() * outer.size());
                for (const auto& g : inner.terms())
                    for (const auto& f : outer.terms())
                        out.push_back({compose_reduced(f.left, g.left),
                                       compose_reduced(f.right, g.right)});
                return TermSet::from_multiset(std::move(out));
            }
            case Kind::Suspend: {
                if (s.i < 1 || s.j < 1) return {};
                std::vector<TensorWord> out;
                for (const auto& t : first->terms({s.i - 1, s.j - 1}).terms())
                    out.push_back({suspend_word(t.left), suspend_word(t.right)});
                // suspension maps reduced words to reduced words injectively
                return TermSet::from_multiset(std::move(out));
            }
            case Kind::Twist: {
                std::vector<TensorWord> out;
                for (const auto& t : first->terms({s.j, s.i}).terms())
                    out.push_back({t.right, t.left});
                return TermSet::from_multiset(std::move(out));
            }
            case Kind::Alias:
                break;
        }
        throw std::logic_error("unreachable EM node kind");
    }
};

namespace {

using NodePtr = std::shared_ptr<EMTransform::Node>;

NodePtr make_node(EMTransform::Node::Kind kind, std::string name, IndexFunction index_fn) {
    auto node = std::make_shared<EMTransform::Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->index_fn = index_fn;
    return node;
}

}  // namespace

EMTransform EMTransform::primitive(std::string name, IndexFunction index_fn, TermGenerator gen) {
    auto node = make_node(Node::Kind::Primitive, std::move(name), index_fn);
    node->generator = std::move(gen);
    return EMTransform(std::move(node));
}

EMTransform EMTransform::word_pair(const SimplicialWord& left, const SimplicialWord& right,
                                   std::string name) {
    if (name.empty()) name = left.to_string() + "(x)" + right.to_string();
    auto index = IndexFunction::shift(left.degree_shift(), right.degree_shift());
    return primitive(std::move(name), index, [left, right](Bidegree) {
        return std::vector<TensorWord>{{left, right}};
    });
}

EMTransform EMTransform::zero(IndexFunction index_fn) {
    return primitive("0", index_fn, [](Bidegree) { return std::vector<TensorWord>{}; });
}

const IndexFunction& EMTransform::index_fn() const { return node_->index_fn; }
const std::string& EMTransform::name() const { return node_->name; }

const TermSet& EMTransform::formal_terms_at(Bidegree s) const { return node_->terms(s); }

TermSet EMTransform::terms_at(Bidegree s) const { return canonical_terms(*this, s); }

EMTransform EMTransform::renamed(std::string name) const {
    auto node = make_node(Node::Kind::Alias, std::move(name), node_->index_fn);
    node->first = node_;
    return EMTransform(std::move(node));
}

EMTransform em_add(const EMTransform& f, const EMTransform& g) {
    if (f.index_fn() != g.index_fn()) {
        throw IndexMismatch("cannot add " + f.name() + " with index " + f.index_fn().to_string() +
                            " and " + g.name() + " with index " + g.index_fn().to_string());
    }
    auto node = make_node(EMTransform::Node::Kind::Sum, f.name() + " + " + g.name(), f.index_fn());
    node->first = f.node_;
    node->second = g.node_;
    return EMTransform(std::move(node));
}

EMTransform em_compose(const EMTransform& f, const EMTransform& g) {
    auto node = make_node(EMTransform::Node::Kind::Compose, "(" + f.name() + ")(" + g.name() + ")",
                          f.index_fn().after(g.index_fn()));
    node->first = f.node_;
    node->second = g.node_;
    return EMTransform(std::move(node));
}

EMTransform em_twist(const EMTransform& f) {
    auto node = make_node(EMTransform::Node::Kind::Twist, "T(" + f.name() + ")",
                          f.index_fn().twisted());
    node->first = f.node_;
    return EMTransform(std::move(node));
}

EMTransform em_suspend(const EMTransform& f) {
    auto node = make_node(EMTransform::Node::Kind::Suspend, "S(" + f.name() + ")",
                          f.index_fn().suspended());
    node->first = f.node_;
    return EMTransform(std::move(node));
}

EMTransform em_suspend(const EMTransform& f, int times) {
    EMTransform out = f;
    for (int t = 0; t < times; ++t) out = em_suspend(out);
    return out;
}

EMTransform operator+(const EMTransform& f, const EMTransform& g) { return em_add(f, g); }
EMTransform operator*(const EMTransform& f, const EMTransform& g) { return em_compose(f, g); }

EMTransform em_sum(const std::vector<EMTransform>& parts) {
    if (parts.empty()) throw std::invalid_argument("em_sum of no transforms");
    EMTransform out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out = em_add(out, parts[k]);
    return out;
}

// ---- primitive catalog ----

namespace {

// (i,j)-shuffles as the bitmask of positions in {0..i+j-1} taken by mu.
void for_each_shuffle(int i, int j, const std::function<void(std::uint64_t)>& visit) {
    const int n = i + j;
    // Gosper's hack over all n-bit masks with i bits set.
    if (i == 0) {
        visit(0);
        return;
    }
    std::uint64_t mask = (std::uint64_t{1} << i) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        visit(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

// s_{x_m} ... s_{x_1} for the increasing sequence x selected by `mask`.
SimplicialWord degeneracies_of(std::uint64_t mask, int n, bool selected) {
    std::vector<Generator> factors;
    for (int p = n - 1; p >= 0; --p) {
        const bool in_mask = (mask >> p) & 1U;
        if (in_mask == selected) factors.push_back(Generator::degeneracy(p));
    }
    return SimplicialWord(std::move(factors));
}

}  // namespace

EMTransform shuffle_D() {
    static const EMTransform d = EMTransform::primitive(
        "D", IndexFunction::total(0), [](Bidegree s) {
            std::vector<TensorWord> out;
            const int n = s.i + s.j;
            for_each_shuffle(s.i, s.j, [&](std::uint64_t mu) {
                // left factor takes the nu-degeneracies, right the mu ones
                out.push_back({degeneracies_of(mu, n, false), degeneracies_of(mu, n, true)});
            });
            return out;
        });
    return d;
}

EMTransform phi(int k) {
    return EMTransform::primitive("phi_" + std::to_string(k), IndexFunction::total(k),
                                  [k](Bidegree s) {
                                      std::vector<TensorWord> out;
                                      if (s.i == k && s.j == k) out.push_back({});
                                      return out;
                                  });
}

EMTransform boundary_left() {
    static const EMTransform t = EMTransform::primitive(
        "bd(x)id", IndexFunction::shift(-1, 0), [](Bidegree s) {
            std::vector<TensorWord> out;
            for (int r = 0; r <= s.i; ++r) out.push_back({SimplicialWord::face(r), {}});
            return out;
        });
    return t;
}

EMTransform boundary_right() {
    static const EMTransform t = EMTransform::primitive(
        "id(x)bd", IndexFunction::shift(0, -1), [](Bidegree s) {
            std::vector<TensorWord> out;
            for (int r = 0; r <= s.j; ++r) out.push_back({{}, SimplicialWord::face(r)});
            return out;
        });
    return t;
}

EMTransform diagonal_delta() {
    static const EMTransform t = EMTransform::primitive(
        "delta", IndexFunction::shift(-1, -1), [](Bidegree s) {
            std::vector<TensorWord> out;
            for (int r = 0; r <= std::min(s.i, s.j); ++r)
                out.push_back({SimplicialWord::face(r), SimplicialWord::face(r)});
            return out;
        });
    return t;
}

EMTransform identity_transform() {
    static const EMTransform t = EMTransform::word_pair({}, {}, "id(x)id");
    return t;
}

EMTransform face0_left() {
    static const EMTransform t = EMTransform::word_pair(SimplicialWord::face(0), {}, "d0(x)id");
    return t;
}

EMTransform face0_right() {
    static const EMTransform t = EMTransform::word_pair({}, SimplicialWord::face(0), "id(x)d0");
    return t;
}

EMTransform degen0_left() {
    static const EMTransform t =
        EMTransform::word_pair(SimplicialWord::degeneracy(0), {}, "s0(x)id");
    return t;
}

EMTransform degen0_right() {
    static const EMTransform t =
        EMTransform::word_pair({}, SimplicialWord::degeneracy(0), "id(x)s0");
    return t;
}

EMTransform face0_both() {
    static const EMTransform t =
        EMTransform::word_pair(SimplicialWord::face(0), SimplicialWord::face(0), "d0(x)d0");
    return t;
}

// ---- higher Eilenberg-MacLane maps ----

std::vector<EMTransform> build_D_sequence(int kmax) {
    if (kmax < 0) throw BadRange("negative k for D^k");
    std::vector<EMTransform> seq;
    seq.reserve(static_cast<std::size_t>(kmax) + 1);
    seq.push_back((em_suspend(shuffle_D()) * degen0_right()).renamed("D^0"));
    for (int k = 1; k <= kmax; ++k) {
        const EMTransform& prev = seq.back();
        const EMTransform& face = (k % 2 == 0) ? face0_left() : face0_right();
        seq.push_back((em_suspend(prev) + prev * face).renamed("D^" + std::to_string(k)));
    }
    return seq;
}

EMTransform build_Dk(int k) { return build_D_sequence(k).back(); }

EMTransform build_Ak(int k, const std::vector<EMTransform>& d_sequence) {
    if (k < 0 || static_cast<std::size_t>(k) >= d_sequence.size())
        throw BadRange("A^k needs D^0..D^k");
    const std::string name = "A^" + std::to_string(k);
    const EMTransform& dk = d_sequence[static_cast<std::size_t>(k)];
    if (k == 0) return em_sum({dk, em_twist(dk), shuffle_D()}).renamed(name);
    const EMTransform& prev = d_sequence[static_cast<std::size_t>(k) - 1];
    return em_sum({dk, em_twist(dk), diagonal_delta() * prev, prev * boundary_left(),
                   prev * boundary_right()})
        .renamed(name);
}

EMTransform build_Ak(int k) { return build_Ak(k, build_D_sequence(k)); }

// ---- comparison ----

std::vector<Bidegree> Window::bidegrees() const {
    std::vector<Bidegree> out;
    for (int total = std::max(0, min_total); total <= max_total; ++total)
        for (int i = 0; i <= total; ++i) out.push_back({i, total - i});
    return out;
}

TermSet canonical_terms(const EMTransform& f, Bidegree s) {
    const Bidegree target = f.target(s);
    if (!s.nonnegative() || !target.nonnegative()) return {};
    std::vector<TensorWord> out;
    for (const auto& t : f.formal_terms_at(s).terms()) {
        const NormalForm l = normalize(t.left, s.i);
        const NormalForm r = normalize(t.right, s.j);
        if (l.is_null() || r.is_null()) continue;
        if (target_degree(t.left, s.i) != target.i || target_degree(t.right, s.j) != target.j)
            throw std::logic_error("term " + t.to_string() + " of " + f.name() + " at " +
                                   to_string(s) + " misses target " + to_string(target));
        out.push_back({l.word(), r.word()});
    }
    return TermSet::from_multiset(std::move(out));
}

EqualityResult em_equal(const EMTransform& f, const EMTransform& g, const Window& window,
                        unsigned threads) {
    if (f.index_fn() != g.index_fn()) {
        throw IndexMismatch("cannot compare " + f.name() + " " + f.index_fn().to_string() +
                            " with " + g.name() + " " + g.index_fn().to_string());
    }
    const auto bidegrees = window.bidegrees();
    std::vector<char> differs(bidegrees.size(), 0);
    auto check_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            differs[k] = canonical_terms(f, bidegrees[k]) != canonical_terms(g, bidegrees[k]);
    };
    if (threads <= 1 || bidegrees.size() < 2) {
        check_range(0, bidegrees.size());
    } else {
        std::vector<std::future<void>> jobs;
        const std::size_t chunk = (bidegrees.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < bidegrees.size(); begin += chunk)
            jobs.push_back(std::async(std::launch::async, check_range, begin,
                                      std::min(begin + chunk, bidegrees.size())));
        for (auto& job : jobs) job.get();
    }

    EqualityResult result;
    result.bidegrees_checked = bidegrees.size();
    for (std::size_t k = 0; k < bidegrees.size(); ++k) {
        if (!differs[k]) continue;
        const TermSet lhs = canonical_terms(f, bidegrees[k]);
        const TermSet rhs = canonical_terms(g, bidegrees[k]);
        const TermSet diff = lhs + rhs;
        std::vector<TensorWord> only_l, only_r;
        for (const auto& t : diff.terms()) (lhs.contains(t) ? only_l : only_r).push_back(t);
        result.equal = false;
        result.witness = bidegrees[k];
        result.only_left = TermSet::from_multiset(std::move(only_l));
        result.only_right = TermSet::from_multiset(std::move(only_r));
        break;
    }
    return result;
}

std::string dump_transform_json(const EMTransform& f, Bidegree s) {
    const Bidegree target = f.target(s);
    nlohmann::ordered_json j;
    j["bidegree"] = {s.i, s.j};
    j["target"] = {target.i, target.j};
    auto terms = nlohmann::ordered_json::array();
    const TermSet canonical = canonical_terms(f, s);
    for (const auto& t : canonical.terms())
        terms.push_back({t.left.to_string(), t.right.to_string()});
    j["terms"] = std::move(terms);
    return j.dump();
}

}  // namespace simpdelta
