#include "simpdelta/words.hpp"

#include <charconv>

#include "simpdelta/errors.hpp"

namespace simpdelta {

std::string Generator::to_string() const {
    return (is_face() ? "d" : "s") + std::to_string(index);
}

SimplicialWord SimplicialWord::parse(std::string_view text) {
    std::vector<Generator> factors;
    std::size_t pos = 0;
    bool saw_id = false;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;
        if (token == "id") {
            saw_id = true;
            continue;
        }
        if (token.size() < 2 || (token[0] != 'd' && token[0] != 's'))
            throw ParseError("bad generator token '" + std::string(token) + "'");
        int index = 0;
        auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
        if (ec != std::errc{} || ptr != token.data() + token.size() || index < 0)
            throw ParseError("bad generator index in '" + std::string(token) + "'");
        factors.push_back(token[0] == 'd' ? Generator::face(index) : Generator::degeneracy(index));
    }
    if (saw_id && !factors.empty())
        throw ParseError("'id' cannot be combined with other generators");
    return SimplicialWord(std::move(factors));
}

int SimplicialWord::degree_shift() const {
    int shift = 0;
    for (const auto& g : factors_) shift += g.degree_shift();
    return shift;
}

std::string SimplicialWord::to_string() const {
    if (factors_.empty()) return "id";
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += ' ';
        out += factors_[k].to_string();
    }
    return out;
}

SimplicialWord compose(const SimplicialWord& w1, const SimplicialWord& w2) {
    std::vector<Generator> factors(w1.factors().begin(), w1.factors().end());
    factors.insert(factors.end(), w2.factors().begin(), w2.factors().end());
    return SimplicialWord(std::move(factors));
}

int target_degree(const SimplicialWord& w, int source_degree) {
    return source_degree + w.degree_shift();
}

SimplicialWord suspend_word(const SimplicialWord& w, int times) {
    std::vector<Generator> factors(w.factors().begin(), w.factors().end());
    for (auto& g : factors) g.index += times;
    return SimplicialWord(std::move(factors));
}

SimplicialWord NormalForm::word() const {
    std::vector<Generator> factors;
    factors.reserve(degeneracies_.size() + faces_.size());
    for (int i : degeneracies_) factors.push_back(Generator::degeneracy(i));
    for (int j : faces_) factors.push_back(Generator::face(j));
    return SimplicialWord(std::move(factors));
}

std::string NormalForm::to_string() const {
    return null_ ? std::string("null") : word().to_string();
}

namespace {

// Normal form being built up by left multiplication.
struct Reducer {
    std::vector<int> degeneracies;  // decreasing
    std::vector<int> faces;         // increasing
    std::size_t steps = 0;

    void push_face(int a) {
        // d_a s_b: a < b -> s_{b-1} d_a; a in {b, b+1} -> id; a > b+1 -> s_b d_{a-1}.
        for (std::size_t p = 0; p < degeneracies.size(); ++p) {
            const int b = degeneracies[p];
            ++steps;
            if (a < b) {
                degeneracies[p] = b - 1;
            } else if (a == b || a == b + 1) {
                degeneracies.erase(degeneracies.begin() + static_cast<std::ptrdiff_t>(p));
                return;
            } else {
                --a;
            }
        }
        // d_a d_f with a >= f -> d_f d_{a+1}.
        std::size_t q = 0;
        for (; q < faces.size(); ++q) {
            if (a < faces[q]) break;
            ++steps;
            ++a;
        }
        faces.insert(faces.begin() + static_cast<std::ptrdiff_t>(q), a);
    }

    void push_degeneracy(int a) {
        // s_a s_b with a <= b -> s_{b+1} s_a.
        std::size_t p = 0;
        for (; p < degeneracies.size(); ++p) {
            if (a > degeneracies[p]) break;
            ++steps;
            ++degeneracies[p];
        }
        degeneracies.insert(degeneracies.begin() + static_cast<std::ptrdiff_t>(p), a);
    }

    void push(const Generator& g) {
        if (g.is_face())
            push_face(g.index);
        else
            push_degeneracy(g.index);
    }

    SimplicialWord word() const { return NormalForm(degeneracies, faces).word(); }
};

// Splits an already reduced word into its degeneracy and face parts.
Reducer load_reduced(const SimplicialWord& w) {
    Reducer r;
    for (const auto& g : w.factors()) {
        if (g.is_face())
            r.faces.push_back(g.index);
        else
            r.degeneracies.push_back(g.index);
    }
    return r;
}

}  // namespace

SimplicialWord reduce_formal(const SimplicialWord& w, std::size_t* steps) {
    Reducer r;
    auto factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.push(*it);
    if (steps) *steps = r.steps;
    return r.word();
}

SimplicialWord compose_reduced(const SimplicialWord& w1, const SimplicialWord& w2) {
    if (w1.is_identity()) return w2;
    if (w2.is_identity()) return w1;
    Reducer r = load_reduced(w2);
    auto factors = w1.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.push(*it);
    return r.word();
}

namespace {

// Returns false if the word passes through a negative degree; throws on an
// out-of-range index met before that.
bool check_definedness(const SimplicialWord& w, int source_degree) {
    int degree = source_degree;
    if (degree < 0) return false;
    auto factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->index > degree) {
            throw OutOfRange(it->to_string() + " applied in degree " + std::to_string(degree) +
                             " of word '" + w.to_string() + "'");
        }
        degree += it->degree_shift();
        if (degree < 0) return false;
    }
    return true;
}

}  // namespace

NormalForm normalize(const SimplicialWord& w, int source_degree) {
    if (!check_definedness(w, source_degree)) return NormalForm::null();
    Reducer r;
    auto factors = w.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.push(*it);
    return NormalForm(std::move(r.degeneracies), std::move(r.faces));
}

bool is_defined_on(const SimplicialWord& w, int source_degree) {
    try {
        check_definedness(w, source_degree);
        return true;
    } catch (const OutOfRange&) {
        return false;
    }
}

}  // namespace simpdelta
