#pragma once

// Formal words in the simplicial generators d_r (faces) and s_r (degeneracies).
//
// A word is written as a composite: the rightmost
// factor is applied first, so "s3 s1 d0" means s_3 after s_1 after d_0.
// Words carry no source degree; whether a word defines a map is asked per
// degree through normalize() / is_defined_on().

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simpdelta {

enum class GeneratorKind : std::uint8_t { Face, Degeneracy };

struct Generator {
    GeneratorKind kind;
    int index;

    static constexpr Generator face(int i) { return {GeneratorKind::Face, i}; }
    static constexpr Generator degeneracy(int i) { return {GeneratorKind::Degeneracy, i}; }

    constexpr bool is_face() const { return kind == GeneratorKind::Face; }
    constexpr int degree_shift() const { return is_face() ? -1 : 1; }

    std::string to_string() const;

    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

class SimplicialWord {
public:
    SimplicialWord() = default;
    explicit SimplicialWord(std::vector<Generator> factors) : factors_(std::move(factors)) {}

    static SimplicialWord identity() { return {}; }
    static SimplicialWord face(int i) { return SimplicialWord({Generator::face(i)}); }
    static SimplicialWord degeneracy(int i) { return SimplicialWord({Generator::degeneracy(i)}); }

    // Parses "s3 s1 d0"; "id" (or an empty string) is the identity.
    static SimplicialWord parse(std::string_view text);

    // Leftmost factor first; factors().back() is applied first.
    std::span<const Generator> factors() const { return factors_; }
    std::size_t length() const { return factors_.size(); }
    bool is_identity() const { return factors_.empty(); }

    // #degeneracies - #faces.
    int degree_shift() const;

    std::string to_string() const;

    friend auto operator<=>(const SimplicialWord&, const SimplicialWord&) = default;
    friend bool operator==(const SimplicialWord&, const SimplicialWord&) = default;

private:
    std::vector<Generator> factors_;
};

// w1 after w2 (concatenation).
SimplicialWord compose(const SimplicialWord& w1, const SimplicialWord& w2);

// source_degree + degree shift; may be negative.
int target_degree(const SimplicialWord& w, int source_degree);

// Adds one (or `times`) to every generator index.
SimplicialWord suspend_word(const SimplicialWord& w, int times = 1);

// Canonical epi-mono form s_{i_p}...s_{i_1} d_{j_1}...d_{j_q} with
// i_p > ... > i_1 and j_1 < ... < j_q, or Null when the word passes through
// a negative degree and therefore annihilates every simplex.
class NormalForm {
public:
    NormalForm() = default;
    NormalForm(std::vector<int> degeneracies, std::vector<int> faces)
        : degeneracies_(std::move(degeneracies)), faces_(std::move(faces)) {}

    static NormalForm null() {
        NormalForm nf;
        nf.null_ = true;
        return nf;
    }

    bool is_null() const { return null_; }
    bool is_identity() const { return !null_ && degeneracies_.empty() && faces_.empty(); }

    // Strictly decreasing, in written order.
    const std::vector<int>& degeneracies() const { return degeneracies_; }
    // Strictly increasing, in written order.
    const std::vector<int>& faces() const { return faces_; }

    SimplicialWord word() const;
    std::string to_string() const;

    friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    std::vector<int> degeneracies_;
    std::vector<int> faces_;
    bool null_ = false;
};

// Degree-aware normalization. Throws OutOfRange when some factor's index
// exceeds the degree it is applied to; returns Null when an intermediate
// degree becomes negative.
NormalForm normalize(const SimplicialWord& w, int source_degree);

// True iff normalize() would not throw at this degree.
bool is_defined_on(const SimplicialWord& w, int source_degree);

// Degree-free reduction by the oriented simplicial identities. Agrees with
// normalize(w, n).word() whenever w is defined on n with non-negative
// intermediate degrees, and commutes with suspend_word(). `steps` (optional)
// receives the number of rewrite steps performed.
SimplicialWord reduce_formal(const SimplicialWord& w, std::size_t* steps = nullptr);

// reduce_formal(compose(w1, w2)) for w1, w2 already reduced; cheaper.
SimplicialWord compose_reduced(const SimplicialWord& w1, const SimplicialWord& w2);

}  // namespace simpdelta
