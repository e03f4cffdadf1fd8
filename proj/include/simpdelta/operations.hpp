#pragma once

// Chain-level operations delta_i : Z_q -> Z_{q+i} on simplicial F2-algebras,
// in closed form and through the higher Eilenberg-MacLane maps.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "simpdelta/em_transform.hpp"
#include "simpdelta/models.hpp"

namespace simpdelta {

struct ShufflePair {
    std::vector<int> mu;
    std::vector<int> nu;

    friend auto operator<=>(const ShufflePair&, const ShufflePair&) = default;
    friend bool operator==(const ShufflePair&, const ShufflePair&) = default;
};

// Splittings of {q-i, ..., q+i-1} into increasing mu, nu of length i, in
// lexicographic order of mu. Throw BadRange unless 1 <= i <= q.
std::vector<ShufflePair> enumerate_U(int q, int i);
// The pairs of U(q,i) with mu[0] = q-i.
std::vector<ShufflePair> enumerate_V(int q, int i);

// s_{w[last]} ... s_{w[0]}: the degeneracies of an increasing sequence.
SimplicialWord shuffle_word(const std::vector<int>& increasing);

struct DeltaResult {
    AlgebraElement value;
    std::optional<std::string> warning;
};

// sum over V(q,i) of s_nu(z) s_mu(z). Throws BadRange, NotNormalizedCycle
// (a face of z is nonzero), TruncationOverflow. For i = 1 the result is
// not a cycle and a warning is attached.
DeltaResult delta_i(const AlgebraModel& a, const AlgebraElement& z, int i);

// mu D^{q-i}(z (x) z) + mu D^{q-i-1}(z (x) bd z), the second term only
// when q-i-1 >= 0. d_sequence may supply D^0..D^{q-i} to share caches.
AlgebraElement theta_i(const AlgebraModel& a, const AlgebraElement& z, int i);
AlgebraElement theta_i(const AlgebraModel& a, const AlgebraElement& z, int i,
                       const std::vector<EMTransform>& d_sequence);

// sum over U(q,q) of s_nu(z) s_mu(z).
AlgebraElement mu_D_square(const AlgebraModel& a, const AlgebraElement& z);

// {"q":..,"i":..,"degree":..,"terms":[[factor labels],...],...}
struct DeltaReport {
    int q = 0;
    int i = 0;
    AlgebraElement delta;
    AlgebraElement theta;
    bool is_cycle = false;
    std::vector<int> nonzero_faces;
    std::optional<bool> homology_class_nonzero;
    std::optional<std::string> warning;

    bool equals_theta() const { return delta == theta; }
};

// delta_i and theta_i of the fundamental class of Sym(Sphere(q)), with the
// cycle verdict and, for cycles, whether the class is nonzero in homology.
DeltaReport delta_report(int q, int i);
std::string delta_report_json(const DeltaReport& r);

}  // namespace simpdelta
