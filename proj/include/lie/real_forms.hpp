// Antilinear involutions sigma of g^C and real points of complex subspaces.
#pragma once

#include "lie/chevalley.hpp"

#include <string>

namespace lie {

struct VoganDiagram {
    std::vector<int> symmetry;  // involution of the simple-root indices
    std::vector<int> painted;   // symmetry-fixed simple-root indices
};

// Throws std::invalid_argument when the diagram is not valid for rs.
void validate(const RootSystem& rs, const VoganDiagram& d);

// sigma(H) = cartan * conj(H) on Cartan-basis coordinates,
// sigma(z E_alpha) = conj(z) * scalar[alpha] * E_{root_action[alpha]}.
struct Antiinvolution {
    const WeylBasis* basis = nullptr;
    std::string name;
    std::vector<int> root_action;
    std::vector<Scalar> scalar;
    Mat<Rational> cartan;

    int s(int root) const { return root_action[root]; }
    Elem apply(const Elem& x) const;
    RootMask apply(const RootMask& m) const;
    Perm perm() const;
};

Antiinvolution compact_involution(const WeylBasis& wb);
Antiinvolution sigma_from_vogan(const WeylBasis& wb, const VoganDiagram& d);
// sigma(A) = -J conj(A) J on sl_2n; unprimed indices 1..n, primed n+1..2n.
Antiinvolution sigma_sl_quaternionic(const WeylBasis& wb);
// sigma(e_+-i) = e_-+i for i < n, sigma(e_+-n) = e_+-n on C^2n.
Antiinvolution sigma_so_lorentz(const WeylBasis& wb);
// The E6 diagram symmetry a1<->a5, a2<->a4, with the triple node a3 painted or not.
VoganDiagram e6_outer_diagram(bool paint_triple_node);

bool is_inner(const Antiinvolution& s);

struct AntiinvolutionCheck {
    bool involutive = true;
    bool bracket_compatible = true;
    bool root_action_consistent = true;
    std::string witness;
    bool ok() const { return involutive && bracket_compatible && root_action_consistent; }
};

// Exact check on all basis vectors and pairs, plus s(alpha) against the Cartan action.
AntiinvolutionCheck check_antiinvolution(const Antiinvolution& s);

// Basis over the real subfield of {x in span : sigma x = x}.
std::vector<Elem> real_points(const std::vector<Elem>& span, const Antiinvolution& s);

// Independent subfamily of vectors, complex rank.
int complex_rank(const std::vector<Elem>& vs);

}  // namespace lie
