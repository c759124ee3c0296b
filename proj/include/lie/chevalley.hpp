// Weyl basis of g^C: structure constants, coroots, bracket and invariant form.
#pragma once

#include "lie/root_system.hpp"

#include <memory>

namespace lie {

class WeylBasis {
public:
    explicit WeylBasis(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank; }
    int dim() const { return rs_.dim(); }
    // Global coordinates: 0..rank-1 Cartan basis, rank + i for E_{root i}.
    int slot(int root) const { return rs_.rank + root; }
    std::uint32_t p() const { return inv_sqrt_lambda_.p(); }

    // Sign of N_{alpha beta}; 0 when alpha + beta is not a root.
    int sign(int i, int j) const { return sign_[static_cast<std::size_t>(i) * rs_.size() + j]; }
    Scalar N(int i, int j) const;
    const Scalar& unit_constant() const { return inv_sqrt_lambda_; }
    // [E_alpha, E_-alpha] in Cartan-basis coordinates.
    const Vec<Rational>& coroot(int i) const { return coroot_[i]; }
    // Ambient coordinates of the coroot.
    Vec<Rational> coroot_ambient(int i) const;

    // Description of the sign convention used for this family.
    std::string convention() const;

private:
    RootSystem rs_;
    Scalar inv_sqrt_lambda_;
    std::vector<int> sign_;
    std::vector<Vec<Rational>> coroot_;
};

using Elem = Vec<Scalar>;

Elem zero_element(const WeylBasis& wb);
Elem root_vector(const WeylBasis& wb, int root, const Scalar& coeff = Scalar(1));
Elem cartan_vector(const WeylBasis& wb, const Vec<Scalar>& cartan_coords);
Elem basis_element(const WeylBasis& wb, int slot);

Elem bracket(const WeylBasis& wb, const Elem& x, const Elem& y);
// Bracket of two global basis vectors, returned sparsely.
std::vector<std::pair<int, Scalar>> bracket_basis(const WeylBasis& wb, int s, int t);
Scalar killing(const WeylBasis& wb, const Elem& x, const Elem& y);

Elem add(const Elem& x, const Elem& y);
Elem sub(const Elem& x, const Elem& y);
Elem scale(const Scalar& c, const Elem& x);
bool is_zero_elem(const Elem& x);

// Sign of the Frenkel-Kac cocycle eps(alpha, beta) on simple-root coordinates.
int cocycle(const RootSystem& rs, int i, int j);

}  // namespace lie
