// Generalized complex structure of an admissible pair: L, J, type, B-fields, normal form.
#pragma once

#include "lie/forms.hpp"

namespace lie {

// Vectors of g^C + (g^C)*: global coordinates of g, then the dual global coordinates.
using TVec = Vec<Scalar>;

// 1/2 [[0, I], [I, 0]].
Mat<Scalar> g_can(int dim_g);

// Complement of k in g^C: root vectors outside R0 and Cartan unit vectors outside h0, chosen greedily.
std::vector<Elem> complement_of(const RegularSubalgebra& k);

// L = {X + xi : X in k, xi|_k = omega(X, .)}, xi zero on complement_of(k).
std::vector<TVec> holomorphic_space(const RegularSubalgebra& k, const TwoForm& omega);

// (X, xi) -> (sigma X, conj(xi o sigma)).
TVec conjugate(const Antiinvolution& sigma, const TVec& v);

struct GeneralizedStructure {
    int dim_g = 0;
    int type = 0;
    std::vector<TVec> L;
    Mat<Scalar> J;          // global coordinates of g^C + (g^C)*
    Mat<Scalar> J_real;     // in the real basis below
    Mat<Scalar> real_basis; // columns: real basis of g, then its dual basis
    bool isotropic = true;
    bool spanning = true;
    bool square_minus_one = true;
    bool skew = true;
    bool eigen = true;      // J = i on L
    bool real = true;       // J_real has real entries
    bool ok() const { return isotropic && spanning && square_minus_one && skew && eigen && real; }
};

// Throws std::invalid_argument if L is not isotropic or L + conj(L) is not everything.
GeneralizedStructure build_J(const std::vector<TVec>& L, const Antiinvolution& sigma);
// Admissibility is verified first; throws std::invalid_argument on an inadmissible pair.
GeneralizedStructure build_structure(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma);

int gcs_type(const RegularSubalgebra& k);
// 1/2 (rank - dim l + |R|); requires the parity to work out.
int type_from_l_dim(int rank, int dim_l, int num_roots);

// B = d xi restricted to k: B(X, Y) = -xi([X, Y]); xi in global dual coordinates.
TwoForm b_field_on(const RegularSubalgebra& k, const Vec<Scalar>& xi);
TwoForm b_field_transform(const RegularSubalgebra& k, const TwoForm& omega, const Vec<Scalar>& xi);
// xi = -sum mu_a omega_a + sum conj(mu_a) omega_{-a} over a in R0.
Vec<Scalar> normalizing_xi(const RegularSubalgebra& k, const std::vector<Scalar>& mu);
bool covector_is_real(const Antiinvolution& sigma, const Vec<Scalar>& xi);
// mu_a = omega(H, E_a) / a(H) for an h0 basis vector H with a(H) != 0.
std::vector<Scalar> recover_mu(const RegularSubalgebra& k, const TwoForm& omega);

// Complement of h0 cap sigma(h0) in h0, greedy in the h0 basis (h0 coordinates).
std::vector<Vec<Scalar>> default_a10(const RegularSubalgebra& k, const Antiinvolution& sigma);
bool is_normal_form(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma);

// k + conj(k) = g^C and k cap conj(k) = l^C for the given real l inside k.
bool check_complex_structure_conditions(const RegularSubalgebra& k, const Antiinvolution& sigma,
                                        const std::vector<Elem>& l);

}  // namespace lie
