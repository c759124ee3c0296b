// Regular subalgebras k = h0 + g(R0), 2-forms on k, the closed-form solver and the explicit families.
#pragma once

#include "lie/real_forms.hpp"
#include "lie/structure.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>

namespace lie {

using TwoForm = Mat<Scalar>;   // antisymmetric, over the basis of k
using Covector = Vec<Scalar>;  // over the basis of k
using CartanVec = Vec<Scalar>; // Cartan-basis coordinates

class RegularSubalgebra {
public:
    // Throws std::invalid_argument if R0 is not closed, h0 is dependent, or a coroot of R0^sym lies outside h0.
    RegularSubalgebra(const WeylBasis& wb, RootMask roots, std::vector<CartanVec> h0);

    const WeylBasis& weyl() const { return *wb_; }
    const RootMask& roots() const { return roots_; }
    const std::vector<CartanVec>& h0() const { return h0_; }
    const std::vector<int>& root_list() const { return root_list_; }
    const LieTable& table() const { return table_; }

    int dim() const { return static_cast<int>(h0_.size() + root_list_.size()); }
    int cartan_dim() const { return static_cast<int>(h0_.size()); }
    // Basis position of E_root, -1 when root is not in R0.
    int position(int root) const { return position_[root]; }
    int root_at(int b) const { return root_list_[b - cartan_dim()]; }
    bool is_cartan(int b) const { return b < cartan_dim(); }

    Elem element(int b) const;
    Elem element(const Vec<Scalar>& coords) const;
    // Coordinates of x in the basis of k, if x lies in k.
    std::optional<Vec<Scalar>> coords(const Elem& x) const;
    std::optional<Vec<Scalar>> cartan_coords_in_h0(const CartanVec& h) const;

    // Designated a^{1,0}: complement of h0 cap sigma(h0) inside h0 (h0 coordinates).
    std::vector<Vec<Scalar>> a10;

private:
    const WeylBasis* wb_;
    RootMask roots_;
    std::vector<CartanVec> h0_;
    std::vector<int> root_list_;
    std::vector<int> position_;
    Mat<Scalar> h0_left_inverse_;  // dim h0 x rank
    LieTable table_;
};

// Full Cartan subalgebra as h0.
std::vector<CartanVec> full_cartan(const WeylBasis& wb);

TwoForm zero_form(int dim);
TwoForm wedge(const Covector& a, const Covector& b);
void add_scaled(TwoForm& acc, const Scalar& c, const TwoForm& f);
bool is_antisymmetric(const TwoForm& f);

// alpha restricted to h0, zero on root vectors.
Covector root_functional(const RegularSubalgebra& k, int root);
// Any functional on h given by its values on the Cartan basis.
Covector cartan_functional(const RegularSubalgebra& k, const Vec<Scalar>& values_on_cartan_basis);
// omega_alpha: zero on h0, omega_alpha(E_beta) = delta.
Covector dual_covector(const RegularSubalgebra& k, int root);

// (d beta)(X, Y) = -beta([X, Y]).
TwoForm d_one_form(const RegularSubalgebra& k, const Covector& beta);
// (d omega) on all triples i < j < l, lexicographic.
std::vector<Scalar> exterior_derivative(const LieTable& t, const TwoForm& omega, bool parallel = true);
std::vector<Scalar> exterior_derivative(const RegularSubalgebra& k, const TwoForm& omega, bool parallel = true);
bool is_closed(const RegularSubalgebra& k, const TwoForm& omega);
bool is_closed(const LieTable& t, const TwoForm& omega);

struct ClosedForms {
    int unknowns = 0;
    int equations = 0;
    std::vector<TwoForm> basis;
};

// Exact kernel of d on 2-forms. Throws std::length_error if dim k exceeds the bound.
ClosedForms closed_two_forms(const LieTable& t, int bound = 120);
ClosedForms closed_two_forms(const RegularSubalgebra& k, int bound = 120);

// Dimension of the span of a family of forms.
int span_dim(const std::vector<TwoForm>& forms);
// True if every form of a lies in span(b).
bool span_contains(const std::vector<TwoForm>& b, const std::vector<TwoForm>& a);

// 2-forms on h0 (as forms on k) with omega(s, .) = 0 for s in the given h0-coordinate vectors.
std::vector<TwoForm> cartan_forms_killing(const RegularSubalgebra& k, const std::vector<Vec<Scalar>>& kernel_vectors);
// Extend a form on h0 (dim h0 square) by zero to k.
TwoForm extend_cartan_form(const RegularSubalgebra& k, const Mat<Scalar>& omega0);
Mat<Scalar> cartan_part(const RegularSubalgebra& k, const TwoForm& omega);

// omega0 + sum mu_a a^w_a + 1/2 sum mu_{a+b} N_ab w_a^w_b over a, b in R0 (R0 a positive system).
TwoForm positive_family_form(const RegularSubalgebra& k, const std::vector<Scalar>& mu, const Mat<Scalar>& omega0);
bool is_positive_system(const RootSystem& rs, const RootMask& m);

struct SlnhParams {
    std::map<std::pair<int, int>, Scalar> lambda;        // (i, j), i != j unprimed
    std::map<std::pair<int, int>, Scalar> eta;           // (i, j), i != j unprimed
    std::map<std::pair<int, int>, Scalar> lambda_prime;  // (k, j) standing for (k, j')
    Mat<Scalar> omega0;                                   // on h0
};

// The printed family on k = h0 + g(type a). Throws if omega0 does not vanish on E_ii - E_jj,
// or if n = 2 and the extra non-vanishing hypothesis fails on h0.
TwoForm sln_h_form(const RegularSubalgebra& k, const SlnhParams& p);
std::vector<std::string> slnh_precondition_failures(const RegularSubalgebra& k, const Mat<Scalar>& omega0);

struct LorentzParams {
    Scalar a, b, c;
    std::map<int, Scalar> c_root;  // root index in R0' -> c_alpha
    Mat<Scalar> omega0;
};

// Roots of R0' = R+ minus {e_{n-1} +- e_n}.
std::vector<int> lorentz_r0_prime(const RootSystem& rs);
// Roots of R0' violating alpha|_{Ker(e_{n-1}+e_n) cap h0} != 0.
std::vector<int> lorentz_kernel_failures(const RegularSubalgebra& k);
// The family on k = h0 + g(type c), with alpha read as alpha - alpha(H')/2 gamma in the c_alpha terms.
TwoForm so_lorentz_form(const RegularSubalgebra& k, const LorentzParams& p);

// omega_(variant) on k^(variant); omega0 must vanish on e_i - e_j, i, j <= 3.
TwoForm e6_form(const RegularSubalgebra& k, int variant, const Scalar& lambda, const Mat<Scalar>& omega0);
// The root paired with its own covector in omega_(variant), and the functional in front.
std::pair<IntVec, IntVec> e6_form_roots(int variant);

struct SemidirectReport {
    bool decomposition_ok = true;
    bool rho0_closed = true;
    bool rho1_closed = true;
    bool c1 = true;
    bool c2 = true;
    bool closed = true;  // d_k rho = 0 directly
    std::string witness;
    bool conditions() const { return rho0_closed && rho1_closed && c1 && c2; }
    bool consistent() const { return conditions() == closed; }
};

// k = s + p with s, p given as complementary sets of basis positions of k.
SemidirectReport semidirect_closedness_check(const LieTable& t, const std::vector<int>& s, const std::vector<int>& p,
                                             const TwoForm& rho);

struct AdmissibilityReport {
    bool subalgebra = true;
    bool spanning = true;        // k + sigma(k) = g^C
    bool closed = true;
    int l_dim = 0;
    bool l_abelian = true;
    bool nondegenerate = false;  // Im(omega|_l)
    bool sigma_positive = false; // R0 (reported only)
    bool supplementary = false;   // (R0 cap sigma R0) sym part condition holds
    std::vector<Elem> l_basis;
    bool admissible() const { return subalgebra && spanning && closed && nondegenerate; }
    std::string summary() const;
};

AdmissibilityReport is_admissible(const RegularSubalgebra& k, const TwoForm& omega, const Antiinvolution& sigma);

// h0 cap sigma(h0) in Cartan coordinates.
std::vector<CartanVec> cartan_intersection_with_conjugate(const WeylBasis& wb, const std::vector<CartanVec>& h0,
                                                          const Antiinvolution& sigma);
CartanVec apply_on_cartan(const Antiinvolution& sigma, const CartanVec& h);
// Real Cartan vectors (sigma-fixed) forming a basis of h over C.
std::vector<CartanVec> real_cartan_basis(const WeylBasis& wb, const Antiinvolution& sigma);

struct H0Pair {
    bool transversal = true;   // S cap sigma(S) = 0
    bool l_even = true;
    std::vector<CartanVec> S;  // span of coroots of R0^sym
    std::vector<CartanVec> h0; // S first, then real vectors
    Mat<Scalar> omega0;        // over h0
    std::string note;
};

// h1 = h, h0 = S + C with C a sigma-stable complement of S + sigma(S); omega0 = i * standard form on C.
H0Pair construct_h0_pair(const WeylBasis& wb, const RootMask& r0, const Antiinvolution& sigma);

// Inner-type pair h0 + g(R+) with dim_C a^{1,0} = k_complex, l of dimension rank - 2 k_complex.
struct InnerPair {
    std::vector<CartanVec> h0;
    std::vector<Vec<Scalar>> a10;  // h0 coordinates
    Mat<Scalar> omega0;
};
InnerPair inner_family_h0(const WeylBasis& wb, const Antiinvolution& sigma, int k_complex);

// Reproducible small random field elements with rational a, b parts.
Scalar random_scalar(std::mt19937_64& rng, int range = 5, bool complex = true);

}  // namespace lie
