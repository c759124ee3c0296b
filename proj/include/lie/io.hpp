// JSON reading and writing for root systems, classifications, pairs and structures.
#pragma once

#include "lie/gcs.hpp"
#include "lie/sigma_systems.hpp"

#include <json.hpp>

#include <memory>

namespace lie::io {

using json = nlohmann::json;

json scalar_json(const Scalar& x);
Scalar parse_scalar(const json& j, std::uint32_t p);
json matrix_json(const Mat<Scalar>& m);
Mat<Scalar> parse_matrix(const json& j, std::uint32_t p);
json mask_json(const RootSystem& rs, const RootMask& m);

json root_system_json(const RootSystem& rs);
json constants_json(const WeylBasis& wb);
json classification_json(const RootSystem& rs, const Classification& c);
json closed_forms_json(const RegularSubalgebra& k, const ClosedForms& cf);
json admissibility_json(const AdmissibilityReport& r);
json structure_json(const GeneralizedStructure& gs, bool with_matrices);

// Named real forms: compact, slH, lorentz, e6-f4, e6-sp4, or {"symmetry": [...], "painted": [...]}.
Antiinvolution parse_sigma(const WeylBasis& wb, const json& j);
// Named root subsets: positive, all, none, slh-a, slh-b, lorentz-a/b/c, e6-1 .. e6-6, or a list of labels.
RootMask parse_roots(const RootSystem& rs, const json& j);

// A pair file:
//   family, rank, sigma, roots;
//   h0: "full" | Cartan-coordinate rows; h0_ambient: ambient rows (alternative);
//   omega: matrix over the basis of k, or omega0 (over h0) plus mu (label -> value) for the h0 + g(R+) shape;
//   a10 (h0 coordinates), xi (global coordinates) optional.
struct LoadedPair {
    std::unique_ptr<WeylBasis> wb;
    Antiinvolution sigma;
    std::unique_ptr<RegularSubalgebra> k;
    TwoForm omega;
    Mat<Scalar> omega0;
    std::vector<Scalar> mu;  // over all roots, empty unless given
    std::optional<Vec<Scalar>> xi;
};

LoadedPair load_pair(const json& j);
json pair_json(const RegularSubalgebra& k, const TwoForm& omega);

}  // namespace lie::io
