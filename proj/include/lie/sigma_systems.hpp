// sigma-parabolic and sigma-positive root subsets and their classification.
#pragma once

#include "lie/real_forms.hpp"

#include <optional>
#include <string>

namespace lie {

bool is_sigma_parabolic(const RootSystem& rs, const RootMask& s, const Antiinvolution& sigma);
bool is_sigma_positive(const RootSystem& rs, const RootMask& s, const Antiinvolution& sigma);

// Weyl group elements commuting with the root action of sigma.
std::vector<Perm> sigma_commuting_weyl(const RootSystem& rs, const Antiinvolution& sigma,
                                       std::uint64_t bound = 1000000);

struct Witness {
    int weyl_index = 0;  // into sigma_commuting_weyl
    bool negate = false;
    bool apply_sigma = false;
};

// The group generated by W^sigma, -1 and sigma acting on root subsets.
class Equivalence {
public:
    Equivalence(const RootSystem& rs, const Antiinvolution& sigma, std::uint64_t bound = 1000000);

    const std::vector<Perm>& weyl() const { return weyl_; }
    const std::vector<Perm>& elements() const { return elements_; }
    Witness describe(int element) const;

    RootMask canonical(const RootMask& s, bool parallel = true) const;
    std::vector<RootMask> orbit(const RootMask& s) const;  // sorted, distinct
    // On success, T = w(+-1)(sigma?)(S) for the returned witness.
    std::optional<Witness> equivalent(const RootMask& s, const RootMask& t) const;
    RootMask apply(const Witness& w, const RootMask& s) const;

private:
    const RootSystem* rs_;
    std::vector<Perm> weyl_;
    std::vector<Perm> elements_;  // index = 4 * w + 2 * negate + sigma
};

struct EnumerationOptions {
    int pair_bound = 40;
    bool parallel = true;
    int split_depth = 6;  // pairs decided before work is distributed
};

struct Enumeration {
    bool sigma_fixes_a_root = false;
    int orbit_pairs = 0;
    long nodes = 0;
    std::vector<RootMask> systems;  // sorted
};

Enumeration enumerate_sigma_positive(const RootSystem& rs, const Antiinvolution& sigma,
                                     const EnumerationOptions& opt = {});

struct SigmaClass {
    RootMask representative;  // canonical form
    long size = 0;            // number of enumerated systems in the class
    std::vector<std::string> labels;
};

struct Classification {
    Enumeration enumeration;
    std::vector<SigmaClass> classes;
    bool orbits_consistent = true;  // every orbit element was found by the search
    bool all_rechecked = true;      // every system passes is_sigma_positive independently
};

using LabelledSystems = std::vector<std::pair<std::string, RootMask>>;

Classification classify_sigma_positive(const RootSystem& rs, const Antiinvolution& sigma,
                                       const LabelledSystems& references = {},
                                       const EnumerationOptions& opt = {}, std::uint64_t weyl_bound = 1000000);

}  // namespace lie
