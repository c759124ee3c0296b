// Root systems of types A, D and E6 in ambient epsilon coordinates.
#pragma once

#include "lie/linalg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lie {

enum class Family { A, D, E6 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

using IntVec = std::vector<int>;

// Bitmask over a root list of at most 128 roots.
struct RootMask {
    std::array<std::uint64_t, 2> w{0, 0};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
    bool empty() const { return (w[0] | w[1]) == 0; }

    RootMask operator&(const RootMask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    RootMask operator|(const RootMask& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    RootMask operator^(const RootMask& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
    RootMask minus(const RootMask& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

    friend bool operator==(const RootMask& x, const RootMask& y) { return x.w == y.w; }
    friend bool operator!=(const RootMask& x, const RootMask& y) { return x.w != y.w; }
    // Order as a 128-bit unsigned integer with bit i standing for root i.
    friend bool operator<(const RootMask& x, const RootMask& y) {
        return x.w[1] != y.w[1] ? x.w[1] < y.w[1] : x.w[0] < y.w[0];
    }

    template <class F>
    void for_each(F&& f) const {
        for (int k = 0; k < 2; ++k) {
            std::uint64_t v = w[k];
            while (v) {
                int b = __builtin_ctzll(v);
                f(k * 64 + b);
                v &= v - 1;
            }
        }
    }
    std::vector<int> indices() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }
};

struct RootMaskHash {
    std::size_t operator()(const RootMask& m) const {
        return std::hash<std::uint64_t>()(m.w[0] * 0x9E3779B97F4A7C15ull ^ m.w[1]);
    }
};

using Perm = std::vector<std::uint8_t>;

class RootSystem {
public:
    Family family;
    int rank = 0;
    int ambient = 0;
    std::vector<IntVec> roots;         // lexicographic on coordinates
    std::vector<int> simple;           // indices of simple roots, in diagram order
    std::vector<IntVec> simple_coords; // each root in simple-root coordinates
    std::vector<int> height;
    std::vector<int> neg;              // index of -alpha
    Mat<Rational> dual_gram;           // inner product of roots in epsilon coordinates
    Mat<Rational> cartan_gram_ambient; // invariant form on h in ambient coordinates
    std::vector<IntVec> cartan_basis;  // ambient coordinates of h_1 .. h_rank
    Mat<Rational> cartan_gram;         // invariant form on the Cartan basis
    int lambda = 0;                    // |N|^2 = 1 / lambda

    int size() const { return static_cast<int>(roots.size()); }
    int dim() const { return rank + size(); }
    bool positive(int i) const { return height[i] > 0; }

    int index_of(const IntVec& coords) const;  // -1 if not a root
    // Index of roots[i] + roots[j]; -1 if not a root (including the zero vector).
    int sum(int i, int j) const { return sum_[static_cast<std::size_t>(i) * roots.size() + j]; }

    Rational inner(int i, int j) const;
    // alpha(h_a) for the Cartan basis vector h_a.
    int on_cartan(int root, int a) const { return on_cartan_[static_cast<std::size_t>(root) * rank + a]; }
    // Coordinates in the Cartan basis of an ambient vector lying in h.
    Vec<Rational> cartan_coords(const Vec<Rational>& ambient_vec) const;
    Vec<Rational> ambient_of(const Vec<Rational>& cartan_vec) const;
    bool in_cartan(const Vec<Rational>& ambient_vec) const;

    RootMask all() const;
    RootMask positive_mask() const;
    RootMask mask_of(const std::vector<IntVec>& coords) const;

    std::string label(int i) const;  // "(1,-1,0)"
    int parse_label(const std::string& s) const;

    bool is_closed(const RootMask& s) const;
    RootMask symmetric_part(const RootMask& s) const;
    RootMask asymmetric_part(const RootMask& s) const;
    RootMask negate(const RootMask& s) const;
    RootMask apply(const Perm& perm, const RootMask& s) const;

    // Root permutation of the simple reflection s_k.
    Perm reflection(int k) const;

    friend RootSystem build_root_system(Family f, int rank);

private:
    void finish();

    std::unordered_map<std::string, int> lookup_;
    std::vector<int> sum_;
    std::vector<int> on_cartan_;
    Mat<Rational> cartan_left_inverse_;  // rank x ambient
};

RootSystem build_root_system(Family f, int rank);

// Order of the Weyl group from the classification formula.
std::uint64_t weyl_order(Family f, int rank);

// All Weyl group elements as root permutations, BFS order from the identity.
std::vector<Perm> weyl_group(const RootSystem& rs, std::uint64_t bound = 1000000);

Perm compose(const Perm& a, const Perm& b);  // a after b

}  // namespace lie
