#include "lie/sigma_systems.hpp"

#include "lie/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lie {

bool is_sigma_parabolic(const RootSystem& rs, const RootMask& s, const Antiinvolution& sigma) {
    return rs.is_closed(s) && (s | sigma.apply(s)) == rs.all();
}

bool is_sigma_positive(const RootSystem& rs, const RootMask& s, const Antiinvolution& sigma) {
    return is_sigma_parabolic(rs, s, sigma) && (s & sigma.apply(s)).empty();
}

std::vector<Perm> sigma_commuting_weyl(const RootSystem& rs, const Antiinvolution& sigma, std::uint64_t bound) {
    Perm sp = sigma.perm();
    std::vector<Perm> out;
    for (Perm& w : weyl_group(rs, bound))
        if (compose(w, sp) == compose(sp, w)) out.push_back(std::move(w));
    return out;
}

Equivalence::Equivalence(const RootSystem& rs, const Antiinvolution& sigma, std::uint64_t bound)
    : rs_(&rs), weyl_(sigma_commuting_weyl(rs, sigma, bound)) {
    Perm negp(rs.size());
    for (int i = 0; i < rs.size(); ++i) negp[i] = static_cast<std::uint8_t>(rs.neg[i]);
    Perm sp = sigma.perm();
    for (const Perm& w : weyl_) {
        elements_.push_back(w);
        elements_.push_back(compose(w, sp));
        elements_.push_back(compose(w, negp));
        elements_.push_back(compose(w, compose(negp, sp)));
    }
}

Witness Equivalence::describe(int e) const { return Witness{e / 4, (e & 2) != 0, (e & 1) != 0}; }

RootMask Equivalence::apply(const Witness& w, const RootMask& s) const {
    return rs_->apply(elements_[4 * w.weyl_index + (w.negate ? 2 : 0) + (w.apply_sigma ? 1 : 0)], s);
}

RootMask Equivalence::canonical(const RootMask& s, bool parallel) const {
    return parallel ? kernels::canonical_omp(elements_, s).first : kernels::canonical_serial(elements_, s).first;
}

std::vector<RootMask> Equivalence::orbit(const RootMask& s) const {
    std::unordered_set<RootMask, RootMaskHash> seen;
    for (const Perm& g : elements_) seen.insert(rs_->apply(g, s));
    std::vector<RootMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Witness> Equivalence::equivalent(const RootMask& s, const RootMask& t) const {
    for (int e = 0; e < static_cast<int>(elements_.size()); ++e)
        if (rs_->apply(elements_[e], s) == t) return describe(e);
    return std::nullopt;
}

namespace {

class Search {
public:
    Search(const RootSystem& rs, const std::vector<int>& s, std::vector<int> order)
        : rs_(rs), s_(s), order_(std::move(order)), st_(rs.size(), 0) {}

    // Put x into R0 (and s(x) out), closing under sums. False on conflict; trail keeps changes.
    bool assign(int x) {
        std::vector<int> queue{x};
        while (!queue.empty()) {
            int y = queue.back();
            queue.pop_back();
            if (st_[y] == 1) continue;
            if (st_[y] == -1) return false;
            int sy = s_[y];
            if (st_[sy] == 1) return false;
            set(y, 1);
            if (st_[sy] == 0) set(sy, -1);
            for (int z = 0; z < rs_.size(); ++z) {
                if (st_[z] != 1) continue;
                int w = rs_.sum(y, z);
                if (w < 0) continue;
                if (st_[w] == -1) return false;
                if (st_[w] == 0) queue.push_back(w);
            }
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t m) {
        while (trail_.size() > m) {
            st_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    // Depth-first from pair index `depth`; records complete systems.
    void run(std::size_t depth, std::vector<RootMask>& out, long& nodes) {
        ++nodes;
        while (depth < order_.size() && st_[order_[depth]] != 0) ++depth;
        if (depth == order_.size()) {
            RootMask m;
            for (int i = 0; i < rs_.size(); ++i)
                if (st_[i] == 1) m.set(i);
            out.push_back(m);
            return;
        }
        int a = order_[depth];
        for (int pick : {a, s_[a]}) {
            std::size_t m = mark();
            if (assign(pick)) run(depth + 1, out, nodes);
            undo(m);
        }
    }

    // Partial states after deciding the first `limit` pairs.
    void prefixes(std::size_t depth, int limit, std::vector<std::vector<int>>& out, long& nodes) {
        ++nodes;
        while (depth < order_.size() && st_[order_[depth]] != 0) ++depth;
        if (limit == 0 || depth == order_.size()) {
            out.push_back(trail_assignments());
            return;
        }
        int a = order_[depth];
        for (int pick : {a, s_[a]}) {
            std::size_t m = mark();
            if (assign(pick)) prefixes(depth + 1, limit - 1, out, nodes);
            undo(m);
        }
    }

    std::vector<int> trail_assignments() const {
        std::vector<int> in;
        for (int i = 0; i < rs_.size(); ++i)
            if (st_[i] == 1) in.push_back(i);
        return in;
    }

private:
    void set(int i, int v) {
        st_[i] = static_cast<std::int8_t>(v);
        trail_.push_back(i);
    }

    const RootSystem& rs_;
    const std::vector<int>& s_;
    std::vector<int> order_;
    std::vector<std::int8_t> st_;
    std::vector<int> trail_;
};

}  // namespace

Enumeration enumerate_sigma_positive(const RootSystem& rs, const Antiinvolution& sigma, const EnumerationOptions& opt) {
    Enumeration e;
    const std::vector<int>& s = sigma.root_action;
    std::vector<int> reps;
    for (int i = 0; i < rs.size(); ++i) {
        if (s[i] == i) e.sigma_fixes_a_root = true;
        if (i < s[i]) reps.push_back(i);
    }
    e.orbit_pairs = static_cast<int>(reps.size());
    if (e.sigma_fixes_a_root) return e;
    if (e.orbit_pairs > opt.pair_bound)
        throw std::length_error("sigma-orbit pairs " + std::to_string(e.orbit_pairs) + " exceed bound " +
                                std::to_string(opt.pair_bound));
    auto weight = [&](int i) { return std::abs(rs.height[i]) + std::abs(rs.height[s[i]]); };
    std::stable_sort(reps.begin(), reps.end(), [&](int x, int y) { return weight(x) < weight(y); });

    if (!opt.parallel) {
        Search search(rs, s, reps);
        search.run(0, e.systems, e.nodes);
    } else {
        Search root(rs, s, reps);
        std::vector<std::vector<int>> pre;
        root.prefixes(0, opt.split_depth, pre, e.nodes);
        std::vector<std::vector<RootMask>> found(pre.size());
        long nodes = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : nodes)
        for (std::size_t k = 0; k < pre.size(); ++k) {
            Search local(rs, s, reps);
            bool ok = true;
            for (int x : pre[k]) ok = ok && local.assign(x);
            if (ok) local.run(0, found[k], nodes);
        }
        e.nodes += nodes;
        for (auto& f : found) e.systems.insert(e.systems.end(), f.begin(), f.end());
    }
    std::sort(e.systems.begin(), e.systems.end());
    e.systems.erase(std::unique(e.systems.begin(), e.systems.end()), e.systems.end());
    return e;
}

Classification classify_sigma_positive(const RootSystem& rs, const Antiinvolution& sigma,
                                       const LabelledSystems& references, const EnumerationOptions& opt,
                                       std::uint64_t weyl_bound) {
    Classification c;
    c.enumeration = enumerate_sigma_positive(rs, sigma, opt);
    if (c.enumeration.systems.empty()) return c;
    Equivalence eq(rs, sigma, weyl_bound);
    std::set<RootMask> all(c.enumeration.systems.begin(), c.enumeration.systems.end());
    std::set<RootMask> seen;
    for (const RootMask& m : c.enumeration.systems) {
        if (!is_sigma_positive(rs, m, sigma)) c.all_rechecked = false;
        if (seen.count(m)) continue;
        std::vector<RootMask> orb = eq.orbit(m);
        SigmaClass cls;
        cls.representative = orb.front();
        for (const RootMask& x : orb) {
            if (!all.count(x)) c.orbits_consistent = false;
            else ++cls.size;
            seen.insert(x);
        }
        c.classes.push_back(cls);
    }
    std::sort(c.classes.begin(), c.classes.end(),
              [](const SigmaClass& a, const SigmaClass& b) { return a.representative < b.representative; });
    for (const auto& [name, m] : references) {
        RootMask can = eq.canonical(m);
        for (SigmaClass& cls : c.classes)
            if (cls.representative == can) cls.labels.push_back(name);
    }
    return c;
}

}  // namespace lie
