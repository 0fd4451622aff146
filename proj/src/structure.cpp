#include "bnsi/structure.hpp"

#include <algorithm>
#include <bit>

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"

namespace bnsi {
namespace {

std::vector<std::uint64_t> demand_masks(const BnsiProblem& p) {
    std::vector<std::uint64_t> dm(p.m(), 0);
    for (int i = 0; i < p.m(); ++i)
        for (int j : p.demand(i)) dm[i] |= 1ull << j;
    return dm;
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (int j = 0; mask; ++j, mask >>= 1)
        if (mask & 1) out.push_back(j);
    return out;
}

// Peeling on the subproblem induced by `packets`: returns the witness packet
// mask if Phi is nonempty there, 0 otherwise. The lowest-index qualifying
// user is deleted each round together with its surviving packets; zero-degree
// users are simply ignored. The loop runs until no user qualifies: stopping
// early once few packets remain would misreport instances where some packet
// is demanded by nobody (its singleton is a Phi element).
std::uint64_t peel(const std::vector<std::uint64_t>& dm, std::uint64_t packets, int delta_s) {
    const int threshold = 2 * delta_s;
    std::uint64_t P = packets;
    while (P) {
        int victim = -1;
        for (std::size_t i = 0; i < dm.size(); ++i) {
            int deg = std::popcount(dm[i] & P);
            if (deg >= 1 && deg <= threshold) {
                victim = static_cast<int>(i);
                break;
            }
        }
        if (victim < 0) break;  // every surviving user has degree >= 2*delta_s + 1
        P &= ~dm[victim];
    }
    return P;
}

bool phi_has_mask(const std::vector<std::uint64_t>& dm, std::uint64_t mask, int delta_s) {
    if (!mask) return false;
    const int threshold = 2 * delta_s;
    for (std::uint64_t d : dm) {
        int deg = std::popcount(d & mask);
        if (deg >= 1 && deg <= threshold) return false;
    }
    return true;
}

}  // namespace

bool phi_contains(const BnsiProblem& p, const std::vector<int>& C) {
    std::uint64_t mask = 0;
    for (int j : C) {
        if (j < 0 || j >= p.n()) throw DimensionMismatch("phi set index out of range");
        mask |= 1ull << j;
    }
    return phi_has_mask(demand_masks(p), mask, p.delta_s());
}

PhiEmptiness phi_emptiness(const BnsiProblem& p) {
    auto dm = demand_masks(p);
    std::uint64_t full = p.n() >= 64 ? ~0ull : (1ull << p.n()) - 1;
    std::uint64_t C = peel(dm, full, p.delta_s());
    if (!C) return {true, std::nullopt};
    PhiWitness w;
    w.C = mask_to_indices(C);
    w.user_degree.resize(p.m());
    for (int i = 0; i < p.m(); ++i) w.user_degree[i] = std::popcount(dm[i] & C);
    return {false, std::move(w)};
}

std::optional<std::vector<int>> c_max(const BnsiProblem& p) {
    auto pe = phi_emptiness(p);
    if (pe.is_empty) return std::nullopt;
    return pe.witness->C;
}

std::vector<int> b_max(const BnsiProblem& p) {
    if (p.n() > 24) throw GuardExceeded("b_max search is capped at n <= 24");
    auto dm = demand_masks(p);
    std::vector<int> best;
    for_each_subset_desc_size(p.n(), [&](std::uint32_t mask) {
        if (peel(dm, mask, p.delta_s()) == 0) {
            best = mask_to_indices(mask);
            return false;
        }
        return true;
    });
    return best;
}

namespace {

using Collection = std::vector<std::vector<int>>;

Collection merge_sorted(Collection a, const Collection& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// Exhaustive max-cardinality packing over the candidate Phi elements, ties
// broken by total coverage, then by lexicographic order of the merged
// collection (candidates come lex-sorted and picks ascend, so the pick's own
// order is already lex).
struct PackingSearch {
    const std::vector<std::uint64_t>& masks;
    const Collection& lists;
    const Collection& fixed;  // free-packet singletons, part of every optimum
    std::uint64_t universe;   // touched packets
    int min_part_size;        // 2*delta_s + 1
    int best_count = -1;
    int best_coverage = -1;
    Collection best;

    void dfs(std::size_t from, std::uint64_t used, std::vector<std::size_t>& pick, int coverage) {
        consider(pick, coverage);
        int count = static_cast<int>(pick.size());
        int slack = std::popcount(universe & ~used);
        int max_extra_parts = slack / min_part_size;
        if (count + max_extra_parts < best_count) return;
        if (count + max_extra_parts == best_count && coverage + slack < best_coverage) return;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (masks[i] & used) continue;
            pick.push_back(i);
            dfs(i + 1, used | masks[i], pick, coverage + std::popcount(masks[i]));
            pick.pop_back();
        }
    }

    void consider(const std::vector<std::size_t>& pick, int coverage) {
        int count = static_cast<int>(pick.size());
        if (count < best_count) return;
        if (count == best_count && coverage < best_coverage) return;
        Collection cur;
        for (std::size_t i : pick) cur.push_back(lists[i]);
        cur = merge_sorted(std::move(cur), fixed);
        if (count == best_count && coverage == best_coverage && !(cur < best)) return;
        best_count = count;
        best_coverage = coverage;
        best = std::move(cur);
    }
};

}  // namespace

DisjointCollection disjoint_phi_collection(const BnsiProblem& p) {
    DisjointCollection out;
    auto dm = demand_masks(p);
    std::uint64_t full = p.n() >= 64 ? ~0ull : (1ull << p.n()) - 1;

    if (p.delta_s() == 0) {
        // every nonempty set is a Phi element; singletons are the unique
        // maximum packing
        out.exact = true;
        for (int j = 0; j < p.n(); ++j) out.elements.push_back({j});
        return out;
    }

    std::uint64_t touched = 0;
    for (std::uint64_t d : dm) touched |= d;
    touched &= full;
    std::uint64_t free_mask = full & ~touched;
    int t = std::popcount(touched);

    if (t <= 20) {
        // free packets are forced singletons in every maximum packing: a
        // collection missing one could add it, and a part mixing free and
        // touched packets splits into its touched core plus freed singletons
        // without losing count or coverage
        Collection fixed;
        for (int j : mask_to_indices(free_mask)) fixed.push_back({j});

        std::vector<int> tidx = mask_to_indices(touched);
        Collection lists;
        std::vector<std::uint64_t> masks;
        for (std::uint64_t sub = 1; sub < (1ull << t); ++sub) {
            std::uint64_t mask = 0;
            for (int b = 0; b < t; ++b)
                if (sub & (1ull << b)) mask |= 1ull << tidx[b];
            if (phi_has_mask(dm, mask, p.delta_s())) {
                lists.push_back(mask_to_indices(mask));
                masks.push_back(mask);
            }
        }
        std::vector<std::size_t> order(lists.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return lists[a] < lists[b]; });
        Collection slists;
        std::vector<std::uint64_t> smasks;
        for (std::size_t i : order) {
            slists.push_back(lists[i]);
            smasks.push_back(masks[i]);
        }
        if (slists.size() <= (1u << 15)) {
            out.exact = true;
            PackingSearch search{smasks, slists, fixed, touched, 2 * p.delta_s() + 1, -1, -1, {}};
            std::vector<std::size_t> pick;
            search.dfs(0, 0, pick, 0);
            out.elements = std::move(search.best);
            return out;
        }
        // fall through to greedy when the candidate list itself is outsized
    }

    out.exact = false;
    std::uint64_t remaining = full;
    while (true) {
        std::uint64_t C = peel(dm, remaining, p.delta_s());
        if (!C) break;
        out.elements.push_back(mask_to_indices(C));
        remaining &= ~C;
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

}  // namespace bnsi
