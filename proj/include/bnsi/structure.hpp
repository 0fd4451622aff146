#pragma once

#include <optional>
#include <vector>

#include "bnsi/problem.hpp"

namespace bnsi {

/// Membership in Phi(B): C is nonempty and every user meets it in either 0
/// or >= 2*delta_s + 1 symbols. Indices 0-based.
bool phi_contains(const BnsiProblem& p, const std::vector<int>& C);

struct PhiWitness {
    std::vector<int> C;            // 0-based, sorted
    std::vector<int> user_degree;  // |X_i cap C| per user
};

struct PhiEmptiness {
    bool is_empty;
    std::optional<PhiWitness> witness;
};

/// Iterative peeling: the lowest-index user with degree in [1, 2*delta_s] is
/// deleted together with its surviving packets, over and over; the survivors
/// (if any) form the witness. Peeling runs to exhaustion rather than stopping
/// once 2*delta_s or fewer packets remain: packets demanded by nobody are
/// legitimate Phi singletons and must not be swept away by an early exit.
PhiEmptiness phi_emptiness(const BnsiProblem& p);

/// The unique maximum element of Phi(B) (the peeling witness), if any.
std::optional<std::vector<int>> c_max(const BnsiProblem& p);

/// A largest packet subset whose induced subproblem has empty Phi, by
/// exhaustive search descending in size with lexicographic tie-break.
/// Guard: 2^n <= 2^24.
std::vector<int> b_max(const BnsiProblem& p);

struct DisjointCollection {
    std::vector<std::vector<int>> elements;  // pairwise disjoint Phi elements
    bool exact;                              // exhaustive (true) or greedy (false)
};

/// Largest collection of pairwise disjoint Phi elements. Exact mode
/// (2^n <= 2^20): maximum cardinality, ties broken by larger total coverage,
/// then lexicographically least by sorted element lists. Otherwise a greedy
/// fallback repeatedly extracts the peeling witness from the remaining
/// packets.
DisjointCollection disjoint_phi_collection(const BnsiProblem& p);

}  // namespace bnsi
