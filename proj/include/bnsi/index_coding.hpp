#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bnsi/problem.hpp"

namespace bnsi {

/// One receiver of a scalar index-coding instance: demands message `demand`,
/// already knows the messages in `side_info` exactly. Receivers produced by
/// the reduction carry their origin (source user, demanded symbol, punctured
/// set Q) for traceability.
struct IcUser {
    int demand;                  // 0-based
    std::vector<int> side_info;  // 0-based, sorted ascending
    int src_user = -1;
    std::vector<int> src_q;  // 0-based, sorted

    bool same_request(const IcUser& o) const {
        return demand == o.demand && side_info == o.side_info;
    }
};

struct IndexCodingProblem {
    const Field* field;
    int n;
    std::vector<IcUser> users;        // generated order (deterministic)
    std::uint64_t m_hat_formula = 0;  // closed-form generated-user count

    int m_generated() const { return static_cast<int>(users.size()); }
    int m_distinct() const;
    /// First occurrence of each distinct (demand, side_info) pair, in
    /// generated order.
    std::vector<IcUser> distinct_users() const;
};

/// BNSI -> index coding: one IC user per (source user i, demanded symbol p,
/// Q subset of X_i \ {p} with |Q| = min(|X_i|-1, 2*delta_s-1)), users and
/// symbols ascending, Q in colex order; side info X_i \ (Q u {p}).
IndexCodingProblem reduce_to_ic(const BnsiProblem& p);

bool ic_is_interfering(const IndexCodingProblem& ic, const Vec& z);

/// Interfering vectors of the IC instance (z vanishing on some user's side
/// info with z nonzero at that user's demand), lexicographic, deduplicated.
void for_each_ic_interfering(const IndexCodingProblem& ic,
                             const std::function<bool(const Vec&)>& fn);
std::vector<Vec> ic_interfering_set(const IndexCodingProblem& ic);

/// zL != 0 for all z in the IC interfering set.
bool ic_is_valid(const IndexCodingProblem& ic, const Matrix& L);

/// Largest information-node subset admitting an acyclic demand/side-info
/// digraph when exactly one demanding user is kept per node (side info
/// restricted to the subset). Guard: 2^n <= 2^20.
int ic_acyclic_lower_bound(const IndexCodingProblem& ic);

/// IC file: keys q (or p,k), n, generated, distinct, then one
/// `user f s1 s2 ...` line per receiver (1-based).
std::string save_ic_problem(const IndexCodingProblem& ic, bool dedup = false);
IndexCodingProblem load_ic_problem(std::istream& in);
IndexCodingProblem load_ic_problem_string(const std::string& text);

}  // namespace bnsi
