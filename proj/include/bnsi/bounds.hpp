#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bnsi/structure.hpp"

namespace bnsi {

/// Sentinel for the minimum distance of a zero-dimension code.
constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// A linear [n, k] code given by a full-rank parity check matrix H
/// ((n-k) x n); d_min may be known or left to brute force.
struct LinearCodeSpec {
    Matrix H;
    std::optional<int> claimed_dmin;
};

/// [I_{n-1}; all-ones] encoder, valid whenever every |X_i| >= 2*delta_s + 1.
/// Throws PreconditionViolated listing offending users otherwise.
Matrix simple_scheme(const BnsiProblem& p);

/// Minimum nonzero codeword weight of the code with parity check H, by brute
/// force over q^k codewords (guard 2^24); kInfiniteDistance for k = 0.
int min_distance(const LinearCodeSpec& c);

/// eta = 2*delta_s + max_i |Y_i|.
int eta_threshold(const BnsiProblem& p);

/// L = H^T for a code of blocklength n with d_min >= eta + 1; N = n - k.
/// Throws DistanceTooSmall with required/actual values if d_min is short.
Matrix ecc_based_encoder(const BnsiProblem& p, const LinearCodeSpec& c);

/// Generalized Reed-Solomon parity check: (d-1) x n Vandermonde matrix on the
/// first n field elements in integer order. MDS: d_min = d, k = n - d + 1.
/// Requires q >= n and 2 <= d <= n (d = n+1 is the degenerate k = 0 code).
LinearCodeSpec grs_parity_check(const Field& f, int n, int d);

// ---- lower bounds ----

/// |X_S| + min(2*delta_s, n - |X_S|) where S = {i : |X_i| in [2*delta_s]}.
int lower_bound_size(const BnsiProblem& p);

/// |b_max(p)|; throws GuardExceeded past the search cap.
int lower_bound_bmax(const BnsiProblem& p);

// ---- upper bounds (constructive; each returns its encoder witness) ----

struct UpperBound {
    int N;
    Matrix L;
};

struct Unavailable {
    std::string reason;
};

/// MDS construction: N = n - min_i (|X_i| - 2*delta_s)^+, needs q >= n.
std::variant<UpperBound, Unavailable> upper_bound_mds(const BnsiProblem& p);

/// Simple scheme per disjoint Phi element, identity elsewhere: N = n - |c|.
UpperBound upper_bound_disjoint(const BnsiProblem& p,
                                const DisjointCollection* precomputed = nullptr);

/// GRS block per disjoint Phi element with k = d_C, identity elsewhere:
/// N = n - sum d_C; needs q >= max |C| over coded blocks.
std::variant<UpperBound, Unavailable> upper_bound_mds_disjoint(
    const BnsiProblem& p, const DisjointCollection* precomputed = nullptr);

struct PartitionResult {
    int d_sum;
    std::vector<std::vector<int>> partition;  // parts of C_max, 0-based sorted
    std::vector<int> part_savings;            // d_a per part
    bool exact;                               // full enumeration vs greedy refinement
    Matrix L;
    int N;
};

/// Optimal partition of C_max maximizing sum of per-part MDS savings; exact
/// via restricted growth strings for |C_max| <= 12, greedy refinement of the
/// disjoint collection otherwise. Unavailable when Phi is empty or the field
/// is too small for some coded block.
std::variant<PartitionResult, Unavailable> partition_optimizer(const BnsiProblem& p);

// ---- aggregation ----

struct BoundsReport {
    int n = 0;
    int lower_size = 0;
    std::optional<int> lower_bmax;
    std::optional<int> lower_ic_acyclic;
    int upper_trivial = 0;
    std::optional<int> upper_ecc;  // MDS/Theorem-12 route, needs q >= n
    std::optional<int> upper_disjoint;
    std::optional<int> upper_mds_disjoint;
    std::optional<int> upper_partition;
    std::optional<int> oracle_nopt;
    std::vector<std::string> notes;  // per-bound provenance and reasons

    int best_lower() const;
    int best_upper() const;
};

struct BoundsOptions {
    bool run_oracle = false;
    bool run_ic_acyclic = true;
};

BoundsReport bounds_report(const BnsiProblem& p, const BoundsOptions& opts = {});

std::string format_bounds_text(const BoundsReport& r);

}  // namespace bnsi
