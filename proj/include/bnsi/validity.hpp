#pragma once

#include <optional>
#include <vector>

#include "bnsi/problem.hpp"

namespace bnsi {

/// Candidate encoder matrix L (n x N) tied to a problem: c = x L.
struct EncoderMatrix {
    Matrix L;
};

/// Checks rows(L) == n and matching field; throws on mismatch.
void check_encoder_shape(const BnsiProblem& p, const Matrix& L);

struct EnumValidity {
    bool valid;
    std::optional<Vec> witness;  // lexicographically least z in I with zL = 0
};

/// Direct criterion: zL != 0 for every interfering z. Guard: q^n <= 2^28.
EnumValidity is_valid_by_enumeration(const BnsiProblem& p, const Matrix& L);

struct RankWitness {
    int user;                // 0-based
    std::vector<int> rows;   // offending subset S of X_i, 0-based symbol indices
};

struct RankValidity {
    bool valid;
    std::optional<RankWitness> witness;  // least (user, subset) failing
};

/// Rowspan criterion: for every user i and every S subset of X_i with
/// |S| = min(2*delta_s, |X_i|), rank([L_{Y_i}; L_S]) = rank(L_{Y_i}) + |S|.
///
/// Size-exactly-min subsets suffice: a subset whose rows are dependent
/// against rowspan(L_{Y_i}) stays dependent inside any superset of that size,
/// so a violating smaller subset always surfaces through some full-size one.
/// Guard: 2^24 subset checks.
RankValidity is_valid_by_rank(const BnsiProblem& p, const Matrix& L);

/// Necessary condition only: every min(2*delta_s, |X_i|)-subset of rows of
/// L_{X_i} is linearly independent for every user.
bool necessary_check(const BnsiProblem& p, const Matrix& L);

}  // namespace bnsi
