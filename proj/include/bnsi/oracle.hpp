#pragma once

#include <optional>

#include "bnsi/problem.hpp"

namespace bnsi {

struct OracleResult {
    int n_opt;
    Matrix L_opt;  // exactly n_opt columns, passes the rank validity check
};

/// Ground-truth optimum by subspace search.
///
/// Validity of L depends only on its left null space W = {z : zL = 0}: L is
/// valid iff W avoids the interfering set, and any subspace W with
/// W cap I = {} is the left null space of some L with n - dim(W) columns
/// (columns = kernel basis of a W-basis matrix). Hence
/// N_opt = n - max{dim W : W cap I = {}}. Subspaces are enumerated once each
/// as RREF representatives, dimension descending with early exit, pivot
/// columns then free entries in lexicographic order, so the reported L_opt is
/// reproducible across runs and platforms.
OracleResult optimal_codelength_subspace(const BnsiProblem& p);

/// Feasibility probe for the subspace oracle's guards (subspace count and
/// q^n bitset size).
bool subspace_oracle_feasible(const BnsiProblem& p);

/// Independent cross-check: smallest N <= n_max such that some L in
/// F_q^{n x N} passes the enumeration validity check, scanning codes in
/// lexicographic order; nullopt if none. Guard: q^(n*N) <= 2^26.
std::optional<int> optimal_codelength_exhaustive(const BnsiProblem& p, int n_max);

}  // namespace bnsi
