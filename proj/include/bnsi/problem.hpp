#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bnsi/matrix.hpp"

namespace bnsi {

/// A broadcasting-with-noisy-side-information instance: n message symbols
/// over GF(q), m receivers, receiver i demanding the index set X_i and
/// holding a copy of exactly those symbols with at most delta_s symbol
/// errors. Indices are 1-based in files and reports, 0-based internally.
class BnsiProblem {
public:
    BnsiProblem(const Field& f, int n, std::vector<std::vector<int>> demands0, int delta_s);

    const Field& field() const { return *field_; }
    int n() const { return n_; }
    int m() const { return static_cast<int>(demands_.size()); }
    int delta_s() const { return delta_s_; }

    /// Demand set X_i of user i, 0-based indices, sorted ascending.
    const std::vector<int>& demand(int i) const { return demands_[i]; }
    const std::vector<std::vector<int>>& demands() const { return demands_; }
    /// Complement Y_i = [n] \ X_i, 0-based, sorted ascending.
    std::vector<int> complement(int i) const;

    bool operator==(const BnsiProblem& o) const {
        return field_->q() == o.field_->q() && n_ == o.n_ && delta_s_ == o.delta_s_ &&
               demands_ == o.demands_;
    }

private:
    const Field* field_;
    int n_;
    int delta_s_;
    std::vector<std::vector<int>> demands_;  // 0-based, each sorted ascending
};

/// The undirected bipartite graph view: user nodes vs packet nodes, an edge
/// per demanded symbol.
struct BipartiteView {
    int num_users;
    int num_packets;
    std::vector<std::vector<int>> user_adj;    // user -> packets (0-based)
    std::vector<std::vector<int>> packet_adj;  // packet -> users
    std::size_t edge_count;
};
BipartiteView bipartite_view(const BnsiProblem& p);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;  // lint findings, e.g. duplicate demand sets
    bool ok() const { return errors.empty(); }
};
ValidationReport validate_problem(const BnsiProblem& p);

/// True iff some user sees 1 <= wt(z_{X_i}) <= 2*delta_s.
bool is_interfering(const BnsiProblem& p, const Vec& z);

/// Number of z in F_q^n that would be enumerated (q^n); throws GuardExceeded
/// beyond 2^28.
std::uint64_t interfering_enumeration_space(const BnsiProblem& p, std::uint64_t guard = 1ull << 28);

/// Visits the interfering set in lexicographic order of integer encoding,
/// without duplicates. Returning false stops early.
void for_each_interfering(const BnsiProblem& p, const std::function<bool(const Vec&)>& fn);

/// Materialized interfering set in the same order.
std::vector<Vec> interfering_set(const BnsiProblem& p);

std::uint64_t interfering_count(const BnsiProblem& p);

struct InducedSubproblem {
    BnsiProblem problem;
    std::vector<int> old_to_new;  // size n, -1 for dropped symbols (0-based)
    std::vector<int> kept_users;  // original user indices, ascending (0-based)
};

/// Restriction to the symbols in `keep` (0-based), re-indexed 0..|keep|-1 in
/// ascending order; users left with empty demands are dropped.
InducedSubproblem induced_subproblem(const BnsiProblem& p, const std::vector<int>& keep);

/// Problem file: '#' comments; keys q (or p and k), n, delta_s, and one
/// `demand i1 i2 ...` line per user with 1-based indices.
BnsiProblem load_problem(std::istream& in);
BnsiProblem load_problem_string(const std::string& text);
BnsiProblem load_problem_file(const std::string& path);
std::string save_problem(const BnsiProblem& p);
void save_problem_file(const BnsiProblem& p, const std::string& path);

}  // namespace bnsi
