#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bnsi/problem.hpp"

namespace bnsi {

/// c = x L.
Vec encode(const BnsiProblem& p, const Matrix& L, const Vec& x);

struct DecoderOptions {
    // Above this many syndrome-table keys, fall back to per-call exhaustive
    // search instead of precomputing the table (or throw if disallowed).
    std::uint64_t table_guard = 1ull << 24;
    bool allow_search_fallback = true;
    // Re-check L with the rank criterion before building.
    bool revalidate = false;
};

/// Per-receiver syndrome decoding state for one user of a valid encoder.
///
/// beta: ascending-index basis rows of rowspan(L_{Y_i}); H: parity check of
/// rowspan(L_beta); A = H L_{X_i}^T. The syndrome table maps A eps^T to eps
/// over all error vectors of weight <= delta_s; validity of L makes that map
/// injective, which the construction asserts.
class ReceiverDecoder {
public:
    int user() const { return user_; }
    const std::vector<int>& beta() const { return beta_; }
    const Matrix& H() const { return H_; }
    const Matrix& A() const { return A_; }
    bool uses_table() const { return uses_table_; }

    /// Construction-order view of the table: error vectors by weight
    /// ascending, then support position, then nonzero values ascending,
    /// paired with their syndromes.
    const std::vector<std::pair<Vec, Vec>>& table_entries() const { return entries_; }

    /// Recovers x_{X_i} from the codeword and the noisy side information,
    /// assuming the true error has weight <= delta_s. Throws SyndromeNotFound
    /// when the syndrome has no weight-<=delta_s pre-image.
    Vec decode(const Vec& codeword, const Vec& side_info) const;

private:
    friend ReceiverDecoder build_decoder(const BnsiProblem&, const Matrix&, int,
                                         const DecoderOptions&);
    const Field* field_;  // registry-owned, outlives any problem object
    int user_;
    std::vector<int> beta_;
    Matrix LX_;  // L_{X_i}
    Matrix H_;
    Matrix A_;
    int delta_s_;
    bool uses_table_;
    std::vector<std::pair<Vec, Vec>> entries_;  // (eps, syndrome) in build order
    std::map<Vec, Vec> table_;                  // syndrome -> eps
    std::optional<Vec> search_decode(const Vec& syndrome) const;
};

/// Enumerates error vectors of length len and weight <= max_weight in the
/// canonical order (weight, then support, then values). Returning false stops.
void for_each_error_vector(const Field& f, int len, int max_weight,
                           const std::function<bool(const Vec&)>& fn);

std::uint64_t error_vector_count(std::uint32_t q, int len, int max_weight);

ReceiverDecoder build_decoder(const BnsiProblem& p, const Matrix& L, int user,
                              const DecoderOptions& opts = {});

}  // namespace bnsi
