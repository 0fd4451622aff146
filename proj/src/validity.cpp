#include "bnsi/validity.hpp"

#include <algorithm>

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"

namespace bnsi {

void check_encoder_shape(const BnsiProblem& p, const Matrix& L) {
    if (static_cast<int>(L.rows()) != p.n())
        throw DimensionMismatch("encoder must have n = " + std::to_string(p.n()) + " rows, got " +
                                std::to_string(L.rows()));
    if (L.rows() * L.cols() != 0 && L.field().q() != p.field().q())
        throw DimensionMismatch("encoder field " + L.field().name() + " != problem field " +
                                p.field().name());
}

EnumValidity is_valid_by_enumeration(const BnsiProblem& p, const Matrix& L) {
    check_encoder_shape(p, L);
    EnumValidity res{true, std::nullopt};
    for_each_interfering(p, [&](const Vec& z) {
        Vec c = vec_mat_mul(z, L);
        if (hamming_weight(c) == 0) {
            res.valid = false;
            res.witness = z;  // first hit is the lexicographically least
            return false;
        }
        return true;
    });
    return res;
}

RankValidity is_valid_by_rank(const BnsiProblem& p, const Matrix& L) {
    check_encoder_shape(p, L);
    std::uint64_t checks = 0;
    for (int i = 0; i < p.m(); ++i) {
        int s = std::min<int>(2 * p.delta_s(), static_cast<int>(p.demand(i).size()));
        checks += binomial(static_cast<unsigned>(p.demand(i).size()), static_cast<unsigned>(s));
        if (checks > (1ull << 24))
            throw GuardExceeded("rank-based validity exceeds 2^24 subset checks");
    }
    RankValidity res{true, std::nullopt};
    for (int i = 0; i < p.m() && res.valid; ++i) {
        const auto& X = p.demand(i);
        Matrix LY = L.select_rows(p.complement(i));
        int base = mat_rank(LY);
        int s = std::min<int>(2 * p.delta_s(), static_cast<int>(X.size()));
        for_each_combination_lex(static_cast<int>(X.size()), s, [&](const std::vector<int>& c) {
            if (!res.valid) return;
            std::vector<int> rows;
            rows.reserve(c.size());
            for (int idx : c) rows.push_back(X[idx]);
            Matrix stacked = LY.vstack(L.select_rows(rows));
            if (mat_rank(stacked) != base + s) {
                res.valid = false;
                res.witness = RankWitness{i, rows};
            }
        });
    }
    return res;
}

bool necessary_check(const BnsiProblem& p, const Matrix& L) {
    check_encoder_shape(p, L);
    for (int i = 0; i < p.m(); ++i) {
        const auto& X = p.demand(i);
        int s = std::min<int>(2 * p.delta_s(), static_cast<int>(X.size()));
        bool ok = true;
        for_each_combination_lex(static_cast<int>(X.size()), s, [&](const std::vector<int>& c) {
            if (!ok) return;
            std::vector<int> rows;
            for (int idx : c) rows.push_back(X[idx]);
            if (mat_rank(L.select_rows(rows)) != s) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace bnsi
