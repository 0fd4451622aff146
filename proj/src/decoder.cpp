#include "bnsi/decoder.hpp"

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"
#include "bnsi/validity.hpp"

namespace bnsi {

Vec encode(const BnsiProblem& p, const Matrix& L, const Vec& x) {
    check_encoder_shape(p, L);
    if (static_cast<int>(x.size()) != p.n())
        throw DimensionMismatch("message length != n");
    return vec_mat_mul(x, L);
}

void for_each_error_vector(const Field& f, int len, int max_weight,
                           const std::function<bool(const Vec&)>& fn) {
    max_weight = std::min(max_weight, len);
    std::uint32_t q = f.q();
    for (int w = 0; w <= max_weight; ++w) {
        bool go = true;
        for_each_combination_lex(len, w, [&](const std::vector<int>& support) {
            if (!go) return;
            // values over the support, each in [1, q), ascending as tuples
            std::vector<Elem> vals(w, 1);
            while (true) {
                Vec eps(len, 0);
                for (int t = 0; t < w; ++t) eps[support[t]] = vals[t];
                if (!fn(eps)) {
                    go = false;
                    return;
                }
                int t = w - 1;
                while (t >= 0 && vals[t] == q - 1) --t;
                if (t < 0) break;
                ++vals[t];
                for (int u = t + 1; u < w; ++u) vals[u] = 1;
            }
        });
        if (!go) return;
    }
}

std::uint64_t error_vector_count(std::uint32_t q, int len, int max_weight) {
    std::uint64_t total = 0;
    max_weight = std::min(max_weight, len);
    for (int w = 0; w <= max_weight; ++w) {
        std::uint64_t term = binomial(static_cast<unsigned>(len), static_cast<unsigned>(w));
        for (int t = 0; t < w; ++t) term *= (q - 1);
        total += term;
    }
    return total;
}

ReceiverDecoder build_decoder(const BnsiProblem& p, const Matrix& L, int user,
                              const DecoderOptions& opts) {
    check_encoder_shape(p, L);
    if (user < 0 || user >= p.m()) throw DimensionMismatch("user index out of range");
    if (opts.revalidate) {
        auto rv = is_valid_by_rank(p, L);
        if (!rv.valid) throw InvalidEncoder("encoder matrix failed revalidation");
    }
    const Field& f = p.field();
    ReceiverDecoder d;
    d.field_ = &p.field();
    d.user_ = user;
    d.delta_s_ = p.delta_s();
    d.LX_ = L.select_rows(p.demand(user));

    // beta_i: greedy ascending-index basis of rowspan(L_{Y_i})
    Matrix acc(f, 0, L.cols());
    int rank = 0;
    for (int j : p.complement(user)) {
        Matrix ext = acc.vstack(L.select_rows({j}));
        int r = mat_rank(ext);
        if (r > rank) {
            d.beta_.push_back(j);
            acc = std::move(ext);
            rank = r;
        }
    }
    d.H_ = parity_check_of_rowspace(L.select_rows(d.beta_));
    d.A_ = d.H_.mul(d.LX_.transpose());

    int xlen = static_cast<int>(p.demand(user).size());
    std::uint64_t keys = error_vector_count(f.q(), xlen, p.delta_s());
    if (keys > opts.table_guard) {
        if (!opts.allow_search_fallback)
            throw TableTooLarge("syndrome table would need " + std::to_string(keys) + " keys");
        d.uses_table_ = false;
        return d;
    }
    d.uses_table_ = true;
    bool ok = true;
    std::string clash;
    for_each_error_vector(f, xlen, p.delta_s(), [&](const Vec& eps) {
        Vec syn = mat_vec_mul(d.A_, eps);
        auto [it, inserted] = d.table_.emplace(syn, eps);
        if (!inserted) {
            ok = false;
            clash = "errors " + vec_to_string(it->second) + " and " + vec_to_string(eps) +
                    " share syndrome " + vec_to_string(syn);
            return false;
        }
        d.entries_.emplace_back(eps, syn);
        return true;
    });
    if (!ok) throw DuplicateSyndrome("invalid encoder for user " + std::to_string(user + 1) +
                                     ": " + clash);
    return d;
}

std::optional<Vec> ReceiverDecoder::search_decode(const Vec& syndrome) const {
    std::optional<Vec> hit;
    for_each_error_vector(*field_, static_cast<int>(LX_.rows()), delta_s_,
                          [&](const Vec& eps) {
                              if (mat_vec_mul(A_, eps) == syndrome) {
                                  hit = eps;
                                  return false;
                              }
                              return true;
                          });
    return hit;
}

Vec ReceiverDecoder::decode(const Vec& codeword, const Vec& side_info) const {
    const Field& f = *field_;
    if (codeword.size() != H_.cols()) throw DimensionMismatch("codeword length != N");
    if (side_info.size() != LX_.rows()) throw DimensionMismatch("side info length != |X_i|");
    // y' = x^e L_{X_i} - c, syndrome b = H y'^T
    Vec y = vec_mat_mul(side_info, LX_);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.sub(y[j], codeword[j]);
    Vec b = mat_vec_mul(H_, y);
    std::optional<Vec> eps;
    if (uses_table_) {
        auto it = table_.find(b);
        if (it != table_.end()) eps = it->second;
    } else {
        eps = search_decode(b);
    }
    if (!eps)
        throw SyndromeNotFound("syndrome " + vec_to_string(b) +
                               " has no error of weight <= " + std::to_string(delta_s_));
    Vec out(side_info);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.sub(out[j], (*eps)[j]);
    return out;
}

}  // namespace bnsi
