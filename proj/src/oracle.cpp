#include "bnsi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"
#include "bnsi/validity.hpp"

namespace bnsi {
namespace {

// Number of d-dimensional subspaces of F_q^n (Gaussian binomial), saturating.
std::uint64_t gaussian_binomial(std::uint64_t q, int n, int d) {
    // product over i of (q^(n-i) - 1) / (q^(d-i) - 1); compute in long double
    // to detect overflow, exact enough for a guard
    long double v = 1.0L;
    for (int i = 0; i < d; ++i) {
        long double num = std::pow((long double)q, n - i) - 1;
        long double den = std::pow((long double)q, d - i) - 1;
        v *= num / den;
        if (v > 1e18L) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(v + 0.5L);
}

std::uint64_t subspace_total(std::uint64_t q, int n) {
    std::uint64_t total = 0;
    for (int d = 0; d <= n; ++d) {
        std::uint64_t g = gaussian_binomial(q, n, d);
        if (g == UINT64_MAX || total + g < total) return UINT64_MAX;
        total += g;
    }
    return total;
}

// Enumerates RREF basis matrices of all d-dimensional subspaces of F_q^n:
// pivot-column sets in lexicographic order, then free entries (row-major) in
// lexicographic order of their base-q encoding. Returning false stops.
bool for_each_subspace_rref(const Field& f, int n, int d,
                            const std::function<bool(const Matrix&)>& fn) {
    if (d == 0) {
        return fn(Matrix(f, 0, n));
    }
    const std::uint32_t q = f.q();
    bool go = true;
    for_each_combination_lex(n, d, [&](const std::vector<int>& pivots) {
        if (!go) return;
        // free slots: entries (r, c) with c > pivots[r] and c not a pivot col
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::pair<int, int>> slots;
        for (int r = 0; r < d; ++r)
            for (int c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) slots.emplace_back(r, c);
        std::vector<Elem> fill(slots.size(), 0);
        while (true) {
            Matrix B(f, d, n);
            for (int r = 0; r < d; ++r) B.at(r, pivots[r]) = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                B.at(slots[s].first, slots[s].second) = fill[s];
            if (!fn(B)) {
                go = false;
                return;
            }
            std::size_t s = fill.size();
            while (s > 0 && fill[s - 1] == q - 1) --s;
            if (s == 0) break;
            ++fill[s - 1];
            std::fill(fill.begin() + s, fill.end(), 0);
        }
    });
    return go;
}

}  // namespace

bool subspace_oracle_feasible(const BnsiProblem& p) {
    std::uint64_t qn = 1;
    for (int i = 0; i < p.n(); ++i) {
        qn *= p.field().q();
        if (qn > (1ull << 26)) return false;
    }
    return subspace_total(p.field().q(), p.n()) <= (1ull << 24);
}

OracleResult optimal_codelength_subspace(const BnsiProblem& p) {
    if (!subspace_oracle_feasible(p))
        throw GuardExceeded("subspace oracle guard exceeded (subspace count or q^n)");
    const Field& f = p.field();
    const int n = p.n();
    const std::uint32_t q = f.q();

    // membership bitset of the interfering set over all q^n codes
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    std::vector<bool> interferes(qn, false);
    for_each_interfering(p, [&](const Vec& z) {
        interferes[vec_encode(z, q)] = true;
        return true;
    });

    for (int d = n; d >= 0; --d) {
        Matrix found;
        bool hit = false;
        for_each_subspace_rref(f, n, d, [&](const Matrix& B) {
            // walk all q^d combinations of the basis rows
            std::uint64_t combos = 1;
            for (int i = 0; i < d; ++i) combos *= q;
            Vec coeff(d, 0);
            for (std::uint64_t c = 1; c < combos; ++c) {
                // increment base-q counter (least significant last)
                for (int i = d - 1; i >= 0; --i) {
                    if (++coeff[i] < q) break;
                    coeff[i] = 0;
                }
                Vec w = vec_mat_mul(coeff, B);
                if (interferes[vec_encode(w, q)]) return true;  // next subspace
            }
            found = B;
            hit = true;
            return false;
        });
        if (hit || d == 0) {
            // realize L whose left null space is exactly rowspan(found):
            // columns = RREF kernel basis of the subspace basis matrix
            Matrix W = hit ? found : Matrix(f, 0, n);
            Matrix L = kernel_basis(W).transpose();
            return OracleResult{n - (hit ? d : 0), std::move(L)};
        }
    }
    throw std::logic_error("unreachable: dimension 0 always succeeds");
}

std::optional<int> optimal_codelength_exhaustive(const BnsiProblem& p, int n_max) {
    const Field& f = p.field();
    const std::uint32_t q = f.q();
    const int n = p.n();
    // guard on the largest enumeration: q^(n * n_max)
    long double size = std::pow((long double)q, (long double)n * std::max(n_max, 0));
    if (size > (long double)(1ull << 26))
        throw GuardExceeded("exhaustive encoder search guard q^(n*N) <= 2^26 exceeded");

    auto I = interfering_set(p);
    if (I.empty()) return 0;
    for (int N = 1; N <= n_max; ++N) {
        std::uint64_t total = 1;
        for (int i = 0; i < n * N; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            Matrix L(f, n, N);
            std::uint64_t rest = code;
            for (int idx = n * N; idx-- > 0;) {
                L.at(idx / N, idx % N) = static_cast<Elem>(rest % q);
                rest /= q;
            }
            bool ok = true;
            for (const auto& z : I) {
                if (hamming_weight(vec_mat_mul(z, L)) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return N;
        }
    }
    return std::nullopt;
}

}  // namespace bnsi
