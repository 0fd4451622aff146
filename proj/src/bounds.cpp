#include "bnsi/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"
#include "bnsi/index_coding.hpp"
#include "bnsi/oracle.hpp"
#include "bnsi/validity.hpp"

namespace bnsi {

Matrix simple_scheme(const BnsiProblem& p) {
    const int need = 2 * p.delta_s() + 1;
    std::vector<int> offending;
    for (int i = 0; i < p.m(); ++i)
        if (static_cast<int>(p.demand(i).size()) < need) offending.push_back(i + 1);
    if (!offending.empty()) {
        std::string msg = "simple scheme needs |X_i| >= " + std::to_string(need) +
                          " for every user; violated by user(s)";
        for (int u : offending) msg += " " + std::to_string(u);
        throw PreconditionViolated(msg);
    }
    if (p.n() < 1) throw PreconditionViolated("simple scheme needs n >= 1");
    const Field& f = p.field();
    Matrix L(f, p.n(), p.n() - 1);
    for (int r = 0; r + 1 < p.n(); ++r) L.at(r, r) = 1;
    for (int c = 0; c + 1 < p.n(); ++c) L.at(p.n() - 1, c) = 1;
    return L;
}

int min_distance(const LinearCodeSpec& c) {
    Matrix G = kernel_basis(c.H);  // generator rows of the code
    const int k = static_cast<int>(G.rows());
    if (k == 0) return kInfiniteDistance;
    const Field& f = c.H.field();
    const std::uint32_t q = f.q();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > (1ull << 24)) throw GuardExceeded("min-distance brute force capped at q^k <= 2^24");
    }
    int best = kInfiniteDistance;
    Vec coeff(k, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        for (int i = k - 1; i >= 0; --i) {
            if (++coeff[i] < q) break;
            coeff[i] = 0;
        }
        best = std::min(best, hamming_weight(vec_mat_mul(coeff, G)));
    }
    return best;
}

int eta_threshold(const BnsiProblem& p) {
    int maxy = 0;
    for (int i = 0; i < p.m(); ++i)
        maxy = std::max(maxy, p.n() - static_cast<int>(p.demand(i).size()));
    return 2 * p.delta_s() + maxy;
}

Matrix ecc_based_encoder(const BnsiProblem& p, const LinearCodeSpec& c) {
    if (static_cast<int>(c.H.cols()) != p.n())
        throw DimensionMismatch("code blocklength must equal n");
    if (mat_rank(c.H) != static_cast<int>(c.H.rows()))
        throw DependentRows("parity check matrix must have full row rank");
    int eta = eta_threshold(p);
    int dmin = c.claimed_dmin ? *c.claimed_dmin : min_distance(c);
    if (dmin < eta + 1)
        throw DistanceTooSmall("needs d_min >= " + std::to_string(eta + 1) + ", code has " +
                               std::to_string(dmin));
    return c.H.transpose();
}

LinearCodeSpec grs_parity_check(const Field& f, int n, int d) {
    if (static_cast<int>(f.q()) < n)
        throw FieldTooSmall("GRS needs q >= n (q = " + std::to_string(f.q()) + ", n = " +
                            std::to_string(n) + ")");
    if (d == n + 1) throw DegenerateCode("d = n + 1 gives the zero-dimension code");
    if (d < 2 || d > n) throw DimensionMismatch("GRS distance must satisfy 2 <= d <= n");
    Matrix H(f, d - 1, n);
    for (int c = 0; c < n; ++c) {
        Elem point = static_cast<Elem>(c);  // first n field elements in integer order
        for (int r = 0; r < d - 1; ++r) H.at(r, c) = f.pow(point, r);
    }
    return LinearCodeSpec{std::move(H), d};
}

int lower_bound_size(const BnsiProblem& p) {
    const int t = 2 * p.delta_s();
    std::vector<bool> in_xs(p.n(), false), demanded(p.n(), false);
    for (int i = 0; i < p.m(); ++i) {
        int sz = static_cast<int>(p.demand(i).size());
        for (int j : p.demand(i)) {
            demanded[j] = true;
            if (sz >= 1 && sz <= t) in_xs[j] = true;
        }
    }
    int xs = static_cast<int>(std::count(in_xs.begin(), in_xs.end(), true));
    // the symbols padded onto X_S must themselves be demanded: a symbol no
    // user wants is a Phi singleton of the induced subproblem and would
    // break the emptiness the bound rests on
    int dem = static_cast<int>(std::count(demanded.begin(), demanded.end(), true));
    return xs + std::min(t, dem - xs);
}

int lower_bound_bmax(const BnsiProblem& p) { return static_cast<int>(b_max(p).size()); }

namespace {

// Saving for one collection element / partition part: minimum over touching
// users of (|X_i cap S| - 2*delta_s)^+, or |S| when no user touches S.
int part_saving(const BnsiProblem& p, const std::vector<int>& part) {
    std::vector<bool> in_part(p.n(), false);
    for (int j : part) in_part[j] = true;
    int best = -1;
    for (int i = 0; i < p.m(); ++i) {
        int deg = 0;
        for (int j : p.demand(i)) deg += in_part[j];
        if (deg == 0) continue;
        int save = std::max(deg - 2 * p.delta_s(), 0);
        best = (best < 0) ? save : std::min(best, save);
    }
    return best < 0 ? static_cast<int>(part.size()) : best;
}

// Assembles a block-diagonal encoder: per block a (rows, block matrix) pair
// over the given global row indices, plus identity columns for `uncoded`.
Matrix assemble_blocks(const BnsiProblem& p,
                       const std::vector<std::pair<std::vector<int>, Matrix>>& blocks,
                       const std::vector<int>& uncoded) {
    std::size_t total_cols = uncoded.size();
    for (const auto& b : blocks) total_cols += b.second.cols();
    Matrix L(p.field(), p.n(), total_cols);
    std::size_t col0 = 0;
    for (const auto& [rows, B] : blocks) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < B.cols(); ++c) L.at(rows[r], col0 + c) = B.at(r, c);
        col0 += B.cols();
    }
    for (std::size_t t = 0; t < uncoded.size(); ++t) L.at(uncoded[t], col0 + t) = 1;
    return L;
}

std::vector<int> complement_of(const BnsiProblem& p, const std::vector<std::vector<int>>& parts) {
    std::vector<bool> used(p.n(), false);
    for (const auto& c : parts)
        for (int j : c) used[j] = true;
    std::vector<int> rest;
    for (int j = 0; j < p.n(); ++j)
        if (!used[j]) rest.push_back(j);
    return rest;
}

// Simple-scheme block for one Phi element: identity over the first |C|-1
// symbols, all-ones last row.
Matrix simple_block(const Field& f, int size) {
    Matrix B(f, size, size - 1);
    for (int r = 0; r + 1 < size; ++r) B.at(r, r) = 1;
    for (int c = 0; c + 1 < size; ++c) B.at(size - 1, c) = 1;
    return B;
}

// MDS block saving `save` transmissions on a part of the given size.
Matrix mds_block(const Field& f, int size, int save) {
    if (save >= size) return Matrix(f, size, 0);
    if (save <= 0) return Matrix::identity(f, size);
    return grs_parity_check(f, size, size - save + 1).H.transpose();
}

}  // namespace

std::variant<UpperBound, Unavailable> upper_bound_mds(const BnsiProblem& p) {
    const Field& f = p.field();
    if (static_cast<int>(f.q()) < p.n())
        return Unavailable{"requires q >= n (q = " + std::to_string(f.q()) + ")"};
    int kprime = p.n();
    for (int i = 0; i < p.m(); ++i)
        kprime = std::min(kprime,
                          std::max(static_cast<int>(p.demand(i).size()) - 2 * p.delta_s(), 0));
    if (kprime == 0) return UpperBound{p.n(), Matrix::identity(f, p.n())};
    return UpperBound{p.n() - kprime, mds_block(f, p.n(), kprime)};
}

UpperBound upper_bound_disjoint(const BnsiProblem& p, const DisjointCollection* precomputed) {
    DisjointCollection local;
    const DisjointCollection* col = precomputed;
    if (!col) {
        local = disjoint_phi_collection(p);
        col = &local;
    }
    std::vector<std::pair<std::vector<int>, Matrix>> blocks;
    for (const auto& C : col->elements)
        blocks.emplace_back(C, simple_block(p.field(), static_cast<int>(C.size())));
    auto rest = complement_of(p, col->elements);
    Matrix L = assemble_blocks(p, blocks, rest);
    return UpperBound{static_cast<int>(L.cols()), std::move(L)};
}

std::variant<UpperBound, Unavailable> upper_bound_mds_disjoint(const BnsiProblem& p,
                                                               const DisjointCollection* precomputed) {
    DisjointCollection local;
    const DisjointCollection* col = precomputed;
    if (!col) {
        local = disjoint_phi_collection(p);
        col = &local;
    }
    int need_q = 0;
    for (const auto& C : col->elements) {
        int save = part_saving(p, C);
        if (save > 0 && save < static_cast<int>(C.size()))
            need_q = std::max(need_q, static_cast<int>(C.size()));
    }
    if (static_cast<int>(p.field().q()) < need_q)
        return Unavailable{"requires q >= " + std::to_string(need_q) + " for the MDS blocks"};
    std::vector<std::pair<std::vector<int>, Matrix>> blocks;
    for (const auto& C : col->elements) {
        int save = part_saving(p, C);
        blocks.emplace_back(C, mds_block(p.field(), static_cast<int>(C.size()), save));
    }
    auto rest = complement_of(p, col->elements);
    Matrix L = assemble_blocks(p, blocks, rest);
    return UpperBound{static_cast<int>(L.cols()), std::move(L)};
}

std::variant<PartitionResult, Unavailable> partition_optimizer(const BnsiProblem& p) {
    auto cmax = c_max(p);
    if (!cmax) return Unavailable{"Phi is empty: there is no C_max to partition"};
    const std::vector<int>& cm = *cmax;
    const int sz = static_cast<int>(cm.size());

    std::vector<std::vector<int>> best_parts;
    int best_sum = -1;
    bool exact = sz <= 12;
    if (exact) {
        for_each_set_partition(sz, [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<std::vector<int>> parts;
            parts.reserve(blocks.size());
            int sum = 0;
            for (const auto& b : blocks) {
                std::vector<int> part;
                part.reserve(b.size());
                for (int t : b) part.push_back(cm[t]);
                sum += part_saving(p, part);
                parts.push_back(std::move(part));
            }
            if (sum > best_sum) {  // first optimum in RGS order wins ties
                best_sum = sum;
                best_parts = std::move(parts);
            }
            return true;
        });
    } else {
        // refine the disjoint collection: its elements plus leftover singletons
        auto col = disjoint_phi_collection(p);
        std::vector<bool> used(p.n(), false);
        for (const auto& C : col.elements) {
            best_parts.push_back(C);
            for (int j : C) used[j] = true;
        }
        for (int j : cm)
            if (!used[j]) best_parts.push_back({j});
        best_sum = 0;
        for (const auto& part : best_parts) best_sum += part_saving(p, part);
    }

    int need_q = 0;
    for (const auto& part : best_parts) {
        int save = part_saving(p, part);
        if (save > 0 && save < static_cast<int>(part.size()))
            need_q = std::max(need_q, static_cast<int>(part.size()));
    }
    if (static_cast<int>(p.field().q()) < need_q)
        return Unavailable{"optimal partition (d_sum = " + std::to_string(best_sum) +
                           ") requires q >= " + std::to_string(need_q)};

    std::sort(best_parts.begin(), best_parts.end());
    PartitionResult res;
    res.d_sum = best_sum;
    res.partition = best_parts;
    res.exact = exact;
    std::vector<std::pair<std::vector<int>, Matrix>> blocks;
    for (const auto& part : best_parts) {
        int save = part_saving(p, part);
        res.part_savings.push_back(save);
        blocks.emplace_back(part, mds_block(p.field(), static_cast<int>(part.size()), save));
    }
    res.L = assemble_blocks(p, blocks, complement_of(p, best_parts));
    res.N = static_cast<int>(res.L.cols());
    return res;
}

int BoundsReport::best_lower() const {
    int v = lower_size;
    if (lower_bmax) v = std::max(v, *lower_bmax);
    if (lower_ic_acyclic) v = std::max(v, *lower_ic_acyclic);
    if (oracle_nopt) v = std::max(v, *oracle_nopt);
    return v;
}

int BoundsReport::best_upper() const {
    int v = upper_trivial;
    for (const auto& u : {upper_ecc, upper_disjoint, upper_mds_disjoint, upper_partition})
        if (u) v = std::min(v, *u);
    if (oracle_nopt) v = std::min(v, *oracle_nopt);
    return v;
}

BoundsReport bounds_report(const BnsiProblem& p, const BoundsOptions& opts) {
    BoundsReport r;
    r.n = p.n();
    r.upper_trivial = p.n();
    r.lower_size = lower_bound_size(p);
    {
        std::string w = "lower_size small-demand users {";
        bool first = true;
        for (int i = 0; i < p.m(); ++i) {
            int sz = static_cast<int>(p.demand(i).size());
            if (sz >= 1 && sz <= 2 * p.delta_s()) {
                if (!first) w += ",";
                w += std::to_string(i + 1);
                first = false;
            }
        }
        r.notes.push_back(w + "}");
    }

    try {
        auto b = b_max(p);
        r.lower_bmax = static_cast<int>(b.size());
        std::string w = "b_max witness {";
        for (std::size_t i = 0; i < b.size(); ++i)
            w += (i ? "," : "") + std::to_string(b[i] + 1);
        r.notes.push_back(w + "}");
    } catch (const GuardExceeded& e) {
        r.notes.push_back(std::string("lower_bmax unavailable: ") + e.what());
    }

    if (opts.run_ic_acyclic) {
        try {
            r.lower_ic_acyclic = ic_acyclic_lower_bound(reduce_to_ic(p));
        } catch (const GuardExceeded& e) {
            r.notes.push_back(std::string("lower_ic_acyclic unavailable: ") + e.what());
        }
    }

    auto mds = upper_bound_mds(p);
    if (auto* ub = std::get_if<UpperBound>(&mds))
        r.upper_ecc = ub->N;
    else
        r.notes.push_back("upper_ecc unavailable: " + std::get<Unavailable>(mds).reason);

    auto col = disjoint_phi_collection(p);
    {
        std::string w = col.exact ? "disjoint collection (exact) {" : "disjoint collection (greedy) {";
        for (std::size_t i = 0; i < col.elements.size(); ++i) {
            w += i ? ", {" : "{";
            for (std::size_t j = 0; j < col.elements[i].size(); ++j)
                w += (j ? "," : "") + std::to_string(col.elements[i][j] + 1);
            w += "}";
        }
        r.notes.push_back(w + "}");
    }
    r.upper_disjoint = upper_bound_disjoint(p, &col).N;
    auto mdd = upper_bound_mds_disjoint(p, &col);
    if (auto* ub = std::get_if<UpperBound>(&mdd))
        r.upper_mds_disjoint = ub->N;
    else
        r.notes.push_back("upper_mds_disjoint unavailable: " + std::get<Unavailable>(mdd).reason);

    auto part = partition_optimizer(p);
    if (auto* pr = std::get_if<PartitionResult>(&part)) {
        r.upper_partition = pr->N;
        std::string w = pr->exact ? "partition (exact) d_sum=" : "partition (greedy) d_sum=";
        r.notes.push_back(w + std::to_string(pr->d_sum));
    } else {
        r.notes.push_back("upper_partition unavailable: " + std::get<Unavailable>(part).reason);
    }

    if (opts.run_oracle) {
        try {
            r.oracle_nopt = optimal_codelength_subspace(p).n_opt;
        } catch (const GuardExceeded& e) {
            r.notes.push_back(std::string("oracle unavailable: ") + e.what());
        }
    }

    // internal consistency: every known lower bound <= every known upper bound
    int lo = r.best_lower(), hi = r.best_upper();
    if (lo > hi)
        throw std::logic_error("bounds crossed: lower " + std::to_string(lo) + " > upper " +
                               std::to_string(hi));
    return r;
}

std::string format_bounds_text(const BoundsReport& r) {
    std::ostringstream os;
    auto line = [&](const char* name, const std::optional<int>& v) {
        os << name;
        if (v)
            os << *v;
        else
            os << "unknown";
        os << '\n';
    };
    os << "n                  " << r.n << '\n';
    os << "lower size         " << r.lower_size << '\n';
    line("lower bmax         ", r.lower_bmax);
    line("lower ic-acyclic   ", r.lower_ic_acyclic);
    os << "upper trivial      " << r.upper_trivial << '\n';
    line("upper ecc-mds      ", r.upper_ecc);
    line("upper disjoint     ", r.upper_disjoint);
    line("upper mds-disjoint ", r.upper_mds_disjoint);
    line("upper partition    ", r.upper_partition);
    if (r.oracle_nopt) os << "oracle N_opt       " << *r.oracle_nopt << '\n';
    os << "best lower         " << r.best_lower() << '\n';
    os << "best upper         " << r.best_upper() << '\n';
    if (r.best_lower() == r.best_upper())
        os << "N_opt pinned       " << r.best_lower() << '\n';
    for (const auto& nnote : r.notes) os << "note: " << nnote << '\n';
    return os.str();
}

}  // namespace bnsi
