#include "bnsi/index_coding.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "bnsi/combinatorics.hpp"
#include "bnsi/errors.hpp"

namespace bnsi {

int IndexCodingProblem::m_distinct() const {
    return static_cast<int>(distinct_users().size());
}

std::vector<IcUser> IndexCodingProblem::distinct_users() const {
    std::vector<IcUser> out;
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const auto& u : users)
        if (seen.emplace(u.demand, u.side_info).second) out.push_back(u);
    return out;
}

IndexCodingProblem reduce_to_ic(const BnsiProblem& p) {
    IndexCodingProblem ic;
    ic.field = &p.field();
    ic.n = p.n();
    for (int i = 0; i < p.m(); ++i) {
        const auto& X = p.demand(i);
        int xlen = static_cast<int>(X.size());
        int qsize = std::min(xlen - 1, 2 * p.delta_s() - 1);
        if (qsize < 0) continue;  // delta_s = 0: no interference to cover
        ic.m_hat_formula += std::uint64_t(xlen) *
                            binomial(static_cast<unsigned>(xlen - 1), static_cast<unsigned>(qsize));
        for (int pi = 0; pi < xlen; ++pi) {
            int psym = X[pi];
            std::vector<int> others;
            for (int t = 0; t < xlen; ++t)
                if (t != pi) others.push_back(X[t]);
            for_each_combination_colex(xlen - 1, qsize, [&](const std::vector<int>& qc) {
                IcUser u;
                u.demand = psym;
                u.src_user = i;
                for (int t : qc) u.src_q.push_back(others[t]);
                std::sort(u.src_q.begin(), u.src_q.end());
                std::vector<bool> in_q(others.size(), false);
                for (int t : qc) in_q[t] = true;
                for (std::size_t t = 0; t < others.size(); ++t)
                    if (!in_q[t]) u.side_info.push_back(others[t]);
                std::sort(u.side_info.begin(), u.side_info.end());
                ic.users.push_back(std::move(u));
            });
        }
    }
    return ic;
}

bool ic_is_interfering(const IndexCodingProblem& ic, const Vec& z) {
    if (static_cast<int>(z.size()) != ic.n) throw DimensionMismatch("vector length != n");
    for (const auto& u : ic.users) {
        if (z[u.demand] == 0) continue;
        bool clean = true;
        for (int j : u.side_info)
            if (z[j] != 0) {
                clean = false;
                break;
            }
        if (clean) return true;
    }
    return false;
}

void for_each_ic_interfering(const IndexCodingProblem& ic,
                             const std::function<bool(const Vec&)>& fn) {
    std::uint64_t total = 1;
    std::uint32_t q = ic.field->q();
    for (int i = 0; i < ic.n; ++i) {
        total *= q;
        if (total > (1ull << 28)) throw GuardExceeded("q^n exceeds enumeration guard");
    }
    Vec z(ic.n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        if (ic_is_interfering(ic, z)) {
            if (!fn(z)) return;
        }
        for (int i = ic.n - 1; i >= 0; --i) {
            if (++z[i] < q) break;
            z[i] = 0;
        }
    }
}

std::vector<Vec> ic_interfering_set(const IndexCodingProblem& ic) {
    std::vector<Vec> out;
    for_each_ic_interfering(ic, [&](const Vec& z) {
        out.push_back(z);
        return true;
    });
    return out;
}

bool ic_is_valid(const IndexCodingProblem& ic, const Matrix& L) {
    if (static_cast<int>(L.rows()) != ic.n)
        throw DimensionMismatch("encoder must have n rows");
    bool valid = true;
    for_each_ic_interfering(ic, [&](const Vec& z) {
        if (hamming_weight(vec_mat_mul(z, L)) == 0) {
            valid = false;
            return false;
        }
        return true;
    });
    return valid;
}

namespace {

// Demander candidates for packet a restricted to subset S: the distinct
// restricted side-info masks, kept as an antichain of minimal sets (a
// superset only adds arcs and can never help acyclicity).
std::vector<std::uint32_t> demander_arcs(const IndexCodingProblem& ic, int a, std::uint32_t S) {
    std::vector<std::uint32_t> masks;
    for (const auto& u : ic.users) {
        if (u.demand != a) continue;
        std::uint32_t m = 0;
        for (int j : u.side_info)
            if (S & (1u << j)) m |= 1u << j;
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t m : masks) {
        bool dominated = false;
        for (std::uint32_t o : masks)
            if (o != m && (o & m) == o) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(m);
    }
    return minimal;
}

// Is there a choice of one demander per packet of S whose union digraph
// (arc a -> b iff b in chosen side info of a) is acyclic?
bool acyclic_choice_exists(const std::vector<std::vector<std::uint32_t>>& cand,
                           const std::vector<int>& packets, std::size_t at,
                           std::vector<std::uint32_t>& reach) {
    if (at == packets.size()) return true;
    int a = packets[at];
    for (std::uint32_t m : cand[at]) {
        // adding arcs a -> m creates a cycle iff some b in m already reaches a
        bool cycle = false;
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
            int b = std::countr_zero(rest);
            if (reach[b] & (1u << a)) {
                cycle = true;
                break;
            }
        }
        if (cycle) continue;
        auto reach_save = reach;
        std::uint32_t closure = m;
        for (std::uint32_t rest = m; rest; rest &= rest - 1)
            closure |= reach[std::countr_zero(rest)];
        reach[a] |= closure;
        for (std::size_t v = 0; v < reach.size(); ++v)
            if (reach[v] & (1u << a)) reach[v] |= closure;
        if (acyclic_choice_exists(cand, packets, at + 1, reach)) return true;
        reach = std::move(reach_save);
    }
    return false;
}

bool subset_admits_acyclic(const IndexCodingProblem& ic, std::uint32_t S) {
    std::vector<int> packets;
    for (int j = 0; j < ic.n; ++j)
        if (S & (1u << j)) packets.push_back(j);
    std::vector<std::vector<std::uint32_t>> cand;
    cand.reserve(packets.size());
    for (int a : packets) {
        auto c = demander_arcs(ic, a, S);
        if (c.empty()) return false;  // node with no demander cannot be counted
        cand.push_back(std::move(c));
    }
    std::vector<std::uint32_t> reach(ic.n, 0);
    return acyclic_choice_exists(cand, packets, 0, reach);
}

}  // namespace

int ic_acyclic_lower_bound(const IndexCodingProblem& ic) {
    if (ic.n > 20) throw GuardExceeded("acyclic-subset search is capped at n <= 20");
    int best = 0;
    for_each_subset_desc_size(ic.n, [&](std::uint32_t mask) {
        if (subset_admits_acyclic(ic, mask)) {
            best = std::popcount(mask);
            return false;
        }
        return true;
    });
    return best;
}

std::string save_ic_problem(const IndexCodingProblem& ic, bool dedup) {
    std::ostringstream os;
    const Field& f = *ic.field;
    if (f.k() == 1)
        os << "q " << f.q() << '\n';
    else
        os << "p " << f.p() << "\nk " << f.k() << '\n';
    os << "n " << ic.n << '\n';
    os << "generated " << ic.m_hat_formula << '\n';
    os << "distinct " << ic.m_distinct() << '\n';
    auto emit = [&](const IcUser& u) {
        os << "user " << (u.demand + 1);
        for (int j : u.side_info) os << ' ' << (j + 1);
        os << '\n';
    };
    if (dedup)
        for (const auto& u : ic.distinct_users()) emit(u);
    else
        for (const auto& u : ic.users) emit(u);
    return os.str();
}

IndexCodingProblem load_ic_problem(std::istream& in) {
    IndexCodingProblem ic;
    ic.field = nullptr;
    ic.n = -1;
    std::optional<std::uint32_t> q, pp, kk;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "user") {
            IcUser u;
            long long d;
            if (!(ls >> d) || d < 1) throw ParseError(lineno, "user line needs a 1-based demand");
            u.demand = static_cast<int>(d - 1);
            long long s;
            while (ls >> s) {
                if (s < 1) throw ParseError(lineno, "side-info indices are 1-based");
                u.side_info.push_back(static_cast<int>(s - 1));
            }
            std::sort(u.side_info.begin(), u.side_info.end());
            ic.users.push_back(std::move(u));
        } else {
            long long v;
            if (!(ls >> v)) throw ParseError(lineno, "key '" + key + "' needs a value");
            if (key == "q")
                q = static_cast<std::uint32_t>(v);
            else if (key == "p")
                pp = static_cast<std::uint32_t>(v);
            else if (key == "k")
                kk = static_cast<std::uint32_t>(v);
            else if (key == "n")
                ic.n = static_cast<int>(v);
            else if (key == "generated")
                ic.m_hat_formula = static_cast<std::uint64_t>(v);
            else if (key == "distinct")
                ;  // derived, accepted for readability
            else
                throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (ic.n < 0) throw ParseError(0, "missing key 'n'");
    if (q)
        ic.field = &Field::from_order(*q);
    else if (pp && kk)
        ic.field = &Field::get(*pp, *kk);
    else
        throw ParseError(0, "missing field: give 'q' or 'p' and 'k'");
    for (const auto& u : ic.users) {
        if (u.demand >= ic.n) throw ParseError(0, "demand index out of range");
        for (int j : u.side_info) {
            if (j >= ic.n) throw ParseError(0, "side-info index out of range");
            if (j == u.demand) throw ParseError(0, "demand inside its own side info");
        }
    }
    if (ic.m_hat_formula == 0) ic.m_hat_formula = ic.users.size();
    return ic;
}

IndexCodingProblem load_ic_problem_string(const std::string& text) {
    std::istringstream is(text);
    return load_ic_problem(is);
}

}  // namespace bnsi
