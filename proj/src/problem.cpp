#include "bnsi/problem.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bnsi/errors.hpp"

namespace bnsi {

BnsiProblem::BnsiProblem(const Field& f, int n, std::vector<std::vector<int>> demands0, int delta_s)
    : field_(&f), n_(n), delta_s_(delta_s), demands_(std::move(demands0)) {
    for (auto& X : demands_) std::sort(X.begin(), X.end());
}

std::vector<int> BnsiProblem::complement(int i) const {
    std::vector<int> y;
    const auto& X = demands_[i];
    std::size_t k = 0;
    for (int j = 0; j < n_; ++j) {
        if (k < X.size() && X[k] == j)
            ++k;
        else
            y.push_back(j);
    }
    return y;
}

BipartiteView bipartite_view(const BnsiProblem& p) {
    BipartiteView b;
    b.num_users = p.m();
    b.num_packets = p.n();
    b.user_adj.assign(p.m(), {});
    b.packet_adj.assign(p.n(), {});
    b.edge_count = 0;
    for (int i = 0; i < p.m(); ++i) {
        for (int j : p.demand(i)) {
            b.user_adj[i].push_back(j);
            b.packet_adj[j].push_back(i);
            ++b.edge_count;
        }
    }
    return b;
}

ValidationReport validate_problem(const BnsiProblem& p) {
    ValidationReport rep;
    if (p.n() < 0) rep.errors.push_back("n must be nonnegative");
    if (p.delta_s() < 0) rep.errors.push_back("delta_s must be nonnegative");
    if (!field_supported(p.field().p(), p.field().k()))
        rep.errors.push_back("unsupported field " + p.field().name());
    for (int i = 0; i < p.m(); ++i) {
        const auto& X = p.demand(i);
        std::string path = "demands[" + std::to_string(i + 1) + "]";
        if (X.empty()) rep.errors.push_back(path + ": empty demand set");
        for (std::size_t k = 0; k < X.size(); ++k) {
            if (X[k] < 0 || X[k] >= p.n()) {
                rep.errors.push_back(path + ": index " + std::to_string(X[k] + 1) +
                                     " out of range [1," + std::to_string(p.n()) + "]");
            }
            if (k > 0 && X[k] == X[k - 1])
                rep.errors.push_back(path + ": duplicate index " + std::to_string(X[k] + 1));
        }
    }
    for (int i = 0; i < p.m(); ++i)
        for (int j = i + 1; j < p.m(); ++j)
            if (p.demand(i) == p.demand(j))
                rep.warnings.push_back("users " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " have identical demand sets");
    return rep;
}

bool is_interfering(const BnsiProblem& p, const Vec& z) {
    if (static_cast<int>(z.size()) != p.n())
        throw DimensionMismatch("vector length != problem n");
    int limit = 2 * p.delta_s();
    for (int i = 0; i < p.m(); ++i) {
        int w = 0;
        for (int j : p.demand(i)) w += (z[j] != 0);
        if (w >= 1 && w <= limit) return true;
    }
    return false;
}

std::uint64_t interfering_enumeration_space(const BnsiProblem& p, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (int i = 0; i < p.n(); ++i) {
        total *= p.field().q();
        if (total > guard)
            throw GuardExceeded("q^n exceeds enumeration guard (" + std::to_string(guard) + ")");
    }
    return total;
}

void for_each_interfering(const BnsiProblem& p, const std::function<bool(const Vec&)>& fn) {
    std::uint64_t total = interfering_enumeration_space(p);
    if (p.delta_s() == 0) return;  // [2*delta_s] is empty
    std::uint32_t q = p.field().q();
    Vec z(p.n(), 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        if (is_interfering(p, z)) {
            if (!fn(z)) return;
        }
        // increment base-q, least significant digit last (lexicographic order)
        for (int i = p.n() - 1; i >= 0; --i) {
            if (++z[i] < q) break;
            z[i] = 0;
        }
    }
}

std::vector<Vec> interfering_set(const BnsiProblem& p) {
    std::vector<Vec> out;
    for_each_interfering(p, [&](const Vec& z) {
        out.push_back(z);
        return true;
    });
    return out;
}

std::uint64_t interfering_count(const BnsiProblem& p) {
    std::uint64_t c = 0;
    for_each_interfering(p, [&](const Vec&) {
        ++c;
        return true;
    });
    return c;
}

InducedSubproblem induced_subproblem(const BnsiProblem& p, const std::vector<int>& keep) {
    if (keep.empty()) throw EmptyKeepSet{};
    std::vector<int> rho(keep);
    std::sort(rho.begin(), rho.end());
    rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
    for (int j : rho)
        if (j < 0 || j >= p.n())
            throw DimensionMismatch("keep index out of range");
    std::vector<int> old_to_new(p.n(), -1);
    for (std::size_t k = 0; k < rho.size(); ++k) old_to_new[rho[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> demands;
    std::vector<int> kept_users;
    for (int i = 0; i < p.m(); ++i) {
        std::vector<int> xi;
        for (int j : p.demand(i))
            if (old_to_new[j] >= 0) xi.push_back(old_to_new[j]);
        if (!xi.empty()) {
            demands.push_back(std::move(xi));
            kept_users.push_back(i);
        }
    }
    BnsiProblem sub(p.field(), static_cast<int>(rho.size()), std::move(demands), p.delta_s());
    return InducedSubproblem{std::move(sub), std::move(old_to_new), std::move(kept_users)};
}

namespace {

struct KeyedLine {
    int lineno;
    std::string key;
    std::vector<long long> values;
};

std::vector<KeyedLine> tokenize_problem(std::istream& in) {
    std::vector<KeyedLine> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;
        KeyedLine kl{lineno, key, {}};
        long long v;
        while (ls >> v) kl.values.push_back(v);
        if (!ls.eof()) throw ParseError(lineno, "non-numeric value after key '" + key + "'");
        lines.push_back(std::move(kl));
    }
    return lines;
}

}  // namespace

BnsiProblem load_problem(std::istream& in) {
    std::optional<long long> q, pp, kk, n, delta_s;
    std::vector<std::vector<int>> demands;
    for (const auto& kl : tokenize_problem(in)) {
        auto single = [&](const char* name) {
            if (kl.values.size() != 1)
                throw ParseError(kl.lineno, std::string("key '") + name + "' needs one value");
            return kl.values[0];
        };
        if (kl.key == "q")
            q = single("q");
        else if (kl.key == "p")
            pp = single("p");
        else if (kl.key == "k")
            kk = single("k");
        else if (kl.key == "n")
            n = single("n");
        else if (kl.key == "delta_s")
            delta_s = single("delta_s");
        else if (kl.key == "demand") {
            std::vector<int> X;
            for (long long v : kl.values) {
                if (v < 1) throw ParseError(kl.lineno, "demand indices are 1-based positive");
                X.push_back(static_cast<int>(v - 1));
            }
            demands.push_back(std::move(X));
        } else {
            throw ParseError(kl.lineno, "unknown key '" + kl.key + "'");
        }
    }
    if (!n) throw ParseError(0, "missing key 'n'");
    if (!delta_s) throw ParseError(0, "missing key 'delta_s'");
    const Field* f = nullptr;
    if (q) {
        if (pp || kk) throw ParseError(0, "give either 'q' or 'p'+'k', not both");
        if (*q < 2 || *q > 65536) throw ParseError(0, "q out of range");
        f = &Field::from_order(static_cast<std::uint32_t>(*q));
    } else if (pp && kk) {
        f = &Field::get(static_cast<std::uint32_t>(*pp), static_cast<std::uint32_t>(*kk));
    } else {
        throw ParseError(0, "missing field: give 'q' or 'p' and 'k'");
    }
    BnsiProblem prob(*f, static_cast<int>(*n), std::move(demands), static_cast<int>(*delta_s));
    auto rep = validate_problem(prob);
    if (!rep.ok()) {
        std::string msg = "invalid problem:";
        for (const auto& e : rep.errors) msg += "\n  " + e;
        throw ParseError(0, msg);
    }
    return prob;
}

BnsiProblem load_problem_string(const std::string& text) {
    std::istringstream is(text);
    return load_problem(is);
}

BnsiProblem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    return load_problem(in);
}

std::string save_problem(const BnsiProblem& p) {
    std::ostringstream os;
    const Field& f = p.field();
    if (f.k() == 1)
        os << "q " << f.q() << '\n';
    else
        os << "p " << f.p() << "\nk " << f.k() << '\n';
    os << "n " << p.n() << '\n';
    os << "delta_s " << p.delta_s() << '\n';
    for (int i = 0; i < p.m(); ++i) {
        os << "demand";
        for (int j : p.demand(i)) os << ' ' << (j + 1);
        os << '\n';
    }
    return os.str();
}

void save_problem_file(const BnsiProblem& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write problem file: " + path);
    out << save_problem(p);
}

}  // namespace bnsi
