#include "bnsi/simulate.hpp"

#include <algorithm>
#include <sstream>

#include "bnsi/decoder.hpp"
#include "bnsi/errors.hpp"
#include "bnsi/validity.hpp"

namespace bnsi {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed) ^ mix64(mix64(stream) + 0x6a09e667f3bcc909ull)) {}

std::uint64_t CounterRng::next() { return mix64(key_ + counter_++); }

std::uint64_t CounterRng::below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

std::uint64_t SimReport::failures() const {
    std::uint64_t f = 0;
    for (const auto& u : users) f += trials - u.successes;
    return f;
}

SimReport simulate(const BnsiProblem& p, const Matrix& L, std::uint64_t trials,
                   std::uint64_t seed, const SimOptions& opts) {
    if (opts.validate_encoder) {
        auto rv = is_valid_by_rank(p, L);
        if (!rv.valid) throw InvalidEncoder("simulate: encoder matrix is not valid");
    }
    const Field& f = p.field();
    const std::uint32_t q = f.q();
    std::vector<ReceiverDecoder> decoders;
    decoders.reserve(p.m());
    for (int i = 0; i < p.m(); ++i) decoders.push_back(build_decoder(p, L, i));

    SimReport rep;
    rep.trials = trials;
    rep.N = static_cast<int>(L.cols());
    rep.n = p.n();
    rep.savings = rep.n - rep.N;
    rep.seed = seed;
    rep.users.resize(p.m());
    for (int i = 0; i < p.m(); ++i) rep.users[i] = {i, 0};

    for (std::uint64_t t = 0; t < trials; ++t) {
        CounterRng rng(seed, t);
        Vec x(p.n());
        for (int j = 0; j < p.n(); ++j) x[j] = static_cast<Elem>(rng.below(q));
        Vec c = encode(p, L, x);
        for (int i = 0; i < p.m(); ++i) {
            const auto& X = p.demand(i);
            const int xlen = static_cast<int>(X.size());
            int w = opts.force_weight ? std::min(*opts.force_weight, xlen)
                                      : static_cast<int>(rng.below(p.delta_s() + 1));
            // support: partial Fisher-Yates over the demand positions
            std::vector<int> pos(xlen);
            for (int j = 0; j < xlen; ++j) pos[j] = j;
            for (int j = 0; j < w; ++j)
                std::swap(pos[j], pos[j + rng.below(xlen - j)]);
            Vec side(xlen);
            for (int j = 0; j < xlen; ++j) side[j] = x[X[j]];
            for (int j = 0; j < w; ++j) {
                Elem delta = static_cast<Elem>(1 + rng.below(q - 1));
                side[pos[j]] = f.add(side[pos[j]], delta);
            }
            bool ok;
            try {
                Vec got = decoders[i].decode(c, side);
                Vec want(xlen);
                for (int j = 0; j < xlen; ++j) want[j] = x[X[j]];
                ok = (got == want);
            } catch (const SyndromeNotFound&) {
                ok = false;  // contract violation path: count, don't crash
            }
            if (ok) ++rep.users[i].successes;
        }
    }
    return rep;
}

std::string format_sim_text(const SimReport& r) {
    std::ostringstream os;
    os << "trials   " << r.trials << '\n';
    os << "n        " << r.n << '\n';
    os << "N        " << r.N << '\n';
    os << "savings  " << r.savings << '\n';
    os << "seed     " << r.seed << '\n';
    for (const auto& u : r.users)
        os << "user " << (u.user + 1) << "  " << u.successes << "/" << r.trials
           << " decodings correct\n";
    os << "failures " << r.failures() << '\n';
    return os.str();
}

}  // namespace bnsi
