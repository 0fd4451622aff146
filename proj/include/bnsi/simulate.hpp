#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnsi/problem.hpp"

namespace bnsi {

/// Counter-mode generator: output t of stream s under seed is a fixed mixing
/// of (seed, s, t), so draws are identical across platforms and independent
/// of scheduling. The mixer is the splitmix64 finalizer.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next();
    /// Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct SimUserStats {
    int user;  // 0-based
    std::uint64_t successes;
};

struct SimReport {
    std::uint64_t trials;
    std::vector<SimUserStats> users;
    int N;
    int n;
    int savings;  // n - N
    std::uint64_t seed;
    std::uint64_t failures() const;
};

struct SimOptions {
    // When set, every drawn error has exactly this weight instead of a
    // uniform weight in [0, delta_s]; used to exercise the decoder past its
    // contract (expect failures, not crashes).
    std::optional<int> force_weight;
    bool validate_encoder = true;
};

/// Runs the full round trip per trial: draw x, per user draw a side-info
/// error of weight <= delta_s (weight uniform, then support, then values),
/// encode, syndrome-decode, compare. Reproducible from the seed; trial t uses
/// streams derived from t only.
SimReport simulate(const BnsiProblem& p, const Matrix& L, std::uint64_t trials,
                   std::uint64_t seed, const SimOptions& opts = {});

std::string format_sim_text(const SimReport& r);

}  // namespace bnsi
