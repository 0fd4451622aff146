#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnsi/errors.hpp"

namespace bnsi {

/// Raw field element: integer in [0, q) whose base-p digits are the
/// polynomial coefficients, least-significant digit = constant term.
using Elem = std::uint32_t;

/// GF(p^k) with exact arithmetic, q = p^k <= 65536.
///
/// Extension fields use the Conway polynomial for (p, k) from a built-in
/// table, so encoded integers are portable across implementations. For k = 1
/// the modulus is the (unused) polynomial x. Multiplication and inversion run
/// on log/antilog tables over a primitive element; for k >= 2 the Conway
/// modulus makes x itself primitive.
///
/// Instances are immutable after construction and owned by a process-wide
/// registry; share `const Field&` freely across threads.
class Field {
public:
    /// Registry lookup, constructing on first use. Throws UnsupportedField
    /// for non-prime p, q > 65536, or a (p, k) outside the modulus table.
    static const Field& get(std::uint32_t p, std::uint32_t k);
    /// Lookup by field size; q is factored as p^k (unique).
    static const Field& from_order(std::uint32_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    /// Modulus coefficients, constant term first (k+1 digits).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem primitive_element() const { return generator_; }

    bool is_valid(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw ZeroInverse{};
        std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    bool operator==(const Field& o) const { return q_ == o.q_; }

    std::string name() const;  // "GF(16)" style

private:
    Field(std::uint32_t p, std::uint32_t k);

    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> modulus_;  // k+1 digits, constant term first
    Elem generator_;
    std::vector<Elem> exp_;           // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

/// True iff (p, k) is in the shipped Conway modulus table (k >= 2) or p is a
/// prime <= 65536 (k = 1).
bool field_supported(std::uint32_t p, std::uint32_t k);

}  // namespace bnsi
