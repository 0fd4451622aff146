#include "bnsi/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace bnsi {
namespace {

// Conway polynomials C_{p,k}, coefficients constant-term first, for all
// p^k <= 256 with p in {2,3,5,7,11,13} and k >= 2.
struct ConwayEntry {
    std::uint32_t p, k;
    std::vector<std::uint32_t> coeffs;
};

const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {7, 2, {3, 6, 1}},
        {11, 2, {2, 7, 1}},
        {13, 2, {2, 12, 1}},
    };
    return table;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const std::vector<std::uint32_t>* find_conway(std::uint32_t p, std::uint32_t k) {
    for (const auto& e : conway_table())
        if (e.p == p && e.k == k) return &e.coeffs;
    return nullptr;
}

// digits of a in base p, length k (low to high)
std::vector<std::uint32_t> to_digits(Elem a, std::uint32_t p, std::uint32_t k) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// polynomial-basis product reduced by the modulus; used only to bootstrap the
// log/antilog tables
Elem mul_polybasis(Elem a, Elem b, std::uint32_t p, std::uint32_t k,
                   const std::vector<std::uint32_t>& modulus) {
    std::vector<std::uint32_t> prod(2 * k - 1, 0);
    auto da = to_digits(a, p, k), db = to_digits(b, p, k);
    for (std::uint32_t i = 0; i < k; ++i)
        if (da[i])
            for (std::uint32_t j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // reduce: x^k = -(modulus minus leading term), modulus is monic
    for (std::size_t deg = prod.size(); deg-- > k;) {
        std::uint32_t c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (std::uint32_t j = 0; j < k; ++j)
            prod[deg - k + j] = (prod[deg - k + j] + c * (p - modulus[j] % p)) % p;
    }
    prod.resize(k);
    return from_digits(prod, p);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    auto fs = prime_factors(p - 1);
    for (std::uint32_t g = 1; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t f : fs) {
            // g^((p-1)/f) mod p
            std::uint64_t r = 1, b = g;
            std::uint32_t e = (p - 1) / f;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    std::uint64_t q = ipow(p, k);
    q_ = static_cast<std::uint32_t>(q);
    if (k == 1) {
        modulus_ = {0, 1};  // x, unused
        generator_ = smallest_primitive_root(p);
    } else {
        modulus_ = *find_conway(p, k);
        generator_ = p;  // the element x; primitive by the Conway property
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = (k == 1) ? static_cast<Elem>(std::uint64_t(cur) * generator_ % p)
                       : mul_polybasis(cur, generator_, p, k, modulus_);
    }
    if (cur != 1) throw std::logic_error("generator is not primitive for " + name());
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t l = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool field_supported(std::uint32_t p, std::uint32_t k) {
    if (k == 0 || !is_prime(p)) return false;
    if (k == 1) return p <= 65536;
    std::uint64_t q = ipow(p, k);
    return q <= 65536 && find_conway(p, k) != nullptr;
}

const Field& Field::get(std::uint32_t p, std::uint32_t k) {
    if (!field_supported(p, k))
        throw UnsupportedField("unsupported field GF(" + std::to_string(p) + "^" +
                               std::to_string(k) + ")");
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new Field(p, k));
    return *slot;
}

const Field& Field::from_order(std::uint32_t q) {
    if (q < 2) throw UnsupportedField("field size must be at least 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t t = 1;
    while (t < q) {
        t *= p;
        ++k;
    }
    if (t != q)
        throw UnsupportedField(std::to_string(q) + " is not a prime power");
    return get(p, k);
}

}  // namespace bnsi
