#include "lrc/gf.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>

namespace lrc::gf {

namespace {

// carry-less multiply of GF(2)[x] polynomials, reduced mod `mod` (degree m)
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod,
                         std::uint32_t m) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1) a ^= mod;
    }
    return acc;
}

// polynomial remainder over GF(2)
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
    int db = 63;
    while (db > 0 && !(b >> db & 1)) --db;
    for (int da = 63; da >= db; --da) {
        if (a >> da & 1) a ^= b << (da - db);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

bool is_prime_power(std::uint64_t v, std::uint32_t* p_out, std::uint32_t* m_out) {
    if (v < 2) return false;
    std::uint64_t p = v;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t w = v;
    while (w % p == 0) {
        w /= p;
        ++m;
    }
    if (w != 1) return false;
    if (p_out) *p_out = static_cast<std::uint32_t>(p);
    if (m_out) *m_out = m;
    return true;
}

bool is_irreducible_gf2(std::uint64_t poly, std::uint32_t m) {
    if (m == 0 || !(poly >> m & 1) || poly >> (m + 1)) return false;  // wrong degree
    if (!(poly & 1)) return m == 1 && poly == 2;  // divisible by x
    for (std::uint64_t d = 2; d < (1ull << (m / 2 + 1)); ++d) {
        if (d >> 1 == 0) continue;
        if (gf2_mod(poly, d) == 0) return false;
    }
    return true;
}

std::uint64_t default_modulus(std::uint32_t p, std::uint32_t m) {
    if (p != 2 || m < 2 || m > 16)
        throw std::invalid_argument("no default modulus for GF(" + std::to_string(p) +
                                    "^" + std::to_string(m) + ")");
    // fixed table; encodings are part of the file-format contract
    static constexpr std::uint64_t table[] = {
        0,       0,      0x7,    0xB,    0x13,   0x25,    0x43,   0x83,  0x11D,
        0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443,  0x8003, 0x1100B,
    };
    return table[m];
}

Field::Field(FieldSpec spec) : spec_(spec) {
    const std::uint32_t p = spec_.p, m = spec_.m;
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (m == 1) {
        if (spec_.modulus != 0)
            throw std::invalid_argument("prime field takes no modulus polynomial");
        q_ = p;
        return;
    }
    if (p != 2) throw std::invalid_argument("only binary extension fields are supported");
    if (m > 16) throw std::invalid_argument("GF(2^m) supported up to m = 16");
    if (!is_irreducible_gf2(spec_.modulus, m))
        throw std::invalid_argument("modulus polynomial is not irreducible of degree m");
    q_ = 1u << m;

    // log/antilog tables over a primitive element. x itself need not be
    // primitive for an arbitrary irreducible modulus, so search for one.
    log_ = std::make_unique<std::uint32_t[]>(q_);
    exp_ = std::make_unique<std::uint32_t[]>(2 * (q_ - 1));
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        std::uint32_t order = 1;
        std::uint64_t v = cand;
        while (v != 1) {
            v = gf2_mulmod(v, cand, spec_.modulus, m);
            ++order;
        }
        if (order == q_ - 1) {
            g = cand;
            break;
        }
    }
    assert(g != 0);
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = exp_[i + q_ - 1] = static_cast<std::uint32_t>(v);
        log_[v] = i;
        v = gf2_mulmod(v, g, spec_.modulus, m);
    }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t modulus) {
    if (m > 1 && modulus == 0) modulus = default_modulus(p, m);
    return std::shared_ptr<const Field>(new Field(FieldSpec{p, m, modulus}));
}

FieldPtr Field::from_spec(const FieldSpec& spec) {
    return std::shared_ptr<const Field>(new Field(spec));
}

FieldPtr Field::f4() {
    static FieldPtr instance = make(2, 2, 0x7);
    return instance;
}

Elem Field::add(Elem a, Elem b) const {
    assert(a < q_ && b < q_);
    if (spec_.p == 2) return a ^ b;
    Elem s = a + b;
    return s >= q_ ? s - q_ : s;
}

Elem Field::neg(Elem a) const {
    assert(a < q_);
    if (spec_.p == 2) return a;
    return a == 0 ? 0 : q_ - a;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    assert(a < q_ && b < q_);
    if (spec_.m == 1)
        return static_cast<Elem>(std::uint64_t(a) * b % q_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    assert(a < q_);
    if (a == 0) throw std::domain_error("inverse of zero");
    if (spec_.m == 1) return pow(a, q_ - 2);
    return exp_[q_ - 1 - log_[a]];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem acc = 1;
    Elem base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string Field::name() const {
    if (spec_.m == 1) return "GF(" + std::to_string(spec_.p) + ")";
    return "GF(" + std::to_string(spec_.p) + "^" + std::to_string(spec_.m) + ")";
}

}  // namespace lrc::gf
