#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace lrc::gf {

/// A field element, integer-encoded in [0, q). For extension fields the
/// integer is the coefficient bitmask of the polynomial representation,
/// so F4 elements 0..3 correspond to the bit pairs 00, 01, 10, 11.
/// The owning field is contextual: operations live on Field.
using Elem = std::uint32_t;

/// Serializable description of GF(p^m). modulus is the coefficient bitmask
/// of the modulus polynomial (bit i = coefficient of x^i); it is 0 for
/// prime fields (m == 1).
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint64_t modulus = 0;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t v);

/// Decomposes v = p^m (p prime, m >= 1). Returns false if v is not a
/// prime power; outputs are optional.
bool is_prime_power(std::uint64_t v, std::uint32_t* p_out = nullptr,
                    std::uint32_t* m_out = nullptr);

/// Irreducibility over GF(2) by trial division; poly is a degree-m
/// coefficient bitmask.
bool is_irreducible_gf2(std::uint64_t poly, std::uint32_t m);

/// Fixed modulus polynomial for GF(2^m), 2 <= m <= 16. Part of the
/// serialization contract: element encodings must not change between runs
/// or machines.
std::uint64_t default_modulus(std::uint32_t p, std::uint32_t m);

/// Exact arithmetic in GF(p) or GF(2^m). Immutable after construction and
/// safe to share across threads; every operation is a pure function.
///
/// Supported fields: any prime p with m == 1, and p == 2 with 2 <= m <= 16
/// (log/antilog multiplication tables are precomputed at construction).
/// Non-binary extension fields are intentionally not supported.
class Field {
  public:
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m = 1,
                                             std::uint64_t modulus = 0);
    static std::shared_ptr<const Field> from_spec(const FieldSpec& spec);

    /// GF(4) with modulus x^2+x+1; elements {00, 01, 10, 11}.
    static std::shared_ptr<const Field> f4();

    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    std::uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::domain_error on a == 0
    Elem pow(Elem a, std::uint64_t e) const;

    bool same_as(const Field& other) const { return spec_ == other.spec_; }

    /// "GF(113)" / "GF(2^4)"
    std::string name() const;

  private:
    explicit Field(FieldSpec spec);

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    // extension fields: log/antilog tables (antilog doubled to skip a mod)
    std::unique_ptr<std::uint32_t[]> log_;
    std::unique_ptr<std::uint32_t[]> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace lrc::gf
