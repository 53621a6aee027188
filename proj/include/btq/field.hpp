#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace btq {

/// Index of a field element, in [0, order).
using Elem = std::uint16_t;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// A finite field F_q with table-based arithmetic. Elements are indices
// 0..q-1; writing an index in base |base field| (little-endian digits)
// gives the coefficient vector of the element over the base field, so
// index order doubles as the canonical enumeration order and constants
// of the base field embed as their own index.
//
// Prime fields are built directly; extensions are quotients base[u]/(g)
// with g the lexicographically first monic irreducible of the right
// degree, so a field of a given order is reproducible bit-for-bit.
class FieldCtx {
public:
    // q = p^e for a prime p, e >= 1.
    static FieldPtr make(long long q);
    // F_{q^d} as an extension of ctx; returns ctx itself when d == 1.
    static FieldPtr extension(const FieldPtr& ctx, int d);

    long long order() const { return q_; }
    int characteristic() const { return p_; }
    int degree_over_prime() const { return e_total_; }
    const FieldPtr& base() const { return base_; }
    // monic modulus over the base field, little-endian; empty for prime fields
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const;  // throws std::domain_error on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    static constexpr Elem zero = 0;
    static constexpr Elem one = 1;

    // coefficients over the prime field, little-endian, length e
    std::vector<int> prime_coeffs(Elem a) const;
    Elem from_prime_coeffs(const std::vector<int>& cs) const;

    // "2" for prime fields, "[c0,c1]" for extensions
    std::string elem_to_string(Elem a) const;

    // Table-based arithmetic keeps instance sizes honest.
    static constexpr long long max_order = 2048;

private:
    FieldCtx() = default;
    static FieldPtr build_prime(int p);
    static FieldPtr build_extension(const FieldPtr& base, std::vector<Elem> modulus);

    int p_ = 0;
    int e_total_ = 1;
    long long q_ = 0;
    FieldPtr base_;               // null for prime fields
    std::vector<Elem> modulus_;   // over base_, degree = extension step
    std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace btq
