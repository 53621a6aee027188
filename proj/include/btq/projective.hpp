#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "btq/poly.hpp"

namespace btq {

// A canonical representative of an element of PGL_2(F_q(t)) with polynomial
// entries: the polynomial content is divided out and the first nonzero
// coefficient (scanning alpha, beta, gamma, delta, each from the top degree
// down) is scaled to 1. Canonical representatives are unique per class, so
// they can be hashed and compared directly.
class ProjMat {
public:
    ProjMat(Poly alpha, Poly beta, Poly gamma, Poly delta);
    static ProjMat identity(const FieldCtx& f);

    const Poly& alpha() const { return a_; }
    const Poly& beta() const { return b_; }
    const Poly& gamma() const { return c_; }
    const Poly& delta() const { return d_; }
    const FieldCtx& field() const { return a_.field(); }

    Poly det() const { return a_ * d_ - b_ * c_; }

    ProjMat operator*(const ProjMat& o) const;
    ProjMat inverse() const;  // adjugate, re-canonicalized

    bool operator==(const ProjMat& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const ProjMat& o) const { return !(*this == o); }

    std::string to_string() const;  // [[alpha,beta],[gamma,delta]]
    static ProjMat parse(const FieldCtx& f, std::string_view s);

    std::size_t hash() const;

private:
    struct already_canonical_t {};
    ProjMat(Poly a, Poly b, Poly c, Poly d, already_canonical_t);
    void canonicalize();

    Poly a_, b_, c_, d_;

    friend ProjMat scaled_product(const ProjMat&, const ProjMat&);
};

struct ProjMatHash {
    std::size_t operator()(const ProjMat& m) const { return m.hash(); }
};

// Product of two canonical matrices whose classes are known to stay
// content-free up to scalars (left/right translates by finite subgroups);
// skips the content gcd of the general constructor.
ProjMat scaled_product(const ProjMat& x, const ProjMat& y);

// The stabilizer H_n of the vertex pair (x_0, y_n): for n >= 1 the upper
// triangular matrices (alpha, b; 0, delta) with alpha, delta in k* and
// deg b <= n, of order (q-1)q^{n+1}; H_0 is all of PGL_2(k), of order
// q(q-1)(q+1). Returned as canonical representatives in a fixed order.
std::vector<ProjMat> h_group(const FieldCtx& f, int n);

// Membership in Upsilon_{n,m}: degree bounds
//   deg alpha <= (d+n-m)/2, deg beta <= (d+n+m)/2,
//   deg gamma <= (d-n-m)/2, deg delta <= (d-n+m)/2
// (negative bounds force the zero entry) and det = lambda*f, lambda in k*.
// Empty on parity mismatch of d and n+m.
bool upsilon_member(const Place& place, int n, int m, const ProjMat& M);

// Distance in the Bruhat-Tits tree of the place from the base vertex x_0 to
// M(x_0): nu_p(det M) for a canonical (hence content-free) representative.
int bt_distance(const Place& place, const ProjMat& M);

// A rational function a/b in reduced form (b monic); zero is 0/1.
class RatFunc {
public:
    static RatFunc of(Poly num, Poly den);
    static RatFunc of(Poly num);
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int valuation_at_infinity() const;  // deg den - deg num; num must be nonzero

    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;

private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

// The valuation conditions characterizing the elements of PGL_2(F) that map
// y_m to y_n, evaluated on the given representative (no rescaling):
//   nu_inf(alpha) >= m-n, nu_inf(beta) >= -n, nu_inf(gamma) >= m,
//   nu_inf(delta) >= 0, nu_inf(det) = m-n.
// Zero entries satisfy their lower bound vacuously.
bool maps_ym_to_yn(int n, int m, const std::array<RatFunc, 4>& entries);

// A point of P^1(F): (value : 1) or the point at infinity (1 : 0).
struct ProjPoint {
    Elem value = 0;
    bool infinite = false;
    static ProjPoint of(const FieldCtx& f, Elem x, Elem y);
    bool operator==(const ProjPoint& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

std::vector<ProjPoint> proj_line(const FieldCtx& f);  // all q+1 points

// Image of z under the Moebius map of (a, b; c, d); entries live in `f`
// (typically base-field constants embedded in an extension).
ProjPoint moebius_apply(const FieldCtx& f, Elem a, Elem b, Elem c, Elem d, ProjPoint z);

// Orbit lengths (ascending) of PGL_2(F_q) acting on P^1(F_{q^d}) by Moebius
// transformations.
std::vector<long long> moebius_orbit_census(const FieldPtr& base, int d);

}  // namespace btq
