#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btq/field.hpp"

namespace btq {

/// Sentinel degree of the zero polynomial; compares below every real degree
/// and stays far from overflow under small additions.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

// Element of F_q[t]. Coefficients are stored little-endian with no
// trailing zeros, so representations are canonical and comparable.
class Poly {
public:
    static Poly zero(const FieldCtx& f) { return Poly(f, {}); }
    static Poly one(const FieldCtx& f) { return constant(f, FieldCtx::one); }
    static Poly constant(const FieldCtx& f, Elem c);
    static Poly monomial(const FieldCtx& f, Elem c, int deg);  // c*t^deg
    static Poly from_coeffs(const FieldCtx& f, std::vector<Elem> cs);

    const FieldCtx& field() const { return *fld_; }
    const FieldCtx* field_ptr() const { return fld_; }

    int degree() const { return c_.empty() ? kNegInfDeg : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == FieldCtx::one; }
    Elem coeff(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[std::size_t(i)] : FieldCtx::zero;
    }
    Elem leading_coeff() const { return c_.empty() ? FieldCtx::zero : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(Elem c) const;
    Poly monic() const;  // zero stays zero

    // (quotient, remainder) with deg(remainder) < deg(b); b must be nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // monic gcd; gcd(0,0) = 0
    static Poly gcd(const Poly& a, const Poly& b);
    bool divides(const Poly& a) const;  // *this | a

    bool operator==(const Poly& o) const { return fld_ == o.fld_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;
    // grammar: "t^3+2*t+1"; extension coefficients as "[c0,c1]"
    static Poly parse(const FieldCtx& f, std::string_view s);

    std::size_t hash() const;

private:
    Poly(const FieldCtx& f, std::vector<Elem> cs) : fld_(&f), c_(std::move(cs)) { strip(); }
    void strip();

    const FieldCtx* fld_;
    std::vector<Elem> c_;
};

/// Enumeration order: degree first, then coefficients compared from the top
/// down with field elements in index order (the base-q integer encoding).
bool poly_less(const Poly& a, const Poly& b);

// All q^{max_deg+1} polynomials of degree <= max_deg in enumeration order;
// just the zero polynomial when max_deg < 0.
std::vector<Poly> enumerate_polys(const FieldCtx& f, int max_deg);

// Lazy view of the same sequence, for large coefficient spaces.
class PolyRange {
public:
    PolyRange(const FieldCtx& f, int max_deg);
    long long size() const { return size_; }
    Poly operator[](long long k) const;

private:
    const FieldCtx* fld_;
    int max_deg_;
    long long size_;
};

bool is_irreducible(const Poly& a);  // a nonzero; trial division

// All monic irreducible degree-d polynomials in enumeration order.
std::vector<Poly> enumerate_monic_irreducibles(const FieldCtx& f, int d);

// A finite place of F_q(t): a monic irreducible polynomial f of degree d.
class Place {
public:
    explicit Place(Poly f);
    const Poly& f() const { return f_; }
    int degree() const { return f_.degree(); }
    const FieldCtx& field() const { return f_.field(); }

private:
    Poly f_;
};

// Multiplicity of place.f in a; a must be nonzero.
int nu_p(const Place& place, const Poly& a);

// Valuation at infinity of the fraction a/b: deg b - deg a; a, b nonzero.
int nu_infty(const Poly& a, const Poly& b);

// F_{q^d} built from the first monic irreducible of degree d over ctx.
FieldPtr extension_field(const FieldPtr& ctx, int d);

}  // namespace btq
