#include "btq/projective.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace btq {

namespace {

// floor division for the half-integer degree bounds
int floor_div2(int a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

}  // namespace

ProjMat::ProjMat(Poly alpha, Poly beta, Poly gamma, Poly delta)
    : a_(std::move(alpha)), b_(std::move(beta)), c_(std::move(gamma)), d_(std::move(delta)) {
    if (det().is_zero())
        throw std::invalid_argument("projective matrix needs a nonzero determinant");
    // divide out the polynomial content
    Poly g = Poly::gcd(a_, b_);
    if (!g.is_constant()) g = Poly::gcd(g, c_);
    if (!g.is_constant()) g = Poly::gcd(g, d_);
    if (g.degree() >= 1) {
        a_ = Poly::divmod(a_, g).first;
        b_ = Poly::divmod(b_, g).first;
        c_ = Poly::divmod(c_, g).first;
        d_ = Poly::divmod(d_, g).first;
    }
    canonicalize();
}

ProjMat::ProjMat(Poly a, Poly b, Poly c, Poly d, already_canonical_t)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

void ProjMat::canonicalize() {
    const Poly* first = nullptr;
    for (const Poly* e : {&a_, &b_, &c_, &d_}) {
        if (!e->is_zero()) {
            first = e;
            break;
        }
    }
    const Elem lead = first->leading_coeff();
    if (lead == FieldCtx::one) return;
    const Elem s = field().inv(lead);
    a_ = a_.scaled(s);
    b_ = b_.scaled(s);
    c_ = c_.scaled(s);
    d_ = d_.scaled(s);
}

ProjMat ProjMat::identity(const FieldCtx& f) {
    return ProjMat(Poly::one(f), Poly::zero(f), Poly::zero(f), Poly::one(f));
}

ProjMat ProjMat::operator*(const ProjMat& o) const {
    return ProjMat(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                   c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

ProjMat ProjMat::inverse() const {
    return ProjMat(d_, -b_, -c_, a_);
}

ProjMat scaled_product(const ProjMat& x, const ProjMat& y) {
    ProjMat m(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
              x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_,
              ProjMat::already_canonical_t{});
    m.canonicalize();
    return m;
}

std::size_t ProjMat::hash() const {
    std::size_t h = a_.hash();
    h = h * 31 + b_.hash();
    h = h * 31 + c_.hash();
    h = h * 31 + d_.hash();
    return h;
}

std::string ProjMat::to_string() const {
    return "[[" + a_.to_string() + "," + b_.to_string() + "],[" + c_.to_string() + "," +
           d_.to_string() + "]]";
}

ProjMat ProjMat::parse(const FieldCtx& f, std::string_view s) {
    // split the matrix literal into four entry substrings, tracking bracket
    // depth so extension coefficients like [0,1] pass through untouched
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '[') {
            ++depth;
            if (depth <= 2) continue;
        } else if (ch == ']') {
            --depth;
            if (depth < 0) throw std::invalid_argument("unbalanced brackets in matrix literal");
            if (depth <= 1) {
                if (depth == 1 || depth == 0) {
                    if (!cur.empty()) {
                        parts.push_back(cur);
                        cur.clear();
                    }
                }
                continue;
            }
        } else if (ch == ',' && depth <= 1) {
            continue;  // separator between rows / entries at matrix level
        } else if (ch == ',' && depth == 2) {
            parts.push_back(cur);
            cur.clear();
            continue;
        }
        cur += ch;
    }
    if (depth != 0 || !cur.empty() || parts.size() != 4)
        throw std::invalid_argument("matrix literal must look like [[a,b],[c,d]]");
    return ProjMat(Poly::parse(f, parts[0]), Poly::parse(f, parts[1]), Poly::parse(f, parts[2]),
                   Poly::parse(f, parts[3]));
}

std::vector<ProjMat> h_group(const FieldCtx& f, int n) {
    if (n < 0) throw std::invalid_argument("h_group needs n >= 0");
    const long long q = f.order();
    std::vector<ProjMat> out;
    if (n == 0) {
        // all of PGL_2(k), deduplicated through the canonical form
        std::unordered_set<ProjMat, ProjMatHash> seen;
        out.reserve(std::size_t(q * (q - 1) * (q + 1)));
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b)
                for (Elem c = 0; c < q; ++c)
                    for (Elem d = 0; d < q; ++d) {
                        if (f.sub(f.mul(a, d), f.mul(b, c)) == FieldCtx::zero) continue;
                        ProjMat m(Poly::constant(f, a), Poly::constant(f, b),
                                  Poly::constant(f, c), Poly::constant(f, d));
                        if (seen.insert(m).second) out.push_back(std::move(m));
                    }
        return out;
    }
    // canonical representatives (1, b; 0, delta), delta in k*, deg b <= n
    out.reserve(std::size_t(q - 1) * std::size_t(PolyRange(f, n).size()));
    PolyRange bs(f, n);
    for (long long k = 0; k < bs.size(); ++k) {
        const Poly b = bs[k];
        for (Elem delta = 1; delta < q; ++delta)
            out.emplace_back(Poly::one(f), b, Poly::zero(f), Poly::constant(f, delta));
    }
    return out;
}

bool upsilon_member(const Place& place, int n, int m, const ProjMat& M) {
    if (n < 0 || m < 0) throw std::invalid_argument("upsilon indices must be nonnegative");
    const int d = place.degree();
    if (((d + n + m) & 1) != 0) return false;
    const auto within = [](const Poly& p, int bound) { return p.degree() <= bound; };
    if (!within(M.alpha(), floor_div2(d + n - m))) return false;
    if (!within(M.beta(), floor_div2(d + n + m))) return false;
    if (!within(M.gamma(), floor_div2(d - n - m))) return false;
    if (!within(M.delta(), floor_div2(d - n + m))) return false;
    const Poly det = M.det();
    return det.degree() == d && det.monic() == place.f();
}

int bt_distance(const Place& place, const ProjMat& M) { return nu_p(place, M.det()); }

RatFunc RatFunc::of(Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    const FieldCtx& F = num.field();
    if (num.is_zero()) return RatFunc(Poly::zero(F), Poly::one(F));
    Poly g = Poly::gcd(num, den);
    if (g.degree() >= 1) {
        num = Poly::divmod(num, g).first;
        den = Poly::divmod(den, g).first;
    }
    const Elem s = F.inv(den.leading_coeff());
    return RatFunc(num.scaled(s), den.scaled(s));
}

RatFunc RatFunc::of(Poly num) {
    const FieldCtx& F = num.field();
    return RatFunc(std::move(num), Poly::one(F));
}

int RatFunc::valuation_at_infinity() const {
    return nu_infty(num_, den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return of(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

bool maps_ym_to_yn(int n, int m, const std::array<RatFunc, 4>& entries) {
    if (n < 0 || m < 0) throw std::invalid_argument("vertex indices must be nonnegative");
    const RatFunc& alpha = entries[0];
    const RatFunc& beta = entries[1];
    const RatFunc& gamma = entries[2];
    const RatFunc& delta = entries[3];
    const RatFunc det = alpha * delta - beta * gamma;
    if (det.is_zero()) throw std::invalid_argument("matrix is singular");
    const auto at_least = [](const RatFunc& r, int bound) {
        return r.is_zero() || r.valuation_at_infinity() >= bound;
    };
    return at_least(alpha, m - n) && at_least(beta, -n) && at_least(gamma, m) &&
           at_least(delta, 0) && det.valuation_at_infinity() == m - n;
}

ProjPoint ProjPoint::of(const FieldCtx& f, Elem x, Elem y) {
    if (y != FieldCtx::zero) return ProjPoint{f.div(x, y), false};
    if (x == FieldCtx::zero) throw std::invalid_argument("(0 : 0) is not a projective point");
    return ProjPoint{0, true};
}

std::vector<ProjPoint> proj_line(const FieldCtx& f) {
    std::vector<ProjPoint> pts;
    pts.reserve(std::size_t(f.order()) + 1);
    for (Elem v = 0; v < f.order(); ++v) pts.push_back(ProjPoint{v, false});
    pts.push_back(ProjPoint{0, true});
    return pts;
}

ProjPoint moebius_apply(const FieldCtx& f, Elem a, Elem b, Elem c, Elem d, ProjPoint z) {
    if (z.infinite) {
        if (c == FieldCtx::zero) return ProjPoint{0, true};
        return ProjPoint{f.div(a, c), false};
    }
    const Elem den = f.add(f.mul(c, z.value), d);
    if (den == FieldCtx::zero) return ProjPoint{0, true};
    return ProjPoint{f.div(f.add(f.mul(a, z.value), b), den), false};
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(std::size_t(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::size_t(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<long long> moebius_orbit_census(const FieldPtr& base, int d) {
    if (d < 1) throw std::invalid_argument("census needs d >= 1");
    const FieldPtr ext = extension_field(base, d);
    const long long Q = ext->order();
    const long long q = base->order();
    const int npts = int(Q) + 1;  // index Q is the point at infinity

    const auto point_index = [&](ProjPoint p) { return p.infinite ? int(Q) : int(p.value); };

    Dsu dsu(npts);
    // base-field constants embed in the extension as their own index
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            for (Elem c = 0; c < q; ++c)
                for (Elem dd = 0; dd < q; ++dd) {
                    if (base->sub(base->mul(a, dd), base->mul(b, c)) == FieldCtx::zero) continue;
                    for (int i = 0; i < npts; ++i) {
                        ProjPoint z = (i == int(Q)) ? ProjPoint{0, true}
                                                    : ProjPoint{Elem(i), false};
                        dsu.unite(i, point_index(moebius_apply(*ext, a, b, c, dd, z)));
                    }
                }

    std::vector<long long> sizes;
    std::vector<long long> count(std::size_t(npts), 0);
    for (int i = 0; i < npts; ++i) ++count[std::size_t(dsu.find(i))];
    for (int i = 0; i < npts; ++i)
        if (count[std::size_t(i)] > 0) sizes.push_back(count[std::size_t(i)]);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace btq
