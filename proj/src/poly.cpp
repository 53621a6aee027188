#include "btq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace btq {

void Poly::strip() {
    while (!c_.empty() && c_.back() == FieldCtx::zero) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& f, Elem c) {
    return Poly(f, c == FieldCtx::zero ? std::vector<Elem>{} : std::vector<Elem>{c});
}

Poly Poly::monomial(const FieldCtx& f, Elem c, int deg) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    if (c == FieldCtx::zero) return zero(f);
    std::vector<Elem> cs(std::size_t(deg) + 1, 0);
    cs.back() = c;
    return Poly(f, std::move(cs));
}

Poly Poly::from_coeffs(const FieldCtx& f, std::vector<Elem> cs) {
    return Poly(f, std::move(cs));
}

Poly Poly::operator+(const Poly& o) const {
    const FieldCtx& F = *fld_;
    std::vector<Elem> cs(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = F.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(F, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
    const FieldCtx& F = *fld_;
    std::vector<Elem> cs(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = F.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(F, std::move(cs));
}

Poly Poly::operator-() const {
    const FieldCtx& F = *fld_;
    std::vector<Elem> cs(c_);
    for (auto& c : cs) c = F.neg(c);
    return Poly(F, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
    const FieldCtx& F = *fld_;
    if (is_zero() || o.is_zero()) return zero(F);
    std::vector<Elem> cs(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            cs[i + j] = F.add(cs[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(F, std::move(cs));
}

Poly Poly::scaled(Elem c) const {
    const FieldCtx& F = *fld_;
    if (c == FieldCtx::zero) return zero(F);
    std::vector<Elem> cs(c_);
    for (auto& x : cs) x = F.mul(x, c);
    return Poly(F, std::move(cs));
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(fld_->inv(leading_coeff()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const FieldCtx& F = a.field();
    if (a.degree() < b.degree()) return {zero(F), a};
    const Elem lead_inv = F.inv(b.leading_coeff());
    std::vector<Elem> rem(a.c_);
    std::vector<Elem> quot(std::size_t(a.degree() - b.degree()) + 1, 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        const Elem c = rem[std::size_t(i)];
        if (c == 0) continue;
        const Elem factor = F.mul(c, lead_inv);
        quot[std::size_t(i - b.degree())] = factor;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& slot = rem[std::size_t(i - b.degree() + j)];
            slot = F.sub(slot, F.mul(factor, b.c_[std::size_t(j)]));
        }
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = std::move(r);
    }
    return x.monic();
}

bool Poly::divides(const Poly& a) const {
    if (is_zero()) return a.is_zero();
    return divmod(a, *this).second.is_zero();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::size_t Poly::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Elem c : c_) {
        h ^= std::size_t(c) + 1;
        h *= 1099511628211ull;
    }
    h ^= c_.size();
    return h;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const FieldCtx& F = *fld_;
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Elem c = coeff(i);
        if (c == FieldCtx::zero) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += F.elem_to_string(c);
            continue;
        }
        if (c != FieldCtx::one) {
            out += F.elem_to_string(c);
            out += '*';
        }
        out += 't';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

int parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("expected a number in polynomial literal");
    int v = 0;
    for (std::size_t k = start; k < c.i; ++k) {
        v = v * 10 + (c.s[k] - '0');
        if (v > 1'000'000) throw std::invalid_argument("number out of range in polynomial literal");
    }
    return v;
}

Elem parse_coeff(const FieldCtx& F, Cursor& c) {
    if (c.peek() == '[') {
        c.take();
        std::vector<int> cs;
        if (c.peek() != ']') {
            cs.push_back(parse_int(c));
            while (c.peek() == ',') {
                c.take();
                cs.push_back(parse_int(c));
            }
        }
        if (c.take() != ']') throw std::invalid_argument("unterminated coefficient vector");
        for (auto& v : cs) v %= F.characteristic();
        return F.from_prime_coeffs(cs);
    }
    const int v = parse_int(c);
    return F.from_prime_coeffs({v % F.characteristic()});
}

}  // namespace

Poly Poly::parse(const FieldCtx& F, std::string_view s) {
    Cursor cur{s};
    std::vector<Elem> coeffs;
    auto add_term = [&](Elem c, int deg) {
        if (int(coeffs.size()) <= deg) coeffs.resize(std::size_t(deg) + 1, 0);
        coeffs[std::size_t(deg)] = F.add(coeffs[std::size_t(deg)], c);
    };
    bool first = true;
    while (!cur.eof()) {
        if (!first) {
            if (cur.take() != '+')
                throw std::invalid_argument("expected '+' between polynomial terms");
        }
        first = false;
        Elem c = FieldCtx::one;
        bool saw_coeff = false;
        if (cur.eof()) throw std::invalid_argument("dangling '+' in polynomial literal");
        if (cur.peek() != 't') {
            c = parse_coeff(F, cur);
            saw_coeff = true;
        }
        int deg = 0;
        bool saw_t = false;
        if (!cur.eof() && (cur.peek() == '*' || cur.peek() == 't')) {
            if (cur.peek() == '*') {
                cur.take();
                if (cur.eof() || cur.peek() != 't')
                    throw std::invalid_argument("expected 't' after '*'");
            }
            cur.take();  // 't'
            saw_t = true;
            deg = 1;
            if (!cur.eof() && cur.peek() == '^') {
                cur.take();
                deg = parse_int(cur);
            }
        }
        if (!saw_coeff && !saw_t)
            throw std::invalid_argument("empty term in polynomial literal");
        add_term(c, deg);
    }
    if (first) throw std::invalid_argument("empty polynomial literal");
    return Poly(F, std::move(coeffs));
}

std::vector<Poly> enumerate_polys(const FieldCtx& f, int max_deg) {
    PolyRange range(f, max_deg);
    std::vector<Poly> out;
    out.reserve(std::size_t(range.size()));
    for (long long k = 0; k < range.size(); ++k) out.push_back(range[k]);
    return out;
}

PolyRange::PolyRange(const FieldCtx& f, int max_deg) : fld_(&f), max_deg_(max_deg) {
    size_ = 1;
    for (int i = 0; i <= max_deg; ++i) {
        size_ *= f.order();
        if (size_ > (1LL << 40)) throw std::invalid_argument("polynomial space too large");
    }
}

Poly PolyRange::operator[](long long k) const {
    const long long q = fld_->order();
    std::vector<Elem> cs(std::size_t(std::max(max_deg_ + 1, 0)), 0);
    for (int i = 0; i <= max_deg_; ++i) {
        cs[std::size_t(i)] = Elem(k % q);
        k /= q;
    }
    return Poly::from_coeffs(*fld_, std::move(cs));
}

bool is_irreducible(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("irreducibility of the zero polynomial");
    const int d = a.degree();
    if (d < 1) return false;  // units are not irreducible
    const FieldCtx& F = a.field();
    const long long q = F.order();
    for (int k = 1; 2 * k <= d; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= q;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<Elem> cs(std::size_t(k) + 1, 0);
            long long v = idx;
            for (int i = 0; i < k; ++i) {
                cs[std::size_t(i)] = Elem(v % q);
                v /= q;
            }
            cs[std::size_t(k)] = FieldCtx::one;
            if (Poly::from_coeffs(F, std::move(cs)).divides(a)) return false;
        }
    }
    return true;
}

std::vector<Poly> enumerate_monic_irreducibles(const FieldCtx& f, int d) {
    if (d < 1) throw std::invalid_argument("place degree must be at least 1");
    const long long q = f.order();
    long long count = 1;
    for (int i = 0; i < d; ++i) {
        count *= q;
        if (count > (1LL << 40)) throw std::invalid_argument("degree too large to enumerate");
    }
    std::vector<Poly> out;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<Elem> cs(std::size_t(d) + 1, 0);
        long long v = idx;
        for (int i = 0; i < d; ++i) {
            cs[std::size_t(i)] = Elem(v % q);
            v /= q;
        }
        cs[std::size_t(d)] = FieldCtx::one;
        Poly p = Poly::from_coeffs(f, std::move(cs));
        if (is_irreducible(p)) out.push_back(std::move(p));
    }
    return out;
}

Place::Place(Poly f) : f_(std::move(f)) {
    if (f_.degree() < 1 || !f_.is_monic() || !is_irreducible(f_))
        throw std::invalid_argument("a place needs a monic irreducible polynomial of degree >= 1");
}

int nu_p(const Place& place, const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("nu_p of the zero polynomial");
    int v = 0;
    Poly rest = a;
    while (true) {
        auto [quot, rem] = Poly::divmod(rest, place.f());
        if (!rem.is_zero()) return v;
        ++v;
        rest = std::move(quot);
    }
}

int nu_infty(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("nu_infty needs a nonzero numerator and denominator");
    return b.degree() - a.degree();
}

FieldPtr extension_field(const FieldPtr& ctx, int d) { return FieldCtx::extension(ctx, d); }

}  // namespace btq
