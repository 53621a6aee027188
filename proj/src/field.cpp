#include "btq/field.hpp"

#include <stdexcept>

#include "btq/poly.hpp"

namespace btq {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// multiply digit vectors over `base` and reduce by the monic modulus
std::vector<Elem> mul_mod(const FieldCtx& base, const std::vector<Elem>& a,
                          const std::vector<Elem>& b, const std::vector<Elem>& modulus) {
    const int s = int(modulus.size()) - 1;
    std::vector<Elem> prod(std::size_t(2 * s - 1), 0);
    for (int i = 0; i < s; ++i) {
        if (a[std::size_t(i)] == 0) continue;
        for (int j = 0; j < s; ++j) {
            auto& slot = prod[std::size_t(i + j)];
            slot = base.add(slot, base.mul(a[std::size_t(i)], b[std::size_t(j)]));
        }
    }
    for (int i = 2 * s - 2; i >= s; --i) {
        Elem c = prod[std::size_t(i)];
        if (c == 0) continue;
        prod[std::size_t(i)] = 0;
        for (int j = 0; j < s; ++j) {
            auto& slot = prod[std::size_t(i - s + j)];
            slot = base.sub(slot, base.mul(c, modulus[std::size_t(j)]));
        }
    }
    prod.resize(std::size_t(s));
    return prod;
}

}  // namespace

FieldPtr FieldCtx::build_prime(int p) {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_total_ = 1;
    ctx->q_ = p;
    const std::size_t q = std::size_t(p);
    ctx->add_.resize(q * q);
    ctx->mul_.resize(q * q);
    ctx->neg_.resize(q);
    ctx->inv_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
        ctx->neg_[a] = Elem((q - a) % q);
        for (std::size_t b = 0; b < q; ++b) {
            ctx->add_[a * q + b] = Elem((a + b) % q);
            ctx->mul_[a * q + b] = Elem((a * b) % q);
        }
    }
    for (std::size_t a = 1; a < q; ++a)
        for (std::size_t b = 1; b < q; ++b)
            if (ctx->mul_[a * q + b] == 1) ctx->inv_[a] = Elem(b);
    return ctx;
}

FieldPtr FieldCtx::build_extension(const FieldPtr& base, std::vector<Elem> modulus) {
    const int s = int(modulus.size()) - 1;
    const long long Q = base->order();
    long long q = 1;
    for (int i = 0; i < s; ++i) q *= Q;
    if (q > max_order)
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " exceeds the table-arithmetic limit " +
                                    std::to_string(max_order));

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = base->characteristic();
    ctx->e_total_ = base->degree_over_prime() * s;
    ctx->q_ = q;
    ctx->base_ = base;
    ctx->modulus_ = std::move(modulus);

    // digit decomposition of index k, little-endian base Q
    auto digits = [&](long long k) {
        std::vector<Elem> ds(std::size_t(s), 0);
        for (int i = 0; i < s; ++i) {
            ds[std::size_t(i)] = Elem(k % Q);
            k /= Q;
        }
        return ds;
    };
    auto index_of = [&](const std::vector<Elem>& ds) {
        long long k = 0;
        for (int i = s - 1; i >= 0; --i) k = k * Q + ds[std::size_t(i)];
        return k;
    };

    const std::size_t n = std::size_t(q);
    ctx->add_.resize(n * n);
    ctx->mul_.resize(n * n);
    ctx->neg_.resize(n);
    ctx->inv_.assign(n, 0);

    std::vector<std::vector<Elem>> dig(n);
    for (std::size_t a = 0; a < n; ++a) dig[a] = digits(static_cast<long long>(a));

    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Elem> nds(std::size_t(s), 0);
        for (int i = 0; i < s; ++i) nds[std::size_t(i)] = base->neg(dig[a][std::size_t(i)]);
        ctx->neg_[a] = Elem(index_of(nds));
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Elem> sum(std::size_t(s), 0);
            for (int i = 0; i < s; ++i)
                sum[std::size_t(i)] = base->add(dig[a][std::size_t(i)], dig[b][std::size_t(i)]);
            ctx->add_[a * n + b] = Elem(index_of(sum));
            ctx->mul_[a * n + b] = Elem(index_of(mul_mod(*base, dig[a], dig[b], ctx->modulus_)));
        }
    }
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
            if (ctx->mul_[a * n + b] == 1) ctx->inv_[a] = Elem(b);
    return ctx;
}

FieldPtr FieldCtx::make(long long q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    if (q > max_order)
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " exceeds the table-arithmetic limit " +
                                    std::to_string(max_order));
    long long p = 0;
    for (long long c = 2; c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    long long rest = q;
    int e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1 || !is_prime(p))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    FieldPtr prime = build_prime(int(p));
    if (e == 1) return prime;
    return extension(prime, e);
}

FieldPtr FieldCtx::extension(const FieldPtr& ctx, int d) {
    if (d < 1) throw std::invalid_argument("extension degree must be positive");
    if (d == 1) return ctx;
    const Poly g = enumerate_monic_irreducibles(*ctx, d).front();
    std::vector<Elem> modulus(std::size_t(d) + 1, 0);
    for (int i = 0; i <= d; ++i) modulus[std::size_t(i)] = g.coeff(i);
    return build_extension(ctx, std::move(modulus));
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return inv_[a];
}

std::vector<int> FieldCtx::prime_coeffs(Elem a) const {
    if (!base_) return {int(a)};
    std::vector<int> out;
    out.reserve(std::size_t(e_total_));
    const long long Q = base_->order();
    long long k = a;
    const int s = int(modulus_.size()) - 1;
    for (int i = 0; i < s; ++i) {
        for (int c : base_->prime_coeffs(Elem(k % Q))) out.push_back(c);
        k /= Q;
    }
    return out;
}

Elem FieldCtx::from_prime_coeffs(const std::vector<int>& cs) const {
    if (int(cs.size()) > e_total_)
        throw std::invalid_argument("too many coefficients for this field");
    if (!base_) {
        long long v = cs.empty() ? 0 : cs[0] % p_;
        if (v < 0) v += p_;
        return Elem(v);
    }
    const int eb = base_->degree_over_prime();
    const int s = int(modulus_.size()) - 1;
    const long long Q = base_->order();
    long long k = 0;
    for (int i = s - 1; i >= 0; --i) {
        std::vector<int> chunk;
        for (int j = 0; j < eb; ++j) {
            const std::size_t at = std::size_t(i * eb + j);
            chunk.push_back(at < cs.size() ? cs[at] : 0);
        }
        k = k * Q + base_->from_prime_coeffs(chunk);
    }
    return Elem(k);
}

std::string FieldCtx::elem_to_string(Elem a) const {
    if (e_total_ == 1) return std::to_string(int(a));
    std::string out = "[";
    const auto cs = prime_coeffs(a);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cs[i]);
    }
    out += ']';
    return out;
}

}  // namespace btq
