#include "btq/upsilon.hpp"

#include <algorithm>
#include <numeric>

namespace btq {

namespace {

int floor_div2(int a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

long long pow_clamped(long long q, int e, long long cap) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / q) return cap;
        v *= q;
    }
    return v;
}

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

CosetPartition finish_partition(Dsu& dsu, std::size_t n) {
    CosetPartition part;
    part.class_of.assign(n, 0);
    std::unordered_map<std::size_t, std::size_t> id_of_root;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = dsu.find(i);
        auto [it, fresh] = id_of_root.try_emplace(root, id_of_root.size());
        part.class_of[i] = it->second;
        if (fresh) {
            part.class_sizes.push_back(0);
            part.representatives.push_back(i);  // roots are class minima
        }
        ++part.class_sizes[it->second];
    }
    return part;
}

}  // namespace

std::size_t UpsilonSet::index_of(const ProjMat& M) const {
    auto it = index.find(M);
    if (it == index.end())
        throw std::logic_error("matrix outside the enumerated set: " + M.to_string());
    return it->second;
}

long long upsilon_candidate_count(const Place& place, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("upsilon indices must be nonnegative");
    const int d = place.degree();
    const long long q = place.field().order();
    const long long cap = std::numeric_limits<long long>::max() / 2;
    int exponent = 0;
    for (int bound : {floor_div2(d + n - m), floor_div2(d + n + m), floor_div2(d - n - m),
                      floor_div2(d - n + m)})
        exponent += std::max(bound + 1, 0);
    return pow_clamped(q, exponent, cap);
}

UpsilonSet enumerate_upsilon(const Place& place, int n, int m, long long budget) {
    const long long required = upsilon_candidate_count(place, n, m);
    if (required > budget) throw BudgetExceeded(required, budget);

    UpsilonSet U{place, n, m, {}, {}};
    const int d = place.degree();
    if (((d + n + m) & 1) != 0) return U;  // parity mismatch: empty

    const FieldCtx& F = place.field();
    const long long q = F.order();
    const Poly& f = place.f();
    const int ba = floor_div2(d + n - m);
    const int bb = floor_div2(d + n + m);
    const int bg = floor_div2(d - n - m);
    const int bd = floor_div2(d - n + m);

    const PolyRange alphas(F, ba), betas(F, bb), gammas(F, bg), deltas(F, bd);

    auto insert = [&](const Poly& alpha, const Poly& beta, const Poly& gamma,
                      const Poly& delta) {
        ProjMat M(alpha, beta, gamma, delta);
        if (U.index.try_emplace(M, U.elements.size()).second) U.elements.push_back(std::move(M));
    };

    // (alpha, gamma) outer; admissible (beta, delta) collected per pair and
    // sorted into the enumeration order before insertion
    std::vector<std::pair<Poly, Poly>> found;
    for (long long ia = 0; ia < alphas.size(); ++ia) {
        const Poly alpha = alphas[ia];
        for (long long ig = 0; ig < gammas.size(); ++ig) {
            const Poly gamma = gammas[ig];
            if (alpha.is_zero() && gamma.is_zero()) continue;
            found.clear();
            if (gamma.is_zero()) {
                // alpha * delta = lambda * f
                for (Elem lambda = 1; lambda < q; ++lambda) {
                    auto [delta, rem] = Poly::divmod(f.scaled(lambda), alpha);
                    if (!rem.is_zero() || delta.degree() > bd) continue;
                    for (long long ib = 0; ib < betas.size(); ++ib)
                        found.emplace_back(betas[ib], delta);
                }
            } else {
                // a common factor of alpha and gamma would divide lambda*f;
                // gamma is too short for f itself, so only constants survive
                if (Poly::gcd(alpha, gamma).degree() >= 1) continue;
                for (long long id = 0; id < deltas.size(); ++id) {
                    const Poly delta = deltas[id];
                    const Poly prod = alpha * delta;
                    for (Elem lambda = 1; lambda < q; ++lambda) {
                        auto [beta, rem] = Poly::divmod(prod - f.scaled(lambda), gamma);
                        if (!rem.is_zero() || beta.degree() > bb) continue;
                        found.emplace_back(beta, delta);
                    }
                }
            }
            std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
                if (x.first != y.first) return poly_less(x.first, y.first);
                return poly_less(x.second, y.second);
            });
            for (const auto& [beta, delta] : found) insert(alpha, beta, gamma, delta);
        }
    }
    return U;
}

long long upsilon_size_formula(long long q, int d, int n, int m) {
    if (n < 0 || m < 0 || n + m >= d || ((d + n + m) & 1) != 0)
        throw std::invalid_argument("size formula applies to n+m < d with matching parity");
    const int l = (d - n - m) / 2;
    long long v = q - 1;
    v *= q - 1;
    for (int i = 0; i < n + m; ++i) v *= q;
    long long pw = 1;
    for (int i = 0; i < 2 * l; ++i) pw *= q;
    return v * (pw * q + pw);
}

namespace {

CosetPartition closure(const UpsilonSet& U, const std::vector<ProjMat>* hn,
                       const std::vector<ProjMat>& hm) {
    Dsu dsu(U.elements.size());
    for (std::size_t i = 0; i < U.elements.size(); ++i) {
        const ProjMat& e = U.elements[i];
        for (const ProjMat& h : hm) dsu.unite(i, U.index_of(scaled_product(e, h)));
        if (hn)
            for (const ProjMat& h : *hn) dsu.unite(i, U.index_of(scaled_product(h, e)));
    }
    return finish_partition(dsu, U.elements.size());
}

}  // namespace

CosetPartition left_cosets(const UpsilonSet& U, const std::vector<ProjMat>& hm) {
    return closure(U, nullptr, hm);
}

CosetPartition double_cosets(const UpsilonSet& U, const std::vector<ProjMat>& hn,
                             const std::vector<ProjMat>& hm) {
    return closure(U, &hn, hm);
}

long long left_coset_count(const UpsilonSet& U) {
    if (U.empty()) return 0;
    return left_cosets(U, h_group(U.place.field(), U.m)).count();
}

long long double_coset_count(const UpsilonSet& U) {
    if (U.empty()) return 0;
    return double_cosets(U, h_group(U.place.field(), U.n), h_group(U.place.field(), U.m))
        .count();
}

}  // namespace btq
