#include "btq/quotient.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace btq {

namespace {

long long checked_pow(long long q, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > std::numeric_limits<long long>::max() / q)
            throw std::overflow_error("edge multiplicity overflows 64 bits");
        v *= q;
    }
    return v;
}

void sort_edges(std::vector<EdgeBundle>& edges) {
    std::sort(edges.begin(), edges.end(), [](const EdgeBundle& x, const EdgeBundle& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    });
}

}  // namespace

std::string variant_name(Variant v) {
    return v == Variant::GammaTilde ? "gamma-tilde" : "gamma";
}

Variant variant_from_name(const std::string& s) {
    if (s == "gamma-tilde") return Variant::GammaTilde;
    if (s == "gamma") return Variant::Gamma;
    throw std::invalid_argument("unknown variant '" + s + "' (use gamma or gamma-tilde)");
}

long long QuotientGraph::multiplicity(VertexLabel a, VertexLabel b) const {
    if (b < a) std::swap(a, b);
    for (const auto& e : edges)
        if (e.a == a && e.b == b) return e.mult;
    return 0;
}

long long closed_form_multiplicity(long long q, int d, int a, int b) {
    if (q < 2 || d < 1) throw std::invalid_argument("need q >= 2 and d >= 1");
    if (a < 0 || b < 0) throw std::invalid_argument("orbit indices must be nonnegative");
    if (a > b) std::swap(a, b);
    if (((a + b) - d) % 2 != 0) return 0;
    if (b - a == d) return 1;
    if (a + b == d) return 1;
    if (a + b > d) return 0;
    const int l = (d - a - b) / 2;
    if (a >= 1) return checked_pow(q, 2 * l - 2) * (q + 1);
    if (b >= 1) return checked_pow(q, 2 * l - 2);
    // a = b = 0, d even
    if (d == 2) return 1;
    const long long num = checked_pow(q, d - 3) + 1;
    if (num % (q + 1) != 0) throw std::logic_error("loop count is not integral");
    return q * (num / (q + 1));
}

long long stabilizer_order(long long q, int n) {
    if (n == 0) return q * (q - 1) * (q + 1);
    return (q - 1) * checked_pow(q, n + 1);
}

QuotientGraph build_quotient(long long q, int d, int window, Variant variant) {
    if (q < 2 || d < 1) throw std::invalid_argument("need q >= 2 and d >= 1");
    if (window < d)
        throw std::invalid_argument("window must be at least the place degree d");

    const bool even = (d % 2 == 0);
    QuotientGraph g;
    g.q = q;
    g.d = d;
    g.window = window;
    g.variant = even ? Variant::GammaTilde : variant;  // odd d: Gamma equals GammaTilde

    const int step = even ? 2 : 1;
    for (int n = 0; n <= window; n += step) {
        VertexInfo v;
        v.label = VertexLabel{n, false};
        v.stabilizer_order = stabilizer_order(q, n);
        v.frontier = n + d > window;
        g.vertices.push_back(v);
    }
    for (int a = 0; a <= window; a += step) {
        for (int b = a; b <= window; b += step) {
            const long long mult = closed_form_multiplicity(q, d, a, b);
            if (mult > 0) g.edges.push_back({VertexLabel{a, false}, VertexLabel{b, false}, mult});
        }
    }
    sort_edges(g.edges);

    if (!even) {
        g.variant = variant;
        return g;
    }
    if (variant == Variant::Gamma) return double_cover(g);
    return g;
}

QuotientGraph double_cover(const QuotientGraph& g) {
    if (g.d % 2 != 0)
        throw std::invalid_argument("double cover applies to even degree only");
    if (g.variant != Variant::GammaTilde)
        throw std::invalid_argument("double cover starts from a gamma-tilde graph");

    QuotientGraph out;
    out.q = g.q;
    out.d = g.d;
    out.window = g.window;
    out.variant = Variant::Gamma;
    for (const auto& v : g.vertices) {
        for (bool primed : {false, true}) {
            VertexInfo w = v;
            w.label.primed = primed;
            w.stabilizer_inherited = true;
            out.vertices.push_back(w);
        }
    }
    for (const auto& e : g.edges) {
        if (e.a == e.b) {
            // loop bundles lift once, multiplicity unchanged
            out.edges.push_back({VertexLabel{e.a.n, false}, VertexLabel{e.a.n, true}, e.mult});
        } else {
            out.edges.push_back({VertexLabel{e.a.n, false}, VertexLabel{e.b.n, true}, e.mult});
            out.edges.push_back({VertexLabel{e.a.n, true}, VertexLabel{e.b.n, false}, e.mult});
            if (!(out.edges.back().a < out.edges.back().b))
                std::swap(out.edges.back().a, out.edges.back().b);
        }
    }
    sort_edges(out.edges);
    return out;
}

QuotientGraph collapse_cover(const QuotientGraph& g) {
    if (g.d % 2 != 0 || g.variant != Variant::Gamma)
        throw std::invalid_argument("collapse applies to even-degree gamma graphs");

    QuotientGraph out;
    out.q = g.q;
    out.d = g.d;
    out.window = g.window;
    out.variant = Variant::GammaTilde;
    for (const auto& v : g.vertices) {
        if (v.label.primed) continue;
        VertexInfo w = v;
        w.stabilizer_inherited = false;
        out.vertices.push_back(w);
    }
    std::map<std::pair<int, int>, std::vector<long long>> bundles;
    for (const auto& e : g.edges) {
        if (e.a.primed == e.b.primed)
            throw std::invalid_argument("gamma graph has an edge within one type class");
        bundles[{std::min(e.a.n, e.b.n), std::max(e.a.n, e.b.n)}].push_back(e.mult);
    }
    for (const auto& [pair, mults] : bundles) {
        const auto [a, b] = pair;
        if (a == b) {
            if (mults.size() != 1)
                throw std::invalid_argument("loop lift must be a single bundle");
            out.edges.push_back({VertexLabel{a, false}, VertexLabel{b, false}, mults[0]});
        } else {
            if (mults.size() != 2 || mults[0] != mults[1])
                throw std::invalid_argument("cover bundles must come in equal pairs");
            out.edges.push_back({VertexLabel{a, false}, VertexLabel{b, false}, mults[0]});
        }
    }
    sort_edges(out.edges);
    return out;
}

}  // namespace btq
