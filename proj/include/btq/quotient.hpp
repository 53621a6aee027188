#pragma once

#include <string>
#include <vector>

namespace btq {

// Vertex orbit label X_n or X_n'.
struct VertexLabel {
    int n = 0;
    bool primed = false;
    bool operator==(const VertexLabel& o) const { return n == o.n && primed == o.primed; }
    bool operator<(const VertexLabel& o) const {
        return n != o.n ? n < o.n : primed < o.primed;
    }
    std::string to_string() const { return "X" + std::to_string(n) + (primed ? "'" : ""); }
};

enum class Variant { GammaTilde, Gamma };

std::string variant_name(Variant v);           // "gamma-tilde" / "gamma"
Variant variant_from_name(const std::string&); // throws on anything else

struct VertexInfo {
    VertexLabel label;
    long long stabilizer_order = 0;
    bool frontier = false;             // the +d chain edge leaves the window
    bool stabilizer_inherited = false; // Gamma variant carries Tilde orders over
    bool operator==(const VertexInfo& o) const {
        return label == o.label && stabilizer_order == o.stabilizer_order &&
               frontier == o.frontier && stabilizer_inherited == o.stabilizer_inherited;
    }
};

struct EdgeBundle {
    VertexLabel a, b;  // a <= b; a == b is a loop
    long long mult = 0;
    bool operator==(const EdgeBundle& o) const {
        return a == o.a && b == o.b && mult == o.mult;
    }
};

// The quotient of the Bruhat-Tits tree of a degree-d place under the
// arithmetic group, truncated to orbit indices <= window.
struct QuotientGraph {
    long long q = 0;
    int d = 0;
    Variant variant = Variant::GammaTilde;
    int window = 0;
    std::vector<VertexInfo> vertices;  // sorted by label
    std::vector<EdgeBundle> edges;     // sorted by (a, b)
    bool operator==(const QuotientGraph& o) const {
        return q == o.q && d == o.d && variant == o.variant && window == o.window &&
               vertices == o.vertices && edges == o.edges;
    }
    long long multiplicity(VertexLabel a, VertexLabel b) const;  // 0 if absent
};

// Number of edges between the orbits X_a and X_b (unordered; a pair is
// counted once), equivalently |H_a \ Upsilon_{a,b} / H_b|:
//   0 on parity mismatch of a+b and d,
//   1 when |a-b| = d or a+b = d,
//   for a+b < d with l = (d-a-b)/2:
//     q^{2l-1} + q^{2l-2}          (0 < a <= b)
//     q^{2l-2}                     (0 = a < b)
//     1 (d = 2) or q(q^{d-3}+1)/(q+1) (d > 2)   (a = b = 0, d even)
//   0 otherwise.
long long closed_form_multiplicity(long long q, int d, int a, int b);

// Vertex stabilizer order: q(q-1)(q+1) at n = 0, (q-1)q^{n+1} otherwise.
long long stabilizer_order(long long q, int n);

QuotientGraph build_quotient(long long q, int d, int window, Variant variant);

// Lift of an even-degree GammaTilde quotient to the type-preserving group:
// every bundle {X_a, X_b} becomes {X_a, X_b'} and {X_a', X_b}, except that a
// loop bundle at X_j becomes the single bundle {X_j, X_j'} with unchanged
// multiplicity.
QuotientGraph double_cover(const QuotientGraph& g);
// Inverse of double_cover; expects a Gamma graph of even degree.
QuotientGraph collapse_cover(const QuotientGraph& g);

}  // namespace btq
