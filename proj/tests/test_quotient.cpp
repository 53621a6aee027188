#include <map>
#include <stdexcept>

#include "btq/quotient.hpp"
#include "doctest.h"

using namespace btq;

namespace {

using EdgeMap = std::map<std::pair<std::string, std::string>, long long>;

EdgeMap edge_map(const QuotientGraph& g) {
    EdgeMap out;
    for (const auto& e : g.edges) out[{e.a.to_string(), e.b.to_string()}] = e.mult;
    return out;
}

std::string X(int n) { return VertexLabel{n, false}.to_string(); }
std::string Xp(int n) { return VertexLabel{n, true}.to_string(); }

}  // namespace

TEST_CASE("closed form multiplicities") {
    for (long long q : {2, 3, 5}) {
        CAPTURE(q);
        CHECK(closed_form_multiplicity(q, 7, 2, 3) == q + 1);
        CHECK(closed_form_multiplicity(q, 5, 0, 1) == q * q);
        CHECK(closed_form_multiplicity(q, 6, 0, 0) == q * q * q - q * q + q);
        CHECK(closed_form_multiplicity(q, 2, 0, 0) == 1);
        CHECK(closed_form_multiplicity(q, 4, 0, 0) == q);
        CHECK(closed_form_multiplicity(q, 7, 0, 1) == q * q * q * q);
        CHECK(closed_form_multiplicity(q, 7, 1, 2) == q * q * q + q * q);
        // chain and boundary cases
        CHECK(closed_form_multiplicity(q, 3, 2, 5) == 1);
        CHECK(closed_form_multiplicity(q, 3, 1, 2) == 1);
        CHECK(closed_form_multiplicity(q, 3, 0, 3) == 1);
        // parity and out-of-range zeros
        CHECK(closed_form_multiplicity(q, 3, 0, 2) == 0);
        CHECK(closed_form_multiplicity(q, 2, 0, 4) == 0);
        CHECK(closed_form_multiplicity(q, 4, 2, 4) == 0);
        // arguments commute
        CHECK(closed_form_multiplicity(q, 7, 3, 2) == q + 1);
    }
}

TEST_CASE("golden figure d=1: a ray") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 1, 4, Variant::Gamma);
        CHECK(g.vertices.size() == 5);
        EdgeMap expect;
        for (int n = 0; n < 4; ++n) expect[{X(n), X(n + 1)}] = 1;
        CHECK(edge_map(g) == expect);
        CHECK(g.vertices.front().stabilizer_order == q * (q - 1) * (q + 1));
        CHECK(g.vertices.back().frontier);
        CHECK_FALSE(g.vertices.front().frontier);
    }
}

TEST_CASE("golden figure d=2: the two-sided line") {
    for (long long q : {2, 3}) {
        auto gt = build_quotient(q, 2, 4, Variant::GammaTilde);
        EdgeMap expect_tilde{{{X(0), X(0)}, 1}, {{X(0), X(2)}, 1}, {{X(2), X(4)}, 1}};
        CHECK(edge_map(gt) == expect_tilde);

        auto g = build_quotient(q, 2, 4, Variant::Gamma);
        EdgeMap expect{{{X(0), Xp(0)}, 1},
                       {{X(0), Xp(2)}, 1},
                       {{Xp(0), X(2)}, 1},
                       {{X(2), Xp(4)}, 1},
                       {{Xp(2), X(4)}, 1}};
        CHECK(edge_map(g) == expect);
        CHECK(g.vertices.size() == 6);
    }
}

TEST_CASE("golden figure d=3: the ladder with one branch") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 3, 8, Variant::Gamma);
        EdgeMap expect;
        for (int n = 0; n <= 5; ++n) expect[{X(n), X(n + 3)}] = 1;
        expect[{X(0), X(1)}] = 1;
        expect[{X(1), X(2)}] = 1;
        CHECK(edge_map(g) == expect);
    }
}

TEST_CASE("golden figure d=4") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 4, 10, Variant::Gamma);
        EdgeMap expect;
        for (int n = 0; n <= 6; n += 2) {
            expect[{X(n), Xp(n + 4)}] = 1;
            expect[{Xp(n), X(n + 4)}] = 1;
        }
        expect[{X(0), Xp(0)}] = q;
        expect[{X(2), Xp(2)}] = 1;
        expect[{X(0), Xp(2)}] = 1;
        expect[{Xp(0), X(2)}] = 1;
        CHECK(edge_map(g) == expect);
    }
}

TEST_CASE("golden figure d=5") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 5, 14, Variant::Gamma);
        EdgeMap expect;
        for (int n = 0; n <= 9; ++n) expect[{X(n), X(n + 5)}] = 1;
        expect[{X(0), X(1)}] = q * q;
        expect[{X(1), X(2)}] = q + 1;
        expect[{X(0), X(3)}] = 1;
        expect[{X(2), X(3)}] = 1;
        expect[{X(1), X(4)}] = 1;
        CHECK(edge_map(g) == expect);
    }
}

TEST_CASE("golden figure d=7") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 7, 20, Variant::Gamma);
        EdgeMap expect;
        for (int n = 0; n <= 13; ++n) expect[{X(n), X(n + 7)}] = 1;
        expect[{X(0), X(1)}] = q * q * q * q;
        expect[{X(1), X(2)}] = q * q * q + q * q;
        expect[{X(0), X(3)}] = q * q;
        expect[{X(2), X(3)}] = q + 1;
        expect[{X(1), X(4)}] = q + 1;
        expect[{X(0), X(5)}] = 1;
        expect[{X(2), X(5)}] = 1;
        expect[{X(3), X(4)}] = 1;
        expect[{X(1), X(6)}] = 1;
        CHECK(edge_map(g) == expect);
    }
}

TEST_CASE("d=6 follows the closed form, not the misprinted picture") {
    for (long long q : {2, 3}) {
        auto g = build_quotient(q, 6, 16, Variant::Gamma);
        EdgeMap expect;
        for (int n = 0; n <= 10; n += 2) {
            expect[{X(n), Xp(n + 6)}] = 1;
            expect[{Xp(n), X(n + 6)}] = 1;
        }
        expect[{X(0), Xp(0)}] = q * q * q - q * q + q;
        expect[{X(2), Xp(2)}] = q + 1;
        expect[{X(0), Xp(2)}] = q * q;
        expect[{Xp(0), X(2)}] = q * q;
        expect[{X(0), Xp(4)}] = 1;
        expect[{Xp(0), X(4)}] = 1;
        expect[{X(2), Xp(4)}] = 1;
        expect[{Xp(2), X(4)}] = 1;
        CHECK(edge_map(g) == expect);
    }
}

TEST_CASE("loops appear only where the closed form places them") {
    // odd degree: no loops at all; even degree: only at X_j with 2j <= d
    for (auto [q, d] : std::vector<std::pair<long long, int>>{{2, 3}, {2, 5}, {3, 7}}) {
        auto g = build_quotient(q, d, 2 * d + 2, Variant::GammaTilde);
        for (const auto& e : g.edges) CHECK(!(e.a == e.b));
    }
    for (auto [q, d] : std::vector<std::pair<long long, int>>{{2, 2}, {2, 4}, {2, 6}, {2, 8}}) {
        auto g = build_quotient(q, d, 2 * d + 2, Variant::GammaTilde);
        for (const auto& e : g.edges)
            if (e.a == e.b) CHECK(2 * e.a.n <= d);
    }
    // gamma of even degree is bipartite between primed and unprimed
    for (auto [q, d] : std::vector<std::pair<long long, int>>{{2, 2}, {3, 4}, {2, 6}}) {
        auto g = build_quotient(q, d, 2 * d, Variant::Gamma);
        for (const auto& e : g.edges) CHECK(e.a.primed != e.b.primed);
    }
}

TEST_CASE("double cover round trip") {
    for (auto [q, d] : std::vector<std::pair<long long, int>>{{2, 2}, {2, 4}, {3, 4}, {2, 6}}) {
        CAPTURE(q);
        CAPTURE(d);
        auto gt = build_quotient(q, d, 2 * d + 2, Variant::GammaTilde);
        auto g = double_cover(gt);
        CHECK(g == build_quotient(q, d, 2 * d + 2, Variant::Gamma));
        auto back = collapse_cover(g);
        CHECK(back == gt);
    }
    auto odd = build_quotient(2, 3, 8, Variant::GammaTilde);
    CHECK_THROWS_AS(double_cover(odd), std::invalid_argument);
    // odd-degree gamma equals gamma-tilde up to the variant stamp
    auto odd_gamma = build_quotient(2, 3, 8, Variant::Gamma);
    CHECK(odd_gamma.edges == odd.edges);
    CHECK(odd_gamma.vertices == odd.vertices);
}

TEST_CASE("stabilizer annotations and window handling") {
    auto g = build_quotient(3, 2, 6, Variant::Gamma);
    for (const auto& v : g.vertices) {
        CHECK(v.stabilizer_order == stabilizer_order(3, v.label.n));
        CHECK(v.stabilizer_inherited);
        CHECK(v.frontier == (v.label.n + 2 > 6));
    }
    auto gt = build_quotient(3, 3, 7, Variant::GammaTilde);
    for (const auto& v : gt.vertices) CHECK_FALSE(v.stabilizer_inherited);
    CHECK(stabilizer_order(3, 0) == 24);
    CHECK(stabilizer_order(3, 2) == 54);

    CHECK_THROWS_AS(build_quotient(2, 5, 4, Variant::Gamma), std::invalid_argument);
    CHECK_THROWS_AS(build_quotient(2, 0, 4, Variant::Gamma), std::invalid_argument);

    // every edge stays inside the window
    for (const auto& e : build_quotient(2, 4, 9, Variant::Gamma).edges) {
        CHECK(e.a.n <= 9);
        CHECK(e.b.n <= 9);
    }
    // loop-count integrality (q+1 | q^{d-3}+1) holds wherever it is used
    for (long long q : {2, 3, 4, 5})
        for (int d : {4, 6, 8}) CHECK(closed_form_multiplicity(q, d, 0, 0) > 0);
}
