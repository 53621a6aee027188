#include "btq/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace btq {

using nlohmann::json;

namespace {

json label_to_json(const VertexLabel& v) { return json{{"n", v.n}, {"primed", v.primed}}; }

VertexLabel label_from_json(const json& j) {
    return VertexLabel{j.at("n").get<int>(), j.at("primed").get<bool>()};
}

std::string node_id(const VertexLabel& v) {
    return "X" + std::to_string(v.n) + (v.primed ? "p" : "");
}

}  // namespace

json graph_to_json(const QuotientGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices)
        vertices.push_back({{"n", v.label.n},
                            {"primed", v.label.primed},
                            {"stabilizer_order", v.stabilizer_order},
                            {"frontier", v.frontier},
                            {"stabilizer_inherited", v.stabilizer_inherited}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(
            {{"a", label_to_json(e.a)}, {"b", label_to_json(e.b)}, {"mult", e.mult}});
    return json{{"q", g.q},
                {"d", g.d},
                {"variant", variant_name(g.variant)},
                {"window", g.window},
                {"vertices", vertices},
                {"edges", edges}};
}

QuotientGraph graph_from_json(const json& j) {
    QuotientGraph g;
    g.q = j.at("q").get<long long>();
    g.d = j.at("d").get<int>();
    g.variant = variant_from_name(j.at("variant").get<std::string>());
    g.window = j.at("window").get<int>();
    for (const auto& v : j.at("vertices")) {
        VertexInfo info;
        info.label = VertexLabel{v.at("n").get<int>(), v.at("primed").get<bool>()};
        info.stabilizer_order = v.at("stabilizer_order").get<long long>();
        info.frontier = v.at("frontier").get<bool>();
        info.stabilizer_inherited = v.value("stabilizer_inherited", false);
        g.vertices.push_back(info);
    }
    for (const auto& e : j.at("edges"))
        g.edges.push_back(
            {label_from_json(e.at("a")), label_from_json(e.at("b")), e.at("mult").get<long long>()});
    return g;
}

std::string graph_to_dot(const QuotientGraph& g) {
    std::ostringstream out;
    out << "graph quotient_q" << g.q << "_d" << g.d << " {\n";
    out << "  node [shape=circle];\n";
    for (const auto& v : g.vertices) {
        out << "  \"" << node_id(v.label) << "\" [label=\"X_" << v.label.n
            << (v.label.primed ? "'" : "") << "\"";
        if (v.frontier) out << " style=dashed";
        out << "];\n";
    }
    for (const auto& e : g.edges)
        out << "  \"" << node_id(e.a) << "\" -- \"" << node_id(e.b) << "\" [label=\"" << e.mult
            << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_ascii(const QuotientGraph& g) {
    std::ostringstream out;
    out << "quotient graph  q=" << g.q << " d=" << g.d << " variant=" << variant_name(g.variant)
        << " window=" << g.window << "\n";

    const bool even = g.d % 2 == 0;
    const bool primes = (g.variant == Variant::Gamma) && even;
    const int step = even ? 2 : 1;

    auto frontier_of = [&](VertexLabel v) {
        for (const auto& info : g.vertices)
            if (info.label == v) return info.frontier;
        return false;
    };

    std::vector<EdgeBundle> cross;
    for (const auto& e : g.edges)
        if (e.b.n - e.a.n != g.d) cross.push_back(e);

    out << "chains:\n";
    for (int r = 0; r < g.d; r += step) {
        for (int start_prime = 0; start_prime < (primes ? 2 : 1); ++start_prime) {
            out << " ";
            VertexLabel v{r, start_prime == 1};
            bool first = true;
            while (v.n <= g.window) {
                out << (first ? " " : " - ") << v.to_string();
                first = false;
                VertexLabel next{v.n + g.d, primes ? !v.primed : false};
                if (next.n > g.window) {
                    if (frontier_of(v)) out << " ...";
                    break;
                }
                v = next;
            }
            out << "\n";
        }
    }
    if (!cross.empty()) {
        out << "other bundles:\n";
        for (const auto& e : cross) {
            out << "  " << e.a.to_string() << " - " << e.b.to_string();
            if (e.mult > 1) out << "  x" << e.mult;
            out << "\n";
        }
    }
    return out.str();
}

json report_to_json(const VerificationReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json rec{{"n", p.n},
                 {"m", p.m},
                 {"upsilon_size", p.upsilon_size},
                 {"left_cosets", p.left_cosets},
                 {"double_cosets", p.double_cosets},
                 {"closed_form", p.closed_form},
                 {"match", p.match}};
        rec["size_formula"] = p.size_formula ? json(*p.size_formula) : json(nullptr);
        rec["size_match"] = p.size_match ? json(*p.size_match) : json(nullptr);
        rec["class_sizes_ok"] = p.class_sizes_ok ? json(*p.class_sizes_ok) : json(nullptr);
        if (!p.classes.empty()) {
            json cls = json::array();
            for (const auto& c : p.classes)
                cls.push_back({{"representative", c.representative}, {"size", c.size}});
            rec["classes"] = cls;
        }
        pairs.push_back(rec);
    }

    json census(nullptr);
    if (r.census) {
        census = json{{"orbit_lengths", r.census->orbit_lengths},
                      {"expected_free_orbits", r.census->expected_free_orbits},
                      {"lengths_ok", r.census->lengths_ok},
                      {"loop_observed", r.census->loop_observed},
                      {"loop_formula", r.census->loop_formula},
                      {"loop_match", r.census->loop_match}};
    }

    json regularity = json::array();
    for (const auto& reg : r.regularity)
        regularity.push_back({{"n", reg.n},
                              {"neighbor_sum", reg.neighbor_sum},
                              {"expected", reg.expected},
                              {"match", reg.match}});

    json distance(nullptr);
    if (r.distance)
        distance = json{{"singles_checked", r.distance->singles_checked},
                        {"products_checked", r.distance->products_checked},
                        {"seed", r.distance->seed},
                        {"pass", r.distance->pass}};

    return json{{"params", json{{"q", r.q},
                                {"d", r.d},
                                {"f", r.f},
                                {"window", r.window},
                                {"budget", r.budget}}},
                {"pairs", pairs},
                {"census", census},
                {"regularity", regularity},
                {"f_independence",
                 r.f_independence ? json(*r.f_independence) : json(nullptr)},
                {"distance_lemma", distance},
                {"notes", r.notes},
                {"elapsed_ms", r.elapsed_ms},
                {"pass", r.pass}};
}

}  // namespace btq
