#include "annulus/io.hpp"

#include "annulus/error.hpp"

#include <fstream>
#include <sstream>

namespace annulus::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad field '") + key + "': " + e.what());
    }
}

} // namespace

json to_json(const AnnulusInstance& inst) {
    json j;
    j["dim"] = inst.dim;
    j["r1"] = inst.r1;
    j["r2"] = inst.r2;
    j["mode"] = to_string(inst.mode);
    if (inst.mode == ArithmeticMode::ExactInteger) {
        j["scale"] = to_string(inst.lattice->scale);
        j["points"] = inst.lattice->coords;
    } else {
        j["points"] = inst.points;
    }
    return j;
}

AnnulusInstance instance_from_json(const json& j) {
    const int dim = field<int>(j, "dim");
    const double r1 = field<double>(j, "r1");
    const double r2 = field<double>(j, "r2");
    const ArithmeticMode mode = j.contains("mode") ? parse_mode(field<std::string>(j, "mode")) : ArithmeticMode::Float;
    if (mode == ArithmeticMode::ExactInteger) {
        return AnnulusInstance::from_lattice(dim, r1, r2, parse_rational(field<std::string>(j, "scale")),
                                             field<std::vector<std::vector<std::int64_t>>>(j, "points"));
    }
    return AnnulusInstance::from_points(dim, r1, r2, field<std::vector<Point>>(j, "points"));
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const auto n = field<std::size_t>(j, "n");
    const auto edges = field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "edges");
    return Graph(n, edges);
}

json to_json(const SweepColoring& col) {
    return {{"colors", col.colors}, {"tokens", col.tokens}, {"order", col.order}};
}

SweepColoring coloring_from_json(const json& j) {
    SweepColoring col;
    col.colors = field<std::vector<int>>(j, "colors");
    col.tokens = field<std::vector<std::size_t>>(j, "tokens");
    col.order = field<std::vector<std::size_t>>(j, "order");
    return col;
}

json to_json(const EmbedResult& res) {
    return {{"coords", res.coords},
            {"residual", res.residual},
            {"restart_stats", res.restart_stats},
            {"best_restart", res.best_restart},
            {"witness", res.is_witness()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const json& j, BuildOptions opts) {
    if (j.is_object() && j.contains("edges")) return graph_from_json(j);
    return build_graph(instance_from_json(j), opts);
}

} // namespace annulus::io
