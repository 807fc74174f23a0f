#include "sposet/fixtures.hpp"

#include "sposet/poset_io.hpp"

namespace sposet::fixtures {

SimplicialPoset pt() {
    RawPoset raw;
    raw.name = "pt";
    raw.n_vertices = 1;
    raw.faces = {{"x1", {}, 1}};
    return SimplicialPoset::validate(raw);
}

SimplicialPoset sphere0() { return complex_from_facets("sphere0", {{1}, {2}}); }

SimplicialPoset digon() {
    RawPoset raw;
    raw.name = "digon";
    raw.n_vertices = 2;
    raw.faces = {
        {"x1", {}, 1},
        {"x2", {}, 2},
        {"e_a", {"x1", "x2"}, 0},
        {"e_b", {"x1", "x2"}, 0},
    };
    return SimplicialPoset::validate(raw);
}

SimplicialPoset cone() {
    RawPoset raw;
    raw.name = "cone";
    raw.n_vertices = 3;
    raw.faces = {
        {"x1", {}, 1},
        {"x2", {}, 2},
        {"x3", {}, 3},
        {"e12", {"x1", "x2"}, 0},
        {"e13", {"x1", "x3"}, 0},
        {"e23a", {"x2", "x3"}, 0},
        {"e23b", {"x2", "x3"}, 0},
        {"T1", {"e12", "e13", "e23a"}, 0},
        {"T2", {"e12", "e13", "e23b"}, 0},
    };
    return SimplicialPoset::validate(raw);
}

SimplicialPoset sphere1() { return complex_from_facets("sphere1", {{1, 2}, {1, 3}, {2, 3}}); }

SimplicialPoset sphere2() {
    return complex_from_facets("sphere2", {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

SimplicialPoset square() {
    return complex_from_facets("square", {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

SimplicialPoset bowtie() { return complex_from_facets("bowtie", {{1, 2, 3}, {3, 4, 5}}); }

SimplicialPoset edge_vertex() { return complex_from_facets("edge_vertex", {{1, 2}, {3}}); }

SimplicialPoset pinched_disk() {
    return complex_from_facets("pinched_disk", {{1, 2, 3}, {1, 2, 4}, {4, 5, 6}});
}

std::vector<SimplicialPoset> corpus() {
    return {pt(),     sphere0(), digon(),  cone(),        sphere1(),
            sphere2(), square(),  bowtie(), edge_vertex(), pinched_disk()};
}

std::vector<SimplicialPoset> sweep_corpus() {
    std::vector<SimplicialPoset> out;
    for (auto& p : corpus())
        if (p.n_vertices() <= 4 && p.size() - 1 <= 12) out.push_back(std::move(p));
    return out;
}

}  // namespace sposet::fixtures
