#include "sposet/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sposet {

namespace {

using nlohmann::json;

std::string support_label(VertexSet s) {
    std::string lab = "f";
    vs_for_each(s, [&](int i) { lab += "_" + std::to_string(i + 1); });
    return lab;
}

}  // namespace

SimplicialPoset complex_from_facets(const std::string& name,
                                    const std::vector<std::vector<int>>& facets) {
    int n = 0;
    std::set<VertexSet> supports;
    for (const auto& facet : facets) {
        VertexSet s = 0;
        for (int v : facet) {
            if (v < 1 || v > 64) throw Error(errc::bad_input, "facet vertex out of range 1..64");
            n = std::max(n, v);
            s |= vs_bit(v - 1);
        }
        if (s == 0) throw Error(errc::bad_input, "empty facet");
        // all nonempty subsets are faces
        for (VertexSet sub = s; sub; sub = (sub - 1) & s) supports.insert(sub);
    }
    std::vector<VertexSet> faces(supports.begin(), supports.end());
    std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
        if (vs_count(a) != vs_count(b)) return vs_count(a) < vs_count(b);
        return a < b;
    });
    std::map<VertexSet, std::string> label_of;
    RawPoset raw;
    raw.name = name;
    raw.n_vertices = n;
    for (VertexSet s : faces) {
        RawFace f;
        if (vs_count(s) == 1) {
            int v = std::countr_zero(s) + 1;
            f.label = "x" + std::to_string(v);
            f.vertex = v;
        } else {
            f.label = support_label(s);
            vs_for_each(s, [&](int i) { f.covers.push_back(label_of.at(s & ~vs_bit(i))); });
        }
        label_of[s] = f.label;
        raw.faces.push_back(std::move(f));
    }
    return SimplicialPoset::validate(raw);
}

SimplicialPoset load_poset_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(errc::bad_input, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(errc::bad_input, "poset file must be a JSON object");

    if (j.contains("facets")) {
        std::vector<std::vector<int>> facets;
        for (const auto& fj : j.at("facets")) {
            std::vector<int> facet;
            for (const auto& v : fj) facet.push_back(v.get<int>());
            facets.push_back(std::move(facet));
        }
        return complex_from_facets(j.value("name", "complex"), facets);
    }

    RawPoset raw;
    raw.name = j.value("name", "poset");
    raw.n_vertices = j.value("n_vertices", -1);
    if (!j.contains("faces")) throw Error(errc::bad_input, "missing 'faces' (or 'facets') array");
    for (const auto& fj : j.at("faces")) {
        RawFace f;
        f.label = fj.at("id").get<std::string>();
        if (fj.contains("covers"))
            for (const auto& c : fj.at("covers")) f.covers.push_back(c.get<std::string>());
        f.vertex = fj.value("vertex", 0);
        raw.faces.push_back(std::move(f));
    }
    return SimplicialPoset::validate(raw);
}

SimplicialPoset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::bad_input, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_poset_json(ss.str());
}

std::string poset_to_json(const SimplicialPoset& p, bool pretty) {
    json faces = json::array();
    for (FaceId f = 1; f < p.size(); ++f) {
        json fj;
        fj["id"] = p.label(f);
        json cov = json::array();
        if (p.rank(f) > 1)
            for (FaceId c : p.covered_by(f)) cov.push_back(p.label(c));
        fj["covers"] = cov;
        if (p.rank(f) == 1) fj["vertex"] = std::countr_zero(p.support(f)) + 1;
        faces.push_back(fj);
    }
    json j;
    j["name"] = p.name();
    j["n_vertices"] = p.n_vertices();
    j["faces"] = faces;
    return pretty ? j.dump(2) : j.dump();
}

void save_poset_file(const SimplicialPoset& p, const std::string& path, bool pretty) {
    std::ofstream out(path);
    if (!out) throw Error(errc::bad_input, "cannot write '" + path + "'");
    out << poset_to_json(p, pretty) << "\n";
}

}  // namespace sposet
