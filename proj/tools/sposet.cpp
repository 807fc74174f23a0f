// Command-line surface for the simplicial poset toolkit. Output is JSON on
// stdout, deterministic for fixed (input, flags, field). Exit codes:
//   0 success (classify: Cohen-Macaulay), 1 classify: Buchsbaum only or
//   --both mismatch, 2 classify: neither, 3 module error, 4 unexpected error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sposet/classify.hpp"
#include "sposet/fixtures.hpp"
#include "sposet/formulas.hpp"
#include "sposet/koszul.hpp"
#include "sposet/poset_io.hpp"
#include "sposet/selftest.hpp"

using nlohmann::json;
using namespace sposet;

namespace {

struct GlobalOpts {
    std::string field = "Q";
    bool pretty = false;
    int jobs = 1;
    std::string output;
};

void emit(const GlobalOpts& g, const json& j) {
    std::string text = g.pretty ? j.dump(2) : j.dump();
    if (g.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(g.output);
        if (!out) throw Error(errc::bad_input, "cannot write '" + g.output + "'");
        out << text << "\n";
    }
}

MultiDegree parse_alpha(const std::string& s, int n) {
    MultiDegree a = MultiDegree::zero(n);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            a[i] = std::stoi(tok);
        } catch (...) {
            throw Error(errc::bad_input, "bad degree entry '" + tok + "'");
        }
        if (next == std::string::npos) {
            if (i + 1 != n)
                throw Error(errc::bad_input, "degree needs " + std::to_string(n) + " entries");
            return a;
        }
        pos = next + 1;
    }
    throw Error(errc::bad_input, "degree has too many entries");
}

json dims_json(const std::map<int, int>& dims) {
    json out = json::object();
    for (const auto& [deg, dim] : dims) out[std::to_string(deg)] = dim;
    return out;
}

json ext_labels_json(const SimplicialPoset& p, int ell, const MultiDegree& alpha) {
    // labels are field independent; enumerate once over GF(2)
    FaceRing ring(p);
    auto piece = hom_complex(ring, ell, alpha, PrimeField{2});
    json out = json::array();
    for (int t = 0; t <= piece.n; ++t) {
        json level = json::array();
        for (const auto& e : piece.bases[static_cast<std::size_t>(t)]) {
            json el;
            json fset = json::array();
            vs_for_each(e.F, [&](int i) { fset.push_back(i + 1); });
            el["F"] = fset;
            el["m"] = e.m.to_string(p);
            el["z"] = p.label(e.summand);
            el["w"] = p.label(e.interval_part);
            el["y"] = p.label(e.cell);
            level.push_back(el);
        }
        out.push_back(level);
    }
    return out;
}

int cmd_validate(const GlobalOpts& g, const std::string& path) {
    SimplicialPoset p = load_poset_file(path);
    json j;
    j["ok"] = true;
    j["name"] = p.name();
    j["faces"] = p.size() - 1;
    j["n_vertices"] = p.n_vertices();
    j["dim"] = p.dim();
    emit(g, j);
    return 0;
}

int cmd_info(const GlobalOpts& g, const std::string& path) {
    SimplicialPoset p = load_poset_file(path);
    json j;
    j["name"] = p.name();
    j["n_vertices"] = p.n_vertices();
    j["faces"] = p.size() - 1;
    j["dim"] = p.dim();
    j["pure"] = is_pure(p);
    json fv = json::array();
    for (int c : f_vector(p)) fv.push_back(c);
    j["f_vector"] = fv;
    emit(g, j);
    return 0;
}

int cmd_cohomology(const GlobalOpts& g, const std::string& path, const std::string& rel_face) {
    SimplicialPoset p = load_poset_file(path);
    FieldSpec fs = FieldSpec::parse(g.field);
    auto dims = field_dispatch(fs, [&](auto f) {
        if (rel_face.empty()) return cohomology_dims(reduced_complex(p, f));
        FaceId y = p.face_by_label(rel_face);
        return cohomology_dims(relative_complex(p, p.costar(y), f));
    });
    json j;
    j["dims"] = dims_json(dims);
    j["field"] = fs.name();
    if (!rel_face.empty()) j["relative_to_costar_of"] = rel_face;
    emit(g, j);
    return 0;
}

int cmd_subposet(const GlobalOpts& g, const std::string& path, const std::string& face,
                 const std::string& kind) {
    SimplicialPoset p = load_poset_file(path);
    FaceId y = p.face_by_label(face);
    SimplicialPoset sub = [&] {
        if (kind == "link") return link(p, y).poset;
        return p.materialize(p.costar(y));
    }();
    if (g.output.empty())
        std::cout << poset_to_json(sub, g.pretty) << "\n";
    else
        save_poset_file(sub, g.output, g.pretty);
    return 0;
}

int cmd_order_complex(const GlobalOpts& g, const std::string& path) {
    SimplicialPoset p = load_poset_file(path);
    SimplicialPoset oc = order_complex(p);
    if (g.output.empty())
        std::cout << poset_to_json(oc, g.pretty) << "\n";
    else
        save_poset_file(oc, g.output, g.pretty);
    return 0;
}

int cmd_hilbert(const GlobalOpts& g, const std::string& path, const std::string& delta_str) {
    SimplicialPoset p = load_poset_file(path);
    MultiDegree delta = parse_alpha(delta_str, p.n_vertices());
    FaceRing ring(p);
    auto basis = ring.graded_piece_basis(delta);
    json j;
    json d = json::array();
    for (int i = 0; i < delta.n(); ++i) d.push_back(delta[i]);
    j["delta"] = d;
    j["dim"] = basis.size();
    json b = json::array();
    for (const auto& m : basis) b.push_back(m.to_string(p));
    j["basis"] = b;
    emit(g, j);
    return 0;
}

int cmd_mult(const GlobalOpts& g, const std::string& path, const std::string& expr) {
    SimplicialPoset p = load_poset_file(path);
    FaceRing ring(p);
    RingElement e = ring.parse(expr);
    json j;
    j["input"] = expr;
    j["normal_form"] = e.to_string(p);
    emit(g, j);
    return 0;
}

int cmd_ext(const GlobalOpts& g, const std::string& path, int ell, const std::string& alpha_str,
            const std::string& mode, bool with_labels) {
    SimplicialPoset p = load_poset_file(path);
    MultiDegree alpha = parse_alpha(alpha_str, p.n_vertices());
    FieldSpec fs = FieldSpec::parse(g.field);
    json j;
    json av = json::array();
    for (int i = 0; i < alpha.n(); ++i) av.push_back(alpha[i]);
    j["alpha"] = av;
    j["ell"] = ell;
    j["field"] = fs.name();
    bool match = true;
    field_dispatch(fs, [&](auto f) {
        if (mode == "oracle" || mode == "both") {
            FaceRing ring(p);
            j["ext"] = dims_json(ext_dims_bruteforce(ring, ell, alpha, f));
        }
        if (mode == "formula" || mode == "both") {
            auto res = ext_formula(p, ell, alpha, f);
            json fj;
            fj["dims"] = dims_json(res.dims);
            json summands = json::array();
            for (const auto& s : res.summands) {
                json sj;
                sj["z"] = p.label(s.z);
                sj["dims"] = dims_json(s.dims);
                summands.push_back(sj);
            }
            fj["summands"] = summands;
            j["formula"] = fj;
            if (mode == "formula") j["ext"] = dims_json(res.dims);
        }
        if (mode == "both") {
            for (const auto& [k, v] : j["formula"]["dims"].items())
                if (j["ext"].value(k, 0) != v.template get<int>()) match = false;
            for (const auto& [k, v] : j["ext"].items())
                if (j["formula"]["dims"].value(k, 0) != v.template get<int>()) match = false;
            j["match"] = match;
        }
        return 0;
    });
    if (with_labels) j["labels"] = ext_labels_json(p, ell, alpha);
    emit(g, j);
    return (mode == "both" && !match) ? 1 : 0;
}

int cmd_localcoh(const GlobalOpts& g, const std::string& path, const std::string& alpha_str) {
    SimplicialPoset p = load_poset_file(path);
    MultiDegree alpha = parse_alpha(alpha_str, p.n_vertices());
    FieldSpec fs = FieldSpec::parse(g.field);
    auto res = field_dispatch(fs, [&](auto f) { return local_cohomology(p, alpha, f); });
    json j;
    json av = json::array();
    for (int i = 0; i < alpha.n(); ++i) av.push_back(alpha[i]);
    j["alpha"] = av;
    j["field"] = fs.name();
    j["local_cohomology"] = dims_json(res.dims);
    json summands = json::array();
    for (const auto& s : res.summands) {
        json sj;
        sj["face"] = p.label(s.w);
        sj["dims"] = dims_json(s.link_dims);
        summands.push_back(sj);
    }
    j["summands"] = summands;
    emit(g, j);
    return 0;
}

int cmd_structure_map(const GlobalOpts& g, const std::string& path, const std::string& alpha_str,
                      int jv) {
    SimplicialPoset p = load_poset_file(path);
    MultiDegree alpha = parse_alpha(alpha_str, p.n_vertices());
    if (jv < 1 || jv > p.n_vertices()) throw Error(errc::bad_input, "vertex index out of range");
    FieldSpec fs = FieldSpec::parse(g.field);
    json j;
    json av = json::array();
    for (int i = 0; i < alpha.n(); ++i) av.push_back(alpha[i]);
    j["alpha"] = av;
    j["j"] = jv;
    j["field"] = fs.name();
    field_dispatch(fs, [&](auto f) {
        CostarCache cache(p, f);
        auto sm = structure_maps(cache, alpha, jv - 1);
        using Case = typename std::remove_reference_t<decltype(sm)>::Case;
        j["case"] = sm.kase == Case::zero        ? "zero"
                    : sm.kase == Case::identity  ? "identity"
                                                 : "induced_pairs";
        json src = json::array(), dst = json::array();
        for (FaceId w : sm.src_summands) src.push_back(p.label(w));
        for (FaceId w : sm.dst_summands) dst.push_back(p.label(w));
        j["source_summands"] = src;
        j["target_summands"] = dst;
        json maps = json::object();
        for (const auto& [i, m] : sm.maps) {
            if (m.rows() == 0 && m.cols() == 0) continue;
            json mj;
            mj["rows"] = m.rows();
            mj["cols"] = m.cols();
            json entries = json::array();
            for (int r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < m.cols(); ++c) row.push_back(f.to_string(m.at(r, c)));
                entries.push_back(row);
            }
            mj["entries"] = entries;
            maps[std::to_string(i)] = mj;
        }
        j["maps"] = maps;
        return 0;
    });
    emit(g, j);
    return 0;
}

int cmd_classify(const GlobalOpts& g, const std::string& path) {
    SimplicialPoset p = load_poset_file(path);
    FieldSpec fs = FieldSpec::parse(g.field);
    ClassificationReport rep = classify(p, fs);
    json j;
    j["name"] = rep.poset;
    j["field"] = rep.field;
    j["dim"] = rep.dim;
    j["pure"] = rep.pure;
    j["cm"] = rep.cm;
    j["buchsbaum"] = rep.buchsbaum;
    j["routes_agree"] = rep.routes_agree;
    auto witness_json = [](const std::vector<VanishingWitness>& ws) {
        json out = json::array();
        for (const auto& w : ws) {
            json wj;
            wj["face"] = w.face;
            wj["degree"] = w.degree;
            wj["dim"] = w.dim;
            out.push_back(wj);
        }
        return out;
    };
    j["cm_witnesses"] = witness_json(rep.cm_witnesses);
    j["buchsbaum_witnesses"] = witness_json(rep.buchsbaum_witnesses);
    json maps = json::array();
    for (const auto& w : rep.nonzero_maps_below_top) {
        json wj;
        json av = json::array();
        for (int i = 0; i < w.alpha.n(); ++i) av.push_back(w.alpha[i]);
        wj["alpha"] = av;
        wj["j"] = w.j;
        wj["i"] = w.degree;
        maps.push_back(wj);
    }
    j["nonzero_maps_below_top"] = maps;
    emit(g, j);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic invariants of simplicial posets and their face rings"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    const char* env_field = std::getenv("SPOSET_FIELD");
    if (env_field) g.field = env_field;
    app.add_option("--field", g.field, "coefficient field: Q or GF(p)")->capture_default_str();
    app.add_flag("--pretty", g.pretty, "indent JSON output");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps")->capture_default_str();
    app.add_option("-o,--output", g.output, "write output to a file instead of stdout");

    std::string input, face, alpha, delta, expr, mode = "both";
    int ell = 1, jv = 1;
    bool with_labels = false;

    auto* validate = app.add_subcommand("validate", "check the simplicial poset axioms");
    validate->add_option("input", input)->required();

    auto* info = app.add_subcommand("info", "f-vector, dimension, purity");
    info->add_option("input", input)->required();

    auto* coh = app.add_subcommand("cohomology", "reduced or relative cohomology dimensions");
    coh->add_option("input", input)->required();
    coh->add_option("--relative", face, "relative to the costar of this face");

    auto* lnk = app.add_subcommand("link", "emit the link of a face as a poset file");
    lnk->add_option("input", input)->required();
    lnk->add_option("--face", face)->required();

    auto* cst = app.add_subcommand("costar", "emit the costar of a face as a poset file");
    cst->add_option("input", input)->required();
    cst->add_option("--face", face)->required();

    auto* oc = app.add_subcommand("order-complex", "emit the order complex as a poset file");
    oc->add_option("input", input)->required();

    auto* hil = app.add_subcommand("hilbert", "standard monomial basis of one graded piece");
    hil->add_option("input", input)->required();
    hil->add_option("--delta", delta, "comma-separated exponents")->required();

    auto* mult = app.add_subcommand("mult", "normal form of a face-ring expression");
    mult->add_option("input", input)->required();
    mult->add_option("expr", expr)->required();

    auto* ext = app.add_subcommand("ext", "graded Ext dimensions");
    ext->add_option("input", input)->required();
    ext->add_option("--ell", ell, "power of the vertex ideal")->required();
    ext->add_option("--alpha", alpha, "comma-separated degree")->required();
    bool f_oracle = false, f_formula = false, f_both = false;
    ext->add_flag("--oracle", f_oracle, "Koszul brute force only");
    ext->add_flag("--formula", f_formula, "closed formula only");
    ext->add_flag("--both", f_both, "compute both and compare (default)");
    ext->add_flag("--labels", with_labels, "include the hom-complex basis labels");

    auto* lc = app.add_subcommand("localcoh", "graded local cohomology dimensions");
    lc->add_option("input", input)->required();
    lc->add_option("--alpha", alpha)->required();

    auto* smc = app.add_subcommand("structure-map", "multiplication maps on local cohomology");
    smc->add_option("input", input)->required();
    smc->add_option("--alpha", alpha)->required();
    smc->add_option("--j", jv, "vertex index (1-based)")->required();

    auto* cls = app.add_subcommand("classify", "Cohen-Macaulay / Buchsbaum classification");
    cls->add_option("input", input)->required();

    auto* st = app.add_subcommand("selftest", "oracle-equivalence sweep on the bundled corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(g, input);
        if (info->parsed()) return cmd_info(g, input);
        if (coh->parsed()) return cmd_cohomology(g, input, face);
        if (lnk->parsed()) return cmd_subposet(g, input, face, "link");
        if (cst->parsed()) return cmd_subposet(g, input, face, "costar");
        if (oc->parsed()) return cmd_order_complex(g, input);
        if (hil->parsed()) return cmd_hilbert(g, input, delta);
        if (mult->parsed()) return cmd_mult(g, input, expr);
        if (ext->parsed()) {
            if (f_oracle) mode = "oracle";
            else if (f_formula) mode = "formula";
            else mode = "both";
            return cmd_ext(g, input, ell, alpha, mode, with_labels);
        }
        if (lc->parsed()) return cmd_localcoh(g, input, alpha);
        if (smc->parsed()) return cmd_structure_map(g, input, alpha, jv);
        if (cls->parsed()) return cmd_classify(g, input);
        if (st->parsed()) {
            auto res = run_selftest(g.jobs);
            std::cout << res.report;
            return res.failures == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        json j;
        j["error"]["code"] = errc_name(e.code());
        j["error"]["message"] = e.what();
        if (!e.witness().empty()) j["error"]["witness"] = e.witness();
        std::cout << j.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        json j;
        j["error"]["code"] = "Unexpected";
        j["error"]["message"] = e.what();
        std::cout << j.dump() << "\n";
        return 4;
    }
    return 0;
}
