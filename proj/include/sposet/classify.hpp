#pragma once

#include <string>
#include <vector>

#include "sposet/field.hpp"
#include "sposet/formulas.hpp"
#include "sposet/poset.hpp"

namespace sposet {

// Outcome of a link-vanishing sweep: the first violations found, as
// (face, degree, dimension) triples re-checkable by direct cohomology calls.
struct VanishingWitness {
    std::string face;
    int degree = 0;
    int dim = 0;
};

struct SweepResult {
    bool ok = true;
    std::vector<VanishingWitness> violations;
};

// Reduced link cohomology must vanish strictly below the link dimension,
// for every face including the bottom (whose link is the whole poset).
template <class Fd>
SweepResult link_vanishing_sweep(const SimplicialPoset& p, Fd f) {
    SweepResult out;
    for (FaceId y = 0; y < p.size(); ++y) {
        SimplicialPoset lk = link(p, y).poset;
        const int d = lk.dim();
        auto dims = cohomology_dims(reduced_complex(lk, f));
        for (const auto& [deg, dim] : dims) {
            if (deg < d && dim != 0) {
                out.ok = false;
                out.violations.push_back({p.label(y), deg, dim});
            }
        }
    }
    return out;
}

struct MapWitness {
    MultiDegree alpha;
    int j = 0;       // 1-based in reports
    int degree = 0;  // cohomological degree below dim(A_P)
};

struct ClassificationReport {
    std::string poset;
    std::string field;
    int dim = -1;  // dim(P); dim(A_P) = dim + 1
    bool pure = false;
    bool cm = false;
    bool buchsbaum = false;
    bool routes_agree = false;  // order-complex sweep vs direct poset sweep
    std::vector<VanishingWitness> cm_witnesses;         // from the order-complex route
    std::vector<VanishingWitness> buchsbaum_witnesses;  // failing vertex links
    std::vector<MapWitness> nonzero_maps_below_top;     // multiplication into i < dim(A_P)

    // 0: CM, 1: Buchsbaum only, 2: neither
    int exit_code() const { return cm ? 0 : (buchsbaum ? 1 : 2); }
};

// Scan multiplication maps x_j on local cohomology over alpha in [-2, 0]^n;
// record every nonzero map landing in cohomological degree below dim(A_P).
// Buchsbaum posets admit none; non-pure posets always produce one.
template <class Fd>
std::vector<MapWitness> socle_map_scan(const SimplicialPoset& p, Fd f) {
    std::vector<MapWitness> out;
    const int n = p.n_vertices();
    const int top = p.dim() + 1;
    CostarCache<Fd> cache(p, f);
    MultiDegree alpha = MultiDegree::zero(n);
    // iterate alpha over {-2,-1,0}^n
    while (true) {
        for (int j = 0; j < n; ++j) {
            if (alpha[j] >= 0) continue;  // zero map by construction
            auto sm = structure_maps(cache, alpha, j);
            for (const auto& [i, m] : sm.maps) {
                if (i >= top) continue;
                if (!m.is_zero()) out.push_back({alpha, j + 1, i});
            }
        }
        int k = 0;
        while (k < n) {
            alpha[k] -= 1;
            if (alpha[k] >= -2) break;
            alpha[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

template <class Fd>
ClassificationReport classify_impl(const SimplicialPoset& p, Fd f) {
    ClassificationReport rep;
    rep.poset = p.name();
    rep.field = f.name();
    rep.dim = p.dim();
    rep.pure = is_pure(p);

    SimplicialPoset oc = order_complex(p);
    SweepResult route_oc = link_vanishing_sweep(oc, f);
    SweepResult route_direct = link_vanishing_sweep(p, f);
    rep.cm = route_oc.ok;
    rep.routes_agree = route_oc.ok == route_direct.ok;
    rep.cm_witnesses = route_oc.violations;

    bool vertex_links_cm = true;
    for (FaceId v : oc.faces_of_rank(1)) {
        SimplicialPoset vlink = link(oc, v).poset;
        SweepResult r = link_vanishing_sweep(vlink, f);
        if (!r.ok) {
            vertex_links_cm = false;
            for (auto& w : r.violations)
                rep.buchsbaum_witnesses.push_back({oc.label(v) + " : " + w.face, w.degree, w.dim});
        }
    }
    rep.buchsbaum = rep.pure && vertex_links_cm;

    rep.nonzero_maps_below_top = socle_map_scan(p, f);
    if (rep.buchsbaum && !rep.nonzero_maps_below_top.empty())
        throw Error(errc::internal, "Buchsbaum verdict contradicts a nonzero multiplication map");
    if (rep.cm && !rep.buchsbaum) throw Error(errc::internal, "CM poset must be Buchsbaum");
    if (rep.buchsbaum && !rep.pure) throw Error(errc::internal, "Buchsbaum poset must be pure");
    return rep;
}

ClassificationReport classify(const SimplicialPoset& p, const FieldSpec& field);

}  // namespace sposet
