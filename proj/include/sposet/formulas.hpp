#pragma once

#include <map>
#include <memory>
#include <vector>

#include "sposet/complex.hpp"
#include "sposet/face_ring.hpp"
#include "sposet/koszul.hpp"

namespace sposet {

// Closed-form graded Ext dimensions: for each face z with support B∪D, the
// reduced cohomology of [0, z_D] x (link of z restricted away from the floor
// indices), read at degree i - |supp(alpha^-)| - 1. Zero whenever some
// alpha_i < -ell or D is nonempty.
struct ExtFormulaResult {
    int ell = 1;
    MultiDegree alpha;
    enum class Vanishing { none, below_range, positive_index } vanishing = Vanishing::none;
    struct Summand {
        FaceId z;
        std::map<int, int> dims;  // by Ext degree i, already shifted
    };
    std::vector<Summand> summands;
    std::map<int, int> dims;  // by Ext degree i in 0..n

    int dim_at(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
};

template <class Fd>
ExtFormulaResult ext_formula(const SimplicialPoset& p, int ell, const MultiDegree& alpha, Fd f,
                             bool verify_positive_vanishing = false) {
    const int n = p.n_vertices();
    if (alpha.n() != n) throw Error(errc::bad_input, "alpha has the wrong length");
    ExtFormulaResult out;
    out.ell = ell;
    out.alpha = alpha;
    for (int i = 0; i <= n; ++i) out.dims[i] = 0;

    const DegreePartition part = DegreePartition::of(alpha, ell);
    if (part.below_range) {
        out.vanishing = ExtFormulaResult::Vanishing::below_range;
        return out;
    }
    const int neg_supp = vs_count(alpha.negative_part().support());
    if (vs_count(part.between) + vs_count(part.floor) != neg_supp)
        throw Error(errc::internal, "degree partition does not cover the negative support");

    if (part.positive != 0 && !verify_positive_vanishing) {
        out.vanishing = ExtFormulaResult::Vanishing::positive_index;
        return out;
    }

    for (FaceId z : p.faces_with_support(part.between | part.positive)) {
        // link of z, restricted to vertices outside the floor set
        LinkResult lk = link(p, z);
        VertexSet keep = 0;
        for (std::size_t v = 0; v < lk.atom_labels.size(); ++v)
            if (!vs_contains(part.floor, lk.atom_labels[v].first)) keep |= vs_bit(static_cast<int>(v));
        SimplicialPoset restricted = lk.poset.materialize(lk.poset.restrict_to_vertices(keep));

        // interval [0, z_D] as a poset, then the product
        FaceId zD = p.restrict_face(z, part.positive);
        OrderIdealView interval;
        interval.parent = &p;
        interval.member.assign(static_cast<std::size_t>(p.size()), 0);
        p.below(zD).for_each([&](std::size_t w) { interval.member[w] = 1; });
        SimplicialPoset interval_poset = p.materialize(interval);
        SimplicialPoset prod = product(interval_poset, restricted);

        auto link_dims = cohomology_dims(reduced_complex(prod, f));
        ExtFormulaResult::Summand s;
        s.z = z;
        for (const auto& [deg, dim] : link_dims) {
            if (dim == 0) continue;
            int i = deg + neg_supp + 1;
            s.dims[i] = dim;
            out.dims[i] += dim;
        }
        out.summands.push_back(std::move(s));
    }
    if (part.positive != 0) {
        // join with a nonempty simplex is contractible; the sum must vanish
        for (const auto& [i, dim] : out.dims)
            if (dim != 0)
                throw Error(errc::internal, "positive-index piece failed to vanish at degree " +
                                                std::to_string(i));
        out.vanishing = ExtFormulaResult::Vanishing::positive_index;
    }
    return out;
}

// Graded local cohomology piece: summands over faces whose support equals
// supp(alpha), each contributing reduced link cohomology shifted by
// |supp(alpha)| + 1; equivalently relative cohomology of (P, costar) shifted
// by 1. Both forms are computed and must agree dimension-wise.
struct LocalCohResult {
    MultiDegree alpha;
    bool vanishes = false;  // some alpha_i > 0
    struct Summand {
        FaceId w;
        std::map<int, int> link_dims;    // by i
        std::map<int, int> costar_dims;  // by i
    };
    std::vector<Summand> summands;
    std::map<int, int> dims;

    int dim_at(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
};

template <class Fd>
LocalCohResult local_cohomology(const SimplicialPoset& p, const MultiDegree& alpha, Fd f) {
    if (alpha.n() != p.n_vertices()) throw Error(errc::bad_input, "alpha has the wrong length");
    LocalCohResult out;
    out.alpha = alpha;
    for (int i = 0; i <= p.max_rank() + 1; ++i) out.dims[i] = 0;
    if (!alpha.all_nonpos()) {
        out.vanishes = true;
        return out;
    }
    const int s = vs_count(alpha.support());
    for (FaceId w : p.faces_with_support(alpha.support())) {
        LocalCohResult::Summand sm;
        sm.w = w;
        auto ldims = cohomology_dims(reduced_complex(link(p, w).poset, f));
        for (const auto& [deg, dim] : ldims)
            if (dim != 0) sm.link_dims[deg + s + 1] = dim;
        auto cdims = cohomology_dims(relative_complex(p, p.costar(w), f));
        for (const auto& [deg, dim] : cdims)
            if (dim != 0) sm.costar_dims[deg + 1] = dim;
        if (sm.link_dims != sm.costar_dims)
            throw Error(errc::internal, "link and costar forms disagree at face " + p.label(w));
        for (const auto& [i, dim] : sm.link_dims) out.dims[i] += dim;
        out.summands.push_back(std::move(sm));
    }
    return out;
}

// Both sides of the link/costar comparison for a single face.
struct LkCostCheck {
    FaceId y;
    std::map<int, int> link_side;    // dims of H~^{i-|supp y|-1}(lk y) by i
    std::map<int, int> costar_side;  // dims of H^{i-1}(P, cost y) by i
    bool equal = false;
};

template <class Fd>
LkCostCheck lk_cost_check(const SimplicialPoset& p, FaceId y, Fd f) {
    if (y == p.bottom()) throw Error(errc::bad_input, "the bottom has no costar pair");
    LkCostCheck out;
    out.y = y;
    const int s = vs_count(p.support(y));
    for (const auto& [deg, dim] : cohomology_dims(reduced_complex(link(p, y).poset, f)))
        if (dim != 0) out.link_side[deg + s + 1] = dim;
    for (const auto& [deg, dim] : cohomology_dims(relative_complex(p, p.costar(y), f)))
        if (dim != 0) out.costar_side[deg + 1] = dim;
    out.equal = out.link_side == out.costar_side;
    return out;
}

// Cached relative complexes (P, costar(w)) with their cocycle bases; the
// classification sweeps ask for the same summands over and over.
template <class Fd>
class CostarCache {
public:
    CostarCache(const SimplicialPoset& p, Fd f) : p_(&p), f_(f) {}

    struct Entry {
        CochainComplex<Fd> complex;
        BasedCohomology<Fd> based;
    };

    const Entry& get(FaceId w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return *it->second;
        auto e = std::make_unique<Entry>();
        e->complex = relative_complex(*p_, p_->costar(w), f_);
        e->based = based_cohomology(e->complex);
        return *cache_.emplace(w, std::move(e)).first->second;
    }

    const SimplicialPoset& poset() const { return *p_; }
    Fd field() const { return f_; }

private:
    const SimplicialPoset* p_;
    Fd f_;
    std::map<FaceId, std::unique_ptr<Entry>> cache_;
};

// Multiplication by x_j on local cohomology, assembled from the costar
// summands: zero when alpha_j >= 0, the identity on matched summands when
// alpha_j < -1, and the pair-inclusion maps when alpha_j = -1. Matrices are
// written in the direct-sum bases ordered by summand face id.
template <class Fd>
struct StructureMaps {
    MultiDegree alpha;
    int j = 0;
    enum class Case { zero, identity, induced_pairs } kase = Case::zero;
    std::vector<FaceId> src_summands, dst_summands;
    std::map<int, Matrix<Fd>> maps;  // by cohomological degree i
    std::map<int, int> src_dims, dst_dims;
};

template <class Fd>
StructureMaps<Fd> structure_maps(CostarCache<Fd>& cache, const MultiDegree& alpha, int j) {
    const SimplicialPoset& p = cache.poset();
    const Fd f = cache.field();
    StructureMaps<Fd> out;
    out.alpha = alpha;
    out.j = j;
    const MultiDegree gamma = alpha.plus_unit(j);
    const int top = p.max_rank() + 1;

    std::vector<FaceId> src = alpha.all_nonpos()
                                  ? p.faces_with_support(alpha.support())
                                  : std::vector<FaceId>{};
    std::vector<FaceId> dst = gamma.all_nonpos() ? p.faces_with_support(gamma.support())
                                                 : std::vector<FaceId>{};
    out.src_summands = src;
    out.dst_summands = dst;

    auto block_dims = [&](const std::vector<FaceId>& faces, int i) {
        int total = 0;
        for (FaceId w : faces) total += cache.get(w).based.dim_at(i - 1);
        return total;
    };
    for (int i = 0; i <= top; ++i) {
        out.src_dims[i] = block_dims(src, i);
        out.dst_dims[i] = block_dims(dst, i);
    }

    if (alpha[j] >= 0 || src.empty() || dst.empty()) {
        out.kase = StructureMaps<Fd>::Case::zero;
        for (int i = 0; i <= top; ++i) out.maps[i] = Matrix<Fd>(f, out.dst_dims[i], out.src_dims[i]);
        return out;
    }

    if (alpha[j] < -1) {
        // same support, same summands, same complexes
        out.kase = StructureMaps<Fd>::Case::identity;
        for (int i = 0; i <= top; ++i) out.maps[i] = Matrix<Fd>::identity(f, out.src_dims[i]);
        return out;
    }

    out.kase = StructureMaps<Fd>::Case::induced_pairs;
    for (int i = 0; i <= top; ++i) {
        Matrix<Fd> m(f, out.dst_dims[i], out.src_dims[i]);
        int col0 = 0;
        for (FaceId w : src) {
            const auto& we = cache.get(w);
            const int wdim = we.based.dim_at(i - 1);
            FaceId v = p.restrict_face(w, gamma.support());
            int row0 = 0;
            for (FaceId u : dst) {
                const auto& ue = cache.get(u);
                const int udim = ue.based.dim_at(i - 1);
                if (u == v && wdim > 0 && udim > 0) {
                    auto chain = pair_inclusion_chain_map(we.complex, ue.complex, i - 1);
                    auto block = induced_on_cohomology(chain, we.based.at(i - 1), ue.based.at(i - 1));
                    for (int r = 0; r < udim; ++r)
                        for (int c = 0; c < wdim; ++c) m.at(row0 + r, col0 + c) = block.at(r, c);
                }
                row0 += udim;
            }
            col0 += wdim;
        }
        out.maps[i] = std::move(m);
    }
    return out;
}

}  // namespace sposet
