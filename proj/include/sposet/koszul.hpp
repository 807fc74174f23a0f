#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "sposet/complex.hpp"
#include "sposet/face_ring.hpp"

namespace sposet {

// Hom-complex basis element: the subset F selecting a Koszul generator and a
// standard monomial of the matching degree. The cell label records where the
// element lands under the basis correspondence with the summand poset
// [0,z_D] x (link of z restricted away from the floor indices): summand z,
// interval part w = y_{D∩F}, and the link cell y (the leading variable).
struct HomBasisElement {
    VertexSet F = 0;
    StandardMonomial m;
    FaceId summand = 0;        // z = y_{B∪D}
    FaceId interval_part = 0;  // w = y_{D∩F}
    FaceId cell = 0;           // y = leading variable of m
};

// One graded piece Hom(K_•, A_P)_alpha with its differentials. Bases are
// sorted by (summand, interval part, cell), which groups each degree by
// summand in face order; cohomology of this complex is Ext^t in degree t.
template <class Fd>
struct HomComplexPiece {
    Fd field;
    int ell = 1;
    MultiDegree alpha;
    bool out_of_range = false;  // some alpha_i < -ell: everything vanishes
    int n = 0;
    std::vector<std::vector<HomBasisElement>> bases;  // index t = 0..n
    std::vector<Matrix<Fd>> d;                        // t -> t+1

    int dim_at(int t) const {
        if (t < 0 || t > n) return 0;
        return static_cast<int>(bases[static_cast<std::size_t>(t)].size());
    }

    bool dd_is_zero() const {
        for (int t = 0; t + 1 < static_cast<int>(d.size()); ++t)
            if (!d[static_cast<std::size_t>(t) + 1].mul(d[static_cast<std::size_t>(t)]).is_zero())
                return false;
        return true;
    }

    std::map<int, int> ext_dims() const {
        std::map<int, int> dims;
        int prev_rank = 0;
        for (int t = 0; t <= n; ++t) {
            int rk = rank(d[static_cast<std::size_t>(t)]);
            dims[t] = dim_at(t) - rk - prev_rank;
            prev_rank = rk;
        }
        return dims;
    }

    BasedCohomology<Fd> based() const {
        CochainComplex<Fd> view;
        view.field = field;
        view.min_degree = 0;
        view.bases.assign(bases.size(), {});
        for (std::size_t t = 0; t < bases.size(); ++t)
            view.bases[t].assign(bases[t].size(), 0);
        view.d = d;
        return based_cohomology(view);
    }
};

namespace detail {

inline void check_rank_equation(const SimplicialPoset& p, const HomBasisElement& e, int t,
                                int neg_supp) {
    int rank_pair = vs_count(p.support(e.interval_part)) +
                    (p.rank(e.cell) - p.rank(e.summand));
    if (rank_pair != t - neg_supp)
        throw Error(errc::internal, "hom basis element fails the rank equation");
}

}  // namespace detail

// Enumerates Hom(K_t, A_P)_alpha for all t and assembles the differential
// column by column: entry (-1)^{u_j} on (F∪{j}, m_z) for each standard
// monomial m_z in x_j^ell * m, with u_j = #{i in F : i < j}.
template <class Fd>
HomComplexPiece<Fd> hom_complex(const FaceRing& ring, int ell, const MultiDegree& alpha, Fd f) {
    const SimplicialPoset& p = ring.poset();
    const int n = p.n_vertices();
    if (alpha.n() != n) throw Error(errc::bad_input, "alpha has the wrong length");
    HomComplexPiece<Fd> piece;
    piece.field = f;
    piece.ell = ell;
    piece.alpha = alpha;
    piece.n = n;
    piece.bases.assign(static_cast<std::size_t>(n) + 1, {});

    const DegreePartition part = DegreePartition::of(alpha, ell);
    if (part.below_range) {
        piece.out_of_range = true;
        piece.d.assign(static_cast<std::size_t>(n) + 1, Matrix<Fd>(f, 0, 0));
        return piece;
    }
    const int neg_supp = vs_count(alpha.negative_part().support());

    // bases: F ⊇ supp(alpha^-) keeps the shifted degree nonnegative
    for (VertexSet F = 0; F < (VertexSet{1} << n); ++F) {
        MultiDegree delta = alpha;
        vs_for_each(F, [&](int i) { delta[i] += ell; });
        if (!delta.all_nonneg()) continue;
        const int t = vs_count(F);
        for (const StandardMonomial& m : ring.graded_piece_basis(delta)) {
            HomBasisElement e;
            e.F = F;
            e.m = m;
            e.cell = m.leading_variable(p.bottom());
            e.summand = p.restrict_face(e.cell, part.between | part.positive);
            e.interval_part = p.restrict_face(e.cell, part.positive & F);
            detail::check_rank_equation(p, e, t, neg_supp);
            piece.bases[static_cast<std::size_t>(t)].push_back(std::move(e));
        }
    }
    for (auto& basis : piece.bases)
        std::sort(basis.begin(), basis.end(), [](const HomBasisElement& a, const HomBasisElement& b) {
            if (a.summand != b.summand) return a.summand < b.summand;
            if (a.interval_part != b.interval_part) return a.interval_part < b.interval_part;
            if (a.cell != b.cell) return a.cell < b.cell;
            return a.F < b.F;
        });

    // differential
    for (int t = 0; t <= n; ++t) {
        static const std::vector<HomBasisElement> kEmpty;
        const auto& src = piece.bases[static_cast<std::size_t>(t)];
        const auto& dst = (t + 1 <= n) ? piece.bases[static_cast<std::size_t>(t) + 1] : kEmpty;
        std::map<std::pair<VertexSet, StandardMonomial>, int> row_of;
        for (std::size_t i = 0; i < dst.size(); ++i)
            row_of[{dst[i].F, dst[i].m}] = static_cast<int>(i);
        Matrix<Fd> m(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const HomBasisElement& e = src[c];
            for (int j = 0; j < n; ++j) {
                if (vs_contains(e.F, j)) continue;
                const int u = vs_count(e.F & (vs_bit(j) - 1));
                const auto sign = (u % 2 == 0) ? f.one() : f.neg(f.one());
                for (const StandardMonomial& mz : ring.vertex_power_times(j, ell, e.m)) {
                    auto it = row_of.find({e.F | vs_bit(j), mz});
                    if (it == row_of.end())
                        throw Error(errc::internal, "hom differential target missing from basis");
                    if (!f.is_zero(m.at(it->second, static_cast<int>(c))))
                        throw Error(errc::internal, "hom differential entry written twice");
                    m.at(it->second, static_cast<int>(c)) = sign;
                }
            }
        }
        piece.d.push_back(std::move(m));
    }
    return piece;
}

template <class Fd>
std::map<int, int> ext_dims_bruteforce(const FaceRing& ring, int ell, const MultiDegree& alpha,
                                       Fd f) {
    return hom_complex(ring, ell, alpha, f).ext_dims();
}

// Chain map between two pieces over the same subsets F: each basis element
// (F, m) is sent to its image ring element expanded in the target basis.
template <class Fd>
std::vector<Matrix<Fd>> hom_chain_map(const HomComplexPiece<Fd>& src,
                                      const HomComplexPiece<Fd>& dst,
                                      const std::function<RingElement(const HomBasisElement&)>& image) {
    const Fd f = src.field;
    std::vector<Matrix<Fd>> maps;
    for (int t = 0; t <= src.n; ++t) {
        const auto& sb = src.bases[static_cast<std::size_t>(t)];
        const auto& db = dst.bases[static_cast<std::size_t>(t)];
        std::map<std::pair<VertexSet, StandardMonomial>, int> row_of;
        for (std::size_t i = 0; i < db.size(); ++i) row_of[{db[i].F, db[i].m}] = static_cast<int>(i);
        Matrix<Fd> m(f, static_cast<int>(db.size()), static_cast<int>(sb.size()));
        for (std::size_t c = 0; c < sb.size(); ++c) {
            RingElement img = image(sb[c]);
            for (const auto& [mono, coeff] : img.terms()) {
                auto it = row_of.find({sb[c].F, mono});
                if (it == row_of.end())
                    throw Error(errc::internal, "chain map image missing from the target basis");
                m.at(it->second, static_cast<int>(c)) = f.from_rational(coeff);
            }
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

// Verifies T d_src = d_dst T degree by degree.
template <class Fd>
bool is_chain_map(const HomComplexPiece<Fd>& src, const HomComplexPiece<Fd>& dst,
                  const std::vector<Matrix<Fd>>& maps) {
    for (int t = 0; t < src.n; ++t) {
        auto lhs = maps[static_cast<std::size_t>(t) + 1].mul(src.d[static_cast<std::size_t>(t)]);
        auto rhs = dst.d[static_cast<std::size_t>(t)].mul(maps[static_cast<std::size_t>(t)]);
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

// The comparison map between consecutive levels: f_{F,m} goes to
// f_{F, (prod_{i in F} x_i) * m}. In the stable range it is an isomorphism.
template <class Fd>
struct LevelMapResult {
    bool stable = false;
    HomComplexPiece<Fd> src, dst;
    std::vector<Matrix<Fd>> chain;
    std::map<int, Matrix<Fd>> induced;
};

template <class Fd>
LevelMapResult<Fd> level_map(const FaceRing& ring, int ell, const MultiDegree& alpha, Fd f) {
    LevelMapResult<Fd> out;
    out.src = hom_complex(ring, ell, alpha, f);
    out.dst = hom_complex(ring, ell + 1, alpha, f);
    out.stable = true;
    for (int i = 0; i < alpha.n(); ++i)
        if (alpha[i] < 1 - ell) out.stable = false;
    out.chain = hom_chain_map<Fd>(out.src, out.dst, [&](const HomBasisElement& e) {
        RingElement cur = RingElement::monomial(e.m);
        vs_for_each(e.F, [&](int i) {
            RingElement next;
            for (const auto& [mono, coeff] : cur.terms())
                next = next + ring.multiply_vertex_power(i, 1, mono).scaled(coeff);
            cur = std::move(next);
        });
        return cur;
    });
    if (!is_chain_map(out.src, out.dst, out.chain))
        throw Error(errc::internal, "level comparison is not a chain map");
    auto src_based = out.src.based();
    auto dst_based = out.dst.based();
    for (int t = 0; t <= out.src.n; ++t)
        out.induced[t] = induced_on_cohomology(out.chain[static_cast<std::size_t>(t)],
                                               src_based.at(t), dst_based.at(t));
    return out;
}

// Multiplication by x_j: Ext_alpha -> Ext_{alpha+e_j} via f_{F,m} -> f_{F, x_j m}.
template <class Fd>
struct MultByVertexResult {
    HomComplexPiece<Fd> src, dst;
    std::vector<Matrix<Fd>> chain;
    std::map<int, Matrix<Fd>> induced;
};

template <class Fd>
MultByVertexResult<Fd> mult_by_vertex(const FaceRing& ring, int ell, const MultiDegree& alpha,
                                      int j, Fd f) {
    MultByVertexResult<Fd> out;
    out.src = hom_complex(ring, ell, alpha, f);
    out.dst = hom_complex(ring, ell, alpha.plus_unit(j), f);
    out.chain = hom_chain_map<Fd>(out.src, out.dst, [&](const HomBasisElement& e) {
        return ring.multiply_vertex_power(j, 1, e.m);
    });
    if (!is_chain_map(out.src, out.dst, out.chain))
        throw Error(errc::internal, "vertex multiplication is not a chain map");
    auto src_based = out.src.based();
    auto dst_based = out.dst.based();
    for (int t = 0; t <= out.src.n; ++t)
        out.induced[t] = induced_on_cohomology(out.chain[static_cast<std::size_t>(t)],
                                               src_based.at(t), dst_based.at(t));
    return out;
}

}  // namespace sposet
