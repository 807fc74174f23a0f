#pragma once

#include <map>
#include <vector>

#include "sposet/matrix.hpp"
#include "sposet/poset.hpp"

namespace sposet {

// Partial order on vertex indices whose restriction to the support of any
// face is total. The natural order is always valid.
class Orientation {
public:
    static Orientation natural(int n) {
        Orientation o(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) o.set_less(i, j);
        return o;
    }

    // perm[k] = vertex at position k
    static Orientation total_order(const std::vector<int>& perm) {
        Orientation o(static_cast<int>(perm.size()));
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b) o.set_less(perm[a], perm[b]);
        return o;
    }

    explicit Orientation(int n) : n_(n), lt_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    void set_less(int i, int j) { lt_[static_cast<std::size_t>(i) * n_ + j] = 1; }
    bool less(int i, int j) const { return lt_[static_cast<std::size_t>(i) * n_ + j] != 0; }

    void check_valid(const SimplicialPoset& p) const;

private:
    int n_;
    std::vector<char> lt_;
};

inline void Orientation::check_valid(const SimplicialPoset& p) const {
    if (n_ < p.n_vertices())
        throw Error(errc::invalid_orientation, "orientation covers too few vertices");
    for (FaceId f = 0; f < p.size(); ++f) {
        VertexSet s = p.support(f);
        bool ok = true;
        vs_for_each(s, [&](int i) {
            vs_for_each(s, [&](int j) {
                if (i < j && !less(i, j) && !less(j, i)) ok = false;
            });
        });
        if (!ok)
            throw Error(errc::invalid_orientation,
                        "orientation is not total on supp(" + p.label(f) + ")", p.label(f));
    }
}

// Cochain complex indexed by cohomological degree. bases[k] lists the faces
// spanning degree min_degree + k; d[k] maps degree k to k + 1 and satisfies
// d∘d = 0.
template <class Fd>
struct CochainComplex {
    Fd field;
    int min_degree = -1;
    std::vector<std::vector<FaceId>> bases;
    std::vector<Matrix<Fd>> d;  // d[k]: bases[k] -> bases[k+1]; last entry maps into 0

    int degree_count() const { return static_cast<int>(bases.size()); }
    int max_degree() const { return min_degree + degree_count() - 1; }

    const Matrix<Fd>& diff(int deg) const { return d[static_cast<std::size_t>(deg - min_degree)]; }
    const std::vector<FaceId>& basis(int deg) const {
        return bases[static_cast<std::size_t>(deg - min_degree)];
    }
    int dim_at(int deg) const {
        if (deg < min_degree || deg > max_degree()) return 0;
        return static_cast<int>(basis(deg).size());
    }

    bool dd_is_zero() const {
        for (std::size_t k = 0; k + 1 < d.size(); ++k)
            if (!d[k + 1].mul(d[k]).is_zero()) return false;
        return true;
    }
};

// Coboundary column of face y: for every vertex j outside supp(y), each
// minimal upper bound z of (x_j, y) receives (-1)^{u_j} with
// u_j = #{i in supp(y) : j < i in the orientation}.
template <class Fd>
void coboundary_column(const SimplicialPoset& p, const Orientation& o, Fd f, FaceId y,
                       const std::vector<int>& row_of, Matrix<Fd>& m, int col) {
    VertexSet supp = p.support(y);
    for (int j = 0; j < p.n_vertices(); ++j) {
        if (vs_contains(supp, j)) continue;
        int u = 0;
        vs_for_each(supp, [&](int i) {
            if (o.less(j, i)) ++u;
        });
        auto sign = (u % 2 == 0) ? f.one() : f.neg(f.one());
        for (FaceId z : p.min_upper_bounds(p.atom(j), y)) {
            int row = row_of[static_cast<std::size_t>(z)];
            if (row < 0) continue;  // quotiented away (relative complex)
            if (!f.is_zero(m.at(row, col)))
                throw Error(errc::internal, "coboundary entry written twice");
            m.at(row, col) = sign;
        }
    }
}

// Reduced cochain complex of P: degree -1 is spanned by the bottom.
template <class Fd>
CochainComplex<Fd> reduced_complex(const SimplicialPoset& p, Fd f, const Orientation& o) {
    o.check_valid(p);
    CochainComplex<Fd> c;
    c.field = f;
    c.min_degree = -1;
    for (int r = 0; r <= p.max_rank(); ++r) c.bases.push_back(p.faces_of_rank(r));
    std::vector<int> row_of(static_cast<std::size_t>(p.size()), -1);
    for (const auto& basis : c.bases)
        for (std::size_t i = 0; i < basis.size(); ++i) row_of[static_cast<std::size_t>(basis[i])] = static_cast<int>(i);
    for (std::size_t k = 0; k < c.bases.size(); ++k) {
        int next = (k + 1 < c.bases.size()) ? static_cast<int>(c.bases[k + 1].size()) : 0;
        Matrix<Fd> m(f, next, static_cast<int>(c.bases[k].size()));
        if (next > 0)
            for (std::size_t i = 0; i < c.bases[k].size(); ++i)
                coboundary_column(p, o, f, c.bases[k][i], row_of, m, static_cast<int>(i));
        c.d.push_back(std::move(m));
    }
    return c;
}

template <class Fd>
CochainComplex<Fd> reduced_complex(const SimplicialPoset& p, Fd f) {
    return reduced_complex(p, f, Orientation::natural(p.n_vertices()));
}

// Relative complex of the pair (P, Q) for an order ideal Q: the quotient
// basis consists of the faces outside Q. An empty Q reproduces the reduced
// complex; a nonempty Q contains the bottom, so degree -1 vanishes.
template <class Fd>
CochainComplex<Fd> relative_complex(const SimplicialPoset& p, const OrderIdealView& q, Fd f,
                                    const Orientation& o) {
    if (q.parent != &p) throw Error(errc::bad_input, "ideal belongs to a different poset");
    for (FaceId y = 0; y < p.size(); ++y)
        if (q.contains(y))
            for (FaceId c : p.covered_by(y))
                if (!q.contains(c))
                    throw Error(errc::not_order_ideal,
                                "face '" + p.label(c) + "' is below a member but missing", p.label(c));
    o.check_valid(p);
    CochainComplex<Fd> c;
    c.field = f;
    c.min_degree = -1;
    for (int r = 0; r <= p.max_rank(); ++r) {
        std::vector<FaceId> basis;
        for (FaceId y : p.faces_of_rank(r))
            if (!q.contains(y)) basis.push_back(y);
        c.bases.push_back(std::move(basis));
    }
    std::vector<int> row_of(static_cast<std::size_t>(p.size()), -1);
    for (const auto& basis : c.bases)
        for (std::size_t i = 0; i < basis.size(); ++i) row_of[static_cast<std::size_t>(basis[i])] = static_cast<int>(i);
    for (std::size_t k = 0; k < c.bases.size(); ++k) {
        int next = (k + 1 < c.bases.size()) ? static_cast<int>(c.bases[k + 1].size()) : 0;
        Matrix<Fd> m(f, next, static_cast<int>(c.bases[k].size()));
        if (next > 0)
            for (std::size_t i = 0; i < c.bases[k].size(); ++i)
                coboundary_column(p, o, f, c.bases[k][i], row_of, m, static_cast<int>(i));
        c.d.push_back(std::move(m));
    }
    return c;
}

template <class Fd>
CochainComplex<Fd> relative_complex(const SimplicialPoset& p, const OrderIdealView& q, Fd f) {
    return relative_complex(p, q, f, Orientation::natural(p.n_vertices()));
}

// dims[deg] = dim ker d_deg - rank d_{deg-1}
template <class Fd>
std::map<int, int> cohomology_dims(const CochainComplex<Fd>& c) {
    std::map<int, int> dims;
    int prev_rank = 0;
    for (int k = 0; k < c.degree_count(); ++k) {
        const int cols = static_cast<int>(c.bases[static_cast<std::size_t>(k)].size());
        const int rk = rank(c.d[static_cast<std::size_t>(k)]);
        dims[c.min_degree + k] = cols - rk - prev_rank;
        prev_rank = rk;
    }
    return dims;
}

// Deterministically chosen cocycle bases. For each degree: the canonical
// nullspace basis of d is scanned left to right and vectors independent of
// the coboundary space are kept as representatives. coords() expresses an
// arbitrary cocycle in those representatives modulo coboundaries.
template <class Fd>
struct DegreeCohomology {
    Matrix<Fd> reps;       // chain_dim x h
    Matrix<Fd> reduction;  // [boundary basis | reps], full column rank

    int dim() const { return reps.cols(); }

    std::vector<typename Fd::Elem> coords(const std::vector<typename Fd::Elem>& v) const {
        const Fd f = reps.field();
        if (reduction.cols() == 0) {
            for (const auto& x : v)
                if (!f.is_zero(x)) throw Error(errc::internal, "nonzero cocycle in a zero group");
            return {};
        }
        auto sol = solve(reduction, v);
        if (!sol) throw Error(errc::internal, "vector is not a cocycle representative");
        std::vector<typename Fd::Elem> out(sol->end() - reps.cols(), sol->end());
        return out;
    }
};

template <class Fd>
struct BasedCohomology {
    int min_degree = -1;
    std::vector<DegreeCohomology<Fd>> degs;

    const DegreeCohomology<Fd>& at(int deg) const {
        return degs[static_cast<std::size_t>(deg - min_degree)];
    }
    bool has(int deg) const {
        return deg >= min_degree && deg < min_degree + static_cast<int>(degs.size());
    }
    int dim_at(int deg) const { return has(deg) ? at(deg).dim() : 0; }
};

template <class Fd>
BasedCohomology<Fd> based_cohomology(const CochainComplex<Fd>& c) {
    const Fd f = c.field;
    BasedCohomology<Fd> out;
    out.min_degree = c.min_degree;
    for (int k = 0; k < c.degree_count(); ++k) {
        const int chain_dim = static_cast<int>(c.bases[static_cast<std::size_t>(k)].size());
        Matrix<Fd> z = nullspace(c.d[static_cast<std::size_t>(k)]);
        std::vector<int> bnd_cols;
        Matrix<Fd> prev(f, chain_dim, 0);
        if (k > 0) {
            const Matrix<Fd>& dp = c.d[static_cast<std::size_t>(k - 1)];
            bnd_cols = rref(dp).pivot_cols;
            prev = Matrix<Fd>(f, chain_dim, static_cast<int>(bnd_cols.size()));
            for (std::size_t i = 0; i < bnd_cols.size(); ++i) prev.set_col(static_cast<int>(i), dp.col(bnd_cols[i]));
        }
        // select nullspace columns independent of the boundary span
        Matrix<Fd> probe(f, chain_dim, prev.cols() + z.cols());
        for (int i = 0; i < prev.cols(); ++i) probe.set_col(i, prev.col(i));
        for (int i = 0; i < z.cols(); ++i) probe.set_col(prev.cols() + i, z.col(i));
        std::vector<int> kept;
        for (int piv : rref(probe).pivot_cols)
            if (piv >= prev.cols()) kept.push_back(piv - prev.cols());
        DegreeCohomology<Fd> deg;
        deg.reps = Matrix<Fd>(f, chain_dim, static_cast<int>(kept.size()));
        for (std::size_t i = 0; i < kept.size(); ++i) deg.reps.set_col(static_cast<int>(i), z.col(kept[i]));
        deg.reduction = Matrix<Fd>(f, chain_dim, prev.cols() + static_cast<int>(kept.size()));
        for (int i = 0; i < prev.cols(); ++i) deg.reduction.set_col(i, prev.col(i));
        for (std::size_t i = 0; i < kept.size(); ++i)
            deg.reduction.set_col(prev.cols() + static_cast<int>(i), z.col(kept[i]));
        out.degs.push_back(std::move(deg));
    }
    return out;
}

// Matrix of the map induced on cohomology by a degree-preserving chain map,
// expressed in the deterministic bases of source and target.
template <class Fd>
Matrix<Fd> induced_on_cohomology(const Matrix<Fd>& chain_map, const DegreeCohomology<Fd>& src,
                                 const DegreeCohomology<Fd>& dst) {
    const Fd f = chain_map.field();
    Matrix<Fd> out(f, dst.dim(), src.dim());
    for (int k = 0; k < src.dim(); ++k) {
        auto image = chain_map.apply(src.reps.col(k));
        auto coords = dst.coords(image);
        for (int r = 0; r < dst.dim(); ++r) out.at(r, k) = coords[static_cast<std::size_t>(r)];
    }
    return out;
}

// Chain-level projection C(P,Q2) -> C(P,Q1) for nested ideals Q1 ⊆ Q2,
// inducing H(P,Q2) -> H(P,Q1) (restriction of relative cochains).
template <class Fd>
Matrix<Fd> pair_inclusion_chain_map(const CochainComplex<Fd>& from_q2,
                                    const CochainComplex<Fd>& to_q1, int deg) {
    const Fd f = from_q2.field;
    const auto& src = from_q2.basis(deg);
    const auto& dst = to_q1.basis(deg);
    Matrix<Fd> m(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
    std::map<FaceId, int> row;
    for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto it = row.find(src[j]);
        if (it == row.end())
            throw Error(errc::not_nested, "relative basis face missing from the larger pair");
        m.at(it->second, static_cast<int>(j)) = f.one();
    }
    return m;
}

}  // namespace sposet
