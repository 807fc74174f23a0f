#include "sposet/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sposet {

bool OrderIdealView::empty() const {
    for (char c : member)
        if (c) return false;
    return true;
}

std::vector<FaceId> OrderIdealView::faces() const {
    std::vector<FaceId> out;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) out.push_back(static_cast<FaceId>(i));
    return out;
}

std::string vertex_set_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    vs_for_each(s, [&](int i) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    });
    return out + "}";
}

FaceId SimplicialPoset::face_by_label(const std::string& s) const {
    auto it = by_label_.find(s);
    if (it == by_label_.end()) throw Error(errc::unknown_label, "no face labeled '" + s + "'", s);
    return it->second;
}

const std::vector<FaceId>& SimplicialPoset::faces_of_rank(int r) const {
    static const std::vector<FaceId> kEmpty;
    if (r < 0 || r > max_rank_) return kEmpty;
    return by_rank_[static_cast<std::size_t>(r)];
}

const std::vector<FaceId>& SimplicialPoset::faces_with_support(VertexSet s) const {
    static const std::vector<FaceId> kEmpty;
    auto it = by_support_.find(s);
    return it == by_support_.end() ? kEmpty : it->second;
}

std::vector<FaceId> SimplicialPoset::maximal_faces() const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < size(); ++f)
        if (above_[static_cast<std::size_t>(f)].count() == 1) out.push_back(f);
    return out;
}

FaceId SimplicialPoset::restrict_face(FaceId y, VertexSet B) const {
    if (!vs_subset(B, support(y)))
        throw Error(errc::bad_subset,
                    "vertex set " + vertex_set_to_string(B) + " is not contained in supp(" + label(y) + ")",
                    label(y));
    FaceId found = -1;
    below(y).for_each([&](std::size_t z) {
        if (support_[z] == B) found = static_cast<FaceId>(z);
    });
    if (found < 0) throw Error(errc::internal, "Boolean interval is missing a subset face");
    return found;
}

std::vector<FaceId> SimplicialPoset::min_upper_bounds(FaceId w, FaceId y) const {
    Bitset common = above(w);
    common &= above(y);
    std::vector<FaceId> out;
    common.for_each([&](std::size_t z) {
        bool minimal = true;
        below_[z].for_each([&](std::size_t v) {
            if (v != z && common.test(v)) minimal = false;
        });
        if (minimal) out.push_back(static_cast<FaceId>(z));
    });
    return out;
}

FaceId SimplicialPoset::meet(FaceId w, FaceId y) const {
    Bitset common = below(w);
    common &= below(y);
    FaceId best = bottom();
    common.for_each([&](std::size_t z) {
        if (rank_[z] > rank(best)) best = static_cast<FaceId>(z);
    });
    // the meet exists whenever w and y have an upper bound; callers only ask
    // in that situation, so every common lower bound must be below it
    common.for_each([&](std::size_t z) {
        if (!leq(static_cast<FaceId>(z), best))
            throw Error(errc::internal, "meet undefined: incomparable maximal lower bounds");
    });
    return best;
}

OrderIdealView SimplicialPoset::costar(FaceId y) const {
    OrderIdealView v;
    v.parent = this;
    v.member.assign(static_cast<std::size_t>(size()), 1);
    above(y).for_each([&](std::size_t z) { v.member[z] = 0; });
    return v;
}

OrderIdealView SimplicialPoset::restrict_to_vertices(VertexSet W) const {
    OrderIdealView v;
    v.parent = this;
    v.member.assign(static_cast<std::size_t>(size()), 0);
    for (FaceId f = 0; f < size(); ++f)
        if (vs_subset(support(f), W)) v.member[static_cast<std::size_t>(f)] = 1;
    return v;
}

SimplicialPoset SimplicialPoset::materialize(const OrderIdealView& ideal,
                                             std::vector<FaceId>* parent_of) const {
    if (ideal.parent != this) throw Error(errc::bad_input, "ideal belongs to a different poset");
    if (!ideal.contains(bottom()))
        throw Error(errc::bad_input, "cannot materialize an ideal without the bottom");
    std::vector<FaceId> members = ideal.faces();
    std::vector<FaceId> new_id(static_cast<std::size_t>(size()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) new_id[static_cast<std::size_t>(members[i])] = static_cast<FaceId>(i);

    // vertices surviving, renumbered ascending
    std::vector<int> new_vertex(static_cast<std::size_t>(n_), -1);
    int nv = 0;
    for (int v = 0; v < n_; ++v)
        if (ideal.contains(atom(v))) new_vertex[static_cast<std::size_t>(v)] = nv++;

    std::vector<std::string> labels;
    std::vector<std::vector<FaceId>> covers;
    std::vector<int> vertex_of_face;
    for (FaceId f : members) {
        labels.push_back(label(f));
        std::vector<FaceId> cov;
        for (FaceId c : covered_by(f)) {
            // downward closure: covers of a member are members
            cov.push_back(new_id[static_cast<std::size_t>(c)]);
        }
        covers.push_back(std::move(cov));
        if (rank(f) == 1)
            vertex_of_face.push_back(new_vertex[static_cast<std::size_t>(std::countr_zero(support(f)))]);
        else
            vertex_of_face.push_back(-1);
    }
    if (parent_of) *parent_of = members;
    return finish(name_ + "|ideal", nv, std::move(labels), std::move(covers), vertex_of_face);
}

SimplicialPoset SimplicialPoset::validate(const RawPoset& raw) {
    // resolve labels; implicit bottom at index 0
    std::unordered_map<std::string, FaceId> id_of;
    std::vector<std::string> labels;
    labels.push_back("0");
    id_of.emplace("0", 0);
    for (const RawFace& f : raw.faces) {
        if (f.label == "0")
            throw Error(errc::duplicate_label, "label '0' is reserved for the bottom", f.label);
        if (!id_of.emplace(f.label, static_cast<FaceId>(labels.size())).second)
            throw Error(errc::duplicate_label, "face label '" + f.label + "' appears twice", f.label);
        labels.push_back(f.label);
    }

    int n = raw.n_vertices;
    if (n < 0) {
        n = 0;
        for (const RawFace& f : raw.faces) n = std::max(n, f.vertex);
    }
    if (n > 64) throw Error(errc::bad_input, "at most 64 vertices are supported");

    std::vector<std::vector<FaceId>> covers(labels.size());
    std::vector<int> vertex_of_face(labels.size(), -1);
    for (std::size_t i = 0; i < raw.faces.size(); ++i) {
        const RawFace& f = raw.faces[i];
        FaceId id = static_cast<FaceId>(i + 1);
        if (f.covers.empty()) {
            if (f.vertex == 0)
                throw Error(errc::bad_atoms,
                            "face '" + f.label + "' covers nothing but declares no vertex", f.label);
            if (f.vertex < 1 || f.vertex > n)
                throw Error(errc::bad_atoms, "vertex index out of range on '" + f.label + "'", f.label);
            vertex_of_face[static_cast<std::size_t>(id)] = f.vertex - 1;
        } else {
            if (f.vertex != 0)
                throw Error(errc::bad_atoms, "non-atom '" + f.label + "' declares a vertex", f.label);
            for (const std::string& c : f.covers) {
                auto it = id_of.find(c);
                if (it == id_of.end())
                    throw Error(errc::unknown_label, "cover '" + c + "' of '" + f.label + "' is not a face", c);
                covers[static_cast<std::size_t>(id)].push_back(it->second);
            }
        }
    }
    return finish(raw.name, n, std::move(labels), std::move(covers), vertex_of_face);
}

SimplicialPoset SimplicialPoset::finish(std::string name, int n,
                                        std::vector<std::string> labels,
                                        std::vector<std::vector<FaceId>> covers,
                                        const std::vector<int>& vertex_of_face) {
    const std::size_t N = labels.size();
    SimplicialPoset p;
    p.name_ = std::move(name);
    p.n_ = n;
    p.labels_ = std::move(labels);
    p.covers_ = std::move(covers);

    // atoms cover the bottom implicitly
    for (std::size_t f = 1; f < N; ++f)
        if (p.covers_[f].empty()) {
            if (vertex_of_face[f] < 0)
                throw Error(errc::no_bottom,
                            "face '" + p.labels_[f] + "' is minimal but is not the bottom",
                            p.labels_[f]);
            p.covers_[f].push_back(0);
        }
    for (auto& cov : p.covers_) {
        std::sort(cov.begin(), cov.end());
        cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
    }

    // topological order over cover edges (edge: covered -> face)
    std::vector<int> indeg(N, 0);
    for (std::size_t f = 0; f < N; ++f) indeg[f] = static_cast<int>(p.covers_[f].size());
    std::vector<std::vector<FaceId>> covered_in(N);
    for (std::size_t f = 0; f < N; ++f)
        for (FaceId c : p.covers_[f]) covered_in[static_cast<std::size_t>(c)].push_back(static_cast<FaceId>(f));
    std::queue<FaceId> q;
    for (std::size_t f = 0; f < N; ++f)
        if (indeg[f] == 0) q.push(static_cast<FaceId>(f));
    std::vector<FaceId> topo;
    while (!q.empty()) {
        FaceId f = q.front();
        q.pop();
        topo.push_back(f);
        for (FaceId up : covered_in[static_cast<std::size_t>(f)])
            if (--indeg[static_cast<std::size_t>(up)] == 0) q.push(up);
    }
    if (topo.size() != N) throw Error(errc::bad_input, "cover relation has a cycle");

    // ranks: longest chain from the bottom
    p.rank_.assign(N, 0);
    for (FaceId f : topo)
        for (FaceId c : p.covers_[static_cast<std::size_t>(f)])
            p.rank_[static_cast<std::size_t>(f)] = std::max(p.rank_[static_cast<std::size_t>(f)],
                                                            p.rank_[static_cast<std::size_t>(c)] + 1);
    for (std::size_t f = 0; f < N; ++f)
        for (FaceId c : p.covers_[f])
            if (p.rank_[f] != p.rank_[static_cast<std::size_t>(c)] + 1)
                throw Error(errc::rank_gap,
                            "cover step '" + p.labels_[static_cast<std::size_t>(c)] + "' < '" + p.labels_[f] +
                                "' skips a rank",
                            p.labels_[f]);
    p.max_rank_ = 0;
    for (std::size_t f = 0; f < N; ++f) p.max_rank_ = std::max(p.max_rank_, p.rank_[f]);

    // downsets and supports
    p.below_.assign(N, Bitset(N));
    for (FaceId f : topo) {
        auto& b = p.below_[static_cast<std::size_t>(f)];
        b.set(static_cast<std::size_t>(f));
        for (FaceId c : p.covers_[static_cast<std::size_t>(f)]) b |= p.below_[static_cast<std::size_t>(c)];
    }
    p.support_.assign(N, 0);
    for (std::size_t f = 0; f < N; ++f)
        if (p.rank_[f] == 1) {
            if (vertex_of_face[f] < 0)
                throw Error(errc::bad_atoms, "rank-1 face '" + p.labels_[f] + "' declares no vertex", p.labels_[f]);
            p.support_[f] = vs_bit(vertex_of_face[f]);
        }
    for (FaceId f : topo)
        for (FaceId c : p.covers_[static_cast<std::size_t>(f)])
            p.support_[static_cast<std::size_t>(f)] |= p.support_[static_cast<std::size_t>(c)];

    // Boolean intervals, in face id order: size, distinct supports, rank = |supp|
    for (std::size_t f = 0; f < N; ++f) {
        const int rk = p.rank_[f];
        if (rk > 62) throw Error(errc::bad_input, "face rank too large");
        const std::size_t interval = p.below_[f].count();
        if (interval != (std::size_t{1} << rk))
            throw Error(errc::non_boolean,
                        "interval below '" + p.labels_[f] + "' has " + std::to_string(interval) +
                            " elements, expected 2^" + std::to_string(rk),
                        p.labels_[f]);
        std::set<VertexSet> seen;
        bool dup = false;
        p.below_[f].for_each([&](std::size_t z) {
            if (!seen.insert(p.support_[z]).second) dup = true;
        });
        if (dup)
            throw Error(errc::non_boolean,
                        "two faces below '" + p.labels_[f] + "' share a support", p.labels_[f]);
        if (vs_count(p.support_[f]) != rk)
            throw Error(errc::non_boolean,
                        "face '" + p.labels_[f] + "' has rank " + std::to_string(rk) + " but " +
                            std::to_string(vs_count(p.support_[f])) + " vertices below it",
                        p.labels_[f]);
    }

    // atoms biject with {1..n}
    p.atoms_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t f = 0; f < N; ++f) {
        if (p.rank_[f] != 1) continue;
        int v = std::countr_zero(p.support_[f]);
        if (p.atoms_[static_cast<std::size_t>(v)] != -1)
            throw Error(errc::bad_atoms, "two atoms declare vertex " + std::to_string(v + 1), p.labels_[f]);
        p.atoms_[static_cast<std::size_t>(v)] = static_cast<FaceId>(f);
    }
    for (int v = 0; v < n; ++v)
        if (p.atoms_[static_cast<std::size_t>(v)] < 0)
            throw Error(errc::bad_atoms, "vertex " + std::to_string(v + 1) + " has no atom");

    // upsets from downsets
    p.above_.assign(N, Bitset(N));
    for (std::size_t f = 0; f < N; ++f)
        p.below_[f].for_each([&](std::size_t z) { p.above_[z].set(f); });

    p.by_rank_.assign(static_cast<std::size_t>(p.max_rank_) + 1, {});
    for (std::size_t f = 0; f < N; ++f) p.by_rank_[static_cast<std::size_t>(p.rank_[f])].push_back(static_cast<FaceId>(f));
    for (std::size_t f = 0; f < N; ++f) p.by_support_[p.support_[f]].push_back(static_cast<FaceId>(f));
    for (std::size_t f = 0; f < N; ++f)
        if (!p.by_label_.emplace(p.labels_[f], static_cast<FaceId>(f)).second)
            throw Error(errc::duplicate_label, "face label '" + p.labels_[f] + "' appears twice", p.labels_[f]);
    return p;
}

LinkResult link(const SimplicialPoset& p, FaceId y) {
    LinkResult out;
    out.root = y;
    std::vector<FaceId> members;
    members.push_back(y);
    p.above(y).for_each([&](std::size_t w) {
        if (static_cast<FaceId>(w) != y) members.push_back(static_cast<FaceId>(w));
    });
    std::sort(members.begin() + 1, members.end());

    std::vector<FaceId> new_id(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) new_id[static_cast<std::size_t>(members[i])] = static_cast<FaceId>(i);

    // atoms of the link: rank(y)+1 elements above y, labeled (j, k)
    struct AtomRec {
        int j;
        int k;
        FaceId parent;
    };
    std::vector<AtomRec> atom_recs;
    for (int j = 0; j < p.n_vertices(); ++j) {
        if (vs_contains(p.support(y), j)) continue;
        std::vector<FaceId> m = p.min_upper_bounds(p.atom(j), y);
        for (std::size_t k = 0; k < m.size(); ++k)
            atom_recs.push_back(AtomRec{j, static_cast<int>(k), m[k]});
    }
    std::sort(atom_recs.begin(), atom_recs.end(), [](const AtomRec& a, const AtomRec& b) {
        return a.j != b.j ? a.j < b.j : a.k < b.k;
    });

    std::vector<int> link_vertex_of(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t v = 0; v < atom_recs.size(); ++v) {
        link_vertex_of[static_cast<std::size_t>(atom_recs[v].parent)] = static_cast<int>(v);
        out.atom_labels.emplace_back(atom_recs[v].j, atom_recs[v].k);
    }

    std::vector<std::string> labels;
    std::vector<std::vector<FaceId>> covers;
    std::vector<int> vertex_of_face;
    for (FaceId f : members) {
        labels.push_back(p.label(f));
        std::vector<FaceId> cov;
        if (f != y)
            for (FaceId c : p.covered_by(f))
                if (p.leq(y, c) && static_cast<FaceId>(c) != y) cov.push_back(new_id[static_cast<std::size_t>(c)]);
        covers.push_back(std::move(cov));
        vertex_of_face.push_back(link_vertex_of[static_cast<std::size_t>(f)]);
    }
    out.parent_face = members;
    out.poset = SimplicialPoset::finish(p.name() + "|lk(" + p.label(y) + ")",
                                        static_cast<int>(atom_recs.size()), std::move(labels),
                                        std::move(covers), vertex_of_face);
    return out;
}

SimplicialPoset product(const SimplicialPoset& p, const SimplicialPoset& q) {
    const int np = p.n_vertices(), nq = q.n_vertices();
    if (np + nq > 64) throw Error(errc::bad_input, "product exceeds the 64-vertex limit");
    std::vector<std::string> labels;
    std::vector<std::vector<FaceId>> covers;
    std::vector<int> vertex_of_face;
    auto idx = [&](FaceId a, FaceId b) { return static_cast<FaceId>(a * q.size() + b); };
    // reorder so the pair (0,0) lands at index 0: plain row-major already does
    for (FaceId a = 0; a < p.size(); ++a)
        for (FaceId b = 0; b < q.size(); ++b) {
            if (a == 0 && b == 0)
                labels.push_back("0");
            else
                labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
            std::vector<FaceId> cov;
            for (FaceId c : p.covered_by(a)) cov.push_back(idx(c, b));
            for (FaceId c : q.covered_by(b)) cov.push_back(idx(a, c));
            covers.push_back(std::move(cov));
            int v = -1;
            if (p.rank(a) == 1 && b == 0) v = std::countr_zero(p.support(a));
            if (q.rank(b) == 1 && a == 0) v = np + std::countr_zero(q.support(b));
            vertex_of_face.push_back(v);
        }
    return SimplicialPoset::finish(p.name() + "x" + q.name(), np + nq, std::move(labels),
                                   std::move(covers), vertex_of_face);
}

SimplicialPoset order_complex(const SimplicialPoset& p) {
    // elements of the punctured poset, ascending id, become vertices
    std::vector<int> vertex_index(static_cast<std::size_t>(p.size()), -1);
    for (FaceId f = 1; f < p.size(); ++f) vertex_index[static_cast<std::size_t>(f)] = static_cast<int>(f - 1);

    // a chain is a pairwise comparable subset; enumerate subsets id-sorted
    std::vector<std::vector<FaceId>> chains;
    std::vector<FaceId> cur;
    auto comparable = [&](FaceId a, FaceId b) { return p.leq(a, b) || p.leq(b, a); };
    auto dfs = [&](auto&& self, FaceId last) -> void {
        chains.push_back(cur);
        for (FaceId nxt = last + 1; nxt < p.size(); ++nxt) {
            bool ok = true;
            for (FaceId e : cur)
                if (e == nxt || !comparable(e, nxt)) ok = false;
            if (!ok) continue;
            cur.push_back(nxt);
            self(self, nxt);
            cur.pop_back();
        }
    };
    for (FaceId f = 1; f < p.size(); ++f) {
        cur = {f};
        dfs(dfs, f);
    }
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::map<std::vector<FaceId>, FaceId> id_of_chain;
    std::vector<std::string> labels;
    std::vector<std::vector<FaceId>> covers;
    std::vector<int> vertex_of_face;
    labels.push_back("0");
    covers.emplace_back();
    vertex_of_face.push_back(-1);
    for (const auto& ch : chains) {
        std::vector<FaceId> by_rank = ch;
        std::sort(by_rank.begin(), by_rank.end(),
                  [&](FaceId a, FaceId b) { return p.rank(a) < p.rank(b); });
        std::string lab;
        for (std::size_t i = 0; i < by_rank.size(); ++i) {
            if (i) lab += "|";
            lab += p.label(by_rank[i]);
        }
        FaceId id = static_cast<FaceId>(labels.size());
        id_of_chain.emplace(ch, id);
        labels.push_back(lab);
        std::vector<FaceId> cov;
        if (ch.size() > 1) {
            for (std::size_t drop = 0; drop < ch.size(); ++drop) {
                std::vector<FaceId> sub;
                for (std::size_t i = 0; i < ch.size(); ++i)
                    if (i != drop) sub.push_back(ch[i]);
                cov.push_back(id_of_chain.at(sub));
            }
            std::sort(cov.begin(), cov.end());
        }
        covers.push_back(std::move(cov));
        vertex_of_face.push_back(ch.size() == 1 ? vertex_index[static_cast<std::size_t>(ch[0])] : -1);
    }
    return SimplicialPoset::finish(p.name() + "|oc", p.size() - 1, std::move(labels),
                                   std::move(covers), vertex_of_face);
}

bool is_pure(const SimplicialPoset& p) {
    int top = -2;
    for (FaceId f : p.maximal_faces()) {
        if (top == -2) top = p.rank(f);
        if (p.rank(f) != top) return false;
    }
    return true;
}

std::vector<int> f_vector(const SimplicialPoset& p) {
    std::vector<int> out(static_cast<std::size_t>(p.max_rank()) + 1, 0);
    for (FaceId f = 0; f < p.size(); ++f) out[static_cast<std::size_t>(p.rank(f))]++;
    return out;
}

}  // namespace sposet
