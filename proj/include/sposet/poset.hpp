#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sposet/errors.hpp"
#include "sposet/util.hpp"

namespace sposet {

using FaceId = std::int32_t;

// Raw labeled Hasse diagram as it appears on disk. The bottom element is
// implicit: faces with an empty cover list must declare a vertex index
// (1-based) and become the atoms.
struct RawFace {
    std::string label;
    std::vector<std::string> covers;
    int vertex = 0;  // 1-based; 0 means none declared
};

struct RawPoset {
    std::string name;
    int n_vertices = -1;  // -1: infer from declared vertices
    std::vector<RawFace> faces;
};

class SimplicialPoset;
struct LinkResult;

// Downward-closed subset of a parent poset, stored as a membership mask.
// Used for costars, vertex restrictions, and relative cochain complexes.
struct OrderIdealView {
    const SimplicialPoset* parent = nullptr;
    std::vector<char> member;  // indexed by parent FaceId

    bool contains(FaceId f) const { return member[static_cast<std::size_t>(f)] != 0; }
    bool empty() const;
    std::vector<FaceId> faces() const;  // ascending FaceId
};

// Validated simplicial poset. Immutable after construction; every accessor
// is const and views hold read-only references or value copies.
class SimplicialPoset {
public:
    // Checks, in order: labels resolve; cover relation is acyclic; every
    // minimal element is the (implicit) bottom; cover steps raise rank by
    // exactly one; each interval [0,y] is Boolean (size 2^rk, distinct
    // supports, rk = |supp|); atoms biject with {1..n}.
    static SimplicialPoset validate(const RawPoset& raw);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int n_vertices() const { return n_; }
    FaceId bottom() const { return 0; }
    int dim() const { return max_rank_ - 1; }
    int max_rank() const { return max_rank_; }

    int rank(FaceId f) const { return rank_[static_cast<std::size_t>(f)]; }
    VertexSet support(FaceId f) const { return support_[static_cast<std::size_t>(f)]; }
    const std::string& label(FaceId f) const { return labels_[static_cast<std::size_t>(f)]; }
    FaceId face_by_label(const std::string& s) const;

    // atom for 0-based vertex index
    FaceId atom(int v) const { return atoms_[static_cast<std::size_t>(v)]; }

    bool leq(FaceId a, FaceId b) const { return below_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
    const Bitset& below(FaceId f) const { return below_[static_cast<std::size_t>(f)]; }
    const Bitset& above(FaceId f) const { return above_[static_cast<std::size_t>(f)]; }
    const std::vector<FaceId>& covered_by(FaceId f) const { return covers_[static_cast<std::size_t>(f)]; }
    const std::vector<FaceId>& faces_of_rank(int r) const;
    const std::vector<FaceId>& faces_with_support(VertexSet s) const;

    std::vector<FaceId> maximal_faces() const;

    // unique z <= y with supp(z) = B; throws BadSubset if B is not a subset
    // of supp(y)
    FaceId restrict_face(FaceId y, VertexSet B) const;

    // M(w, y): minimal common upper bounds, ascending FaceId
    std::vector<FaceId> min_upper_bounds(FaceId w, FaceId y) const;

    // maximum common lower bound; requires M(w, y) to be nonempty
    FaceId meet(FaceId w, FaceId y) const;

    OrderIdealView costar(FaceId y) const;
    OrderIdealView restrict_to_vertices(VertexSet W) const;

    // standalone poset from an order ideal (must contain the bottom);
    // face ids keep their relative order, vertices renumber ascending
    SimplicialPoset materialize(const OrderIdealView& ideal,
                                std::vector<FaceId>* parent_of = nullptr) const;

    bool operator==(const SimplicialPoset& o) const {
        return n_ == o.n_ && labels_ == o.labels_ && rank_ == o.rank_ &&
               support_ == o.support_ && covers_ == o.covers_ && atoms_ == o.atoms_;
    }

    // Shared finalizer behind every construction path: takes labels, cover
    // lists, and the vertex map with the bottom at index 0, and runs the full
    // axiom check. Raw input goes through validate() instead.
    static SimplicialPoset finish(std::string name, int n,
                                  std::vector<std::string> labels,
                                  std::vector<std::vector<FaceId>> covers,
                                  const std::vector<int>& vertex_of_face);

private:
    std::string name_;
    int n_ = 0;
    int max_rank_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> rank_;
    std::vector<VertexSet> support_;
    std::vector<std::vector<FaceId>> covers_;
    std::vector<FaceId> atoms_;  // by 0-based vertex index
    std::vector<Bitset> below_, above_;
    std::vector<std::vector<FaceId>> by_rank_;
    std::map<VertexSet, std::vector<FaceId>> by_support_;
    std::unordered_map<std::string, FaceId> by_label_;
};

// The upper set of y, re-based as a standalone simplicial poset. Link atoms
// carry labels (j, k): the k-th minimal upper bound of vertex j and the root,
// counted in parent index order. Link vertices are numbered sorted by (j, k),
// so the natural orientation on the link refines the pullback of the parent's
// vertex order.
struct LinkResult {
    SimplicialPoset poset;
    FaceId root = 0;                               // in the parent
    std::vector<FaceId> parent_face;               // link FaceId -> parent FaceId
    std::vector<std::pair<int, int>> atom_labels;  // per link vertex (0-based): (j, k), j 0-based
};

LinkResult link(const SimplicialPoset& p, FaceId y);
SimplicialPoset product(const SimplicialPoset& p, const SimplicialPoset& q);

// Face poset of the order complex of P minus its bottom: one face per chain.
// Vertices are the elements of the punctured poset in ascending FaceId order.
SimplicialPoset order_complex(const SimplicialPoset& p);

bool is_pure(const SimplicialPoset& p);

// f-vector indexed by dimension (-1 .. dim)
std::vector<int> f_vector(const SimplicialPoset& p);

std::string vertex_set_to_string(VertexSet s);

}  // namespace sposet
