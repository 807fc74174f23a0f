#include <doctest.h>

#include "helpers.hpp"
#include "sposet/fixtures.hpp"
#include "sposet/poset_io.hpp"

using namespace sposet;
using sposet::testing::load_fixture;

TEST_CASE("cone fixture validates with the expected shape") {
    auto p = fixtures::cone();
    CHECK(p.size() == 10);
    CHECK(p.n_vertices() == 3);
    CHECK(p.dim() == 2);
    CHECK(p.faces_of_rank(3).size() == 2);
    CHECK(p.rank(p.face_by_label("e23a")) == 2);
    CHECK(p.support(p.face_by_label("T2")) == (vs_bit(0) | vs_bit(1) | vs_bit(2)));
}

TEST_CASE("the one-point poset is the minimal valid input") {
    RawPoset raw;
    raw.name = "trivial";
    raw.n_vertices = 0;
    auto p = SimplicialPoset::validate(raw);
    CHECK(p.size() == 1);
    CHECK(p.n_vertices() == 0);
    CHECK(p.dim() == -1);
}

TEST_CASE("validation errors carry the right code and witness") {
    CHECK_THROWS_WITH_AS(load_fixture("broken_boolean"),
                         doctest::Contains("NonBoolean"), Error);
    try {
        load_fixture("broken_boolean");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_boolean);
        CHECK(e.witness() == "top");
    }

    RawPoset gap;
    gap.name = "gap";
    gap.n_vertices = 1;
    gap.faces = {{"x1", {}, 1}, {"e", {"x1"}, 0}, {"T", {"e", "x1"}, 0}};
    // T covers both e (rank 2) and x1 (rank 1): the second step skips a rank
    CHECK_THROWS_AS(SimplicialPoset::validate(gap), Error);
    try {
        SimplicialPoset::validate(gap);
    } catch (const Error& e) {
        CHECK(e.code() == errc::rank_gap);
    }

    RawPoset nobot;
    nobot.name = "nobot";
    nobot.n_vertices = 0;
    nobot.faces = {{"stray", {}, 0}};
    try {
        SimplicialPoset::validate(nobot);
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.code() == errc::no_bottom || e.code() == errc::bad_atoms));
    }

    RawPoset dup;
    dup.name = "dup";
    dup.n_vertices = 1;
    dup.faces = {{"a", {}, 1}, {"a", {}, 1}};
    CHECK_THROWS_AS(SimplicialPoset::validate(dup), Error);

    RawPoset unknown;
    unknown.name = "unknown";
    unknown.n_vertices = 1;
    unknown.faces = {{"x1", {}, 1}, {"e", {"ghost"}, 0}};
    CHECK_THROWS_AS(SimplicialPoset::validate(unknown), Error);
}

TEST_CASE("restrict_face picks the unique face of a given support") {
    auto p = fixtures::cone();
    FaceId t1 = p.face_by_label("T1");
    CHECK(p.restrict_face(t1, vs_bit(1) | vs_bit(2)) == p.face_by_label("e23a"));
    CHECK(p.restrict_face(t1, 0) == p.bottom());
    CHECK(p.restrict_face(t1, p.support(t1)) == t1);
    CHECK_THROWS_AS(p.restrict_face(p.face_by_label("e12"), vs_bit(2)), Error);
}

TEST_CASE("minimal upper bounds match the fixture geometry") {
    auto p = fixtures::cone();
    auto m23 = p.min_upper_bounds(p.face_by_label("x2"), p.face_by_label("x3"));
    REQUIRE(m23.size() == 2);
    CHECK(p.label(m23[0]) == "e23a");
    CHECK(p.label(m23[1]) == "e23b");

    auto m1e = p.min_upper_bounds(p.face_by_label("x1"), p.face_by_label("e23a"));
    REQUIRE(m1e.size() == 1);
    CHECK(p.label(m1e[0]) == "T1");

    for (FaceId y = 0; y < p.size(); ++y) {
        auto m = p.min_upper_bounds(p.bottom(), y);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == y);
    }
}

TEST_CASE("minimal upper bounds restrict uniquely inside Boolean intervals") {
    for (const auto& p : fixtures::corpus()) {
        for (FaceId w = 0; w < p.size(); ++w)
            for (FaceId y = 0; y < p.size(); ++y) {
                auto m = p.min_upper_bounds(w, y);
                for (FaceId z : m) {
                    // within [0,z] the bound with support supp(w)|supp(y) is unique
                    FaceId r = p.restrict_face(z, p.support(w) | p.support(y));
                    CHECK(r == z);
                }
            }
    }
}

TEST_CASE("link of the apex of the cone is a digon") {
    auto p = fixtures::cone();
    auto lk = link(p, p.face_by_label("x1"));
    CHECK(lk.poset.size() == 5);
    CHECK(lk.poset.n_vertices() == 2);
    CHECK(lk.poset.faces_of_rank(2).size() == 2);
    for (FaceId f : lk.poset.faces_of_rank(2))
        CHECK(vs_count(lk.poset.support(f)) == 2);
    // atom labels: one bound each over vertices 2 and 3
    REQUIRE(lk.atom_labels.size() == 2);
    CHECK(lk.atom_labels[0] == std::make_pair(1, 0));
    CHECK(lk.atom_labels[1] == std::make_pair(2, 0));
}

TEST_CASE("links re-base ranks and validate for every face") {
    for (const auto& p : fixtures::corpus()) {
        for (FaceId y = 0; y < p.size(); ++y) {
            auto lk = link(p, y);
            for (FaceId w = 0; w < lk.poset.size(); ++w) {
                FaceId parent = lk.parent_face[static_cast<std::size_t>(w)];
                CHECK(lk.poset.rank(w) + p.rank(y) == p.rank(parent));
            }
        }
    }
}

TEST_CASE("costar and vertex restrictions are downward closed") {
    auto p = fixtures::cone();
    auto cs = p.costar(p.face_by_label("x1"));
    std::vector<std::string> got;
    for (FaceId f : cs.faces()) got.push_back(p.label(f));
    CHECK(got == std::vector<std::string>{"0", "x2", "x3", "e23a", "e23b"});

    auto r0 = p.restrict_to_vertices(0);
    CHECK(r0.faces() == std::vector<FaceId>{p.bottom()});

    for (const auto& q : fixtures::corpus())
        for (FaceId y = 0; y < q.size(); ++y) {
            auto ideal = q.costar(y);
            for (FaceId f : ideal.faces())
                for (FaceId c : q.covered_by(f)) CHECK(ideal.contains(c));
        }
}

TEST_CASE("products multiply sizes and stay simplicial") {
    auto pt = fixtures::pt();
    auto digon = fixtures::digon();

    RawPoset trivial_raw;
    trivial_raw.name = "trivial";
    trivial_raw.n_vertices = 0;
    auto trivial = SimplicialPoset::validate(trivial_raw);

    auto same = product(trivial, digon);
    CHECK(same.size() == digon.size());
    CHECK(same.n_vertices() == digon.n_vertices());

    auto seg = product(pt, pt);
    CHECK(seg.size() == 4);
    CHECK(seg.n_vertices() == 2);
    CHECK(seg.faces_of_rank(2).size() == 1);

    auto cone = fixtures::cone();
    FaceId t1 = cone.face_by_label("T1");
    OrderIdealView below_x1;
    below_x1.parent = &cone;
    below_x1.member.assign(static_cast<std::size_t>(cone.size()), 0);
    cone.below(cone.face_by_label("x1")).for_each([&](std::size_t f) { below_x1.member[f] = 1; });
    auto interval = cone.materialize(below_x1);
    auto prod = product(interval, link(cone, t1).poset);
    CHECK(prod.size() == 2);

    CHECK(product(digon, pt).size() == digon.size() * 2);
}

TEST_CASE("order complexes enumerate chains") {
    auto pt = fixtures::pt();
    auto oc_pt = order_complex(pt);
    CHECK(oc_pt.size() == 2);
    CHECK(oc_pt.dim() == 0);

    auto digon = fixtures::digon();
    auto oc_digon = order_complex(digon);
    CHECK(oc_digon.size() == 9);
    CHECK(oc_digon.faces_of_rank(1).size() == 4);
    CHECK(oc_digon.faces_of_rank(2).size() == 4);

    auto cone = fixtures::cone();
    auto oc_cone = order_complex(cone);
    CHECK(oc_cone.n_vertices() == 9);
    CHECK(oc_cone.dim() == 2);
    CHECK(oc_cone.faces_of_rank(3).size() == 12);
    // total face count equals the number of chains plus the bottom
    CHECK(oc_cone.size() == 42);
}

TEST_CASE("Boolean interval counts hold corpus-wide") {
    for (const auto& p : fixtures::corpus())
        for (FaceId y = 0; y < p.size(); ++y)
            CHECK(p.below(y).count() == (std::size_t{1} << vs_count(p.support(y))));
}

TEST_CASE("poset JSON round-trips") {
    for (const auto& p : fixtures::corpus()) {
        auto back = load_poset_json(poset_to_json(p));
        CHECK(back == p);
    }
}

TEST_CASE("fixture files match the built-in corpus") {
    auto corpus = fixtures::corpus();
    for (const auto& p : corpus) {
        auto loaded = load_fixture(p.name());
        CHECK(loaded == p);
    }
}

TEST_CASE("facet form expands to the face poset") {
    auto p = load_fixture("sphere1");
    CHECK(p.size() == 7);
    CHECK(p.n_vertices() == 3);
    CHECK(p.dim() == 1);
    CHECK(p.face_by_label("f_1_2") != p.bottom());
}

TEST_CASE("materialized ideals preserve order and relabel vertices") {
    auto p = fixtures::edge_vertex();
    auto ideal = p.restrict_to_vertices(vs_bit(0) | vs_bit(1));
    std::vector<FaceId> parents;
    auto sub = p.materialize(ideal, &parents);
    CHECK(sub.n_vertices() == 2);
    CHECK(sub.size() == 4);
    CHECK(parents.size() == 4);
}
