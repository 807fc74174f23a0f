#include <doctest.h>

#include "helpers.hpp"
#include "sposet/face_ring.hpp"
#include "sposet/fixtures.hpp"

using namespace sposet;
using sposet::testing::alpha_box;
using sposet::testing::random_monomial;

TEST_CASE("defining relations straighten products of faces") {
    auto cone = fixtures::cone();
    FaceRing ring(cone);

    auto rel = ring.defining_relation(cone.face_by_label("x2"), cone.face_by_label("x3"));
    CHECK(rel.to_string(cone) == "e23a + e23b");

    auto rel2 = ring.defining_relation(cone.face_by_label("x1"), cone.face_by_label("e23a"));
    CHECK(rel2.to_string(cone) == "T1");

    auto ev = fixtures::edge_vertex();
    FaceRing ring_ev(ev);
    auto zero = ring_ev.defining_relation(ev.face_by_label("x3"), ev.face_by_label("f_1_2"));
    CHECK(zero.is_zero());
}

TEST_CASE("powers of a product split over minimal upper bounds") {
    auto cone = fixtures::cone();
    FaceRing ring(cone);
    FaceId x2 = cone.face_by_label("x2"), x3 = cone.face_by_label("x3");

    CHECK(ring.power_identity(x2, x3, 2).to_string(cone) == "e23a^2 + e23b^2");
    CHECK(ring.power_identity(x2, x3, 1) == ring.defining_relation(x2, x3));

    FaceId x1 = cone.face_by_label("x1"), e23a = cone.face_by_label("e23a");
    CHECK(ring.power_identity(x1, e23a, 3).to_string(cone) == "T1^3");
}

TEST_CASE("power identity equals repeated multiplication") {
    std::mt19937 rng(404);
    for (const auto& p : fixtures::corpus()) {
        if (p.size() < 2) continue;
        FaceRing ring(p);
        std::uniform_int_distribution<int> face_pick(1, p.size() - 1);
        std::uniform_int_distribution<int> q_pick(1, 4);
        for (int trial = 0; trial < 25; ++trial) {
            FaceId w = static_cast<FaceId>(face_pick(rng));
            FaceId y = static_cast<FaceId>(face_pick(rng));
            int q = q_pick(rng);
            RingElement once = ring.defining_relation(w, y);
            RingElement acc = RingElement::one();
            for (int i = 0; i < q; ++i) acc = ring.multiply(acc, once);
            CHECK(ring.power_identity(w, y, q) == acc);
        }
    }
}

TEST_CASE("vertex powers times standard monomials follow the three cases") {
    auto cone = fixtures::cone();
    FaceRing ring(cone);
    FaceId e23a = cone.face_by_label("e23a");
    FaceId t1 = cone.face_by_label("T1");
    FaceId x1 = cone.face_by_label("x1");

    auto case2 = ring.multiply_vertex_power(0, 1, StandardMonomial(cone, {{e23a, 2}}));
    CHECK(case2.to_string(cone) == "T1*e23a");

    auto case1 = ring.multiply_vertex_power(0, 2, StandardMonomial(cone, {{e23a, 1}}));
    CHECK(case1.to_string(cone) == "T1*x1");

    auto case3 = ring.multiply_vertex_power(0, 1, StandardMonomial(cone, {{t1, 1}, {x1, 1}}));
    CHECK(case3.to_string(cone) == "T1*x1^2");

    // empty bound set kills the product
    auto ev = fixtures::edge_vertex();
    FaceRing ring_ev(ev);
    auto dead = ring_ev.multiply_vertex_power(2, 1, StandardMonomial(ev, {{ev.face_by_label("f_1_2"), 1}}));
    CHECK(dead.is_zero());
}

TEST_CASE("vertex products agree with generic multiplication and land in bounds") {
    std::mt19937 rng(777);
    for (const auto& p : fixtures::corpus()) {
        if (p.size() < 2 || p.n_vertices() == 0) continue;
        FaceRing ring(p);
        std::uniform_int_distribution<int> v_pick(0, p.n_vertices() - 1);
        std::uniform_int_distribution<int> ell_pick(1, 3);
        for (int trial = 0; trial < 25; ++trial) {
            auto m = random_monomial(p, rng);
            int j = v_pick(rng);
            int ell = ell_pick(rng);
            auto direct = ring.vertex_power_times(j, ell, m);
            // every leading variable is a minimal upper bound of the pair
            auto mub = p.min_upper_bounds(p.atom(j), m.leading_variable(p.bottom()));
            for (const auto& mz : direct)
                CHECK(std::find(mub.begin(), mub.end(), mz.leading_variable(p.bottom())) != mub.end());

            RingElement via_word;
            {
                std::vector<FaceId> word(static_cast<std::size_t>(ell), p.atom(j));
                for (const auto& [f, e] : m.factors())
                    word.insert(word.end(), static_cast<std::size_t>(e), f);
                via_word = ring.normal_form_of_word(word);
            }
            CHECK(ring.multiply_vertex_power(j, ell, m) == via_word);
        }
    }
}

TEST_CASE("generic multiplication is unital, commutative, associative") {
    std::mt19937 rng(2025);
    for (const auto& p : {fixtures::cone(), fixtures::digon(), fixtures::bowtie()}) {
        FaceRing ring(p);
        for (int trial = 0; trial < 12; ++trial) {
            auto a = RingElement::monomial(random_monomial(p, rng)) +
                     RingElement::monomial(random_monomial(p, rng), 2);
            auto b = RingElement::monomial(random_monomial(p, rng), -1);
            auto c = RingElement::monomial(random_monomial(p, rng), Rational(1, 2));
            CHECK(ring.multiply(a, RingElement::one()) == a);
            CHECK(ring.multiply(a, b) == ring.multiply(b, a));
            CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
        }
    }
}

TEST_CASE("multiplication adds degrees termwise") {
    std::mt19937 rng(31337);
    for (const auto& p : {fixtures::cone(), fixtures::square()}) {
        FaceRing ring(p);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_monomial(p, rng);
            auto b = random_monomial(p, rng);
            MultiDegree want = a.degree(p);
            auto bd = b.degree(p);
            for (int i = 0; i < want.n(); ++i) want[i] += bd[i];
            auto prod = ring.multiply(RingElement::monomial(a), RingElement::monomial(b));
            for (const auto& [m, c] : prod.terms()) CHECK(m.degree(p) == want);
        }
    }
}

TEST_CASE("the two reduction orders are confluent") {
    std::mt19937 rng(515151);
    for (const auto& p : fixtures::corpus()) {
        if (p.size() < 3) continue;
        FaceRing ring(p);
        std::uniform_int_distribution<int> face_pick(1, p.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<FaceId> word;
            std::uniform_int_distribution<int> len_pick(2, 5);
            int len = len_pick(rng);
            for (int i = 0; i < len; ++i) word.push_back(static_cast<FaceId>(face_pick(rng)));
            CHECK(ring.normal_form_of_word(word, ReduceStrategy::leftmost) ==
                  ring.normal_form_of_word(word, ReduceStrategy::rightmost));
        }
    }
}

TEST_CASE("graded pieces have one monomial per face of the right support") {
    auto cone = fixtures::cone();
    FaceRing ring(cone);

    auto b111 = ring.graded_piece_basis(MultiDegree{{1, 1, 1}});
    REQUIRE(b111.size() == 2);
    CHECK(b111[0].to_string(cone) == "T1");
    CHECK(b111[1].to_string(cone) == "T2");

    auto b211 = ring.graded_piece_basis(MultiDegree{{2, 1, 1}});
    REQUIRE(b211.size() == 2);
    CHECK(b211[0].to_string(cone) == "T1*x1");
    CHECK(b211[1].to_string(cone) == "T2*x1");

    auto b0 = ring.graded_piece_basis(MultiDegree::zero(3));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].is_one());
}

TEST_CASE("Hilbert function counts faces by support") {
    for (const auto& p : fixtures::corpus()) {
        FaceRing ring(p);
        for (const auto& delta : alpha_box(p.n_vertices(), 0, 3)) {
            auto basis = ring.graded_piece_basis(delta);
            CHECK(basis.size() == p.faces_with_support(delta.support()).size());
            for (const auto& m : basis) CHECK(m.degree(p) == delta);
        }
    }
}

TEST_CASE("element parser and printer round-trip") {
    auto cone = fixtures::cone();
    FaceRing ring(cone);

    auto e = ring.parse("T1^2*x1");
    CHECK(e.to_string(cone) == "T1^2*x1");

    auto half = ring.parse("1/2*e12");
    CHECK(half.to_string(cone) == "1/2*e12");

    auto mixed = ring.parse("x2*x3 - e23b");
    CHECK(mixed.to_string(cone) == "e23a");

    auto with_unit = ring.parse("2 + T1 - 1");
    CHECK(with_unit.to_string(cone) == "1 + T1");

    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = RingElement::monomial(random_monomial(cone, rng), Rational(3, 2)) +
                 RingElement::monomial(random_monomial(cone, rng), -2);
        auto text = a.to_string(cone);
        CHECK(ring.parse(text) == a);
    }

    CHECK_THROWS_AS(ring.parse("nosuchface"), Error);
    CHECK_THROWS_AS(ring.parse("T1 +"), Error);
}
