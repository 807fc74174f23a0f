#pragma once

#include <random>
#include <vector>

#include "sposet/complex.hpp"
#include "sposet/face_ring.hpp"
#include "sposet/fixtures.hpp"
#include "sposet/poset_io.hpp"

namespace sposet::testing {

inline SimplicialPoset load_fixture(const std::string& name) {
    return load_poset_file(std::string(FIXTURES_DIR) + "/" + name + ".json");
}

inline std::vector<MultiDegree> alpha_box(int n, int lo, int hi) {
    std::vector<MultiDegree> out;
    MultiDegree a = MultiDegree::zero(n);
    for (int i = 0; i < n; ++i) a[i] = lo;
    while (true) {
        out.push_back(a);
        int k = 0;
        while (k < n) {
            a[k] += 1;
            if (a[k] <= hi) break;
            a[k] = lo;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

inline Orientation random_total_orientation(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return Orientation::total_order(perm);
}

// random descending chain with small exponents
inline StandardMonomial random_monomial(const SimplicialPoset& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> face_pick(1, p.size() - 1);
    std::uniform_int_distribution<int> exp_pick(1, 3);
    std::uniform_int_distribution<int> len_pick(0, 3);
    FaceId cur = static_cast<FaceId>(face_pick(rng));
    std::vector<std::pair<FaceId, int>> factors{{cur, exp_pick(rng)}};
    int extra = len_pick(rng);
    for (int step = 0; step < extra; ++step) {
        VertexSet s = p.support(cur);
        if (s == 0) break;
        // drop a random nonempty subset of the support
        std::vector<int> verts;
        vs_for_each(s, [&](int i) { verts.push_back(i); });
        std::shuffle(verts.begin(), verts.end(), rng);
        std::uniform_int_distribution<int> drop_pick(1, static_cast<int>(verts.size()));
        int drop = drop_pick(rng);
        VertexSet keep = s;
        for (int i = 0; i < drop; ++i) keep &= ~vs_bit(verts[static_cast<std::size_t>(i)]);
        if (keep == 0) break;
        cur = p.restrict_face(cur, keep);
        factors.emplace_back(cur, exp_pick(rng));
    }
    return StandardMonomial(p, std::move(factors));
}

}  // namespace sposet::testing
