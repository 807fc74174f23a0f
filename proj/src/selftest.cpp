#include "sposet/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "sposet/classify.hpp"
#include "sposet/fixtures.hpp"
#include "sposet/formulas.hpp"
#include "sposet/koszul.hpp"

namespace sposet {

namespace {

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < std::min(jobs, count); ++w)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : workers) t.join();
}

std::vector<MultiDegree> alpha_box(int n, int lo, int hi) {
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

template <class Fd>
int sweep_mismatches(const SimplicialPoset& p, int ell, Fd f, int jobs, int* pieces) {
    FaceRing ring(p);
    auto alphas = alpha_box(p.n_vertices(), -ell, ell);
    *pieces = static_cast<int>(alphas.size());
    std::vector<int> bad(alphas.size(), 0);
    parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
        auto oracle = ext_dims_bruteforce(ring, ell, alphas[static_cast<std::size_t>(k)], f);
        auto formula = ext_formula(p, ell, alphas[static_cast<std::size_t>(k)], f);
        for (int i = 0; i <= p.n_vertices(); ++i)
            if (oracle[i] != formula.dim_at(i)) bad[static_cast<std::size_t>(k)]++;
    });
    int total = 0;
    for (int b : bad) total += b;
    return total;
}

template <class Fd>
int stable_mismatches(const SimplicialPoset& p, Fd f, int jobs, int* pieces) {
    FaceRing ring(p);
    auto alphas = alpha_box(p.n_vertices(), -2, 0);
    *pieces = static_cast<int>(alphas.size());
    std::vector<int> bad(alphas.size(), 0);
    parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
        const MultiDegree& alpha = alphas[static_cast<std::size_t>(k)];
        int ell = 1;
        for (int i = 0; i < p.n_vertices(); ++i) ell = std::max(ell, 1 - alpha[i]);
        auto formula = ext_formula(p, ell, alpha, f);
        auto local = local_cohomology(p, alpha, f);
        for (int i = 0; i <= p.n_vertices(); ++i)
            if (formula.dim_at(i) != local.dim_at(i)) bad[static_cast<std::size_t>(k)]++;
        auto lm = level_map(ring, ell, alpha, f);
        for (const auto& [i, m] : lm.induced) {
            if (m.rows() != m.cols() || rank(m) != m.rows()) bad[static_cast<std::size_t>(k)]++;
        }
    });
    int total = 0;
    for (int b : bad) total += b;
    return total;
}

template <class Fd>
int duality_mismatches(const SimplicialPoset& p, Fd f, int* pieces) {
    int bad = 0;
    *pieces = p.size() - 1;
    for (FaceId y = 1; y < p.size(); ++y)
        if (!lk_cost_check(p, y, f).equal) ++bad;
    return bad;
}

}  // namespace

SelftestResult run_selftest(int jobs) {
    SelftestResult res;
    std::ostringstream out;
    const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::gf(2)};

    auto corpus = fixtures::corpus();
    for (const auto& p : corpus)
        out << "corpus " << p.name() << " faces=" << p.size() - 1 << " n=" << p.n_vertices()
            << " dim=" << p.dim() << "\n";

    for (const auto& p : fixtures::sweep_corpus()) {
        for (int ell = 1; ell <= 2; ++ell)
            for (const auto& fs : fields) {
                int pieces = 0;
                int bad = field_dispatch(
                    fs, [&](auto f) { return sweep_mismatches(p, ell, f, jobs, &pieces); });
                out << "sweep " << p.name() << " ell=" << ell << " field=" << fs.name()
                    << " pieces=" << pieces << " mismatches=" << bad << "\n";
                res.failures += bad;
            }
        for (const auto& fs : fields) {
            int pieces = 0;
            int bad =
                field_dispatch(fs, [&](auto f) { return stable_mismatches(p, f, jobs, &pieces); });
            out << "stable " << p.name() << " field=" << fs.name() << " alphas=" << pieces
                << " mismatches=" << bad << "\n";
            res.failures += bad;
        }
    }

    for (const auto& p : corpus)
        for (const auto& fs : fields) {
            int pieces = 0;
            int bad =
                field_dispatch(fs, [&](auto f) { return duality_mismatches(p, f, &pieces); });
            out << "duality " << p.name() << " field=" << fs.name() << " faces=" << pieces
                << " mismatches=" << bad << "\n";
            res.failures += bad;
        }

    for (const auto& p : corpus) {
        auto rep = classify(p, FieldSpec::rationals());
        out << "classify " << p.name() << " field=" << rep.field << " pure=" << rep.pure
            << " cm=" << rep.cm << " buchsbaum=" << rep.buchsbaum
            << " routes_agree=" << rep.routes_agree << "\n";
        if (!rep.routes_agree) res.failures += 1;
    }

    out << (res.failures == 0 ? "selftest ok" : "selftest FAILED") << " failures=" << res.failures
        << "\n";
    res.report = out.str();
    return res;
}

}  // namespace sposet
