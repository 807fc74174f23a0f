#pragma once

#include <map>
#include <string>
#include <vector>

#include "sposet/field.hpp"
#include "sposet/poset.hpp"

namespace sposet {

// Exponent vector in Z^n. Helpers expose the negative truncation and the
// index partition driven by a level ell: strictly-between indices
// (-ell < a_i < 0), floor indices (a_i = -ell), and positive indices.
struct MultiDegree {
    std::vector<int> a;

    static MultiDegree zero(int n) { return MultiDegree{std::vector<int>(static_cast<std::size_t>(n), 0)}; }

    int n() const { return static_cast<int>(a.size()); }
    int operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return a[static_cast<std::size_t>(i)]; }

    bool all_nonneg() const {
        for (int v : a)
            if (v < 0) return false;
        return true;
    }
    bool all_nonpos() const {
        for (int v : a)
            if (v > 0) return false;
        return true;
    }

    VertexSet support() const {
        VertexSet s = 0;
        for (int i = 0; i < n(); ++i)
            if (a[static_cast<std::size_t>(i)] != 0) s |= vs_bit(i);
        return s;
    }

    MultiDegree negative_part() const {
        MultiDegree out = *this;
        for (int& v : out.a)
            if (v > 0) v = 0;
        return out;
    }

    MultiDegree plus_unit(int i) const {
        MultiDegree out = *this;
        out.a[static_cast<std::size_t>(i)] += 1;
        return out;
    }

    bool operator==(const MultiDegree&) const = default;
    std::string to_string() const;
};

struct DegreePartition {
    VertexSet between = 0;   // -ell < a_i < 0
    VertexSet floor = 0;     // a_i = -ell
    VertexSet positive = 0;  // a_i > 0
    bool below_range = false;  // some a_i < -ell

    static DegreePartition of(const MultiDegree& alpha, int ell) {
        DegreePartition p;
        for (int i = 0; i < alpha.n(); ++i) {
            int v = alpha[i];
            if (v < -ell) p.below_range = true;
            else if (v == -ell) p.floor |= vs_bit(i);
            else if (v < 0) p.between |= vs_bit(i);
            else if (v > 0) p.positive |= vs_bit(i);
        }
        return p;
    }
};

// Product along a strictly descending chain of faces with positive
// exponents; the empty monomial is the ring unit. The bottom never appears.
class StandardMonomial {
public:
    StandardMonomial() = default;

    // factors must be strictly descending in the poset order
    StandardMonomial(const SimplicialPoset& p, std::vector<std::pair<FaceId, int>> factors);

    bool is_one() const { return factors_.empty(); }
    int length() const { return static_cast<int>(factors_.size()); }
    const std::vector<std::pair<FaceId, int>>& factors() const { return factors_; }
    FaceId leading_variable(FaceId bottom = 0) const {
        return factors_.empty() ? bottom : factors_.front().first;
    }

    MultiDegree degree(const SimplicialPoset& p) const;
    VertexSet support(const SimplicialPoset& p) const {
        return factors_.empty() ? 0 : p.support(factors_.front().first);
    }

    auto operator<=>(const StandardMonomial&) const = default;

    std::string to_string(const SimplicialPoset& p) const;

private:
    std::vector<std::pair<FaceId, int>> factors_;
};

// Finite linear combination of standard monomials with rational
// coefficients (the ASL structure constants are integers, so one exact
// coefficient domain serves every field; matrices reduce via the field).
class RingElement {
public:
    RingElement() = default;

    static RingElement zero() { return {}; }
    static RingElement one() { return monomial(StandardMonomial{}, 1); }
    static RingElement monomial(StandardMonomial m, Rational c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<StandardMonomial, Rational>& terms() const { return terms_; }

    void add_term(const StandardMonomial& m, const Rational& c);
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement scaled(const Rational& c) const;
    bool operator==(const RingElement&) const = default;

    std::string to_string(const SimplicialPoset& p) const;

private:
    std::map<StandardMonomial, Rational> terms_;
};

enum class ReduceStrategy { leftmost, rightmost };

// Face-ring arithmetic over a fixed poset. Stateless apart from the poset
// reference; all results are in normal form (standard-monomial basis).
class FaceRing {
public:
    explicit FaceRing(const SimplicialPoset& p) : p_(&p) {}

    const SimplicialPoset& poset() const { return *p_; }

    // normal form of the product w*y of two single faces
    RingElement defining_relation(FaceId w, FaceId y) const;

    // (w*y)^q expressed directly through minimal upper bounds
    RingElement power_identity(FaceId w, FaceId y, int q) const;

    // x_j^ell * m as a sum of standard monomials, one per minimal upper
    // bound of (x_j, leading variable); exact coefficients are all 1
    std::vector<StandardMonomial> vertex_power_times(int j, int ell,
                                                     const StandardMonomial& m) const;
    RingElement multiply_vertex_power(int j, int ell, const StandardMonomial& m) const;

    // general product; monomial words are straightened eagerly
    RingElement multiply(const RingElement& a, const RingElement& b,
                         ReduceStrategy strategy = ReduceStrategy::leftmost) const;
    RingElement normal_form_of_word(const std::vector<FaceId>& word,
                                    ReduceStrategy strategy = ReduceStrategy::leftmost) const;

    // one standard monomial per face whose support equals supp(delta);
    // requires delta >= 0
    std::vector<StandardMonomial> graded_piece_basis(const MultiDegree& delta) const;

    // the unique monomial of degree delta with the given leading variable
    StandardMonomial monomial_for(FaceId lead, const MultiDegree& delta) const;

    RingElement parse(const std::string& text) const;

private:
    const SimplicialPoset* p_;
};

}  // namespace sposet
