#include "sposet/face_ring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace sposet {

std::string MultiDegree::to_string() const {
    std::string out = "(";
    for (int i = 0; i < n(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

StandardMonomial::StandardMonomial(const SimplicialPoset& p,
                                   std::vector<std::pair<FaceId, int>> factors)
    : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second < 1) throw Error(errc::bad_input, "monomial exponent must be positive");
        if (factors_[i].first == p.bottom())
            throw Error(errc::bad_input, "the bottom is the ring unit and cannot appear in a monomial");
        if (i + 1 < factors_.size()) {
            FaceId hi = factors_[i].first, lo = factors_[i + 1].first;
            if (!(p.leq(lo, hi) && lo != hi))
                throw Error(errc::bad_input,
                            "monomial factors must form a strictly descending chain: '" + p.label(hi) +
                                "' vs '" + p.label(lo) + "'");
        }
    }
}

MultiDegree StandardMonomial::degree(const SimplicialPoset& p) const {
    MultiDegree d = MultiDegree::zero(p.n_vertices());
    for (const auto& [face, exp] : factors_)
        vs_for_each(p.support(face), [&](int i) { d[i] += exp; });
    return d;
}

std::string StandardMonomial::to_string(const SimplicialPoset& p) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += "*";
        out += p.label(factors_[i].first);
        if (factors_[i].second > 1) out += "^" + std::to_string(factors_[i].second);
    }
    return out;
}

RingElement RingElement::monomial(StandardMonomial m, Rational c) {
    RingElement e;
    if (c != 0) e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

void RingElement::add_term(const StandardMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

RingElement RingElement::scaled(const Rational& c) const {
    RingElement out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

std::string RingElement::to_string(const SimplicialPoset& p) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (abs_c != 1 || m.is_one()) {
            out += abs_c.str();
            if (!m.is_one()) out += "*";
        }
        if (!m.is_one()) out += m.to_string(p);
        first = false;
    }
    return out;
}

namespace {

// word = flat sequence of faces, product left to right
using Word = std::vector<FaceId>;

StandardMonomial compress(const SimplicialPoset& p, const Word& w) {
    std::vector<std::pair<FaceId, int>> factors;
    for (FaceId f : w) {
        if (f == p.bottom()) continue;
        if (!factors.empty() && factors.back().first == f)
            factors.back().second++;
        else
            factors.emplace_back(f, 1);
    }
    return StandardMonomial(p, std::move(factors));
}

}  // namespace

RingElement FaceRing::normal_form_of_word(const std::vector<FaceId>& word,
                                          ReduceStrategy strategy) const {
    const SimplicialPoset& p = *p_;
    RingElement out;
    std::deque<std::pair<Rational, Word>> work;
    work.emplace_back(1, word);
    long steps = 0;
    const long kMaxSteps = 1000000;
    while (!work.empty()) {
        auto [coeff, w] = std::move(work.front());
        work.pop_front();
        bool reduced = false;
        while (!reduced) {
            if (++steps > kMaxSteps)
                throw Error(errc::non_termination,
                            "straightening exceeded " + std::to_string(kMaxSteps) + " steps");
            // drop bottoms (the ring unit)
            std::erase(w, p.bottom());
            // swap adjacent comparable ascending pairs into descending order
            bool swapped = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] != w[i + 1] && p.leq(w[i], w[i + 1])) {
                    std::swap(w[i], w[i + 1]);
                    swapped = true;
                }
            }
            if (swapped) continue;
            // find an adjacent incomparable pair per strategy
            int pos = -1;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                bool comp = p.leq(w[i], w[i + 1]) || p.leq(w[i + 1], w[i]);
                if (!comp) {
                    pos = static_cast<int>(i);
                    if (strategy == ReduceStrategy::leftmost) break;
                }
            }
            if (pos < 0) {
                out.add_term(compress(p, w), coeff);
                reduced = true;
                continue;
            }
            FaceId u = w[static_cast<std::size_t>(pos)], v = w[static_cast<std::size_t>(pos) + 1];
            std::vector<FaceId> mub = p.min_upper_bounds(u, v);
            if (mub.empty()) {
                reduced = true;  // the whole word is zero
                continue;
            }
            FaceId m0 = p.meet(u, v);
            for (FaceId z : mub) {
                Word next(w.begin(), w.begin() + pos);
                next.push_back(z);
                if (m0 != p.bottom()) next.push_back(m0);
                next.insert(next.end(), w.begin() + pos + 2, w.end());
                work.emplace_back(coeff, std::move(next));
            }
            reduced = true;  // branched; current word replaced
        }
    }
    return out;
}

RingElement FaceRing::defining_relation(FaceId w, FaceId y) const {
    const SimplicialPoset& p = *p_;
    std::vector<FaceId> mub = p.min_upper_bounds(w, y);
    if (mub.empty()) return RingElement::zero();
    FaceId m0 = p.meet(w, y);
    RingElement out;
    for (FaceId z : mub) {
        Word word{z};
        if (m0 != p.bottom()) word.push_back(m0);
        out.add_term(compress(p, word), 1);
    }
    return out;
}

RingElement FaceRing::power_identity(FaceId w, FaceId y, int q) const {
    if (q < 1) throw Error(errc::bad_input, "power must be positive");
    const SimplicialPoset& p = *p_;
    std::vector<FaceId> mub = p.min_upper_bounds(w, y);
    if (mub.empty()) return RingElement::zero();
    FaceId m0 = p.meet(w, y);
    RingElement out;
    for (FaceId z : mub) {
        std::vector<std::pair<FaceId, int>> factors;
        if (z == m0) {
            factors.emplace_back(z, 2 * q);
        } else {
            factors.emplace_back(z, q);
            if (m0 != p.bottom()) factors.emplace_back(m0, q);
        }
        out.add_term(StandardMonomial(p, std::move(factors)), 1);
    }
    return out;
}

std::vector<StandardMonomial> FaceRing::vertex_power_times(int j, int ell,
                                                           const StandardMonomial& m) const {
    const SimplicialPoset& p = *p_;
    if (ell < 1) throw Error(errc::bad_input, "vertex power must be positive");
    const FaceId xj = p.atom(j);

    if (m.is_one()) return {StandardMonomial(p, {{xj, ell}})};

    const auto& fac = m.factors();
    const int k = static_cast<int>(fac.size());

    // chain supports are nested, so the faces containing x_j form a prefix
    int r = 0;
    while (r < k && vs_contains(p.support(fac[static_cast<std::size_t>(r)].first), j)) ++r;

    if (r == k) {
        // x_j divides every chain face: append or merge the trailing atom
        std::vector<std::pair<FaceId, int>> factors = fac;
        if (factors.back().first == xj)
            factors.back().second += ell;
        else
            factors.emplace_back(xj, ell);
        return {StandardMonomial(p, std::move(factors))};
    }

    // straighten x_j^ell against the tail fac[r..]
    const FaceId y1 = fac[static_cast<std::size_t>(r)].first;
    std::vector<FaceId> mub = p.min_upper_bounds(xj, y1);
    if (mub.empty()) return {};

    const int tail_len = k - r;
    std::vector<int> q(static_cast<std::size_t>(tail_len) + 1, 0);
    for (int i = 0; i < tail_len; ++i)
        q[static_cast<std::size_t>(i) + 1] = q[static_cast<std::size_t>(i)] + fac[static_cast<std::size_t>(r + i)].second;

    std::vector<StandardMonomial> out;
    for (FaceId z : mub) {
        // z_i: the unique face below z over supp(y_i) + j
        std::vector<FaceId> zi(static_cast<std::size_t>(tail_len));
        for (int i = 0; i < tail_len; ++i)
            zi[static_cast<std::size_t>(i)] =
                p.restrict_face(z, p.support(fac[static_cast<std::size_t>(r + i)].first) | vs_bit(j));

        std::vector<std::pair<FaceId, int>> tail;
        if (ell >= q[static_cast<std::size_t>(tail_len)]) {
            // enough copies of x_j to lift the whole tail
            for (int i = 0; i < tail_len; ++i)
                tail.emplace_back(zi[static_cast<std::size_t>(i)], fac[static_cast<std::size_t>(r + i)].second);
            int rest = ell - q[static_cast<std::size_t>(tail_len)];
            if (rest > 0) {
                if (tail.back().first == xj)
                    tail.back().second += rest;
                else
                    tail.emplace_back(xj, rest);
            }
        } else {
            // split the first face that is only partially lifted
            int s = 0;
            while (q[static_cast<std::size_t>(s) + 1] <= ell) ++s;
            for (int i = 0; i < s; ++i)
                tail.emplace_back(zi[static_cast<std::size_t>(i)], fac[static_cast<std::size_t>(r + i)].second);
            int lifted = ell - q[static_cast<std::size_t>(s)];
            if (lifted > 0) tail.emplace_back(zi[static_cast<std::size_t>(s)], lifted);
            tail.emplace_back(fac[static_cast<std::size_t>(r + s)].first,
                              fac[static_cast<std::size_t>(r + s)].second - lifted);
            for (int i = s + 1; i < tail_len; ++i)
                tail.emplace_back(fac[static_cast<std::size_t>(r + i)].first, fac[static_cast<std::size_t>(r + i)].second);
        }

        if (r == 0) {
            out.emplace_back(p, std::move(tail));
            continue;
        }
        // only the lift below y_{r-1} survives against the head
        const FaceId head_low = fac[static_cast<std::size_t>(r - 1)].first;
        if (!p.leq(tail.front().first, head_low)) continue;
        std::vector<std::pair<FaceId, int>> factors(fac.begin(), fac.begin() + r);
        std::size_t start = 0;
        if (factors.back().first == tail.front().first) {
            factors.back().second += tail.front().second;
            start = 1;
        }
        for (std::size_t i = start; i < tail.size(); ++i) factors.push_back(tail[i]);
        out.emplace_back(p, std::move(factors));
    }

    if (r > 0 && out.size() != 1)
        throw Error(errc::internal, "vertex product must have a unique lift below the head");
    std::sort(out.begin(), out.end());
    return out;
}

RingElement FaceRing::multiply_vertex_power(int j, int ell, const StandardMonomial& m) const {
    RingElement out;
    for (const StandardMonomial& t : vertex_power_times(j, ell, m)) out.add_term(t, 1);
    return out;
}

RingElement FaceRing::multiply(const RingElement& a, const RingElement& b,
                               ReduceStrategy strategy) const {
    RingElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Word word;
            for (const auto& [f, e] : ma.factors()) word.insert(word.end(), static_cast<std::size_t>(e), f);
            for (const auto& [f, e] : mb.factors()) word.insert(word.end(), static_cast<std::size_t>(e), f);
            RingElement prod = normal_form_of_word(word, strategy);
            out = out + prod.scaled(ca * cb);
        }
    return out;
}

StandardMonomial FaceRing::monomial_for(FaceId lead, const MultiDegree& delta) const {
    const SimplicialPoset& p = *p_;
    if (p.support(lead) != delta.support())
        throw Error(errc::internal, "leading variable support must match the degree support");
    if (lead == p.bottom()) return StandardMonomial{};
    // peel level sets: exponents are the jumps between positive values
    std::vector<int> values;
    for (int i = 0; i < delta.n(); ++i)
        if (delta[i] > 0) values.push_back(delta[i]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::pair<FaceId, int>> factors;
    int prev = 0;
    for (int level : values) {
        VertexSet s = 0;
        for (int i = 0; i < delta.n(); ++i)
            if (delta[i] >= level) s |= vs_bit(i);
        factors.emplace_back(p.restrict_face(lead, s), level - prev);
        prev = level;
    }
    // ascending levels give descending supports, so the chain is in order
    return StandardMonomial(p, std::move(factors));
}

std::vector<StandardMonomial> FaceRing::graded_piece_basis(const MultiDegree& delta) const {
    if (!delta.all_nonneg()) throw Error(errc::bad_input, "graded pieces require a nonnegative degree");
    const SimplicialPoset& p = *p_;
    std::vector<StandardMonomial> out;
    for (FaceId y : p.faces_with_support(delta.support())) out.push_back(monomial_for(y, delta));
    return out;
}

namespace {

struct Parser {
    const FaceRing& ring;
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }

    BigInt parse_int() {
        skip_ws();
        std::string num;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
        if (num.empty()) throw Error(errc::bad_input, "expected a number at position " + std::to_string(i));
        return BigInt(num);
    }

    std::string parse_ident() {
        skip_ws();
        std::string id;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            id += s[i++];
        }
        if (id.empty()) throw Error(errc::bad_input, "expected a face label at position " + std::to_string(i));
        return id;
    }

    // term := [rational '*'?] factor ('*' factor)*  |  rational
    RingElement parse_term() {
        Rational coeff = 1;
        bool have_factor = false;
        std::vector<FaceId> word;
        if (peek_digit()) {
            BigInt num = parse_int();
            BigInt den = 1;
            if (eat('/')) den = parse_int();
            if (den == 0) throw Error(errc::bad_input, "zero denominator");
            coeff = Rational(num, den);
            if (!eat('*')) {
                skip_ws();
                if (i >= s.size() || s[i] == '+' || s[i] == '-') {
                    return RingElement::monomial(StandardMonomial{}, coeff);
                }
            }
        }
        while (true) {
            std::string id = parse_ident();
            FaceId f = ring.poset().face_by_label(id);
            int exp = 1;
            if (eat('^')) exp = static_cast<int>(parse_int());
            if (f == ring.poset().bottom()) {
                // the bottom is the unit
            } else {
                word.insert(word.end(), static_cast<std::size_t>(exp), f);
            }
            have_factor = true;
            if (!eat('*')) break;
            if (peek_digit()) {
                BigInt num = parse_int();
                BigInt den = 1;
                if (eat('/')) den = parse_int();
                coeff *= Rational(num, den);
                if (!eat('*')) break;
            }
        }
        if (!have_factor) throw Error(errc::bad_input, "empty term");
        return ring.normal_form_of_word(word).scaled(coeff);
    }

    RingElement parse_sum() {
        RingElement out;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            RingElement t = parse_term();
            out = neg ? out - t : out + t;
            skip_ws();
            if (eat('-')) neg = true;
            else if (eat('+')) neg = false;
            else break;
        }
        skip_ws();
        if (i != s.size()) throw Error(errc::bad_input, "trailing input at position " + std::to_string(i));
        return out;
    }
};

}  // namespace

RingElement FaceRing::parse(const std::string& text) const {
    Parser p{*this, text};
    return p.parse_sum();
}

}  // namespace sposet
