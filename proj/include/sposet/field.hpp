#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sposet/errors.hpp"

namespace sposet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Field contexts. All linear algebra is templated on one of these; the
// context owns the modulus for prime fields so elements stay plain ints.

struct Rationals {
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_rational(const Rational& q) const { return q; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error(errc::internal, "division by zero");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.str(); }
    std::string name() const { return "Q"; }
};

struct PrimeField {
    using Elem = std::int64_t;

    std::int64_t p = 2;

    explicit PrimeField(std::int64_t prime = 2) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        Elem r = static_cast<Elem>(v % p);
        return r < 0 ? r + p : r;
    }
    Elem from_rational(const Rational& q) const {
        BigInt num = boost::multiprecision::numerator(q) % p;
        BigInt den = boost::multiprecision::denominator(q) % p;
        Elem n = static_cast<Elem>(num);
        Elem d = static_cast<Elem>(den);
        if (n < 0) n += p;
        if (d < 0) d += p;
        if (d == 0) throw Error(errc::bad_input, "denominator divisible by field characteristic");
        return mul(n, inv(d));
    }
    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p ? r - p : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p : r;
    }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<__int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error(errc::internal, "division by zero");
        // extended Euclid
        Elem t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            Elem q = r / nr;
            Elem tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p : t;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

// Runtime field selector used at the CLI boundary.
struct FieldSpec {
    enum class Kind { rationals, prime } kind = Kind::rationals;
    std::int64_t p = 2;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(std::int64_t p) { return FieldSpec{Kind::prime, p}; }

    // Accepts "Q", "QQ", "GF(p)", or a bare prime.
    static FieldSpec parse(const std::string& s);

    std::string name() const {
        return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
    }
};

bool is_prime(std::int64_t n);

template <class Fn>
auto field_dispatch(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::rationals) return fn(Rationals{});
    return fn(PrimeField{fs.p});
}

}  // namespace sposet
