#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals on top
// of GMP's C++ bindings. Rationals are always kept canonical (lowest terms,
// positive denominator) -- mpq_class guarantees this for arithmetic results;
// the named constructors below canonicalize explicitly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mldlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline const Int& numerator(const Rat& q) { return q.get_num(); }
inline const Int& denominator(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor of a rational as an integer (exact, sign-correct).
inline Int floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// Fractional part in [0, 1): frac(q) = q - floor(q).
inline Rat frac(const Rat& q) {
    Rat r = q - Rat(floor_rat(q));
    return r;
}

// Nonnegative residue of a mod m (m > 0), regardless of the sign of a.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact integer quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for possibly negative e (base must be nonzero when e < 0).
inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1;
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
    Rat inv = make_rat(base.get_den(), base.get_num());
    return rat_pow(inv, -e);
}

// Decimal string forms used by the report layer: integers as plain decimal,
// rationals always as "p/q" (so "1/1", not "1") for a uniform schema.
inline std::string int_str(const Int& v) { return v.get_str(); }

inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

// Accepts "p", "p/q", with optional sign on p.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    return make_rat(num, den);
}

}  // namespace mldlab
