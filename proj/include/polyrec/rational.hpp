#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace polyrec {

// Exact arithmetic backbone. Int is an arbitrary-precision integer, Rat a
// canonical rational (denominator > 0, fraction reduced).
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign; no floating point.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Narrowing helper for coordinates that are known to be desk-scale.
long long to_ll(const Int& v);

// gmpxx has no long long overloads; funnel machine integers through here.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace polyrec
