#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "blockfrac/errors.hpp"

namespace blockfrac {

// Exact arithmetic everywhere; doubles appear only in statistics and logs.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_u64(std::uint64_t v) {
    Rat r;
    mpz_import(r.get_num_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

// Accepts "p", "-p", or "p/q" with q > 0 after canonicalization.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw parse_error("bad rational literal: '" + s + "'");
    if (sgn(r.get_den()) == 0) throw parse_error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace blockfrac
