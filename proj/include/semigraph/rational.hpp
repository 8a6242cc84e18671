#ifndef SEMIGRAPH_RATIONAL_HPP
#define SEMIGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace semigraph {

// Exact arithmetic backends. All adjacency entries live on the quarter-integer
// grid, so rationals stay tiny; big integers only show up in characteristic
// polynomial coefficients.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// Canonical "p/q" form, denominator always present ("20/1", "25/2").
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rat& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

// True when the canonical denominator is a power of two.
inline bool is_dyadic(const Rat& q) {
    Int d = q.get_den();
    if (d <= 0) return false;
    while (mpz_even_p(d.get_mpz_t())) d /= 2;
    return d == 1;
}

} // namespace semigraph

#endif // SEMIGRAPH_RATIONAL_HPP
