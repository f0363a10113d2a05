#ifndef TELESUM_RATIONAL_HPP
#define TELESUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace telesum {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Binomial coefficient for small nonnegative k.
inline Int binomial(const Int& n, unsigned long k) {
    Int b;
    mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
    return b;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

} // namespace telesum

#endif
