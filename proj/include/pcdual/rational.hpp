#pragma once

#include <gmpxx.h>

#include <string>

namespace pcdual {

// Always canonical: gmpxx keeps mpq values reduced with a positive denominator
// as long as every constructor from a raw num/den pair is followed by canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pcdual
