#pragma once

#include <gmpxx.h>

#include <string>

namespace borwein {

// Exact arithmetic carriers. mpq_class keeps fractions canonical
// (gcd(|num|, den) = 1, den >= 1), which is exactly the Rational contract.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

inline std::string to_decimal(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("Integer does not fit in long");
    return z.get_si();
}

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Integer& z)
{
    const int s = sgn(z);
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}

inline const char* to_string(Sign s)
{
    switch (s) {
        case Sign::negative: return "NEGATIVE";
        case Sign::zero: return "ZERO";
        default: return "POSITIVE";
    }
}

}  // namespace borwein
