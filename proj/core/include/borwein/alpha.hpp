#pragma once

#include <borwein/bigfloat.hpp>
#include <borwein/cyclotomic.hpp>
#include <borwein/numbers.hpp>

#include <optional>

namespace borwein {

/// alpha_t^(m)(n) = sum over 0 <= h < t, gcd(h,t)=1 of
/// exp(-m pi i s(h,t) - 2 pi i n h / t), as an exact element of Z[zeta_{12t}].
/// Each summand is zeta_{12t}^{-(m * 6t*s(h,t) + 12nh)}; 6t*s(h,t) is an
/// integer, so the ambient order 12t always suffices. The result is
/// conjugation-invariant, hence real.
CyclotomicElement alpha(long t, long m, long n);

/// Sign of alpha_t^(m)(r). ZERO is decided only from the exact reduced
/// representation; a nonzero sign is certified by interval evaluation with
/// doubling precision until the enclosure excludes zero.
Sign alpha_sign(long t, long m, long r);

struct AlphaLowerBound {
    bool has_nonzero = false;  // false when P and N are both empty
    BigFloat bound;            // certified lower bound (rounded down) on min |alpha| over P u N
};

AlphaLowerBound alpha_abs_lower_bound(long t, long m, mpfr_prec_t start_prec = 128);

}  // namespace borwein
