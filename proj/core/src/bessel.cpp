#include <borwein/bessel.hpp>

#include <cstdlib>
#include <stdexcept>

namespace borwein {

Interval bessel_I(long s, const Interval& x, mpfr_prec_t prec)
{
    if (x.lo().sgn() < 0) throw std::domain_error("bessel_I: requires x >= 0");
    s = std::labs(s);

    const Interval half = x * Interval::of(Rational(1, 2), prec);
    const Interval half_sq = half * half;

    // term_0 = (x/2)^s / s!
    Integer fact = 1;
    for (long i = 2; i <= s; ++i) fact *= i;
    Interval term = (s == 0 ? Interval::of(1L, prec) : half.pow_int(s)) / Interval::of(fact, prec);
    Interval sum = term;

    const long max_terms = 4 * static_cast<long>(prec) + 64;
    for (long k = 1; k <= max_terms; ++k) {
        const Integer step = Integer(k) * Integer(k + s);
        term = term * half_sq / Interval::of(step, prec);
        sum = sum + term;

        // ratio bound for all later terms; valid once < 1
        BigFloat ratio(prec);
        mpfr_sqr(ratio.raw(), x.hi().raw(), MPFR_RNDU);
        mpfr_div_si(ratio.raw(), ratio.raw(), 4 * (k + 1), MPFR_RNDU);
        mpfr_div_si(ratio.raw(), ratio.raw(), k + 1 + s, MPFR_RNDU);
        if (mpfr_cmp_d(ratio.raw(), 0.5) < 0) {
            // tail <= next_term / (1 - ratio) <= 2 * next_term
            BigFloat next(prec);
            mpfr_mul(next.raw(), term.hi().raw(), ratio.raw(), MPFR_RNDU);
            BigFloat tail(prec);
            mpfr_mul_2si(tail.raw(), next.raw(), 1, MPFR_RNDU);
            // stop when the tail no longer moves the enclosure appreciably
            BigFloat threshold(prec);
            mpfr_mul_2si(threshold.raw(), sum.hi().raw(), -static_cast<long>(prec) - 4, MPFR_RNDU);
            mpfr_abs(threshold.raw(), threshold.raw(), MPFR_RNDU);
            if (tail <= threshold || k == max_terms) {
                BigFloat hi(prec);
                mpfr_add(hi.raw(), sum.hi().raw(), tail.raw(), MPFR_RNDU);
                return {sum.lo(), hi};
            }
        }
    }
    throw std::runtime_error("bessel_I: series did not converge within term budget");
}

}  // namespace borwein
