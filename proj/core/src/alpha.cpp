#include <borwein/alpha.hpp>

#include <borwein/dedekind.hpp>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace borwein {

namespace {

constexpr mpfr_prec_t kMaxPrec = 1 << 22;

Interval certified_nonzero_eval(const CyclotomicElement& e, mpfr_prec_t start_prec)
{
    for (mpfr_prec_t p = start_prec; p <= kMaxPrec; p *= 2) {
        Interval v = e.eval_real(p);
        if (!v.contains_zero()) return v;
    }
    throw std::runtime_error("alpha: sign certification exceeded precision cap");
}

}  // namespace

CyclotomicElement alpha(long t, long m, long n)
{
    if (t < 1) throw std::invalid_argument("alpha: t must be positive");
    if (m < 1) throw std::invalid_argument("alpha: m must be positive");
    if (n < 0) throw std::invalid_argument("alpha: n must be nonnegative");
    const long order = 12 * t;
    std::vector<Integer> raw(order);
    for (long h = 0; h < t; ++h) {
        if (std::gcd(h, t) != 1) continue;
        const Rational s = dedekind_sum(h, t);
        Rational scaled = s * Rational(6 * t);
        scaled.canonicalize();
        if (scaled.get_den() != 1)
            throw std::logic_error("alpha: 6t*s(h,t) is not an integer");
        Integer expnt = -(Integer(m) * scaled.get_num() + Integer(12) * n * h);
        expnt %= order;
        if (expnt < 0) expnt += order;
        raw[expnt.get_si()] += 1;
    }
    return CyclotomicElement::from_poly(order, std::move(raw));
}

Sign alpha_sign(long t, long m, long r)
{
    const CyclotomicElement e = alpha(t, m, r);
    if (e.is_zero()) return Sign::zero;
    const Interval v = certified_nonzero_eval(e, 128);
    return v.is_positive() ? Sign::positive : Sign::negative;
}

AlphaLowerBound alpha_abs_lower_bound(long t, long m, mpfr_prec_t start_prec)
{
    AlphaLowerBound result;
    for (long r = 0; r < t; ++r) {
        const CyclotomicElement e = alpha(t, m, r);
        if (e.is_zero()) continue;
        Interval v = certified_nonzero_eval(e, start_prec);
        // tighten so the reported minimum is not limited by enclosure width
        for (mpfr_prec_t p = std::max<mpfr_prec_t>(start_prec, v.precision());
             p <= kMaxPrec; p *= 2) {
            Interval w = e.eval_real(p);
            if (!w.contains_zero()) {
                v = w;
                BigFloat scaled_width(p);
                mpfr_mul_2si(scaled_width.raw(), v.width().raw(), 40, MPFR_RNDU);
                BigFloat mag(p);
                mpfr_abs(mag.raw(), v.lo().raw(), MPFR_RNDD);
                if (scaled_width < mag) break;
            }
        }
        BigFloat lower(v.precision());
        if (v.is_positive())
            mpfr_set(lower.raw(), v.lo().raw(), MPFR_RNDD);
        else
            mpfr_neg(lower.raw(), v.hi().raw(), MPFR_RNDD);
        if (!result.has_nonzero || lower < result.bound) {
            result.bound = lower;
            result.has_nonzero = true;
        }
    }
    return result;
}

}  // namespace borwein
