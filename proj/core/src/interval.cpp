#include <borwein/interval.hpp>

#include <algorithm>
#include <stdexcept>

namespace borwein {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = join_prec(a, b);
    BigFloat lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator-(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = join_prec(a, b);
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator-(const Interval& a)
{
    const mpfr_prec_t p = a.precision();
    BigFloat lo(p), hi(p);
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator*(const Interval& a, const Interval& b)
{
    const mpfr_prec_t p = join_prec(a, b);
    BigFloat lo(p), hi(p), t(p);
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return {std::move(lo), std::move(hi)};
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) throw std::domain_error("Interval division by interval containing zero");
    const mpfr_prec_t p = join_prec(a, b);
    BigFloat lo(p), hi(p), t(p);
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return {std::move(lo), std::move(hi)};
}

Interval Interval::abs() const
{
    const mpfr_prec_t p = precision();
    if (is_positive() || lo_.sgn() == 0) return *this;
    if (is_negative() || hi_.sgn() == 0) return -*this;
    BigFloat lo(p), hi(p), t(p);
    mpfr_set_zero(lo.raw(), 1);
    mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_set(t.raw(), hi_.raw(), MPFR_RNDU);
    if (mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::sqrt() const
{
    if (lo_.sgn() < 0) throw std::domain_error("Interval::sqrt of negative interval");
    const mpfr_prec_t p = precision();
    BigFloat lo(p), hi(p);
    mpfr_sqrt(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::exp() const
{
    const mpfr_prec_t p = precision();
    BigFloat lo(p), hi(p);
    mpfr_exp(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::log() const
{
    if (lo_.sgn() <= 0) throw std::domain_error("Interval::log requires a positive interval");
    const mpfr_prec_t p = precision();
    BigFloat lo(p), hi(p);
    mpfr_log(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::cos() const
{
    // cos over an interval: take the envelope of both endpoints (each rounded
    // both ways) and pad by the interval width; |cos'| <= 1 makes this a
    // rigorous enclosure without locating interior extrema. For the point-like
    // intervals used here the padding is one ulp of the argument.
    const mpfr_prec_t p = precision();
    BigFloat lo(p), hi(p), t(p);
    mpfr_cos(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_cos(hi.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_cos(t.raw(), hi_.raw(), MPFR_RNDD);
    if (mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_cos(t.raw(), hi_.raw(), MPFR_RNDU);
    if (mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
    const BigFloat w = width();
    mpfr_sub(lo.raw(), lo.raw(), w.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), hi.raw(), w.raw(), MPFR_RNDU);
    // clamp to [-1, 1]
    if (mpfr_cmp_si(lo.raw(), -1) < 0) mpfr_set_si(lo.raw(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(hi.raw(), 1) > 0) mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::pow(const Interval& e) const
{
    if (lo_.sgn() <= 0) throw std::domain_error("Interval::pow requires a positive base");
    const mpfr_prec_t p = std::max(precision(), e.precision());
    BigFloat lo(p), hi(p), t(p);
    mpfr_srcptr bs[2] = {lo_.raw(), hi_.raw()};
    mpfr_srcptr es[2] = {e.lo().raw(), e.hi().raw()};
    bool first = true;
    for (auto b : bs)
        for (auto x : es) {
            mpfr_pow(t.raw(), b, x, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), lo.raw()) < 0) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_pow(t.raw(), b, x, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), hi.raw()) > 0) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return {std::move(lo), std::move(hi)};
}

Interval Interval::pow_int(long e) const
{
    const mpfr_prec_t p = precision();
    if (e == 0) return Interval::of(1L, p);
    if (e < 0 || lo_.sgn() < 0) {
        // fall back to the positive-base path; all callers use positive bases
        if (lo_.sgn() <= 0) throw std::domain_error("Interval::pow_int requires a positive base here");
        return pow(Interval::of(e, p));
    }
    BigFloat lo(p), hi(p);
    mpfr_pow_si(lo.raw(), lo_.raw(), e, MPFR_RNDD);
    mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::root(unsigned long k) const
{
    if (lo_.sgn() < 0) throw std::domain_error("Interval::root of negative interval");
    const mpfr_prec_t p = precision();
    BigFloat lo(p), hi(p);
    mpfr_rootn_ui(lo.raw(), lo_.raw(), k, MPFR_RNDD);
    mpfr_rootn_ui(hi.raw(), hi_.raw(), k, MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

}  // namespace borwein
