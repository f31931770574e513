#pragma once

#include <borwein/bigfloat.hpp>

#include <stdexcept>
#include <string>

namespace borwein {

/// Closed interval [lo, hi] with directed-rounding endpoints. Every operation
/// returns an enclosure of the exact image; endpoints are rounded outward at
/// the working precision, so results computed at doubled precision are always
/// contained in results computed at the original one.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
    Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0)
            throw std::logic_error("Interval: lo > hi");
    }

    static Interval of(long x, mpfr_prec_t prec)
    {
        return {BigFloat::of(x, prec, Rounding::down), BigFloat::of(x, prec, Rounding::up)};
    }
    static Interval of(const Integer& x, mpfr_prec_t prec)
    {
        return {BigFloat::of(x, prec, Rounding::down), BigFloat::of(x, prec, Rounding::up)};
    }
    static Interval of(const Rational& x, mpfr_prec_t prec)
    {
        return {BigFloat::of(x, prec, Rounding::down), BigFloat::of(x, prec, Rounding::up)};
    }
    static Interval pi(mpfr_prec_t prec)
    {
        BigFloat lo(prec), hi(prec);
        mpfr_const_pi(lo.raw(), MPFR_RNDD);
        mpfr_const_pi(hi.raw(), MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    bool is_positive() const { return lo_.sgn() > 0; }
    bool is_negative() const { return hi_.sgn() < 0; }
    bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
    bool contains(const Interval& o) const
    {
        return mpfr_cmp(lo_.raw(), o.lo_.raw()) <= 0 && mpfr_cmp(hi_.raw(), o.hi_.raw()) >= 0;
    }

    BigFloat width() const
    {
        BigFloat w(precision());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }

    std::string str(int digits = 20) const { return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]"; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval abs() const;
    Interval sqrt() const;        // requires lo >= 0
    Interval exp() const;
    Interval log() const;         // requires lo > 0
    Interval cos() const;         // Lipschitz-padded endpoint enclosure
    Interval pow(const Interval& e) const;  // requires lo > 0
    Interval pow_int(long e) const;         // requires lo > 0 when e < 0
    Interval root(unsigned long k) const;   // k-th root, requires lo >= 0

private:
    BigFloat lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

}  // namespace borwein
