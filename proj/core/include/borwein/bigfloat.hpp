#pragma once

#include <borwein/numbers.hpp>

#include <mpfr.h>

#include <string>
#include <utility>

namespace borwein {

enum class Rounding { down, up, nearest };  // toward -inf, toward +inf, to nearest

inline mpfr_rnd_t to_mpfr(Rounding r)
{
    switch (r) {
        case Rounding::down: return MPFR_RNDD;
        case Rounding::up: return MPFR_RNDU;
        default: return MPFR_RNDN;
    }
}

/// Arbitrary-precision float with explicit precision. Every operation that
/// produces a BigFloat states its rounding direction; results are correctly
/// rounded at the stated precision (MPFR semantics).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept
    {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(double x, mpfr_prec_t prec, Rounding r = Rounding::nearest)
    {
        BigFloat b(prec);
        mpfr_set_d(b.v_, x, to_mpfr(r));
        return b;
    }
    static BigFloat of(long x, mpfr_prec_t prec, Rounding r = Rounding::nearest)
    {
        BigFloat b(prec);
        mpfr_set_si(b.v_, x, to_mpfr(r));
        return b;
    }
    static BigFloat of(const Integer& x, mpfr_prec_t prec, Rounding r)
    {
        BigFloat b(prec);
        mpfr_set_z(b.v_, x.get_mpz_t(), to_mpfr(r));
        return b;
    }
    static BigFloat of(const Rational& x, mpfr_prec_t prec, Rounding r)
    {
        BigFloat b(prec);
        mpfr_set_q(b.v_, x.get_mpq_t(), to_mpfr(r));
        return b;
    }
    static BigFloat parse(const std::string& s, mpfr_prec_t prec, Rounding r)
    {
        BigFloat b(prec);
        mpfr_set_str(b.v_, s.c_str(), 10, to_mpfr(r));
        return b;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

    double to_double(Rounding r = Rounding::nearest) const { return mpfr_get_d(v_, to_mpfr(r)); }

    std::string str(int digits = 20) const
    {
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", digits, v_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace borwein
