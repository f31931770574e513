#include <borwein/asymptotics.hpp>

#include <borwein/bessel.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace borwein {

namespace {

Rational make_rational(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Interval sqrt_of(const Rational& q, mpfr_prec_t prec)
{
    return Interval::of(q, prec).sqrt();
}

struct ErrorPieces {
    Interval growing_coeff;  // pi^{7/4} 2^{-3/4} A^{m/2} mu^{1/4}
    Interval constant;       // the two n-independent summands
};

ErrorPieces error_pieces(const AsymptoticConstants& c)
{
    const mpfr_prec_t p = c.prec;
    const Interval pi = Interval::pi(p);
    const Interval mu = Interval::of(c.mu, p);

    const Interval pref = pi.pow(Interval::of(make_rational(7, 4), p)) /
                          Interval::of(2L, p).pow(Interval::of(make_rational(3, 4), p));
    Integer a_pow_m;
    mpz_pow_ui(a_pow_m.get_mpz_t(), c.A.get_num().get_mpz_t(), static_cast<unsigned long>(c.m));
    const Interval growing = pref * Interval::of(a_pow_m, p).sqrt() * mu.root(4);

    // 2 t e^{2 + 8 pi mu}
    const Interval e2 = Interval::of(2 * c.t, p) *
                        (Interval::of(2L, p) + Interval::of(8L, p) * pi * mu).exp();

    // 2 e^2 t^{m/2+1} exp(pi mu + m (e^{-pi}/(1-e^{-pi})^2 + e^{-pi/t}/(1-e^{-pi/t})^2))
    Integer t_pow;
    mpz_ui_pow_ui(t_pow.get_mpz_t(), static_cast<unsigned long>(c.t),
                  static_cast<unsigned long>(c.m + 2));
    const Interval t_half = Interval::of(t_pow, p).sqrt();
    const Interval one = Interval::of(1L, p);
    const Interval em_pi = (-pi).exp();
    const Interval em_pi_t = (-(pi / Interval::of(c.t, p))).exp();
    const Interval series_tail =
        em_pi / ((one - em_pi) * (one - em_pi)) + em_pi_t / ((one - em_pi_t) * (one - em_pi_t));
    const Interval e3 = Interval::of(2L, p) * Interval::of(2L, p).exp() * t_half *
                        (pi * mu + Interval::of(c.m, p) * series_tail).exp();

    return {growing, e2 + e3};
}

// Enclosure of the three-summand error majorant.
Interval error_bound_interval(const AsymptoticConstants& c, long n)
{
    const mpfr_prec_t p = c.prec;
    if (Rational(n) <= c.mu) throw std::domain_error("error_bound: requires n > mu");
    if (n < 3) throw std::domain_error("error_bound: requires n >= 3");
    const ErrorPieces pieces = error_pieces(c);
    const Interval nm = Interval::of(Rational(n) - c.mu, p);
    return pieces.growing_coeff * (c.growth_error * nm.sqrt()).exp() + pieces.constant;
}

// Leading lower-bound prefactor of delta: (c_min/10) sqrt(pi/t) mu^{1/4}.
Interval delta_prefactor(const AsymptoticConstants& c, const BigFloat& c_min)
{
    const mpfr_prec_t p = c.prec;
    const Interval pi = Interval::pi(p);
    const Interval cmin(c_min, c_min);
    return cmin / Interval::of(10L, p) * (pi / Interval::of(c.t, p)).sqrt() *
           Interval::of(c.mu, p).root(4);
}

// Bessel argument 4 pi sqrt(mu (n - mu)) / t.
Interval bessel_argument(const AsymptoticConstants& c, long n)
{
    const mpfr_prec_t p = c.prec;
    const Rational prod = c.mu * (Rational(n) - c.mu);
    return Interval::of(4L, p) * Interval::pi(p) * sqrt_of(prod, p) / Interval::of(c.t, p);
}

Interval delta_interval(const AsymptoticConstants& c, long n, const BigFloat& c_min)
{
    const mpfr_prec_t p = c.prec;
    const Interval x = bessel_argument(c, n);
    if (mpfr_cmp_si(x.lo().raw(), 3) < 0)
        throw std::domain_error("delta_threshold: below the Bessel lower-bound validity range");
    const Rational nm_exact = Rational(n) - c.mu;
    const Interval nm = Interval::of(nm_exact, p);
    const Interval lower_main =
        delta_prefactor(c, c_min) * nm.pow(Interval::of(make_rational(-3, 4), p)) * x.exp();
    return lower_main - error_bound_interval(c, n);
}

}  // namespace

AsymptoticConstants constants(long t, long m, mpfr_prec_t prec)
{
    if (t < 2) throw std::invalid_argument("constants: requires t >= 2");
    if (m < 1) throw std::invalid_argument("constants: requires m >= 1");
    if (m * (t - 1) > 24)
        throw std::invalid_argument("constants: hypothesis m(t-1) <= 24 violated");

    AsymptoticConstants c;
    c.t = t;
    c.m = m;
    c.prec = prec;
    c.mu = make_rational(Integer(m) * (t - 1), 24);

    long a_best = 0;
    for (long l = 1; l <= t; ++l) {
        const long g = std::gcd(t, l);
        if (g * g > t) a_best = std::max(a_best, t / g);
    }
    c.A = Rational(a_best);

    Rational m2_best = make_rational(Integer(m) * (t - 1), Integer(4) * t * t);
    for (long l = 1; l < t; ++l) {
        const long g = std::gcd(t, l);
        if (g * g > t) {
            const Rational cand = make_rational(Integer(m) * (g * g - t), Integer(t) * l * l);
            if (cand > m2_best) m2_best = cand;
        }
    }
    c.M_squared = m2_best;
    {
        BigFloat m2(prec);
        mpfr_set_q(m2.raw(), m2_best.get_mpq_t(), MPFR_RNDU);
        BigFloat m_up(prec);
        mpfr_sqrt(m_up.raw(), m2.raw(), MPFR_RNDU);
        c.M = m_up;
    }

    const Interval pi = Interval::pi(prec);
    c.growth_main = Interval::of(4L, prec) * pi * sqrt_of(c.mu, prec) / Interval::of(t, prec);
    c.growth_error =
        Interval::of(6L, prec).sqrt() * pi * Interval::of(m2_best, prec).sqrt() / Interval::of(3L, prec);
    if (!(c.growth_error.hi() < c.growth_main.lo()))
        throw std::logic_error("constants: error growth rate does not stay below the main rate");
    return c;
}

Interval main_term(const AsymptoticConstants& c, long n, const Interval& alpha_value)
{
    const mpfr_prec_t p = c.prec;
    if (Rational(n) <= c.mu) throw std::domain_error("main_term: requires n > mu");
    const Interval pi = Interval::pi(p);
    const Rational nm_exact = Rational(n) - c.mu;
    const Interval bessel = bessel_I(-1, bessel_argument(c, n), p);
    return Interval::of(2L, p) * pi * sqrt_of(c.mu, p) / Interval::of(c.t, p) /
           sqrt_of(nm_exact, p) * alpha_value * bessel;
}

BigFloat error_bound(const AsymptoticConstants& c, long n)
{
    return error_bound_interval(c, n).hi();
}

BigFloat delta_threshold(const AsymptoticConstants& c, long n, const BigFloat& c_min)
{
    if (c_min.sgn() <= 0) throw std::invalid_argument("delta_threshold: c_min must be positive");
    return delta_interval(c, n, c_min).lo();
}

long delta_validity_threshold(const AsymptoticConstants& c)
{
    Integer mu_floor;
    mpz_fdiv_q(mu_floor.get_mpz_t(), c.mu.get_num().get_mpz_t(), c.mu.get_den().get_mpz_t());
    long n = std::max<long>(3, to_long(mu_floor) + 1);
    while (true) {
        if (Rational(n) > c.mu) {
            const Interval x = bessel_argument(c, n);
            if (mpfr_cmp_si(x.lo().raw(), 3) >= 0) return n;
        }
        ++n;
        if (n > 1'000'000) throw std::runtime_error("delta_validity_threshold: runaway search");
    }
}

FindBResult find_B(long t, const std::vector<BigFloat>& c_min_per_m, mpfr_prec_t prec)
{
    if (c_min_per_m.empty()) throw std::invalid_argument("find_B: no admissible m supplied");
    FindBResult result;
    result.B = 0;
    result.tail_certified_from = 0;

    for (long m = 1; m <= static_cast<long>(c_min_per_m.size()); ++m) {
        const BigFloat& c_min = c_min_per_m[m - 1];
        const AsymptoticConstants c = constants(t, m, prec);
        const long n_valid = delta_validity_threshold(c);
        const mpfr_prec_t p = c.prec;

        // Constant pieces of the tail certificate: the majorant splits as
        // C1 * exp(growth_error * u) + C2 with u = sqrt(n - mu).
        const ErrorPieces pieces = error_pieces(c);
        const Interval& C1 = pieces.growing_coeff;
        const Interval& C2 = pieces.constant;
        const Interval cpref = delta_prefactor(c, c_min);
        const Interval gap = c.growth_main - c.growth_error;
        if (!gap.is_positive()) throw std::logic_error("find_B: growth gap not certified positive");
        const Interval three_halves = Interval::of(make_rational(3, 2), p);
        const Interval rhs1 = (Interval::of(2L, p) * C1 / cpref).log();
        const Interval rhs2 = (Interval::of(2L, p) * C2 / cpref).log();

        auto cert = [&](long n) -> bool {
            if (Rational(n) <= c.mu) return false;
            const Interval u = Interval::of(Rational(n) - c.mu, p).sqrt();
            if (!(gap * u - three_halves).is_positive()) return false;   // knee of condition 1
            if (!(c.growth_main * u - three_halves).is_positive()) return false;  // knee of condition 2
            const Interval logu = u.log();
            if (!(gap * u - three_halves * logu - rhs1).is_positive()) return false;
            if (!(c.growth_main * u - three_halves * logu - rhs2).is_positive()) return false;
            return true;
        };

        long hi = std::max<long>(n_valid, 4);
        long iter = 0;
        while (!cert(hi)) {
            hi *= 2;
            if (++iter > 48) throw std::runtime_error("find_B: tail certificate not reachable");
        }
        long lo = n_valid;
        while (lo < hi) {  // least certified n in [n_valid, hi]
            const long mid = lo + (hi - lo) / 2;
            if (cert(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        const long n_cert = hi;

        auto delta_positive = [&](long n) -> bool {
            for (mpfr_prec_t pp = prec; pp <= 4096; pp *= 2) {
                AsymptoticConstants cc = (pp == prec) ? c : constants(t, m, pp);
                const BigFloat d = delta_threshold(cc, n, c_min);
                if (d.sgn() > 0) return true;
                // widen only if the enclosure might be at fault; the interval
                // lower bound being <= 0 at 4096 bits is treated as a true failure
            }
            return false;
        };

        long B_m = n_valid - 1;
        for (long n = n_cert - 1; n >= n_valid; --n) {
            if (!delta_positive(n)) {
                B_m = n;
                break;
            }
        }
        result.per_m_B.push_back(B_m);
        result.B = std::max(result.B, B_m);
        result.tail_certified_from = std::max(result.tail_certified_from, n_cert);
    }
    return result;
}

}  // namespace borwein
