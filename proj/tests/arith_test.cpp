#include <borwein/alpha.hpp>
#include <borwein/cyclotomic.hpp>
#include <borwein/dedekind.hpp>
#include <borwein/interval.hpp>

#include <doctest.h>

#include <numeric>

using namespace borwein;

TEST_CASE("dedekind sum: pinned values")
{
    CHECK(dedekind_sum(5, 1) == Rational(0));
    CHECK(dedekind_sum(1, 2) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    // s(1,k) = (k-1)(k-2)/(12k)
    CHECK(dedekind_sum(1, 5) == Rational(1, 5));
    CHECK(dedekind_sum(2, 5) == Rational(0));
    CHECK(dedekind_sum(3, 5) == Rational(0));
    CHECK(dedekind_sum(4, 5) == -Rational(1, 5));
}

TEST_CASE("dedekind sum: input validation")
{
    CHECK_THROWS(dedekind_sum(2, 4));
    CHECK_THROWS(dedekind_sum(1, 0));
    CHECK_THROWS(dedekind_sum(3, -5));
}

TEST_CASE("dedekind reciprocity for all coprime pairs h,k <= 50")
{
    for (long k = 1; k <= 50; ++k)
        for (long h = 1; h <= 50; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            Rational rhs = Rational(-1, 4) +
                           (Rational(h, k) + Rational(k, h) + Rational(1, Integer(h) * k)) / 12;
            rhs.canonicalize();
            CHECK(lhs == rhs);
        }
}

TEST_CASE("6k s(h,k) is an integer for all coprime pairs with k <= 200")
{
    for (long k = 1; k <= 200; ++k)
        for (long h = 1; h <= k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            Rational v = dedekind_sum(h, k) * Rational(6 * k);
            v.canonicalize();
            CHECK(v.get_den() == 1);
            if (v.get_den() != 1) return;
        }
}

TEST_CASE("cyclotomic polynomials: small orders")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    // phi(105) is the first with a coefficient of magnitude 2
    const auto& c105 = cyclotomic_polynomial(105);
    CHECK(c105.size() == 49);
    bool has_two = false;
    for (const auto& c : c105) has_two |= (c == -2 || c == 2);
    CHECK(has_two);
}

TEST_CASE("cyclotomic element: canonical arithmetic and conjugation")
{
    const long N = 24;
    const auto z = [&](long k) { return CyclotomicElement::root_power(N, k); };
    // zeta^12 = -1 in order 24
    CHECK(z(12) + CyclotomicElement::constant(N, 1) == CyclotomicElement(N));
    // zeta^k * zeta^{24-k} = 1
    for (long k = 0; k < N; ++k)
        CHECK(z(k) * z(N - k) == CyclotomicElement::constant(N, 1));
    // conjugation swaps zeta^k and zeta^{N-k}
    for (long k = 0; k < N; ++k) CHECK(z(k).conjugate() == z((N - k) % N));
    // zeta + conj(zeta) is real, zeta itself is not
    CHECK((z(1) + z(23)).is_real());
    CHECK(!z(1).is_real());
}

TEST_CASE("cyclotomic element: exact zero testing")
{
    // sum of all primitive 5th roots of unity in Z[zeta_60]: 1 + sum = 0
    const long N = 60;
    CyclotomicElement sum = CyclotomicElement::constant(N, 1);
    for (long k = 1; k <= 4; ++k) sum = sum + CyclotomicElement::root_power(N, 12 * k);
    CHECK(sum.is_zero());
}

TEST_CASE("alpha: pinned small cases")
{
    // t = 1: the single h = 0 term is 1
    for (long m : {1L, 3L, 24L})
        for (long n : {0L, 1L, 7L})
            CHECK(alpha(1, m, n) == CyclotomicElement::constant(12, 1));

    // t = 2: alpha = (-1)^n for every m
    for (long m = 1; m <= 24; ++m)
        for (long n = 0; n <= 5; ++n)
            CHECK(alpha(2, m, n) == CyclotomicElement::constant(24, n % 2 == 0 ? 1 : -1));
}

TEST_CASE("alpha: periodicity and conjugation invariance")
{
    for (long t : {3L, 4L, 5L, 6L, 9L, 12L})
        for (long m = 1; m <= (t == 3 ? 12 : 4); ++m)
            for (long n = 0; n < t; ++n) {
                CHECK(alpha(t, m, n) == alpha(t, m, n + t));
                CHECK(alpha(t, m, n).is_real());
            }
}

TEST_CASE("alpha_sign: pinned verdicts")
{
    CHECK(alpha_sign(3, 12, 2) == Sign::positive);
    CHECK(alpha_sign(5, 5, 0) == Sign::zero);
    CHECK(alpha_sign(2, 24, 1) == Sign::negative);
    CHECK(alpha_sign(4, 8, 1) == Sign::zero);
    CHECK(alpha_sign(4, 8, 2) == Sign::positive);
}

TEST_CASE("alpha_sign: stable under precision escalation")
{
    for (long t : {3L, 5L, 7L, 13L})
        for (long r = 0; r < t; ++r) {
            const CyclotomicElement e = alpha(t, 1, r);
            if (e.is_zero()) continue;
            const Interval low = e.eval_real(128);
            const Interval high = e.eval_real(256);
            CHECK(low.contains(high));
            if (!low.contains_zero()) {
                CHECK(!high.contains_zero());
                CHECK(low.is_positive() == high.is_positive());
            }
        }
}

TEST_CASE("alpha_abs_lower_bound: exact unit cases and the 0.1 floor")
{
    const BigFloat one = BigFloat::of(1L, 128);
    CHECK(alpha_abs_lower_bound(2, 24).bound == one);
    CHECK(alpha_abs_lower_bound(1, 1).bound == one);

    const BigFloat tenth = BigFloat::parse("0.1", 128, Rounding::up);
    for (long t : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
        for (long m = 1; m <= 24 / (t - 1); ++m) {
            const AlphaLowerBound lb = alpha_abs_lower_bound(t, m);
            REQUIRE(lb.has_nonzero);
            CHECK(lb.bound >= tenth);
        }
}

TEST_CASE("interval: directed rounding basics")
{
    const mpfr_prec_t p = 64;
    const Interval third = Interval::of(Rational(1, 3), p);
    CHECK(third.lo() < third.hi());
    CHECK(third.is_positive());

    const Interval pi = Interval::pi(p);
    CHECK(pi.lo() < pi.hi());
    CHECK(Interval::pi(128).width() < pi.width());
    CHECK(pi.contains(Interval::pi(128)));
}

TEST_CASE("interval: enclosures shrink monotonically when precision doubles")
{
    for (mpfr_prec_t p : {64, 128, 256}) {
        const Interval a = Interval::of(Rational(22, 7), p);
        const Interval b = Interval::of(Rational(-3, 11), p);
        const Interval coarse = (a * b + a / (a - b)).exp().sqrt().log();
        const Interval a2 = Interval::of(Rational(22, 7), 2 * p);
        const Interval b2 = Interval::of(Rational(-3, 11), 2 * p);
        const Interval fine = (a2 * b2 + a2 / (a2 - b2)).exp().sqrt().log();
        CHECK(coarse.contains(fine));
    }
}

TEST_CASE("interval: multiplication by exact zero is exact")
{
    const mpfr_prec_t p = 128;
    const Interval zero = Interval::of(0L, p);
    const Interval big = Interval::of(Rational(Integer("123456789123456789"), 7), p);
    const Interval prod = zero * big;
    CHECK(prod.lo().sgn() == 0);
    CHECK(prod.hi().sgn() == 0);
}

TEST_CASE("interval: cos enclosure is correct at rational multiples of pi")
{
    const mpfr_prec_t p = 128;
    const Interval pi = Interval::pi(p);
    // cos(pi) = -1
    const Interval c = pi.cos();
    CHECK(c.lo() <= BigFloat::of(-1L, p));
    CHECK(c.hi() >= BigFloat::of(-1L, p));
    CHECK(c.width().to_double() < 1e-30);
    // cos(0) = 1 exactly
    const Interval c0 = Interval::of(0L, p).cos();
    CHECK(c0.lo() == BigFloat::of(1L, p));
    CHECK(c0.hi() == BigFloat::of(1L, p));
}
