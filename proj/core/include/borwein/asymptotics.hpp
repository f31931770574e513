#pragma once

#include <borwein/bigfloat.hpp>
#include <borwein/interval.hpp>
#include <borwein/numbers.hpp>

#include <vector>

namespace borwein {

/// Constants of the explicit expansion of c_t^(m)(n):
///   mu = m(t-1)/24,
///   A  = max{ t/gcd(t,l) : 1 <= l <= t, gcd(t,l) > sqrt(t) },
///   M  = max of sqrt(m(t-1))/(2t) and sqrt(m(gcd^2(t,l)-t)/t)/l over
///        1 <= l < t with gcd(t,l) > sqrt(t).
/// The main term grows like exp(4 pi sqrt(mu) / t * sqrt(n - mu)) and the
/// error majorant like exp(sqrt(6) pi M / 3 * sqrt(n - mu)); the first rate
/// strictly dominates (M < sqrt(24 mu)/t).
struct AsymptoticConstants {
    long t = 0;
    long m = 0;
    Rational mu;
    Rational A;           // integer-valued
    Rational M_squared;   // exact square of M (max candidate, compared exactly)
    BigFloat M;           // upper rounding of sqrt(M_squared)
    Interval growth_main;   // 4 pi sqrt(mu) / t
    Interval growth_error;  // sqrt(6) pi M / 3
    mpfr_prec_t prec = 256;
};

/// Requires t >= 2 and m(t-1) <= 24 (the expansion's hypothesis).
AsymptoticConstants constants(long t, long m, mpfr_prec_t prec = 256);

/// Enclosure of the leading term
///   (2 pi mu^{1/2} / t) (n-mu)^{-1/2} alpha I_{-1}(4 pi sqrt(mu(n-mu))/t).
/// Requires n > mu.
Interval main_term(const AsymptoticConstants& c, long n, const Interval& alpha_value);

/// Upper bound (rounded up) on |c_t^(m)(n) - main term|:
///   pi^{7/4} 2^{-3/4} A^{m/2} mu^{1/4} exp(growth_error * sqrt(n-mu))
///   + 2 t e^{2 + 8 pi mu}
///   + 2 e^2 t^{m/2+1} exp(pi mu + m (e^{-pi}/(1-e^{-pi})^2 + e^{-pi/t}/(1-e^{-pi/t})^2)).
/// Requires n > mu and n >= 3.
BigFloat error_bound(const AsymptoticConstants& c, long n);

/// Lower bound (rounded down) on
///   (c_min/10) sqrt(pi/t) mu^{1/4} (n-mu)^{-3/4} exp(4 pi sqrt(mu(n-mu))/t)
///   - error_bound(n).
/// Positive values certify that the main term dominates. Requires the Bessel
/// argument 4 pi sqrt(mu(n-mu))/t to be certifiably >= 3 (the validity range
/// of the I_{-1} lower bound) and c_min > 0.
BigFloat delta_threshold(const AsymptoticConstants& c, long n, const BigFloat& c_min);

/// Smallest admissible n for delta_threshold.
long delta_validity_threshold(const AsymptoticConstants& c);

struct FindBResult {
    long B = -1;                 // delta > 0 certified for every n > B, all scanned m
    long tail_certified_from = -1;  // analytic tail certificate holds for n >= this
    std::vector<long> per_m_B;      // index m-1
};

/// Certified dominance cutoff: returns B such that for every admissible m
/// (1 <= m <= c_min_per_m.size()) and every n > B, delta_threshold > 0.
/// Positivity is interval-certified pointwise up to the analytic tail point,
/// beyond which a monotone two-sided majorant argument covers all larger n.
FindBResult find_B(long t, const std::vector<BigFloat>& c_min_per_m, mpfr_prec_t prec = 256);

}  // namespace borwein
