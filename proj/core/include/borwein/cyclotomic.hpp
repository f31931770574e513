#pragma once

#include <borwein/interval.hpp>
#include <borwein/numbers.hpp>

#include <vector>

namespace borwein {

/// Coefficients (ascending, monic) of the n-th cyclotomic polynomial,
/// obtained by exact division of x^n - 1 by all lower-level factors.
const std::vector<Integer>& cyclotomic_polynomial(long n);

/// Element of Z[zeta_N] for a primitive N-th root of unity zeta_N,
/// stored reduced modulo the N-th cyclotomic polynomial. The reduced
/// coefficient vector is canonical: equality and zero-testing are exact.
class CyclotomicElement {
public:
    explicit CyclotomicElement(long order);                        // zero
    static CyclotomicElement root_power(long order, long k);       // zeta^k
    static CyclotomicElement constant(long order, Integer value);
    static CyclotomicElement from_poly(long order, std::vector<Integer> raw);

    long order() const { return order_; }
    long degree() const { return static_cast<long>(coeffs_.size()); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const CyclotomicElement& o) const = default;

    CyclotomicElement conjugate() const;  // zeta -> zeta^{-1}
    bool is_real() const { return *this == conjugate(); }

    /// Enclosure of the real part sum a_k cos(2 pi k / N). Equals the value
    /// of the element whenever it is conjugation-invariant.
    Interval eval_real(mpfr_prec_t prec) const;

    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

private:
    long order_;
    std::vector<Integer> coeffs_;  // size deg(Phi_N), reduced mod Phi_N
};

}  // namespace borwein
