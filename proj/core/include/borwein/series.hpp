#pragma once

#include <borwein/numbers.hpp>

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace borwein {

/// Truncated power series with exact integer coefficients. Index n holds the
/// coefficient of q^n; coefficients 0..order() are exact. Operations mixing
/// different truncation orders produce the minimum order, so exactness is
/// never silently lost.
class IntegerSeries {
public:
    explicit IntegerSeries(long order) : c_(order + 1) {}
    IntegerSeries(std::initializer_list<long> coeffs)
    {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        if (c_.empty()) c_.emplace_back(0);
    }
    static IntegerSeries one(long order)
    {
        IntegerSeries s(order);
        s.c_[0] = 1;
        return s;
    }
    static IntegerSeries monomial(Integer coeff, long exponent, long order)
    {
        IntegerSeries s(order);
        if (exponent <= order) s.c_[exponent] = std::move(coeff);
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Integer& operator[](long n) const { return c_[n]; }
    Integer& at(long n) { return c_[n]; }
    const std::vector<Integer>& coeffs() const { return c_; }

    bool operator==(const IntegerSeries& o) const = default;
    bool is_zero() const;

    IntegerSeries truncated(long new_order) const;
    IntegerSeries shifted(long s) const;            // multiply by q^s, same order
    IntegerSeries inflate(long k, long order) const;  // q -> q^k
    IntegerSeries scaled(const Integer& c) const;

    /// Multiplicative inverse; requires constant term +-1.
    IntegerSeries inverse() const;
    /// Exact quotient *this / d through the common order. The divisor's lowest
    /// nonzero coefficient must be +-1 (after shifting out its valuation);
    /// throws if the division does not come out exact at the shift stage.
    IntegerSeries divide_exact(const IntegerSeries& d) const;
    IntegerSeries pow(long e) const;  // e >= 0, naive convolution squaring

    friend IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b);
    friend IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b);
    friend IntegerSeries operator-(const IntegerSeries& a);
    /// Naive convolution product (the reference multiply).
    friend IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b);

private:
    std::vector<Integer> c_;
};

/// Series with few nonzero terms, kept as sorted (exponent, coefficient) pairs.
struct SparseSeries {
    std::vector<std::pair<long, Integer>> terms;
};

/// Pentagonal-number expansion of (q^b; q^b)_infty truncated at `order`:
/// exponents b*j(3j+1)/2, coefficients (-1)^j.
SparseSeries pentagonal_series(long b, long order);

IntegerSeries mul_sparse(const IntegerSeries& dense, const SparseSeries& sparse);
/// Division by a sparse series whose constant term is +-1.
IntegerSeries div_sparse(const IntegerSeries& dense, const SparseSeries& sparse);

IntegerSeries to_dense(const SparseSeries& sparse, long order);

/// Truncation of (q^a; q^b)_infty^e. Full eta-type factors (a divisible by b)
/// go through the sparse pentagonal expansion; everything else multiplies or
/// divides the binomials 1 - q^{a+bn} one at a time. Negative e requires an
/// invertible (unit constant term) factor.
IntegerSeries euler_factor(long a, long b, long e, long order);

/// Same value as euler_factor but always via binomial sweeps, never through
/// the pentagonal expansion. Second route for identity checks.
IntegerSeries euler_factor_direct(long a, long b, long e, long order);

/// Coefficients of (q;q)_infty^m / (q^t;q^t)_infty^m through `order`:
/// m sparse pentagonal multiplications followed by m sparse divisions,
/// O(m * order^{3/2}) big-integer operations.
IntegerSeries borwein_coeffs(long t, long m, long order);

/// Sub-series of coefficients at indices t*n + r (0 <= r < t).
IntegerSeries dissect(const IntegerSeries& s, long t, long r);

/// Inverse of dissect: parts[r] supplies the coefficients at t*n + r.
IntegerSeries interleave(std::span<const IntegerSeries> parts, long order);

}  // namespace borwein
