#pragma once

#include <borwein/series.hpp>

#include <string>
#include <vector>

namespace borwein {

/// One factor (q^a; q^b)_infty^e of a symbolic eta-type product.
struct EulerExponent {
    long a = 1;
    long b = 1;
    long e = 1;
};

/// Symbolic description of c * q^s * prod (q^{a_i}; q^{b_i})_infty^{e_i}.
struct SeriesSpec {
    Integer coeff = 1;
    long shift = 0;
    std::vector<EulerExponent> factors;

    IntegerSeries build(long order) const;
    std::string str() const;
};

/// Sum of SeriesSpec terms.
struct SeriesCombination {
    std::vector<SeriesSpec> terms;

    IntegerSeries build(long order) const;
    std::string str() const;
};

inline SeriesSpec spec(std::vector<EulerExponent> factors, Integer coeff = 1, long shift = 0)
{
    return SeriesSpec{std::move(coeff), shift, std::move(factors)};
}

struct VerifyResult {
    bool ok = false;
    long first_mismatch = -1;  // smallest disagreeing index when !ok
    long order = -1;           // order through which coefficients were compared
};

/// Exact coefficientwise comparison through the common truncation order.
VerifyResult verify_identity(const IntegerSeries& lhs, const IntegerSeries& rhs);
VerifyResult verify_identity(const SeriesCombination& lhs, const SeriesCombination& rhs, long order);

}  // namespace borwein
