#pragma once

#include <borwein/numbers.hpp>

namespace borwein {

/// Dedekind sum s(h,k) = sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2),
/// with the usual convention s(h,1) = 0. Requires k >= 1 and gcd(h,k) = 1.
/// 6k * s(h,k) is always an integer.
Rational dedekind_sum(const Integer& h, const Integer& k);

inline Rational dedekind_sum(long h, long k) { return dedekind_sum(Integer(h), Integer(k)); }

}  // namespace borwein
