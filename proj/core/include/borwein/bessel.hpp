#pragma once

#include <borwein/interval.hpp>

namespace borwein {

/// Certified enclosure of the modified Bessel function I_s(x) for integer
/// order s and x >= 0, via the ascending series
///   I_s(x) = sum_{k>=0} (x/2)^{2k+s} / (k! (k+s)!)
/// with a rigorous geometric tail bound once the term ratio
/// (x/2)^2 / ((k+1)(k+s+1)) drops below 1/2. I_{-s} = I_s for integer s.
Interval bessel_I(long s, const Interval& x, mpfr_prec_t prec);

}  // namespace borwein
