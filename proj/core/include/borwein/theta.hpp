#pragma once

#include <borwein/series.hpp>

namespace borwein {

/// phi(q) = sum_{n in Z} q^{n^2}
IntegerSeries theta_phi(long order);

/// psi(q) = sum_{n >= 0} q^{n(n+1)/2}
IntegerSeries theta_psi(long order);

/// a(q) = sum_{m,n in Z} q^{m^2+mn+n^2}, by direct lattice enumeration.
IntegerSeries cubic_a(long order);

/// b(q) = sum_{m,n in Z} omega^{m-n} q^{m^2+mn+n^2} with omega = e^{2 pi i/3},
/// by lattice enumeration (the eta-quotient form is a registry identity).
IntegerSeries cubic_b(long order);

/// c(q) / (3 q^{1/3}) = (1/3) sum_{m,n in Z} q^{m^2+mn+n^2+m+n}: the integer
/// series left after stripping the fractional power from the third cubic
/// theta function.
IntegerSeries cubic_c_shifted(long order);

/// R(q) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)), the Rogers-Ramanujan
/// continued-fraction quotient.
IntegerSeries rr_quotient(long order);

/// Q_{k,i}(1;q) = (q^i, q^{2k+1-i}, q^{2k+1}; q^{2k+1})_infty / (q;q)_infty.
/// Requires 1 <= i <= k.
IntegerSeries q_kij_series(long k, long i, long order);

}  // namespace borwein
