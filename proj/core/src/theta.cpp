#include <borwein/theta.hpp>

#include <cmath>
#include <stdexcept>

namespace borwein {

IntegerSeries theta_phi(long order)
{
    IntegerSeries s(order);
    s.at(0) = 1;
    for (long k = 1; k * k <= order; ++k) s.at(k * k) += 2;
    return s;
}

IntegerSeries theta_psi(long order)
{
    IntegerSeries s(order);
    for (long k = 0; k * (k + 1) / 2 <= order; ++k) s.at(k * (k + 1) / 2) += 1;
    return s;
}

namespace {

// x^2 + xy + y^2 >= 3/4 * max(x^2, y^2), so |x|,|y| <= sqrt(4*order/3).
long lattice_radius(long order)
{
    return static_cast<long>(std::sqrt(4.0 * static_cast<double>(order) / 3.0)) + 2;
}

}  // namespace

IntegerSeries cubic_a(long order)
{
    IntegerSeries s(order);
    const long M = lattice_radius(order);
    for (long x = -M; x <= M; ++x)
        for (long y = -M; y <= M; ++y) {
            const long v = x * x + x * y + y * y;
            if (v <= order) s.at(v) += 1;
        }
    return s;
}

IntegerSeries cubic_b(long order)
{
    // omega^{x-y} sums to (c0 - c1) per exponent since the counts of
    // x-y = 1 and 2 (mod 3) agree under (x,y) -> (y,x).
    std::vector<long> cnt[3];
    for (auto& c : cnt) c.assign(order + 1, 0);
    const long M = lattice_radius(order);
    for (long x = -M; x <= M; ++x)
        for (long y = -M; y <= M; ++y) {
            const long v = x * x + x * y + y * y;
            if (v <= order) ++cnt[((x - y) % 3 + 3) % 3][v];
        }
    IntegerSeries s(order);
    for (long v = 0; v <= order; ++v) {
        if (cnt[1][v] != cnt[2][v]) throw std::logic_error("cubic_b: asymmetric character counts");
        s.at(v) = cnt[0][v] - cnt[1][v];
    }
    return s;
}

IntegerSeries cubic_c_shifted(long order)
{
    std::vector<long> cnt(order + 1, 0);
    const long M = lattice_radius(order) + 2;
    for (long x = -M; x <= M; ++x)
        for (long y = -M; y <= M; ++y) {
            const long v = x * x + x * y + y * y + x + y;
            if (v >= 0 && v <= order) ++cnt[v];
        }
    IntegerSeries s(order);
    for (long v = 0; v <= order; ++v) {
        if (cnt[v] % 3 != 0) throw std::logic_error("cubic_c_shifted: count not divisible by 3");
        s.at(v) = cnt[v] / 3;
    }
    return s;
}

IntegerSeries rr_quotient(long order)
{
    IntegerSeries num = euler_factor(1, 5, 1, order) * euler_factor(4, 5, 1, order);
    IntegerSeries den = euler_factor(2, 5, -1, order) * euler_factor(3, 5, -1, order);
    return num * den;
}

IntegerSeries q_kij_series(long k, long i, long order)
{
    if (k < 1 || i < 1 || i > k) throw std::invalid_argument("q_kij_series: need 1 <= i <= k");
    const long mod = 2 * k + 1;
    IntegerSeries r = euler_factor(i, mod, 1, order) * euler_factor(mod - i, mod, 1, order);
    r = r * euler_factor(mod, mod, 1, order);
    return r * euler_factor(1, 1, -1, order);
}

}  // namespace borwein
