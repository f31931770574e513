#include <borwein/dedekind.hpp>

#include <stdexcept>

namespace borwein {

Rational dedekind_sum(const Integer& h, const Integer& k)
{
    if (k <= 0) throw std::invalid_argument("dedekind_sum: k must be positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
    if (g != 1) throw std::invalid_argument("dedekind_sum: gcd(h,k) must be 1");
    if (k == 1) return Rational(0);

    // s(h,k) = S/k^2 - (k-1)/4 with S = sum_{r=1}^{k-1} r * ((h*r) mod k),
    // obtained by summing r/k * ((hr mod k)/k - 1/2) and using
    // sum_{r} r = k(k-1)/2. Keeps the whole computation in integers.
    Integer hm = h % k;
    if (hm < 0) hm += k;
    Integer S = 0;
    Integer hr = 0;
    for (Integer r = 1; r < k; ++r) {
        hr += hm;
        if (hr >= k) hr -= k;
        S += r * hr;
    }
    Rational result(S, k * k);
    result.canonicalize();
    Rational corr(k - 1, 4);
    corr.canonicalize();
    result -= corr;
    return result;
}

}  // namespace borwein
