#include <borwein/cyclotomic.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace borwein {

namespace {

// Exact division of polynomials with integer coefficients, divisor monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den)
{
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    if (dd < 0 || den.back() != 1) throw std::logic_error("divide_exact: divisor must be monic");
    if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
    std::vector<Integer> quot(dn - dd + 1);
    for (long i = dn - dd; i >= 0; --i) {
        Integer c = num[i + dd];
        if (c == 0) continue;
        quot[i] = c;
        for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::map<long, std::vector<Integer>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

std::vector<Integer> compute_cyclotomic(long n)
{
    if (n == 1) return {Integer(-1), Integer(1)};  // x - 1
    // x^n - 1 divided by prod_{d|n, d<n} Phi_d
    std::vector<Integer> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

// Remainder of poly (ascending coefficients) mod Phi_N; Phi is monic.
std::vector<Integer> reduce_mod(std::vector<Integer> poly, const std::vector<Integer>& phi)
{
    const long dd = static_cast<long>(phi.size()) - 1;
    long dn = static_cast<long>(poly.size()) - 1;
    while (dn >= dd) {
        Integer c = poly[dn];
        if (c != 0)
            for (long j = 0; j <= dd; ++j) poly[dn - dd + j] -= c * phi[j];
        --dn;
        poly.pop_back();
    }
    poly.resize(dd);
    return poly;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(n);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return g_cyclo_cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicElement::CyclotomicElement(long order) : order_(order)
{
    if (order < 1) throw std::invalid_argument("CyclotomicElement: order must be positive");
    coeffs_.resize(cyclotomic_polynomial(order).size() - 1);
}

CyclotomicElement CyclotomicElement::from_poly(long order, std::vector<Integer> raw)
{
    CyclotomicElement e(order);
    e.coeffs_ = reduce_mod(std::move(raw), cyclotomic_polynomial(order));
    return e;
}

CyclotomicElement CyclotomicElement::root_power(long order, long k)
{
    k %= order;
    if (k < 0) k += order;
    std::vector<Integer> raw(k + 1);
    raw[k] = 1;
    return from_poly(order, std::move(raw));
}

CyclotomicElement CyclotomicElement::constant(long order, Integer value)
{
    CyclotomicElement e(order);
    if (!e.coeffs_.empty()) e.coeffs_[0] = std::move(value);
    return e;
}

bool CyclotomicElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicElement CyclotomicElement::conjugate() const
{
    std::vector<Integer> raw(order_);
    for (long k = 0; k < degree(); ++k) {
        if (coeffs_[k] == 0) continue;
        raw[(order_ - k) % order_] += coeffs_[k];
    }
    return from_poly(order_, std::move(raw));
}

Interval CyclotomicElement::eval_real(mpfr_prec_t prec) const
{
    const Interval pi = Interval::pi(prec);
    Interval sum(prec);
    for (long k = 0; k < degree(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rational ratio(2 * k, order_);
        ratio.canonicalize();
        const Interval angle = Interval::of(ratio, prec) * pi;
        sum = sum + Interval::of(coeffs_[k], prec) * angle.cos();
    }
    return sum;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b)
{
    if (a.order_ != b.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    CyclotomicElement r = a;
    for (long k = 0; k < r.degree(); ++k) r.coeffs_[k] += b.coeffs_[k];
    return r;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b)
{
    if (a.order_ != b.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    CyclotomicElement r = a;
    for (long k = 0; k < r.degree(); ++k) r.coeffs_[k] -= b.coeffs_[k];
    return r;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b)
{
    if (a.order_ != b.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    std::vector<Integer> raw(2 * a.degree());
    for (long i = 0; i < a.degree(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; j < b.degree(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CyclotomicElement::from_poly(a.order_, std::move(raw));
}

}  // namespace borwein
