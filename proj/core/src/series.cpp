#include <borwein/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace borwein {

namespace {

inline void add_mul(Integer& acc, const Integer& a, const Integer& b)
{
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void sub_mul(Integer& acc, const Integer& a, const Integer& b)
{
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// In-place multiply by (1 - q^e).
void mul_binomial(IntegerSeries& s, long e)
{
    for (long i = s.order(); i >= e; --i) s.at(i) -= s[i - e];
}

// In-place divide by (1 - q^e), i.e. multiply by 1 + q^e + q^{2e} + ...
void div_binomial(IntegerSeries& s, long e)
{
    for (long i = e; i <= s.order(); ++i) s.at(i) += s[i - e];
}

}  // namespace

bool IntegerSeries::is_zero() const
{
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

IntegerSeries IntegerSeries::truncated(long new_order) const
{
    if (new_order > order()) throw std::invalid_argument("truncated: cannot extend exact order");
    IntegerSeries s(new_order);
    for (long i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
}

IntegerSeries IntegerSeries::shifted(long s) const
{
    if (s < 0) throw std::invalid_argument("shifted: negative shift");
    IntegerSeries r(order());
    for (long i = s; i <= order(); ++i) r.c_[i] = c_[i - s];
    return r;
}

IntegerSeries IntegerSeries::inflate(long k, long new_order) const
{
    if (k < 1) throw std::invalid_argument("inflate: k must be positive");
    if (order() < new_order / k)
        throw std::invalid_argument("inflate: input order too small for requested order");
    IntegerSeries r(new_order);
    for (long i = 0; i * k <= new_order; ++i) r.c_[i * k] = c_[i];
    return r;
}

IntegerSeries IntegerSeries::scaled(const Integer& v) const
{
    IntegerSeries r(order());
    for (long i = 0; i <= order(); ++i) r.c_[i] = c_[i] * v;
    return r;
}

IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b)
{
    const long n = std::min(a.order(), b.order());
    IntegerSeries r(n);
    for (long i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b)
{
    const long n = std::min(a.order(), b.order());
    IntegerSeries r(n);
    for (long i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

IntegerSeries operator-(const IntegerSeries& a)
{
    IntegerSeries r(a.order());
    for (long i = 0; i <= a.order(); ++i) r.c_[i] = -a.c_[i];
    return r;
}

IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b)
{
    const long n = std::min(a.order(), b.order());
    IntegerSeries r(n);
    for (long i = 0; i <= n; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (b.c_[j] == 0) continue;
            add_mul(r.c_[i + j], a.c_[i], b.c_[j]);
        }
    }
    return r;
}

IntegerSeries IntegerSeries::inverse() const
{
    if (c_[0] != 1 && c_[0] != -1)
        throw std::domain_error("inverse: constant term must be a unit");
    const long n = order();
    IntegerSeries r(n);
    const bool neg = c_[0] == -1;
    r.c_[0] = c_[0];
    for (long i = 1; i <= n; ++i) {
        Integer acc = 0;
        for (long k = 1; k <= i; ++k) {
            if (c_[k] == 0) continue;
            add_mul(acc, c_[k], r.c_[i - k]);
        }
        r.c_[i] = neg ? acc : -acc;
    }
    return r;
}

IntegerSeries IntegerSeries::divide_exact(const IntegerSeries& d) const
{
    long v = 0;
    while (v <= d.order() && d.c_[v] == 0) ++v;
    if (v > d.order()) throw std::domain_error("divide_exact: division by zero series");
    if (d.c_[v] != 1 && d.c_[v] != -1)
        throw std::domain_error("divide_exact: lowest divisor coefficient must be a unit");
    for (long i = 0; i < v && i <= order(); ++i)
        if (c_[i] != 0) throw std::domain_error("divide_exact: not divisible (valuation)");
    const long n = std::min(order(), d.order()) - v;
    const bool neg = d.c_[v] == -1;
    IntegerSeries r(n);
    for (long i = 0; i <= n; ++i) {
        Integer acc = c_[i + v];
        for (long k = 1; k <= i; ++k) {
            if (d.c_[v + k] == 0) continue;
            sub_mul(acc, d.c_[v + k], r.c_[i - k]);
        }
        r.c_[i] = neg ? Integer(-acc) : acc;
    }
    return r;
}

IntegerSeries IntegerSeries::pow(long e) const
{
    if (e < 0) throw std::invalid_argument("pow: negative exponent (use inverse)");
    IntegerSeries result = IntegerSeries::one(order());
    IntegerSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

SparseSeries pentagonal_series(long b, long order)
{
    if (b < 1) throw std::invalid_argument("pentagonal_series: b must be positive");
    SparseSeries s;
    for (long j = 0;; ++j) {
        const long e1 = b * (j * (3 * j + 1) / 2);
        const long e2 = b * (j * (3 * j - 1) / 2);
        const bool in1 = e1 <= order, in2 = e2 <= order;
        if (!in1 && !in2 && j > 0) break;
        const Integer coeff = (j % 2 == 0) ? 1 : -1;
        if (in1) s.terms.emplace_back(e1, coeff);
        if (j > 0 && in2) s.terms.emplace_back(e2, coeff);
    }
    std::sort(s.terms.begin(), s.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return s;
}

IntegerSeries mul_sparse(const IntegerSeries& dense, const SparseSeries& sparse)
{
    const long n = dense.order();
    IntegerSeries r(n);
    for (const auto& [e, coeff] : sparse.terms) {
        if (e > n) break;
        if (coeff == 1)
            for (long i = e; i <= n; ++i) r.at(i) += dense[i - e];
        else if (coeff == -1)
            for (long i = e; i <= n; ++i) r.at(i) -= dense[i - e];
        else
            for (long i = e; i <= n; ++i) add_mul(r.at(i), coeff, dense[i - e]);
    }
    return r;
}

IntegerSeries div_sparse(const IntegerSeries& dense, const SparseSeries& sparse)
{
    if (sparse.terms.empty() || sparse.terms.front().first != 0 ||
        (sparse.terms.front().second != 1 && sparse.terms.front().second != -1))
        throw std::domain_error("div_sparse: constant term must be a unit");
    const long n = dense.order();
    const bool neg = sparse.terms.front().second == -1;
    IntegerSeries r(n);
    for (long i = 0; i <= n; ++i) {
        Integer acc = dense[i];
        for (std::size_t k = 1; k < sparse.terms.size(); ++k) {
            const long e = sparse.terms[k].first;
            if (e > i) break;
            sub_mul(acc, sparse.terms[k].second, r[i - e]);
        }
        r.at(i) = neg ? Integer(-acc) : acc;
    }
    return r;
}

IntegerSeries to_dense(const SparseSeries& sparse, long order)
{
    IntegerSeries r(order);
    for (const auto& [e, coeff] : sparse.terms)
        if (e <= order) r.at(e) += coeff;
    return r;
}

namespace {

IntegerSeries euler_factor_impl(long a, long b, long e, long order, bool allow_pentagonal)
{
    if (b < 1) throw std::invalid_argument("euler_factor: b must be positive");
    if (a < 0) throw std::invalid_argument("euler_factor: a must be nonnegative");
    if (order < 0) throw std::invalid_argument("euler_factor: order must be nonnegative");
    if (e == 0) return IntegerSeries::one(order);
    if (a == 0) {
        // (1; q^b) has a vanishing leading factor: the product is identically 0
        if (e < 0) throw std::domain_error("euler_factor: constant term not a unit");
        return IntegerSeries(order);
    }

    const long reps = e > 0 ? e : -e;
    IntegerSeries acc = IntegerSeries::one(order);

    if (allow_pentagonal && a % b == 0) {
        // (q^{kb}; q^b) = (q^b; q^b) / prod_{j=1}^{k-1} (1 - q^{jb})
        const SparseSeries pent = pentagonal_series(b, order);
        for (long rep = 0; rep < reps; ++rep)
            acc = e > 0 ? mul_sparse(acc, pent) : div_sparse(acc, pent);
        const long k = a / b;
        for (long j = 1; j < k; ++j) {
            if (j * b > order) break;
            for (long rep = 0; rep < reps; ++rep)
                e > 0 ? div_binomial(acc, j * b) : mul_binomial(acc, j * b);
        }
    } else {
        for (long rep = 0; rep < reps; ++rep)
            for (long m = a; m <= order; m += b)
                e > 0 ? mul_binomial(acc, m) : div_binomial(acc, m);
    }
    return acc;
}

}  // namespace

IntegerSeries euler_factor(long a, long b, long e, long order)
{
    return euler_factor_impl(a, b, e, order, true);
}

IntegerSeries euler_factor_direct(long a, long b, long e, long order)
{
    return euler_factor_impl(a, b, e, order, false);
}

IntegerSeries borwein_coeffs(long t, long m, long order)
{
    if (t < 1) throw std::invalid_argument("borwein_coeffs: t must be positive");
    if (m < 1) throw std::invalid_argument("borwein_coeffs: m must be positive");
    IntegerSeries r = IntegerSeries::one(order);
    const SparseSeries p1 = pentagonal_series(1, order);
    const SparseSeries pt = pentagonal_series(t, order);
    for (long i = 0; i < m; ++i) r = mul_sparse(r, p1);
    for (long i = 0; i < m; ++i) r = div_sparse(r, pt);
    return r;
}

IntegerSeries dissect(const IntegerSeries& s, long t, long r)
{
    if (t < 1 || r < 0 || r >= t) throw std::invalid_argument("dissect: need 0 <= r < t");
    const long n = (s.order() - r) / t;
    IntegerSeries out(std::max(n, 0L));
    for (long i = 0; i <= n; ++i) out.at(i) = s[t * i + r];
    return out;
}

IntegerSeries interleave(std::span<const IntegerSeries> parts, long order)
{
    const long t = static_cast<long>(parts.size());
    if (t < 1) throw std::invalid_argument("interleave: empty parts");
    IntegerSeries out(order);
    for (long r = 0; r < t; ++r)
        for (long i = 0; t * i + r <= order; ++i) {
            if (i > parts[r].order()) throw std::invalid_argument("interleave: part too short");
            out.at(t * i + r) = parts[r][i];
        }
    return out;
}

}  // namespace borwein
