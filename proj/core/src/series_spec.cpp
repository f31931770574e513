#include <borwein/series_spec.hpp>

#include <algorithm>
#include <sstream>

namespace borwein {

IntegerSeries SeriesSpec::build(long order) const
{
    if (shift > order || coeff == 0) return IntegerSeries(order);
    const long inner = order - shift;
    IntegerSeries acc = IntegerSeries::one(inner);
    for (const auto& f : factors) acc = acc * euler_factor(f.a, f.b, f.e, inner);
    IntegerSeries out(order);
    for (long i = 0; i <= inner; ++i) out.at(i + shift) = coeff * acc[i];
    return out;
}

std::string SeriesSpec::str() const
{
    std::ostringstream os;
    if (coeff != 1 || (factors.empty() && shift == 0)) os << coeff.get_str();
    if (shift != 0) os << (coeff != 1 ? "*" : "") << "q^" << shift;
    for (const auto& f : factors) {
        os << "(q^" << f.a << ";q^" << f.b << ")";
        if (f.e != 1) os << "^" << f.e;
    }
    return os.str();
}

IntegerSeries SeriesCombination::build(long order) const
{
    IntegerSeries acc(order);
    for (const auto& t : terms) acc = acc + t.build(order);
    return acc;
}

std::string SeriesCombination::str() const
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i].str();
    }
    return out;
}

VerifyResult verify_identity(const IntegerSeries& lhs, const IntegerSeries& rhs)
{
    const long n = std::min(lhs.order(), rhs.order());
    for (long i = 0; i <= n; ++i)
        if (lhs[i] != rhs[i]) return {false, i, n};
    return {true, -1, n};
}

VerifyResult verify_identity(const SeriesCombination& lhs, const SeriesCombination& rhs, long order)
{
    return verify_identity(lhs.build(order), rhs.build(order));
}

}  // namespace borwein
