#include <borwein/identities.hpp>

#include <borwein/theta.hpp>

#include <algorithm>

namespace borwein {

namespace {

IntegerSeries pentagonal_sum(long order)
{
    IntegerSeries s(order);
    for (long j = 0;; ++j) {
        const long e1 = j * (3 * j + 1) / 2;
        const long e2 = j * (3 * j - 1) / 2;
        if (e1 > order && e2 > order && j > 0) break;
        const Integer coeff = (j % 2 == 0) ? 1 : -1;
        if (e1 <= order) s.at(e1) += coeff;
        if (j > 0 && e2 <= order) s.at(e2) += coeff;
    }
    return s;
}

IntegerSeries jacobi_sum(long order)
{
    IntegerSeries s(order);
    for (long j = 0; j * (j + 1) / 2 <= order; ++j)
        s.at(j * (j + 1) / 2) += (j % 2 == 0 ? Integer(2 * j + 1) : Integer(-(2 * j + 1)));
    return s;
}

IntegerSeries cubic_a_inflated(long order)
{
    return cubic_a(order / 3).inflate(3, order);
}

// Andrews' p-dissection of (q;q)/(q^p;q^p) in terms of
// Q_{k,i}(1;q^p) = (q^{ip}, q^{(3p-i)p}, q^{3p^2}; q^{3p^2}) / (q^p;q^p),
// with k = (3p-1)/2.
SeriesCombination andrews_rhs(long p)
{
    const long mod = 3 * p * p;
    auto Q = [&](long i, Integer coeff, long shift) {
        return spec({{i * p, mod, 1}, {(3 * p - i) * p, mod, 1}, {mod, mod, 1}, {p, p, -1}},
                    std::move(coeff), shift);
    };
    SeriesCombination rhs;
    rhs.terms.push_back(Q((3 * p - 1) / 2, 1, 0));
    for (long r = 1; r <= (p - 1) / 2; ++r) {
        const Integer sign = (r % 2 == 0) ? 1 : -1;
        const long base = r * (3 * r - 1) / 2;
        rhs.terms.push_back(Q((3 * p + 1) / 2 - 3 * r, sign, base));
        rhs.terms.push_back(Q((3 * p - 1) / 2 - 3 * r, sign, base + r));
    }
    return rhs;
}

std::vector<IdentityRecord> build_registry()
{
    std::vector<IdentityRecord> reg;
    auto add = [&reg](std::string id, long order, std::function<IntegerSeries(long)> lhs,
                      std::function<IntegerSeries(long)> rhs) {
        reg.push_back({std::move(id), order, std::move(lhs), std::move(rhs)});
    };
    auto combo = [](SeriesCombination c) {
        return [c = std::move(c)](long n) { return c.build(n); };
    };
    auto one_spec = [combo](SeriesSpec s) { return combo(SeriesCombination{{std::move(s)}}); };

    add("euler-pentagonal", 500,
        [](long n) { return euler_factor_direct(1, 1, 1, n); },
        pentagonal_sum);

    add("jacobi-cube", 500,
        [](long n) { return euler_factor_direct(1, 1, 3, n); },
        jacobi_sum);

    add("phi-eta-quotient", 500, theta_phi,
        one_spec(spec({{2, 2, 5}, {1, 1, -2}, {4, 4, -2}})));

    add("psi-eta-quotient", 500, theta_psi,
        one_spec(spec({{2, 2, 2}, {1, 1, -1}})));

    add("cubic-b-eta", 150, cubic_b, one_spec(spec({{1, 1, 3}, {3, 3, -1}})));

    add("cubic-c-eta", 150, cubic_c_shifted, one_spec(spec({{3, 3, 3}, {1, 1, -1}})));

    add("cubic-a-eta", 150, cubic_a,
        combo(SeriesCombination{{spec({{1, 1, 3}, {3, 3, -1}}),
                                 spec({{9, 9, 3}, {3, 3, -1}}, 9, 1)}}));

    add("cubic-cubes", 150,
        [](long n) { return cubic_a(n).pow(3); },
        [](long n) {
            return cubic_b(n).pow(3) + cubic_c_shifted(n).pow(3).scaled(27).shifted(1);
        });

    add("cubic-a-triplication-1", 150, cubic_a,
        [one_spec](long n) {
            return cubic_a_inflated(n).scaled(3) - one_spec(spec({{1, 1, 3}, {3, 3, -1}}, 2))(n);
        });

    add("cubic-a-triplication-2", 150, cubic_a,
        [one_spec](long n) {
            return cubic_a_inflated(n) + one_spec(spec({{9, 9, 3}, {3, 3, -1}}, 6, 1))(n);
        });

    add("cubic-b-trisection", 150,
        one_spec(spec({{1, 1, 3}, {3, 3, -1}})),
        [one_spec](long n) {
            return cubic_a_inflated(n) - one_spec(spec({{9, 9, 3}, {3, 3, -1}}, 3, 1))(n);
        });

    add("euler4-2-dissection", 500,
        one_spec(spec({{1, 1, 4}})),
        combo(SeriesCombination{{spec({{4, 4, 10}, {2, 2, -2}, {8, 8, -4}}),
                                 spec({{2, 2, 2}, {8, 8, 4}, {4, 4, -2}}, -4, 1)}}));

    add("euler8-2-dissection", 500,
        one_spec(spec({{1, 1, 8}})),
        combo(SeriesCombination{{spec({{4, 4, 20}, {2, 2, -4}, {8, 8, -8}}),
                                 spec({{2, 2, 4}, {8, 8, 8}, {4, 4, -4}}, 16, 2),
                                 spec({{4, 4, 8}}, -8, 1)}}));

    add("euler-inverse-square-2-dissection", 500,
        one_spec(spec({{1, 1, -2}})),
        combo(SeriesCombination{{spec({{8, 8, 5}, {2, 2, -5}, {16, 16, -2}}),
                                 spec({{4, 4, 2}, {16, 16, 2}, {2, 2, -5}, {8, 8, -1}}, 2, 1)}}));

    add("borwein44-even-part", 500,
        [](long n) { return dissect(borwein_coeffs(4, 4, 2 * n), 2, 0); },
        one_spec(spec({{2, 2, 6}, {1, 1, -2}, {4, 4, -4}})));

    add("borwein44-mod4-0", 500,
        [](long n) { return dissect(borwein_coeffs(4, 4, 4 * n), 4, 0); },
        one_spec(spec({{1, 1, 1}, {4, 4, 5}, {2, 2, -4}, {8, 8, -2}})));

    add("borwein44-mod4-2", 500,
        [](long n) { return dissect(borwein_coeffs(4, 4, 4 * n + 2), 4, 2); },
        one_spec(spec({{1, 1, 1}, {8, 8, 2}, {2, 2, -2}, {4, 4, -1}}, 2)));

    add("borwein93-trisection", 150,
        [](long n) { return borwein_coeffs(9, 3, n); },
        [one_spec](long n) {
            return IntegerSeries::monomial(-3, 1, n) +
                   cubic_a_inflated(n) * one_spec(spec({{3, 3, 1}, {9, 9, -3}}))(n);
        });

    add("rr-quotient-5-dissection", 500,
        one_spec(spec({{1, 1, 1}, {25, 25, -1}})),
        combo(SeriesCombination{{spec({{10, 25, 1}, {15, 25, 1}, {5, 25, -1}, {20, 25, -1}}),
                                 spec({}, -1, 1),
                                 spec({{5, 25, 1}, {20, 25, 1}, {10, 25, -1}, {15, 25, -1}}, -1, 2)}}));

    add("rr-quotient-fifth-power", 500,
        one_spec(spec({{5, 5, 6}, {25, 25, -6}})),
        combo(SeriesCombination{{spec({{10, 25, 5}, {15, 25, 5}, {5, 25, -5}, {20, 25, -5}}),
                                 spec({}, -11, 5),
                                 spec({{5, 25, 5}, {20, 25, 5}, {10, 25, -5}, {15, 25, -5}}, -1, 10)}}));

    add("euler5-5-dissection", 500,
        [](long n) { return dissect(euler_factor(1, 1, 5, 5 * n), 5, 0); },
        one_spec(spec({{1, 1, 6}, {5, 5, -1}})));

    for (long p : {3L, 5L, 7L}) {
        add("andrews-dissection-p" + std::to_string(p), 500,
            [p](long n) { return borwein_coeffs(p, 1, n); },
            combo(andrews_rhs(p)));
    }

    return reg;
}

}  // namespace

const std::vector<IdentityRecord>& identity_registry()
{
    static const std::vector<IdentityRecord> reg = build_registry();
    return reg;
}

RegistryReport run_registry(long min_order)
{
    RegistryReport report;
    report.all_ok = true;
    for (const auto& rec : identity_registry()) {
        const long order = std::max(rec.default_order, min_order);
        const VerifyResult v = verify_identity(rec.lhs(order), rec.rhs(order));
        report.outcomes.push_back({rec.id, order, v.ok, v.first_mismatch});
        if (!v.ok) report.all_ok = false;
    }
    return report;
}

}  // namespace borwein
