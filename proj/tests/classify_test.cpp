#include <borwein/alpha.hpp>
#include <borwein/classify.hpp>
#include <borwein/io.hpp>
#include <borwein/series.hpp>

#include <doctest.h>

#include <set>

using namespace borwein;

namespace {

std::set<long> S(std::initializer_list<long> v) { return {v}; }

}  // namespace

TEST_CASE("pnz_sets: pinned rows")
{
    const ResidueSets r54 = pnz_sets(5, 4);
    CHECK(r54.P == S({0, 2, 3}));
    CHECK(r54.N == S({1, 4}));
    CHECK(r54.Z.empty());

    const ResidueSets r231 = pnz_sets(23, 1);
    CHECK(r231.Z == S({4, 6, 9, 10, 13, 14, 16, 18, 19, 20, 21}));
    CHECK(r231.P == S({0, 3, 5, 7, 11, 22}));

    const ResidueSets r1 = pnz_sets(1, 9);
    CHECK(r1.P == S({0}));
    CHECK(r1.N.empty());
    CHECK(r1.Z.empty());
}

TEST_CASE("pnz_sets: partition invariant over the full grid")
{
    for (long t = 2; t <= 24; ++t)
        for (long m = 1; m <= 24 / (t - 1); ++m) {
            const ResidueSets r = pnz_sets(t, m);
            CHECK(static_cast<long>(r.P.size() + r.N.size() + r.Z.size()) == t);
            for (long x : r.P) CHECK(!r.N.count(x));
            for (long x : r.P) CHECK(!r.Z.count(x));
            for (long x : r.N) CHECK(!r.Z.count(x));
        }
}

TEST_CASE("pentagonal / triangular zero residues: the tabulated sieves")
{
    CHECK(pentagonal_zero_residues(1).empty());
    CHECK(triangular_zero_residues(1).empty());

    CHECK(triangular_zero_residues(3) == S({2}));
    CHECK(pentagonal_zero_residues(5) == S({3, 4}));
    CHECK(triangular_zero_residues(5) == S({2, 4}));
    CHECK(triangular_zero_residues(6) == S({2, 5}));
    CHECK(pentagonal_zero_residues(7) == S({3, 4, 6}));
    CHECK(triangular_zero_residues(7) == S({2, 4, 5}));
    CHECK(triangular_zero_residues(9) == S({2, 4, 5, 7, 8}));
    CHECK(pentagonal_zero_residues(10) == S({3, 4, 8, 9}));
    CHECK(pentagonal_zero_residues(11) == S({3, 6, 8, 9, 10}));
    CHECK(pentagonal_zero_residues(13) == S({3, 4, 6, 8, 10, 11}));
    CHECK(pentagonal_zero_residues(14) == S({3, 4, 6, 10, 11, 13}));
    CHECK(pentagonal_zero_residues(15) == S({3, 4, 8, 9, 13, 14}));
    CHECK(pentagonal_zero_residues(17) == S({3, 4, 8, 10, 11, 13, 14, 16}));
    CHECK(pentagonal_zero_residues(19) == S({4, 6, 8, 9, 10, 11, 14, 17, 18}));
    CHECK(pentagonal_zero_residues(20) == S({3, 4, 8, 9, 13, 14, 18, 19}));
    CHECK(pentagonal_zero_residues(21) == S({3, 4, 6, 10, 11, 13, 17, 18, 20}));
    CHECK(pentagonal_zero_residues(22) == S({3, 6, 8, 9, 10, 14, 17, 19, 20, 21}));
    CHECK(pentagonal_zero_residues(23) == S({4, 6, 9, 10, 13, 14, 16, 18, 19, 20, 21}));
}

TEST_CASE("zero-residue sieves match the alpha-derived Z sets")
{
    // m = 1: equality for every t <= 24
    for (long t = 1; t <= 24; ++t)
        CHECK(pentagonal_zero_residues(t) == pnz_sets(t, 1).Z);
    // m = 3: equality except Z_9^(3) = H_9^(3) u {1}
    for (long t = 1; t * 2 <= 24; ++t) {
        std::set<long> expected = triangular_zero_residues(t);
        if (t == 9) expected.insert(1);
        CHECK(expected == pnz_sets(t, 3).Z);
    }
}

TEST_CASE("special-case tags")
{
    CHECK(special_case_tag(3, 9) == std::optional<std::string>("SC1"));
    CHECK(special_case_tag(4, 4) == std::optional<std::string>("SC2"));
    CHECK(special_case_tag(5, 5) == std::optional<std::string>("SC3"));
    CHECK(!special_case_tag(5, 4));
}

TEST_CASE("exceptional sets: small pinned cases")
{
    const SignTable t31 = classify_pair(3, 1);
    CHECK(t31.E == std::vector<long>{5});
    CHECK(t31.ups_period == 3);

    const SignTable t72 = classify_pair(7, 2);
    CHECK(t72.E.empty());

    const SignTable t131 = classify_pair(13, 1);
    CHECK(t131.E == std::vector<long>{9, 35});
    CHECK(t131.B <= 3430);
}

TEST_CASE("SignTable invariants on emitted tables")
{
    for (auto [t, m] : {std::pair<long, long>{3, 1}, {4, 8}, {5, 5}, {8, 2}}) {
        const SignTable table = classify_pair(t, m);
        CHECK(static_cast<long>(table.P.size() + table.N.size() + table.Z.size()) == t);
        const IntegerSeries coeffs = borwein_coeffs(t, m, table.B);
        for (long n : table.E) {
            const long r = n % t;
            CHECK((table.P.count(r) || table.N.count(r)));
            const Sign claimed = table.P.count(r) ? Sign::positive : Sign::negative;
            CHECK(sign_of(coeffs[n]) != claimed);
        }
    }
}

TEST_CASE("ups_verdict: special cases and the generic period")
{
    CHECK(ups_verdict(4, 4) == 8);
    CHECK(ups_verdict(5, 5) == 25);
    CHECK(ups_verdict(7, 4) == 7);
    CHECK(ups_verdict(3, 9) == 9);
}

TEST_CASE("zero_residue_check: vanishing with the known flagged exceptions")
{
    const ZeroCheckReport r48 = zero_residue_check(4, 8, 400);
    CHECK(r48.ok);
    REQUIRE(r48.flagged.size() == 1);
    CHECK(r48.flagged[0].n == 1);
    CHECK(r48.flagged[0].value == -8);

    const ZeroCheckReport r93 = zero_residue_check(9, 3, 400);
    CHECK(r93.ok);
    REQUIRE(r93.flagged.size() == 1);
    CHECK(r93.flagged[0].n == 1);
    CHECK(r93.flagged[0].value == -3);

    const ZeroCheckReport r51 = zero_residue_check(5, 1, 400);
    CHECK(r51.ok);
    CHECK(r51.flagged.empty());
}

TEST_CASE("zero_residue_check: refined patterns")
{
    const ZeroCheckReport r39 = zero_residue_check(3, 9, 400);
    CHECK(r39.ok);
    CHECK(r39.refined_pattern);
    CHECK(r39.flagged.empty());

    const ZeroCheckReport r44 = zero_residue_check(4, 4, 400);
    CHECK(r44.ok);
    CHECK(r44.flagged.empty());

    const ZeroCheckReport r55 = zero_residue_check(5, 5, 400);
    CHECK(r55.ok);
    REQUIRE(r55.flagged.size() == 1);
    CHECK(r55.flagged[0].n == 35);
    CHECK(r55.flagged[0].value == 0);

    // the derived (8,2) pattern: alpha vanishes on even residues but the
    // coefficients follow a strict period-8 sign pattern there
    const ZeroCheckReport r82 = zero_residue_check(8, 2, 400);
    CHECK(r82.ok);
    CHECK(r82.refined_pattern);
    REQUIRE(r82.flagged.size() == 1);
    CHECK(r82.flagged[0].n == 8);
    CHECK(r82.flagged[0].value == 0);
}

TEST_CASE("predict_sign_closed_form: pinned examples")
{
    CHECK(predict_sign_closed_form(2, 7, 13) == Sign::negative);
    CHECK(predict_sign_closed_form(2, 1, 2) == Sign::zero);
    CHECK(predict_sign_closed_form(2, 1, 4) == Sign::positive);
    // 147 = 29*5 + 2 and 2 = j(3j+1)/2 at j = 1
    CHECK(predict_sign_closed_form(29, 1, 147) == Sign::negative);
    // outside the covered pairs
    CHECK(!predict_sign_closed_form(9, 1, 50));
    CHECK(!predict_sign_closed_form(7, 2, 50));
    // below the starting index of the class: falls back to exact computation
    CHECK(!predict_sign_closed_form(29, 1, 2));
    // unattained residues are zero for every n
    CHECK(predict_sign_closed_form(5, 1, 3) == Sign::zero);
    CHECK(predict_sign_closed_form(5, 3, 2) == Sign::zero);
}

TEST_CASE("predict_sign_closed_form agrees with exact coefficients")
{
    for (long m = 1; m <= 6; ++m) {
        const IntegerSeries c = borwein_coeffs(2, m, 400);
        for (long n = 0; n <= 400; ++n) {
            const auto pred = predict_sign_closed_form(2, m, n);
            REQUIRE(pred.has_value());
            CHECK(sign_of(c[n]) == *pred);
        }
    }
    for (long p : {5L, 7L, 11L})
        for (long m : {1L, 3L}) {
            const IntegerSeries c = borwein_coeffs(p, m, 600);
            long applied = 0;
            for (long n = 0; n <= 600; ++n) {
                const auto pred = predict_sign_closed_form(p, m, n);
                if (!pred) continue;
                ++applied;
                CHECK(sign_of(c[n]) == *pred);
                if (sign_of(c[n]) != *pred) return;
            }
            CHECK(applied > 500);  // the fallback region is small
        }
}

TEST_CASE("classification JSON carries the full schema")
{
    const SignTable table = classify_pair(5, 5);
    const std::string json = to_json(table);
    CHECK(json.find("\"t\":5") != std::string::npos);
    CHECK(json.find("\"ups_period\":25") != std::string::npos);
    CHECK(json.find("SC3") != std::string::npos);
    CHECK(json.find("\"sc_exceptions\":[35]") != std::string::npos);
}
