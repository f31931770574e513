#pragma once

#include <borwein/asymptotics.hpp>
#include <borwein/numbers.hpp>
#include <borwein/series.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace borwein {

struct ResidueSets {
    std::set<long> P, N, Z;  // disjoint, covering {0..t-1}
};

/// Residues r mod t with alpha_t^(m)(r) positive / negative / zero.
ResidueSets pnz_sets(long t, long m);

/// Full per-(t,m) classification result.
struct SignTable {
    long t = 0;
    long m = 0;
    std::set<long> P, N, Z;
    std::vector<long> E;   // exceptional n: n mod t in P u N and sgn(c(n)) != sgn(alpha)
    long B = -1;           // dominance cutoff used for completeness of E
    long ups_period = 0;
    std::optional<std::string> special_case;    // "SC1" | "SC2" | "SC3"
    std::vector<long> sc_exceptions;            // isolated deviations from the refined pattern
};

/// Special-case tag for the three refined-pattern pairs, if any.
std::optional<std::string> special_case_tag(long t, long m);

/// Complete classification: P/N/Z from alpha, B from find_B (with certified
/// per-m alpha minima), exceptional set from exact coefficients up to B
/// (complete beyond B by the delta certificate), sign period with an
/// empirical minimality check.
SignTable classify_pair(long t, long m, mpfr_prec_t prec = 256);

/// P/N/Z only (no coefficient scan); enough to render the summary tables.
SignTable classify_pair_light(long t, long m);

struct ZeroCheckFlag {
    long n = 0;
    Integer value;  // observed coefficient at a known isolated deviation
};

struct ZeroCheckReport {
    long t = 0, m = 0;
    long n_checked = 0;
    bool ok = false;
    std::vector<ZeroCheckFlag> flagged;  // known isolated exceptions encountered
    std::vector<long> violations;        // any other deviation (hard failure)
    bool refined_pattern = false;        // true for the SC1/SC2/SC3 pairs
};

/// Verifies coefficient vanishing on Z-residues up to n <= N_check; for the
/// three refined-pattern pairs verifies the finer periodic sign pattern
/// instead. Known isolated deviations are flagged, anything else is a
/// violation.
ZeroCheckReport zero_residue_check(long t, long m, long N_check);

/// Least sign period: 9, 8, 25 for the three refined pairs, t otherwise;
/// verified minimal by exhibiting, for every proper divisor d, a witness
/// B < n <= B + 10t with sgn(c(n)) != sgn(c(n+d)).
long ups_verdict(long t, long m, mpfr_prec_t prec = 256);

/// Residues r mod t never hit by generalized pentagonal numbers j(3j+1)/2
/// (0 <= j < 2t); these force c_t^(1)(tn+r) = 0.
std::set<long> pentagonal_zero_residues(long t);
/// Same sieve with triangular numbers j(j+1)/2, forcing c_t^(3)(tn+s) = 0.
std::set<long> triangular_zero_residues(long t);

/// Closed-form sign prediction where a complete theorem applies:
/// t = 2 (any m), or t an odd prime with m = 1 or 3. Returns nullopt outside
/// the covered (t,m) or below the theorem's starting index for the class.
std::optional<Sign> predict_sign_closed_form(long t, long m, long n);

}  // namespace borwein
