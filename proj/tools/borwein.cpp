// borwein — exact coefficients of powers of the infinite Borwein product,
// rigorous sign classification, and the identity verification suite.

#include <borwein/alpha.hpp>
#include <borwein/asymptotics.hpp>
#include <borwein/classify.hpp>
#include <borwein/identities.hpp>
#include <borwein/io.hpp>
#include <borwein/series.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace borwein;

long env_long(const char* name, long fallback)
{
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

struct Config {
    long precision = 256;
    long identity_order = 500;
};

Config load_config()
{
    // precedence: flags (applied later) > BORWEIN_* environment > defaults
    Config c;
    c.precision = env_long("BORWEIN_PRECISION", 256);
    c.identity_order = env_long("BORWEIN_IDENTITY_ORDER", 500);
    return c;
}

std::pair<long, long> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

int cmd_coeffs(long t, long m, long n, const std::string& format)
{
    write_series(std::cout, borwein_coeffs(t, m, n), parse_format(format));
    return 0;
}

int cmd_dissect(long t, long r)
{
    const IntegerSeries s = read_tsv(std::cin);
    write_tsv(std::cout, dissect(s, t, r));
    return 0;
}

int cmd_alpha(long t, long m, long r, long precision)
{
    const CyclotomicElement a = alpha(t, m, r % t);
    const Sign s = alpha_sign(t, m, r % t);
    nlohmann::json j;
    j["t"] = t;
    j["m"] = m;
    j["r"] = r % t;
    j["sign"] = to_string(s);
    std::vector<std::string> coeffs;
    for (const auto& c : a.coeffs()) coeffs.push_back(to_decimal(c));
    j["cyclotomic_order"] = a.order();
    j["cyclotomic_coeffs"] = coeffs;
    if (s != Sign::zero) {
        const Interval v = a.eval_real(precision);
        j["value"] = {{"lower", v.lo().str(30)}, {"upper", v.hi().str(30)}};
    } else {
        j["value"] = {{"lower", "0"}, {"upper", "0"}};
    }
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_classify(long t, long m, const std::string& format, long precision)
{
    const SignTable table = classify_pair(t, m, precision);
    if (parse_format(format) == OutputFormat::markdown)
        std::cout << markdown_row(table) << '\n';
    else
        std::cout << to_json(table) << '\n';
    return 0;
}

int cmd_tables(const std::string& range, const std::string& format)
{
    const auto [t_lo, t_hi] = parse_range(range);
    if (t_lo < 1 || t_hi < t_lo) throw CLI::ValidationError("--t-range", "bad range");
    (void)format;  // tables are markdown-only; flag kept for interface symmetry

    std::vector<std::future<std::string>> jobs;
    for (long t = t_lo; t <= t_hi; ++t) {
        jobs.push_back(std::async(std::launch::async, [t]() {
            std::vector<SignTable> rows;
            const long m_max = t == 1 ? 1 : 24 / (t - 1);
            for (long m = 1; m <= m_max; ++m) rows.push_back(classify_pair_light(t, m));
            return markdown_table(t, rows);
        }));
    }
    bool first = true;
    for (auto& job : jobs) {
        if (!first) std::cout << '\n';
        std::cout << job.get();
        first = false;
    }
    return 0;
}

int cmd_bound(long t, long precision)
{
    std::vector<BigFloat> minima;
    const long m_max = t == 1 ? 0 : 24 / (t - 1);
    for (long m = 1; m <= m_max; ++m) {
        const AlphaLowerBound lb = alpha_abs_lower_bound(t, m);
        if (!lb.has_nonzero) {
            std::cerr << "bound: alpha vanishes identically for m=" << m << '\n';
            return 1;
        }
        minima.push_back(lb.bound);
    }
    const FindBResult res = find_B(t, minima, precision);
    nlohmann::json j;
    j["t"] = t;
    j["B"] = res.B;
    j["tail_certified_from"] = res.tail_certified_from;
    j["per_m_B"] = res.per_m_B;
    std::cout << j.dump() << '\n';
    return 0;
}

int cmd_verify_identities(long order, bool json_out)
{
    const RegistryReport report = run_registry(order);
    if (json_out) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& o : report.outcomes)
            j.push_back({{"id", o.id},
                         {"order", o.order},
                         {"ok", o.ok},
                         {"first_mismatch", o.first_mismatch}});
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& o : report.outcomes) {
            std::cout << (o.ok ? "ok   " : "FAIL ") << o.id << " (order " << o.order << ")";
            if (!o.ok) std::cout << " first mismatch at " << o.first_mismatch;
            std::cout << '\n';
        }
    }
    return report.all_ok ? 0 : 1;
}

int cmd_zero_check(long t, long m, long n_check, bool json_out)
{
    const ZeroCheckReport report = zero_residue_check(t, m, n_check);
    if (json_out) {
        nlohmann::json j;
        j["t"] = t;
        j["m"] = m;
        j["n_checked"] = report.n_checked;
        j["ok"] = report.ok;
        j["refined_pattern"] = report.refined_pattern;
        nlohmann::json flags = nlohmann::json::array();
        for (const auto& f : report.flagged) flags.push_back({{"n", f.n}, {"value", to_decimal(f.value)}});
        j["flagged"] = flags;
        j["violations"] = report.violations;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (report.ok ? "ok" : "FAIL") << " t=" << t << " m=" << m
                  << " checked n<=" << report.n_checked << '\n';
        for (const auto& f : report.flagged)
            std::cout << "  known exception at n=" << f.n << " value " << to_decimal(f.value) << '\n';
        for (long v : report.violations) std::cout << "  violation at n=" << v << '\n';
    }
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    Config config = load_config();

    CLI::App app{"exact Borwein-product coefficients and rigorous sign classification"};
    app.require_subcommand(1);
    app.add_option("--precision", config.precision, "working precision in bits")
        ->capture_default_str();

    long t = 2, m = 1, n = 100, r = 0;
    std::string format = "tsv";
    std::string range = "2..24";
    bool json_out = false;

    auto* coeffs = app.add_subcommand("coeffs", "print c_t^(m)(0..n)");
    coeffs->add_option("--t", t)->required();
    coeffs->add_option("--m", m)->required();
    coeffs->add_option("--n", n)->required();
    coeffs->add_option("--format", format, "json|csv|markdown|tsv")->capture_default_str();

    auto* dissectc = app.add_subcommand("dissect", "filter: keep rows with n = t*k + r (tsv stdin)");
    dissectc->add_option("t", t)->required();
    dissectc->add_option("r", r)->required();

    auto* alphac = app.add_subcommand("alpha", "exact alpha_t^(m)(r) and its certified sign");
    alphac->add_option("--t", t)->required();
    alphac->add_option("--m", m)->required();
    alphac->add_option("--r", r)->required();

    std::string classify_format = "json";
    auto* classifyc = app.add_subcommand("classify", "full sign classification for one (t,m)");
    classifyc->add_option("--t", t)->required();
    classifyc->add_option("--m", m)->required();
    classifyc->add_option("--format", classify_format, "json|markdown")->capture_default_str();

    auto* tablesc = app.add_subcommand("tables", "P/N/Z summary tables over a t-range");
    tablesc->add_option("--t-range", range)->capture_default_str();
    tablesc->add_option("--format", format, "markdown")->capture_default_str();

    auto* boundc = app.add_subcommand("bound", "certified dominance cutoff B(t)");
    boundc->add_option("--t", t)->required();

    auto* verifyc = app.add_subcommand("verify-identities", "run the identity registry");
    long order = config.identity_order;
    verifyc->add_option("--order", order, "minimum verification order")->capture_default_str();
    verifyc->add_flag("--json", json_out, "machine-readable report");

    auto* zeroc = app.add_subcommand("zero-check", "verify vanishing / refined sign patterns");
    zeroc->add_option("--t", t)->required();
    zeroc->add_option("--m", m)->required();
    long n_check = 2000;
    zeroc->add_option("--n", n_check, "check coefficients up to n")->capture_default_str();
    zeroc->add_flag("--json", json_out, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(coeffs)) return cmd_coeffs(t, m, n, format);
        if (app.got_subcommand(dissectc)) return cmd_dissect(t, r);
        if (app.got_subcommand(alphac)) return cmd_alpha(t, m, r, config.precision);
        if (app.got_subcommand(classifyc)) return cmd_classify(t, m, classify_format, config.precision);
        if (app.got_subcommand(tablesc)) return cmd_tables(range, format);
        if (app.got_subcommand(boundc)) return cmd_bound(t, config.precision);
        if (app.got_subcommand(verifyc)) return cmd_verify_identities(order, json_out);
        if (app.got_subcommand(zeroc)) return cmd_zero_check(t, m, n_check, json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
