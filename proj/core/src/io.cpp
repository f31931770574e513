#include <borwein/io.hpp>

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace borwein {

OutputFormat parse_format(const std::string& name)
{
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "tsv") return OutputFormat::tsv;
    throw std::invalid_argument("unknown output format: " + name);
}

void write_tsv(std::ostream& os, const IntegerSeries& s)
{
    for (long n = 0; n <= s.order(); ++n) os << n << '\t' << to_decimal(s[n]) << '\n';
}

IntegerSeries read_tsv(std::istream& is)
{
    std::vector<std::pair<long, Integer>> rows;
    long max_n = -1;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long n;
        std::string coeff;
        if (!(ls >> n >> coeff)) throw std::invalid_argument("read_tsv: malformed row: " + line);
        rows.emplace_back(n, Integer(coeff));
        max_n = std::max(max_n, n);
    }
    if (max_n < 0) throw std::invalid_argument("read_tsv: empty input");
    IntegerSeries s(max_n);
    for (auto& [n, c] : rows) s.at(n) = std::move(c);
    return s;
}

std::string to_json_coeffs(const IntegerSeries& s)
{
    nlohmann::json arr = nlohmann::json::array();
    for (long n = 0; n <= s.order(); ++n) arr.push_back(to_decimal(s[n]));
    return arr.dump();
}

void write_series(std::ostream& os, const IntegerSeries& s, OutputFormat format)
{
    switch (format) {
        case OutputFormat::tsv:
            write_tsv(os, s);
            break;
        case OutputFormat::csv:
            os << "n,coefficient\n";
            for (long n = 0; n <= s.order(); ++n) os << n << ',' << to_decimal(s[n]) << '\n';
            break;
        case OutputFormat::markdown:
            os << "| n | coefficient |\n|---|---|\n";
            for (long n = 0; n <= s.order(); ++n)
                os << "| " << n << " | " << to_decimal(s[n]) << " |\n";
            break;
        case OutputFormat::json:
            os << to_json_coeffs(s) << '\n';
            break;
    }
}

std::string format_residue_set(const std::set<long>& s)
{
    std::string out = "{";
    bool first = true;
    for (long r : s) {
        if (!first) out += ",";
        out += std::to_string(r);
        first = false;
    }
    return out + "}";
}

std::string to_json(const SignTable& table)
{
    nlohmann::json j;
    j["t"] = table.t;
    j["m"] = table.m;
    j["P"] = table.P;
    j["N"] = table.N;
    j["Z"] = table.Z;
    j["E"] = table.E;
    j["B"] = table.B;
    j["ups_period"] = table.ups_period;
    j["special_case"] = table.special_case ? nlohmann::json(*table.special_case) : nlohmann::json();
    if (!table.sc_exceptions.empty()) j["sc_exceptions"] = table.sc_exceptions;
    return j.dump();
}

std::string markdown_row(const SignTable& table)
{
    std::string row = "| " + std::to_string(table.m) + " | " + format_residue_set(table.P) +
                      " | " + format_residue_set(table.N) + " | " + format_residue_set(table.Z) +
                      " | " + (table.special_case ? *table.special_case : "") + " |";
    return row;
}

std::string markdown_table(long t, const std::vector<SignTable>& rows)
{
    std::string out = "## t = " + std::to_string(t) + "\n\n";
    out += "| m | P | N | Z | note |\n";
    out += "|---|---|---|---|------|\n";
    for (const auto& row : rows) out += markdown_row(row) + "\n";
    return out;
}

}  // namespace borwein
