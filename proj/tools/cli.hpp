#pragma once

// Command implementations for the qbps tool. Kept separate from main() so the
// tests can drive them with string streams.

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbps/qbps.hpp"

namespace qbps::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage_error = 2 };

constexpr std::size_t default_terms = 100;

/// One output row; values are exact strings keyed by column.
struct OutputRecord {
    std::size_t n = 0;
    std::map<std::string, std::string> values;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<OutputRecord> rows;
};

inline Table gw_table(std::size_t terms)
{
    const auto gw = make_gw_table(terms);
    Table t{{"n", "N0", "N1", "N1_fiber"}, {}};
    for (std::size_t n = 0; n <= terms; ++n) {
        OutputRecord r{n, {}};
        r.values["n"] = std::to_string(n);
        r.values["N0"] = to_string(gw.n0[n]);
        r.values["N1"] = to_string(gw.n1[n]);
        // N^1(0F) is not defined; the cell stays empty
        r.values["N1_fiber"] = n == 0 ? std::string() : to_string(n1_fiber(n));
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline Table bps_table(std::size_t terms)
{
    const auto bps = make_bps_table(qform_catalog(terms));
    Table t{{"n", "a", "b"}, {}};
    for (std::size_t n = 0; n <= terms; ++n) {
        OutputRecord r{n, {}};
        r.values["n"] = std::to_string(n);
        r.values["a"] = to_string(bps.a_series[n]);
        r.values["b"] = to_string(bps.b_series[n]);
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline void write_csv(const Table& t, std::ostream& out)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << row.values.at(t.columns[i]);
        out << '\n';
    }
}

inline void write_json(const Table& t, std::ostream& out)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (const auto& col : t.columns)
            obj[col] = row.values.at(col);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

inline const std::vector<std::string>& series_names()
{
    static const std::vector<std::string> names = {"P", "P12", "G", "A", "B", "brace"};
    return names;
}

inline TruncatedSeries named_series(const std::string& name, std::size_t terms)
{
    if (name == "P")
        return partition_series(terms);
    if (name == "P12")
        return p_alpha(12, terms);
    if (name == "G")
        return g_series(terms);
    if (name == "A")
        return a_closed_series(terms);
    if (name == "B")
        return b_closed_series(terms);
    if (name == "brace")
        return brace_series(g_series(terms));
    throw std::invalid_argument("unknown series: " + name);
}

inline int cmd_verify(std::size_t terms, const std::vector<std::string>& checks, std::ostream& out,
                      std::ostream& err)
{
    for (const auto& c : checks)
        if (!is_check_name(c)) {
            err << "unknown check '" << c << "'; known checks:";
            for (const auto& n : check_names())
                err << ' ' << n;
            err << '\n';
            return usage_error;
        }
    const auto report = checks.empty() ? run_all(terms) : run_selected(terms, checks);
    for (const auto& c : report.checks)
        out << format_check(c) << '\n';
    out << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
    return report.all_passed() ? ok : check_failed;
}

inline int cmd_table(const std::string& kind, std::size_t terms, const std::string& format,
                     std::ostream& out, std::ostream& err)
{
    if (kind != "gw" && kind != "bps") {
        err << "unknown table kind '" << kind << "' (expected gw or bps)\n";
        return usage_error;
    }
    if (format != "csv" && format != "json") {
        err << "unknown format '" << format << "' (expected csv or json)\n";
        return usage_error;
    }
    const Table t = kind == "gw" ? gw_table(terms) : bps_table(terms);
    if (format == "csv")
        write_csv(t, out);
    else
        write_json(t, out);
    return ok;
}

inline int cmd_series(const std::string& name, std::size_t terms, std::ostream& out, std::ostream& err)
{
    const auto& names = series_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        err << "unknown series '" << name << "' (expected P, P12, G, A, B or brace)\n";
        return usage_error;
    }
    const auto f = named_series(name, terms);
    for (std::size_t k = 0; k <= f.order(); ++k)
        out << k << ',' << to_string(f[k]) << '\n';
    return ok;
}

/// Full command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series checks for BPS numbers of the nine-point blow-up of the plane"};
    app.require_subcommand(1);

    std::size_t terms = default_terms;
    std::vector<std::string> checks;
    std::string kind = "bps";
    std::string format = "csv";
    std::string name;

    auto* verify = app.add_subcommand("verify", "Run the identity and congruence checks");
    verify->add_option("--terms", terms, "Truncation order")->capture_default_str();
    verify->add_option("--checks", checks, "Comma separated subset of checks")->delimiter(',');

    auto* table = app.add_subcommand("table", "Print a table of GW inputs or BPS numbers");
    table->add_option("--kind", kind, "gw or bps")->capture_default_str();
    table->add_option("--terms", terms, "Truncation order")->capture_default_str();
    table->add_option("--format", format, "csv or json")->capture_default_str();

    auto* series_cmd = app.add_subcommand("series", "Print the coefficients of a named series");
    series_cmd->add_option("--name", name, "P, P12, G, A, B or brace")->required();
    series_cmd->add_option("--terms", terms, "Truncation order")->capture_default_str();

    std::vector<std::string> argv_store{"qbps"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    if (verify->parsed())
        return cmd_verify(terms, checks, out, err);
    if (table->parsed())
        return cmd_table(kind, terms, format, out, err);
    return cmd_series(name, terms, out, err);
}

} // namespace qbps::cli
