#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stripcount/analysis.hpp"
#include "stripcount/counting.hpp"
#include "stripcount/io.hpp"
#include "stripcount/oracle.hpp"
#include "stripcount/series.hpp"
#include "stripcount/transfer.hpp"

namespace sc = stripcount;

namespace {

constexpr int kExitMismatch = 2;      // method/lattice mismatch
constexpr int kExitOracleScale = 3;   // oracle cell limit breached
constexpr int kExitDisagreement = 4;  // cross-method disagreement

sc::Family parse_family(const std::string& name) {
    if (name == "bar") return sc::Family::ChocolateBar;
    if (name == "hex") return sc::Family::Honeycomb;
    throw CLI::ValidationError("--lattice", "expected 'bar' or 'hex'");
}

sc::CountTriangle genfunc_triangle(sc::Family family, int n_max) {
    sc::RationalGF gf = family == sc::Family::ChocolateBar ? sc::bar_gf() : sc::hex_gf();
    sc::SeriesXY series = sc::expand_rational(gf, n_max);
    sc::CountTriangle triangle{family, {}};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<sc::BigInt> row(triangle.k_max(n), 0);
        const sc::PolyY& p = series.terms[n];
        for (size_t k = 1; k < p.size() && k <= row.size(); ++k) row[k - 1] = p[k];
        triangle.rows.push_back(std::move(row));
    }
    return triangle;
}

sc::CountTriangle transfer_triangle(sc::Family family, int n_max) {
    sc::CountTriangle triangle{family, {}};
    for (int n = 1; n <= n_max; ++n) {
        sc::PolyY p = family == sc::Family::ChocolateBar ? sc::bar_polynomial(n)
                                                         : sc::hex_polynomial(n);
        std::vector<sc::BigInt> row(triangle.k_max(n), 0);
        for (size_t k = 1; k < p.size() && k <= row.size(); ++k) row[k - 1] = p[k];
        triangle.rows.push_back(std::move(row));
    }
    return triangle;
}

sc::CountTriangle closed_form_triangle(int n_max) {
    sc::CountTriangle triangle{sc::Family::Honeycomb, {}};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<sc::BigInt> row;
        for (int k = 1; k <= n; ++k) row.push_back(sc::hex_closed_form(n, k));
        triangle.rows.push_back(std::move(row));
    }
    return triangle;
}

sc::CountTriangle triangle_by_method(sc::Family family, int n_max, const std::string& method,
                                     int oracle_limit) {
    if (method == "recurrence")
        return family == sc::Family::ChocolateBar ? sc::bar_triangle(n_max)
                                                  : sc::hex_triangle(n_max);
    if (method == "genfunc") return genfunc_triangle(family, n_max);
    if (method == "transfer") return transfer_triangle(family, n_max);
    if (method == "closed-form") {
        if (family != sc::Family::Honeycomb) {
            std::cerr << "closed-form counts exist only for the honeycomb strip\n";
            std::exit(kExitMismatch);
        }
        return closed_form_triangle(n_max);
    }
    if (method == "oracle") {
        try {
            return sc::oracle_triangle(family, n_max, oracle_limit);
        } catch (const sc::OracleScaleError& e) {
            std::cerr << e.what() << '\n';
            std::exit(kExitOracleScale);
        }
    }
    std::cerr << "unknown method: " << method << '\n';
    std::exit(kExitMismatch);
}

std::string default_cache_dir() {
    const char* env = std::getenv("STRIPCOUNT_CACHE_DIR");
    return env ? env : "";
}

int run_count(sc::Family family, int n, std::optional<int> k, const std::string& method,
              int oracle_limit, bool inject_fault) {
    std::vector<std::string> methods;
    if (method == "all") {
        methods = {"recurrence", "genfunc", "transfer"};
        if (family == sc::Family::Honeycomb) methods.push_back("closed-form");
        if (sc::Lattice{family, n}.cell_count() <= oracle_limit) methods.push_back("oracle");
    } else {
        methods = {method};
    }

    std::map<std::string, sc::BigInt> values;
    for (const std::string& m : methods) {
        sc::CountTriangle triangle = triangle_by_method(family, n, m, oracle_limit);
        values[m] = k ? triangle.at(n, *k) : triangle.row_sum(n);
    }
    if (inject_fault && values.count("recurrence")) values["recurrence"] += 1;

    bool agree = true;
    for (const auto& [m, v] : values) agree = agree && v == values.begin()->second;
    if (!agree) {
        std::cerr << "cross-method disagreement:\n";
        for (const auto& [m, v] : values)
            std::cerr << "  " << m << " = " << v.get_str() << '\n';
        return kExitDisagreement;
    }
    std::cout << values.begin()->second.get_str() << '\n';
    return 0;
}

int run_table(sc::Family family, int n_max, const std::string& method,
              const std::string& format, const std::string& cache_dir, int oracle_limit) {
    sc::CountTriangle triangle{family, {}};
    std::filesystem::path cache_file;
    bool loaded = false;
    if (!cache_dir.empty() && method == "recurrence") {
        cache_file = std::filesystem::path(cache_dir) /
                     (std::string(sc::family_name(family)) + "_" + std::to_string(n_max) + ".csv");
        if (std::filesystem::exists(cache_file)) {
            std::ifstream in(cache_file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            try {
                triangle = sc::triangle_from_csv(family, buffer.str());
                loaded = true;
            } catch (const std::invalid_argument& e) {
                std::cerr << "ignoring bad cache file " << cache_file << ": " << e.what() << '\n';
            }
        }
    }
    if (!loaded) {
        triangle = triangle_by_method(family, n_max, method, oracle_limit);
        if (!cache_file.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(cache_file.parent_path(), ec);
            std::ofstream out(cache_file);
            out << sc::triangle_csv(triangle);
            if (!out) {
                std::cerr << "failed to write cache file " << cache_file << '\n';
                return 1;
            }
        }
    }

    if (format == "text") std::cout << sc::triangle_text(triangle);
    else if (format == "csv") std::cout << sc::triangle_csv(triangle);
    else if (format == "json") std::cout << sc::triangle_json(triangle);
    else if (format == "bfile") std::cout << sc::triangle_bfile(triangle);
    return 0;
}

int run_enumerate(sc::Family family, int n, int oracle_limit) {
    try {
        sc::CellGraph graph({family, n});
        std::map<int, std::vector<std::string>> by_k;
        sc::enumerate_divisions({family, n},
                                [&](const sc::Division& d) {
                                    by_k[d.part_count].push_back(sc::division_text(d));
                                },
                                oracle_limit);
        long total = 0;
        for (const auto& [k, lines] : by_k) {
            std::cout << "# k=" << k << " count=" << lines.size() << '\n';
            for (const std::string& line : lines) std::cout << line << '\n';
            total += static_cast<long>(lines.size());
        }
        std::cout << "# total " << total << '\n';
        return 0;
    } catch (const sc::OracleScaleError& e) {
        std::cerr << e.what() << '\n';
        return kExitOracleScale;
    }
}

class Report {
  public:
    void check(bool ok, const std::string& id, const std::string& params) {
        std::cout << (ok ? "PASS " : "FAIL ") << id << ' ' << params << '\n';
        failed_ |= !ok;
    }
    bool failed() const { return failed_; }

  private:
    bool failed_ = false;
};

void verify_columns(Report& report, int n_max) {
    sc::CountTriangle bar = sc::bar_triangle(n_max);
    sc::CountTriangle hex = sc::hex_triangle(n_max);
    for (int k = 1; k <= 8; ++k) {
        report.check(sc::check_column_recurrence(bar, k, n_max), "column-recurrence",
                     "bar k=" + std::to_string(k));
        report.check(sc::check_column_recurrence(hex, k, n_max), "column-recurrence",
                     "hex k=" + std::to_string(k));
    }
    for (int k = 1; k <= 6; ++k) {
        for (const auto* tri : {&bar, &hex}) {
            sc::ColumnPolynomial poly = sc::fit_column(*tri, k);
            bool ok = poly.degree() <= 2 * k - 2;
            for (int n = 1; n <= n_max && ok; ++n)
                ok = poly.eval(n) == sc::BigRat(tri->at(n, k));
            report.check(ok, "column-polynomial",
                         std::string(sc::family_name(tri->family)) + " k=" + std::to_string(k));
        }
    }
}

void verify_diagonals(Report& report, int n_max) {
    sc::CountTriangle bar = sc::bar_triangle(n_max);
    for (int j = 0; j <= 6; ++j) {
        sc::ColumnPolynomial poly = sc::fit_diagonal(bar, j);
        bool extrapolates = poly.degree() <= j;
        for (int n = (j + 2) / 2; n <= n_max && extrapolates; ++n)
            extrapolates = poly.eval(n) == sc::BigRat(bar.at(n, 2 * n - j));
        report.check(extrapolates, "diagonal-polynomial", "j=" + std::to_string(j));

        sc::BigRat lead(sc::BigInt(1));
        for (int i = 1; i <= j; ++i) lead *= sc::BigRat(3, i);
        report.check(poly.leading_coefficient() == lead, "diagonal-leading",
                     "j=" + std::to_string(j));
    }
}

void verify_lemmas(Report& report, int n_max) {
    bool closed = true;
    for (int n = 1; n <= n_max; ++n) closed = closed && sc::verify_h_power_closed_form(n);
    report.check(closed, "h-power-closed-form", "n<=" + std::to_string(n_max));

    bool fib = true;
    for (int n = 1; n <= std::max(n_max, 80); ++n) fib = fib && sc::verify_fib_power(n);
    report.check(fib, "h-power-fibonacci", "n<=" + std::to_string(std::max(n_max, 80)));
}

void verify_identities(Report& report, int n_max) {
    bool gluing = true;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n_max; ++m) gluing = gluing && sc::verify_gluing_identity(n, m);
    report.check(gluing, "gluing-identity", "n,m<=" + std::to_string(n_max));
    report.check(sc::verify_binomial_fib_sum(n_max), "binomial-fib-sum",
                 "n<=" + std::to_string(n_max));
}

void verify_oracle(Report& report, int n_max, int oracle_limit) {
    int bar_max = std::min(n_max, oracle_limit / 2);
    int hex_max = std::min(2 * n_max, oracle_limit);
    for (sc::Family family : {sc::Family::ChocolateBar, sc::Family::Honeycomb}) {
        int limit = family == sc::Family::ChocolateBar ? bar_max : hex_max;
        sc::CountTriangle oracle = sc::oracle_triangle(family, limit, oracle_limit);
        sc::CountTriangle recurrence = family == sc::Family::ChocolateBar
                                           ? sc::bar_triangle(limit)
                                           : sc::hex_triangle(limit);
        report.check(oracle.rows == recurrence.rows, "oracle-vs-recurrence",
                     std::string(sc::family_name(family)) + " n<=" + std::to_string(limit));
        report.check(oracle.rows == genfunc_triangle(family, limit).rows, "oracle-vs-genfunc",
                     std::string(sc::family_name(family)) + " n<=" + std::to_string(limit));
        report.check(oracle.rows == transfer_triangle(family, limit).rows, "oracle-vs-transfer",
                     std::string(sc::family_name(family)) + " n<=" + std::to_string(limit));
        if (family == sc::Family::Honeycomb)
            report.check(oracle.rows == closed_form_triangle(limit).rows, "oracle-vs-closed-form",
                         "hex n<=" + std::to_string(limit));
    }
    bool gluing = true;
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            if (n + m <= std::min(12, oracle_limit))
                gluing = gluing && sc::verify_gluing_identity_oracle(n, m, oracle_limit);
    report.check(gluing, "oracle-gluing-decomposition", "n+m<=12");
}

void verify_asymptotics(Report& report, int n_max) {
    int n = std::max(n_max, 10);
    for (sc::Family family : {sc::Family::ChocolateBar, sc::Family::Honeycomb}) {
        sc::AsymptoticProfile profile = sc::AsymptoticProfile::of(family);
        sc::CountTriangle triangle = family == sc::Family::ChocolateBar
                                         ? sc::bar_triangle(n + 1)
                                         : sc::hex_triangle(n + 1);
        double slope_err = std::abs(sc::observed_slope(triangle, n) - profile.slope_target);
        report.check(slope_err <= 1e-6, "slope-convergence",
                     std::string(sc::family_name(family)) + " n=" + std::to_string(n) +
                         " err=" + std::to_string(slope_err));

        sc::BigRat ratio = family == sc::Family::ChocolateBar
                               ? sc::BigRat(sc::bar_total(n + 1), sc::bar_total(n))
                               : sc::BigRat(sc::hex_total(n + 1), sc::hex_total(n));
        ratio.canonicalize();
        double growth_err = std::abs(ratio.get_d() - profile.growth_target);
        report.check(growth_err <= 1e-10, "growth-convergence",
                     std::string(sc::family_name(family)) + " n=" + std::to_string(n));
    }
}

int run_verify(const std::string& suite, int n_max, int oracle_limit) {
    Report report;
    if (suite == "columns" || suite == "all") verify_columns(report, std::max(n_max, 60));
    if (suite == "diagonals" || suite == "all") verify_diagonals(report, std::max(n_max, 60));
    if (suite == "lemmas" || suite == "all") verify_lemmas(report, std::max(n_max, 50));
    if (suite == "identities" || suite == "all") verify_identities(report, std::max(n_max, 30));
    if (suite == "oracle" || suite == "all") verify_oracle(report, std::max(n_max, 6), oracle_limit);
    if (suite == "asymptotics" || suite == "all") verify_asymptotics(report, std::max(n_max, 100));
    return report.failed() ? 1 : 0;
}

int run_expected_parts(sc::Family family, int n_max, int precision) {
    sc::CountTriangle triangle = family == sc::Family::ChocolateBar
                                     ? sc::bar_triangle(n_max + 1)
                                     : sc::hex_triangle(n_max + 1);
    sc::AsymptoticProfile profile = sc::AsymptoticProfile::of(family);
    std::cout << "# slope target " << profile.slope_target << '\n';
    std::cout << "n E(n) exact slope error\n";
    for (int n = 1; n <= n_max; ++n) {
        sc::BigRat e = sc::expected_parts(triangle, n);
        double slope = sc::observed_slope(triangle, n);
        std::cout << n << ' ' << sc::decimal_string(e, precision) << ' '
                  << e.get_num().get_str() << '/' << e.get_den().get_str() << ' ' << slope
                  << ' ' << std::abs(slope - profile.slope_target) << '\n';
    }
    return 0;
}

int run_gf(sc::Family family, int order) {
    sc::RationalGF gf = family == sc::Family::ChocolateBar ? sc::bar_gf() : sc::hex_gf();
    std::cout << sc::series_dump(sc::expand_rational(gf, order));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of connected divisions of chocolate-bar and honeycomb strips"};
    app.require_subcommand(1);

    std::string lattice = "bar", method = "recurrence", format = "text";
    std::string suite = "all", cache_dir = default_cache_dir();
    int n = 1, n_max = 10, oracle_limit = sc::kDefaultOracleCellLimit, precision = 10;
    std::optional<int> k;
    bool inject_fault = false;

    auto add_lattice = [&](CLI::App* cmd) {
        cmd->add_option("--lattice", lattice, "strip family: bar or hex")
            ->check(CLI::IsMember({"bar", "hex"}))
            ->required();
    };

    CLI::App* count = app.add_subcommand("count", "count divisions of one strip");
    add_lattice(count);
    count->add_option("-n", n, "strip length")->required()->check(CLI::PositiveNumber);
    count->add_option("-k", k, "number of parts (omit for the row total)");
    count->add_option("--method", method,
                      "oracle|recurrence|closed-form|genfunc|transfer|all");
    count->add_option("--oracle-limit", oracle_limit, "oracle cell limit");
    count->add_flag("--inject-fault", inject_fault,
                    "perturb one method's value (self-test hook for exit code 4)");

    CLI::App* table = app.add_subcommand("table", "emit a count triangle");
    add_lattice(table);
    table->add_option("--n-max", n_max, "rows to emit")->required()->check(CLI::PositiveNumber);
    table->add_option("--method", method, "oracle|recurrence|closed-form|genfunc|transfer");
    table->add_option("--format", format, "text|csv|json|bfile")
        ->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
    table->add_option("--cache-dir", cache_dir, "triangle CSV cache directory");
    table->add_option("--oracle-limit", oracle_limit, "oracle cell limit");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list every division");
    add_lattice(enumerate);
    enumerate->add_option("-n", n, "strip length")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--oracle-limit", oracle_limit, "oracle cell limit");

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("--suite", suite,
                       "columns|diagonals|lemmas|identities|oracle|asymptotics|all")
        ->check(CLI::IsMember(
            {"columns", "diagonals", "lemmas", "identities", "oracle", "asymptotics", "all"}));
    verify->add_option("--n-max", n_max, "suite size bound");
    verify->add_option("--oracle-limit", oracle_limit, "oracle cell limit");

    CLI::App* expected = app.add_subcommand("expected-parts", "expected parts vs asymptotics");
    add_lattice(expected);
    expected->add_option("--n-max", n_max, "rows to print")->check(CLI::PositiveNumber);
    expected->add_option("--precision", precision, "decimal digits (truncated)");

    CLI::App* gf = app.add_subcommand("gf", "dump the generating-function expansion");
    add_lattice(gf);
    gf->add_option("--order", n_max, "truncation order")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    sc::Family family = parse_family(lattice);
    if (count->parsed()) {
        if (method == "closed-form" && family != sc::Family::Honeycomb) {
            std::cerr << "closed-form counts exist only for the honeycomb strip\n";
            return kExitMismatch;
        }
        return run_count(family, n, k, method, oracle_limit, inject_fault);
    }
    if (table->parsed()) return run_table(family, n_max, method, format, cache_dir, oracle_limit);
    if (enumerate->parsed()) return run_enumerate(family, n, oracle_limit);
    if (verify->parsed()) return run_verify(suite, n_max, oracle_limit);
    if (expected->parsed()) return run_expected_parts(family, n_max, precision);
    if (gf->parsed()) return run_gf(family, n_max);
    return 0;
}
