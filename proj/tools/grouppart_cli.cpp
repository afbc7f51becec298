// Command-line front end: counting (pi_r, a_r, b_r, PL_r, sieve tables),
// verification suites, and density/asymptotic reports.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 resource cap
// or unreachable tolerance.

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grouppart/asymptotics.hpp"
#include "grouppart/errors.hpp"
#include "grouppart/group_partition.hpp"
#include "grouppart/lfunctions.hpp"
#include "grouppart/plane_partitions.hpp"
#include "grouppart/sieve.hpp"
#include "grouppart/verify.hpp"
#include "grouppart/wright.hpp"

using namespace grouppart;

namespace {

std::uint64_t parse_count(const std::string& s, const char* what) {
    // accepts plain integers and scientific shorthand like 1e6
    try {
        if (s.empty() || s[0] == '-') throw std::invalid_argument("negative");
        if (s.find_first_of("eE.") != std::string::npos) {
            const double v = std::stod(s);
            if (!(v >= 0) || v > 9e18 || std::nearbyint(v) != v)
                throw std::invalid_argument("not an integer");
            return static_cast<std::uint64_t>(v);
        }
        return std::stoull(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + s);
    }
}

std::vector<std::uint64_t> parse_count_list(const std::string& s, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss{s};
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_count(item, what));
    if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
    return out;
}

struct Output {
    std::string path;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
        }
        return file;
    }
    std::ofstream file;
};

int run_count(const std::string& format, Output& out, const std::string& group_text, bool want_ar,
              bool want_br, bool want_pl, bool want_table, const std::string& n_text,
              const std::string& x_text, const std::string& r_text, std::uint64_t order_cap,
              std::uint64_t sieve_cap) {
    const int modes = !group_text.empty() + want_ar + want_br + want_pl + want_table;
    if (modes != 1)
        throw std::invalid_argument(
            "choose exactly one of --group, --a-r, --b-r, --pl, --table");
    const RowBound r = parse_row_bound(r_text);

    if (want_table) {
        const std::uint64_t x = parse_count(x_text, "--x");
        const auto table = sieve_a_r(x, r, sieve_cap);
        if (format == "json")
            table.write_json(out.stream());
        else
            table.write_csv(out.stream());
        return 0;
    }

    Bigint value;
    std::string label;
    if (!group_text.empty()) {
        value = pi_r(parse_group(group_text), r, order_cap);
        label = "pi_r";
    } else if (want_ar) {
        value = a_r(parse_count(n_text, "--n"), r);
        label = "a_r";
    } else if (want_br) {
        if (r.unbounded()) throw std::invalid_argument("--b-r needs a finite --r");
        value = b_r(parse_count(n_text, "--n"), r.value());
        label = "b_r";
    } else {
        const std::uint64_t n = parse_count(n_text, "--n");
        if (n > 100000) throw ResourceLimitError("--pl: n too large for exact series");
        value = plane_partition_counts(static_cast<unsigned>(n), r)[n];
        label = "PL_r";
    }

    auto& os = out.stream();
    if (format == "json")
        os << "{\"" << label << "\":\"" << value << "\"}\n";
    else if (format == "csv")
        os << label << "\n" << value << "\n";
    else
        os << value << "\n";
    return 0;
}

void print_suite(std::ostream& os, const verify::SuiteResult& s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", s.max_deviation);
    os << "suite=" << s.name << " pass=" << (s.pass ? "true" : "false") << " checks=" << s.checks
       << " max_dev=" << buf;
    if (!s.note.empty()) os << " note=\"" << s.note << "\"";
    os << "\n";
}

int run_verify(Output& out, const std::string& suite, std::uint64_t p, unsigned max_n,
               std::uint64_t max_j, std::uint64_t j, const std::string& r_text, double tol,
               std::uint64_t max_mn, double s, const std::string& n_text, unsigned big_m,
               std::uint32_t cutoff, std::uint64_t modulus_cap) {
    const RowBound r = parse_row_bound(r_text);
    std::vector<verify::SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "bijection") results.push_back(verify::bijection_roundtrip(p, max_n));
    if (all || suite == "orthogonality")
        results.push_back(verify::orthogonality(max_j, modulus_cap));
    if (all || suite == "residue")
        results.push_back(verify::residue_identity(j, r, tol, modulus_cap));
    if (all || suite == "multiplicativity") results.push_back(verify::multiplicativity(max_mn, r));
    if (all || suite == "dualpath")
        results.push_back(
            verify::dual_path(s, j, r, parse_count(n_text, "--n"), big_m, cutoff, modulus_cap));
    if (results.empty())
        throw std::invalid_argument("unknown suite: " + suite +
                                    " (expected bijection|orthogonality|residue|"
                                    "multiplicativity|dualpath|all)");
    bool ok = true;
    for (const auto& res : results) {
        print_suite(out.stream(), res);
        ok = ok && res.pass;
    }
    return ok ? 0 : 1;
}

int run_report(const std::string& format, Output& out, bool density, bool wright, bool b_mode,
               std::uint64_t j, std::uint64_t k, const std::string& r_text,
               const std::string& x_text, const std::string& checkpoints_text,
               const std::string& points_text, double tol, std::uint64_t sieve_cap) {
    if (density == wright)
        throw std::invalid_argument("choose exactly one of --density, --wright");
    if (density) {
        const RowBound r = parse_row_bound(r_text);
        std::vector<std::uint64_t> checkpoints;
        if (!checkpoints_text.empty()) {
            checkpoints = parse_count_list(checkpoints_text, "--checkpoints");
        } else {
            const std::uint64_t x = parse_count(x_text, "--x");
            for (std::uint64_t c : {x / 100, x / 10, x})
                if (c >= 1 && (checkpoints.empty() || c > checkpoints.back()))
                    checkpoints.push_back(c);
        }
        const auto rep = convergence_report(checkpoints, j, k, r,
                                            b_mode ? DensityMode::b_r : DensityMode::a_r, tol,
                                            sieve_cap);
        if (format == "json")
            rep.write_json(out.stream());
        else
            rep.write_csv(out.stream());
        return 0;
    }

    const auto points = parse_count_list(points_text, "--points");
    std::uint64_t max_n = 0;
    for (std::uint64_t n : points) max_n = std::max(max_n, n);
    if (max_n > 5000) throw ResourceLimitError("--wright: points beyond series budget");
    const auto pl = plane_partition_counts(static_cast<unsigned>(max_n), RowBound::inf());
    auto& os = out.stream();
    char buf[160];
    if (format == "json") os << "[";
    else os << "n,PL,estimate,ratio,abs_ratio_minus_1\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::uint64_t n = points[i];
        const double est = wright_estimate(static_cast<unsigned>(n), tol);
        const double ratio = pl[n].convert_to<double>() / est;
        if (format == "json") {
            std::snprintf(buf, sizeof(buf),
                          "%s\n{\"n\":%llu,\"PL\":\"%s\",\"estimate\":%.12g,\"ratio\":%.12g,"
                          "\"abs_ratio_minus_1\":%.12g}",
                          i ? "," : "", static_cast<unsigned long long>(n),
                          pl[n].str().c_str(), est, ratio, std::abs(ratio - 1.0));
            os << buf;
        } else {
            std::snprintf(buf, sizeof(buf), ",%.12g,%.12g,%.12g", est, ratio,
                          std::abs(ratio - 1.0));
            os << n << ',' << pl[n] << buf << '\n';
        }
    }
    if (format == "json") os << "\n]\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-partition counts, Dirichlet series, and density reports"};
    app.require_subcommand(1);

    int workers = 1;
    std::string format = "text";
    std::string out_path;
    app.add_option("--workers", workers, "worker threads (default 1)");
    app.add_option("--format", format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");

    auto* count = app.add_subcommand("count", "count group-partitions and related quantities");
    count->fallthrough();
    std::string group_text, n_text = "1", x_text = "100", r_text = "inf";
    bool want_ar = false, want_br = false, want_pl = false, want_table = false;
    std::uint64_t order_cap = kDefaultOrderCap;
    std::uint64_t sieve_cap = kDefaultSieveCap;
    count->add_option("--group", group_text, "pi_r of this class, e.g. \"2^[2,1,1] * 3^[1]\"");
    count->add_flag("--a-r", want_ar, "a_r(n)");
    count->add_flag("--b-r", want_br, "b_r(n)");
    count->add_flag("--pl", want_pl, "PL_r(n)");
    count->add_flag("--table", want_table, "a_r table for 1..x (CSV/JSON)");
    count->add_option("--n", n_text, "argument n");
    count->add_option("--x", x_text, "table upper bound");
    count->add_option("--r", r_text, "row bound: positive integer or \"inf\"");
    count->add_option("--order-cap", order_cap, "enumeration order cap (default 2^20)");
    count->add_option("--sieve-cap", sieve_cap, "sieve budget (default 1e7)");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    std::uint64_t vp = 2, vmax_j = 30, vj = 4, vmax_mn = 1000;
    unsigned vmax_n = 8, vM = 40;
    std::string vr_text = "2", vn_text = "100000";
    double vtol = 1e-8, vs = 2.0;
    std::uint32_t vcutoff = 1000;
    verify_cmd->add_option("--suite", suite,
                           "bijection|orthogonality|residue|multiplicativity|dualpath|all");
    verify_cmd->add_option("--p", vp, "prime for the bijection suite");
    verify_cmd->add_option("--max-n", vmax_n, "exponent range for the bijection suite");
    verify_cmd->add_option("--max-j", vmax_j, "modulus range for orthogonality");
    verify_cmd->add_option("--j", vj, "modulus");
    verify_cmd->add_option("--r", vr_text, "row bound");
    verify_cmd->add_option("--tol", vtol, "tolerance");
    verify_cmd->add_option("--max-mn", vmax_mn, "product bound for multiplicativity");
    verify_cmd->add_option("--s", vs, "evaluation point for dualpath");
    verify_cmd->add_option("--n", vn_text, "series length for dualpath");
    verify_cmd->add_option("--m", vM, "L-factor count for dualpath");
    verify_cmd->add_option("--cutoff", vcutoff, "prime cutoff for dualpath");
    std::uint64_t vmodulus_cap = kDefaultModulusCap;
    verify_cmd->add_option("--modulus-cap", vmodulus_cap, "character modulus cap (default 1e4)");

    auto* report = app.add_subcommand("report", "density and asymptotic reports");
    report->fallthrough();
    bool density = false, wright = false, b_mode = false;
    std::uint64_t rj = 1, rk = 1;
    std::string rr_text = "1", rx_text = "1e6", checkpoints_text, points_text = "50,100,200,400";
    double rtol = 1e-9;
    std::uint64_t rsieve_cap = kDefaultSieveCap;
    report->add_flag("--density", density, "partial-sum density report");
    report->add_flag("--wright", wright, "plane-partition growth report");
    report->add_flag("--b", b_mode, "use b_r instead of a_r");
    report->add_option("--j", rj, "modulus");
    report->add_option("--k", rk, "residue class");
    report->add_option("--r", rr_text, "row bound");
    report->add_option("--x", rx_text, "largest checkpoint");
    report->add_option("--checkpoints", checkpoints_text, "comma-separated checkpoints");
    report->add_option("--points", points_text, "comma-separated n values");
    report->add_option("--tol", rtol, "tolerance for constants");
    report->add_option("--sieve-cap", rsieve_cap, "sieve budget (default 1e7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (workers >= 1) omp_set_num_threads(workers);
#endif

    Output out{out_path, {}};
    try {
        if (count->parsed())
            return run_count(format, out, group_text, want_ar, want_br, want_pl, want_table,
                             n_text, x_text, r_text, order_cap, sieve_cap);
        if (verify_cmd->parsed())
            return run_verify(out, suite, vp, vmax_n, vmax_j, vj, vr_text, vtol, vmax_mn, vs,
                              vn_text, vM, vcutoff, vmodulus_cap);
        return run_report(format, out, density, wright, b_mode, rj, rk, rr_text, rx_text,
                          checkpoints_text, points_text, rtol, rsieve_cap);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ToleranceError& e) {
        std::cerr << "tolerance: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
