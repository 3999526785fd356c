#include "ppgf/cli.hpp"

#include "ppgf/conegeom.hpp"
#include "ppgf/enumerate.hpp"
#include "ppgf/omega.hpp"
#include "ppgf/recursion.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace ppgf::cli {

namespace {

using nlohmann::json;

constexpr int kMaxCombinatorial = 12;  // rays / counts
constexpr int kMaxSymbolic = 5;        // generating-function routes

struct Options {
    std::string format = "text";
    bool force = false;
    bool json() const { return format == "json"; }
};

void check_k(int k, int bound, bool force, const char* what) {
    if (k < 1)
        throw CLI::ValidationError(std::string(what) + ": k must be >= 1");
    if (!force && k > bound)
        throw CLI::ValidationError(std::string(what) + ": k > " + std::to_string(bound) +
                                   " (pass --force to override)");
}

void print_gf(const FactoredGF& g, const Options& opt, std::ostream& out) {
    if (opt.json())
        out << g.to_json().dump() << "\n";
    else
        out << g.str() << "\n";
}

void print_poly(const Polynomial& p, const Options& opt, std::ostream& out) {
    if (opt.json())
        out << p.to_json().dump() << "\n";
    else
        out << p.str() << "\n";
}

void cmd_rays(int k, const Options& opt, std::ostream& out) {
    auto rays = rays_Uk(k);
    if (opt.json()) {
        json j;
        j["k"] = k;
        j["rays"] = json::array();
        for (const auto& r : rays) j["rays"].push_back(r.coords);
        out << j.dump() << "\n";
        return;
    }
    for (const auto& r : rays) {
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            out << (i ? " " : "") << r.coords[i];
        out << "\n";
    }
}

void cmd_counts(int max_k, const Options& opt, std::ostream& out) {
    json rows = json::array();
    for (int k = 2; k <= max_k; ++k) {
        json row;
        row["k"] = k;
        row["dim"] = 2 * k;
        row["rays"] = rays_Uk(k).size();
        row["expected_rays"] = (binomial(k + 2, 2) - 1).convert_to<long long>();
        row["cones"] = count_linear_extensions(k).convert_to<long long>();
        row["catalan"] = catalan(k).convert_to<long long>();
        rows.push_back(std::move(row));
    }
    if (opt.json()) {
        out << json{{"rows", rows}}.dump() << "\n";
        return;
    }
    out << std::setw(3) << "k" << std::setw(5) << "dim" << std::setw(7) << "rays"
        << std::setw(10) << "expected" << std::setw(9) << "cones"
        << std::setw(9) << "catalan" << "\n";
    for (const auto& row : rows) {
        out << std::setw(3) << row["k"].get<long long>()
            << std::setw(5) << row["dim"].get<long long>()
            << std::setw(7) << row["rays"].get<long long>()
            << std::setw(10) << row["expected_rays"].get<long long>()
            << std::setw(9) << row["cones"].get<long long>()
            << std::setw(9) << row["catalan"].get<long long>() << "\n";
    }
}

void cmd_triangulate(int k, const Options& opt, std::ostream& out) {
    auto cones = triangulation(k);
    json jcones = json::array();
    for (const auto& cone : cones) {
        json jc;
        jc["rays"] = json::array();
        jc["open"] = json::array();
        for (std::size_t t = 0; t < cone.rays.size(); ++t) {
            int idx = ray_index(cone.rays[t].coords, k);
            jc["rays"].push_back(idx);
            if (cone.open[t]) jc["open"].push_back(idx);
        }
        jcones.push_back(std::move(jc));
    }
    if (opt.json()) {
        out << json{{"k", k}, {"cones", jcones}}.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < jcones.size(); ++i) {
        out << "cone " << i << ": rays";
        for (const auto& idx : jcones[i]["rays"]) out << " " << idx.get<int>();
        out << "; open";
        if (jcones[i]["open"].empty()) out << " -";
        for (const auto& idx : jcones[i]["open"]) out << " " << idx.get<int>();
        out << "\n";
    }
}

FactoredGF pick_gf(int k, bool tilde) {
    return tilde ? compute_Qtilde(k) : compute_Q(k);
}

void cmd_gf(int k, bool tilde, bool single_y, const Options& opt, std::ostream& out) {
    FactoredGF g = pick_gf(k, tilde);
    if (single_y) g = specialize_single_y(g, k);
    print_gf(g, opt, out);
}

void cmd_series(int k, int degree, bool strict_last, const Options& opt,
                std::ostream& out) {
    print_poly(gf_series(pick_gf(k, !strict_last), degree), opt, out);
}

void cmd_oracle(int k, int degree, bool strict_last, const Options& opt,
                std::ostream& out) {
    print_poly(oracle_series(k, degree, strict_last), opt, out);
}

void cmd_ap_step(int n, const Options& opt, std::ostream& out) {
    BoxGF p = box_base();
    for (int i = 1; i <= n; ++i) p = ap_step(p, i);
    print_gf(p.value, opt, out);
}

int cmd_verify(int k, int degree, const Options& opt, std::ostream& out) {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    checks.push_back({"series(exact-width) == enumeration",
                      gf_series(compute_Q(k), degree) == oracle_series(k, degree, true)});
    checks.push_back({"series(width-at-most) == enumeration",
                      gf_series(compute_Qtilde(k), degree) == oracle_series(k, degree, false)});
    checks.push_back({"triangulation route == recursion route",
                      gf_clear_to(gf_via_triangulation(k), denominator_Dk(k)) ==
                          numerator(k, true)});
    bool all = true;
    for (const auto& c : checks) all = all && c.ok;
    if (opt.json()) {
        json j;
        j["k"] = k;
        j["degree"] = degree;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"ok", c.ok}});
        j["ok"] = all;
        out << j.dump() << "\n";
    } else {
        for (const auto& c : checks)
            out << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
        out << (all ? "OK" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact multigraded generating functions of two-row plane partitions"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--force", opt.force, "lift the default size limits");

    int k = 1, max_k = kMaxCombinatorial, degree = 0, n = 1;
    bool tilde = false, single_y = false, strict_last = false;

    auto* rays = app.add_subcommand("rays", "extreme rays of the order cone");
    rays->add_option("--k", k, "number of columns")->required();

    auto* counts = app.add_subcommand("counts", "ray and cone counts for a range of widths");
    counts->add_option("--max-k", max_k, "largest width")->capture_default_str();

    auto* tri = app.add_subcommand("triangulate", "half-open unimodular triangulation");
    tri->add_option("--k", k, "number of columns")->required();

    auto* gf = app.add_subcommand("gf", "generating function via the recursion");
    gf->add_option("--k", k, "number of columns")->required();
    gf->add_flag("--tilde", tilde, "top row of length at most k");
    gf->add_flag("--single-y", single_y, "collapse y1..yk to one variable");

    auto* num = app.add_subcommand("numerator", "numerator over the staircase denominator");
    num->add_option("--k", k, "number of columns")->required();
    num->add_flag("--tilde", tilde, "top row of length at most k");

    auto* ser = app.add_subcommand("series", "Taylor expansion of the generating function");
    ser->add_option("--k", k, "number of columns")->required();
    ser->add_option("--degree", degree, "total degree bound")->required();
    ser->add_flag("--strict-last", strict_last, "top row of length exactly k");

    auto* ora = app.add_subcommand("oracle", "series by direct enumeration");
    ora->add_option("--k", k, "number of columns")->required();
    ora->add_option("--degree", degree, "total degree bound")->required();
    ora->add_flag("--strict-last", strict_last, "top row of length exactly k");

    auto* p22 = app.add_subcommand("omega-p22", "2x2 box via positive-part elimination");

    auto* ap = app.add_subcommand("ap-step", "column extension from the one-column box");
    ap->add_option("--n", n, "number of extension steps")->required();

    auto* ver = app.add_subcommand("verify", "cross-check the routes against each other");
    ver->add_option("--k", k, "number of columns")->required();
    ver->add_option("--degree", degree, "series comparison degree")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (rays->parsed()) {
            check_k(k, kMaxCombinatorial, opt.force, "rays");
            cmd_rays(k, opt, out);
        } else if (counts->parsed()) {
            check_k(max_k, kMaxCombinatorial, opt.force, "counts");
            cmd_counts(max_k, opt, out);
        } else if (tri->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "triangulate");
            cmd_triangulate(k, opt, out);
        } else if (gf->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "gf");
            cmd_gf(k, tilde, single_y, opt, out);
        } else if (num->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "numerator");
            print_poly(numerator(k, tilde), opt, out);
        } else if (ser->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "series");
            if (degree < 0) throw CLI::ValidationError("series: negative degree");
            cmd_series(k, degree, strict_last, opt, out);
        } else if (ora->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "oracle");
            if (degree < 0) throw CLI::ValidationError("oracle: negative degree");
            cmd_oracle(k, degree, strict_last, opt, out);
        } else if (p22->parsed()) {
            print_gf(p22_via_omega().value, opt, out);
        } else if (ap->parsed()) {
            if (n < 1 || (!opt.force && n > 4))
                throw CLI::ValidationError("ap-step: need 1 <= n <= 4 (pass --force to override)");
            cmd_ap_step(n, opt, out);
        } else if (ver->parsed()) {
            check_k(k, kMaxSymbolic, opt.force, "verify");
            if (degree < 0) throw CLI::ValidationError("verify: negative degree");
            return cmd_verify(k, degree, opt, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace ppgf::cli
