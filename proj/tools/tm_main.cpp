// Command-line front end: figure data emission, verification suite, and
// machine-readable access to the measure/pressure/spectrum/entropy paths.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli_util.hpp"

#include "tmcore/config.hpp"
#include "tmcore/entropy.hpp"
#include "tmcore/potential.hpp"
#include "tmcore/pressure.hpp"
#include "tmcore/riesz.hpp"
#include "tmcore/verify.hpp"
#include "tmcore/words.hpp"

namespace {

using nlohmann::ordered_json;

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream body;
    body << header << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) body << ',';
            body << row[i];
        }
        body << "\r\n";
    }
    if (path.empty()) {
        std::cout << body.str();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << body.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int cmd_measure(const std::string& word_str, int level, const std::string& format,
                const std::string& out) {
    const tmf::BinaryWord w = tmf::BinaryWord::parse(word_str);
    const tmf::GibbsCheck check = tmf::gibbs_upper_check(w, level);
    if (format == "json") {
        ordered_json j;
        j["word"] = w.str();
        j["level"] = level;
        j["mass"] = check.mass;
        j["gibbs_bound"] = check.bound;
        j["pass"] = check.pass;
        emit(out, j.dump(2) + "\n");
    } else {
        write_csv(out, "word,level,mass,gibbs_bound,pass",
                  {{w.str(), std::to_string(level), tmf::cli::fmt_double(check.mass),
                    tmf::cli::fmt_double(check.bound), check.pass ? "true" : "false"}});
    }
    return 0;
}

int cmd_pressure(int n, int restricted_m, const std::string& t_spec, const std::string& format,
                 const std::string& out) {
    const std::vector<double> grid = tmf::cli::parse_range(t_spec);
    const tmf::PressureCurve curve = restricted_m > 0
                                        ? tmf::restricted_pressure_curve(restricted_m, n, grid)
                                        : tmf::pressure_curve(n, grid);
    if (format == "json") {
        ordered_json j;
        j["kind"] = restricted_m > 0 ? "restricted" : "full";
        j["n"] = n;
        if (restricted_m > 0) j["m"] = restricted_m;
        ordered_json samples = ordered_json::array();
        for (std::size_t i = 0; i < curve.t.size(); ++i)
            samples.push_back({{"t", curve.t[i]}, {"p", curve.p[i]}});
        j["samples"] = samples;
        emit(out, j.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(curve.t.size());
        for (std::size_t i = 0; i < curve.t.size(); ++i)
            rows.push_back({tmf::cli::fmt_double(curve.t[i]), tmf::cli::fmt_double(curve.p[i])});
        write_csv(out, "t,p", rows);
    }
    return 0;
}

int cmd_spectrum(const std::string& kind, int n, const std::string& alpha_spec,
                 const std::string& format, const std::string& out) {
    const std::vector<double> alphas = tmf::cli::parse_range(alpha_spec);
    const tmf::SpectrumCurve curve = kind == "dimension" ? tmf::dimension_spectrum(n, alphas)
                                                        : tmf::birkhoff_spectrum(n, alphas);
    if (format == "json") {
        ordered_json j;
        j["kind"] = kind;
        j["n"] = n;
        ordered_json samples = ordered_json::array();
        for (std::size_t i = 0; i < curve.alpha.size(); ++i)
            samples.push_back({{"alpha", curve.alpha[i]}, {"value", curve.value[i]}});
        j["samples"] = samples;
        emit(out, j.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(curve.alpha.size());
        for (std::size_t i = 0; i < curve.alpha.size(); ++i)
            rows.push_back({tmf::cli::fmt_double(curve.alpha[i]), tmf::cli::fmt_double(curve.value[i])});
        write_csv(out, "alpha,value", rows);
    }
    return 0;
}

int cmd_entropy(int digits, const std::string& format, const std::string& out) {
    const tmf::EntropyResult res = tmf::entropy_series(digits);
    const double h = res.h.to_double();
    const double s = res.series_sum.to_double();
    if (format == "json") {
        ordered_json j;
        j["h"] = h;
        j["D1"] = tmf::information_dimension(res);
        j["energy_exponent"] = tmf::energy_exponent();
        j["S"] = s;
        j["digits_validated"] = res.digits_validated;
        j["h_decimal"] = res.h_string(std::min(res.digits_validated, 33));
        emit(out, j.dump(2) + "\n");
    } else {
        write_csv(out, "h,D1,energy_exponent,S,digits_validated",
                  {{tmf::cli::fmt_double(h), tmf::cli::fmt_double(tmf::information_dimension(res)),
                    tmf::cli::fmt_double(tmf::energy_exponent()), tmf::cli::fmt_double(s),
                    std::to_string(res.digits_validated)}});
    }
    return 0;
}

int cmd_localdim(const std::string& x_str, long n, const std::string& format,
                 const std::string& out) {
    const tmf::Rational x = tmf::Rational::parse(x_str);
    const tmf::LocalDimension d = tmf::local_dimension_estimate(x, n);
    if (format == "json") {
        ordered_json j;
        j["x"] = x.str();
        j["n"] = n;
        j["value"] = d.infinite ? "inf" : tmf::cli::fmt_double(d.value);
        j["infinite"] = d.infinite;
        emit(out, j.dump(2) + "\n");
    } else {
        write_csv(out, "x,n,value,infinite",
                  {{x.str(), std::to_string(n), d.infinite ? "inf" : tmf::cli::fmt_double(d.value),
                    d.infinite ? "true" : "false"}});
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, const std::string& out) {
    const tmf::VerifyReport report = tmf::run_suite(suite);
    if (format == "json") {
        ordered_json j;
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"expected", c.expected},
                              {"observed", c.observed},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
        j["checks"] = checks;
        j["overall"] = report.overall();
        emit(out, j.dump(2) + "\n");
    } else if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : report.checks)
            rows.push_back({"\"" + c.name + "\"", tmf::cli::fmt_double(c.expected),
                            tmf::cli::fmt_double(c.observed), tmf::cli::fmt_double(c.tolerance),
                            c.pass ? "true" : "false"});
        write_csv(out, "name,expected,observed,tolerance,pass", rows);
    } else {
        std::ostringstream text;
        for (const auto& c : report.checks)
            text << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                 << "  (expected " << tmf::cli::fmt_double(c.expected) << ", observed "
                 << tmf::cli::fmt_double(c.observed) << ", tolerance " << tmf::cli::fmt_double(c.tolerance) << ")\n";
        text << (report.overall() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
        emit(out, text.str());
    }
    return report.overall() ? 0 : 1;
}

int cmd_figures(const std::string& figure, const std::string& out_dir) {
    const std::string prefix = out_dir.empty() ? "" : out_dir + "/";
    if (figure == "b_spectrum") {
        std::vector<double> alphas;
        for (int i = 0; i <= 400; ++i) alphas.push_back(-1.5 + 0.005 * i);
        const tmf::SpectrumCurve b = tmf::birkhoff_spectrum(20, alphas);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < b.alpha.size(); ++i)
            rows.push_back({tmf::cli::fmt_double(b.alpha[i]), tmf::cli::fmt_double(b.value[i])});
        write_csv(prefix + "b_spectrum.csv", "alpha,value", rows);
    } else if (figure == "psi_humps") {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i <= 10000; ++i) {
            const double x = static_cast<double>(i) / 10000.0;
            rows.push_back({tmf::cli::fmt_double(x), tmf::cli::fmt_double(tmf::psi(x)), tmf::cli::fmt_double(tmf::psi(2.0 * x)),
                            tmf::cli::fmt_double(tmf::psi(4.0 * x))});
        }
        write_csv(prefix + "psi_humps.csv", "x,psi_x,psi_2x,psi_4x", rows);
    } else if (figure == "birkhoff_humps") {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i <= 10000; ++i) {
            const double x = static_cast<double>(i) / 10000.0;
            rows.push_back(
                {tmf::cli::fmt_double(x), tmf::cli::fmt_double(tmf::psi_n(x, 3)), tmf::cli::fmt_double(tmf::psi_n(x, 5))});
        }
        write_csv(prefix + "birkhoff_humps.csv", "x,psi3,psi5", rows);
    } else if (figure == "pressure_asymptotes") {
        std::vector<double> grid = tmf::default_spectrum_t_grid();
        const tmf::PressureCurve curve = tmf::pressure_curve(20, grid);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < curve.t.size(); ++i) {
            const double t = curve.t[i];
            rows.push_back({tmf::cli::fmt_double(t), tmf::cli::fmt_double(curve.p[i]),
                            tmf::cli::fmt_double(t * tmf::kLogThreeHalves),
                            tmf::cli::fmt_double((1.0 - t) * tmf::kLog2)});
        }
        write_csv(prefix + "pressure_asymptotes.csv", "t,p,asymptote_slope,asymptote_intercept",
                  rows);
    } else {
        throw CLI::ValidationError("unknown figure: " + figure);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multifractal toolkit for the Thue-Morse measure"};
    app.require_subcommand(1);
    app.fallthrough();  // --threads may follow the subcommand
    int threads = 0;
    app.add_option("--threads", threads, "Worker pool cap (default: hardware concurrency)");

    std::string word_str, format = "csv", out, t_spec = "0:40:0.1";
    std::string alpha_spec = "-1.5:0.5:0.005", kind = "birkhoff", x_str = "1/3";
    std::string suite = "all", figure = "b_spectrum", out_dir;
    int level = 12, n = 20, restricted_m = 0, digits = 10;
    long localdim_n = 200;

    auto* measure = app.add_subcommand("measure", "Cylinder mass and Gibbs bound for one word");
    measure->add_option("--word", word_str, "cylinder word as a 0/1 string")->required();
    measure->add_option("--level", level, "approximant level N");
    measure->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    measure->add_option("--out", out, "output path (stdout if omitted)");

    auto* pressure = app.add_subcommand("pressure", "Pressure approximant over a t grid");
    pressure->add_option("--n", n, "approximation level");
    pressure->add_option("--restricted", restricted_m, "restrict to the run-length subshift (m)");
    pressure->add_option("--t", t_spec, "t grid start:stop:step");
    pressure->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    pressure->add_option("--out", out);

    auto* spectrum = app.add_subcommand("spectrum", "Legendre-transform spectrum over an alpha grid");
    spectrum->add_option("--kind", kind)->check(CLI::IsMember({"birkhoff", "dimension"}));
    spectrum->add_option("--n", n, "approximation level");
    spectrum->add_option("--alpha", alpha_spec, "alpha grid start:stop:step");
    spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_option("--out", out);

    auto* entropy = app.add_subcommand("entropy", "High-precision metric entropy");
    entropy->add_option("--digits", digits, "validated decimal digits requested (<= 14)");
    entropy->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    entropy->add_option("--out", out);

    auto* localdim = app.add_subcommand("localdim", "Finite-n local dimension estimate");
    localdim->add_option("--x", x_str, "rational point p/q")->required();
    localdim->add_option("--n", localdim_n, "Birkhoff depth");
    localdim->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    localdim->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "Run the quantitative verification suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "symbolic", "potential", "measure", "pressure", "entropy"}));
    verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
    verify->add_option("--out", out);

    auto* figures = app.add_subcommand("figures", "Emit plot-ready CSV datasets");
    figures->add_option("--figure", figure)
        ->check(CLI::IsMember({"b_spectrum", "psi_humps", "birkhoff_humps", "pressure_asymptotes"}));
    figures->add_option("--out-dir", out_dir, "directory for the CSV files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    tmf::set_thread_cap(threads);
    try {
        if (measure->parsed()) return cmd_measure(word_str, level, format, out);
        if (pressure->parsed()) return cmd_pressure(n, restricted_m, t_spec, format, out);
        if (spectrum->parsed()) return cmd_spectrum(kind, n, alpha_spec, format, out);
        if (entropy->parsed()) return cmd_entropy(digits, format, out);
        if (localdim->parsed()) return cmd_localdim(x_str, localdim_n, format, out);
        if (verify->parsed())
            return cmd_verify(suite, verify->count("--format") ? format : "text", out);
        if (figures->parsed()) return cmd_figures(figure, out_dir);
    } catch (const std::length_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
