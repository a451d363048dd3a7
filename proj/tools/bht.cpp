#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bht/charpoly.hpp"
#include "bht/checks.hpp"
#include "bht/combinatorics.hpp"
#include "bht/maxheight.hpp"
#include "bht/poly.hpp"
#include "bht/specs.hpp"
#include "bht/spectra.hpp"

namespace {

std::vector<long> parse_entries(const std::string& text) {
    std::vector<long> entries;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("-t", "empty entry in list");
        std::size_t used = 0;
        long value = std::stol(item, &used);
        if (used != item.size()) throw CLI::ValidationError("-t", "bad entry: " + item);
        entries.push_back(value);
    }
    if (entries.empty()) throw CLI::ValidationError("-t", "no entries given");
    return entries;
}

int parse_subdiag(const std::string& text) {
    if (text == "+1" || text == "1") return +1;
    if (text == "-1") return -1;
    throw CLI::ValidationError("-s", "subdiagonal must be +1 or -1");
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::string format_ratio(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    return buffer;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

int cmd_charpoly(const std::string& entries, const std::string& subdiag, const std::string& route,
                 const std::string& out_path) {
    bht::ToeplitzSpec spec;
    spec.t = parse_entries(entries);
    spec.n = static_cast<int>(spec.t.size());
    spec.subdiag = parse_subdiag(subdiag);

    bht::IntPolynomial poly;
    if (route == "toeplitz")
        poly = bht::charpoly_toeplitz(spec);
    else if (route == "coeffs")
        poly = bht::charpoly_coeffs(spec);
    else if (route == "hessenberg")
        poly = bht::charpoly_hessenberg(bht::HessenbergSpec::from_toeplitz(spec));
    else
        throw CLI::ValidationError("--route", "unknown route: " + route);

    std::ofstream file;
    std::ostream& out = open_sink(file, out_path);
    out << bht::poly_to_json(poly) << "\n";
    return 0;
}

int cmd_maxheight(int n_max, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_sink(file, out_path);
    out << "n,tau,mu\n";
    bht::tau_mu_stream(n_max, [&](const bht::MaxHeightRecord& rec) {
        out << rec.n << "," << rec.tau.get_str() << "," << rec.mu << "\n";
    });
    return 0;
}

int cmd_sequences(const std::string& kind, int n_max, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_sink(file, out_path);
    if (kind == "ratios") {
        out << "n,ratio\n";
        std::vector<double> ratios = bht::growth_ratios(n_max);
        for (std::size_t i = 0; i < ratios.size(); ++i)
            out << (i + 1) << "," << format_ratio(ratios[i]) << "\n";
    } else if (kind == "mu") {
        out << "n,mu,mu_formula\n";
        auto table = bht::tau_mu_table(n_max);
        for (int n = 3; n <= n_max; ++n)
            out << n << "," << table[static_cast<std::size_t>(n) - 1].mu << ","
                << bht::mu_formula(n) << "\n";
    } else if (kind == "fibword") {
        out << "n,a\n";
        for (int n = 0; n <= n_max; ++n) out << n << "," << bht::fibword_a(n) << "\n";
    } else {
        throw CLI::ValidationError("--kind", "unknown kind: " + kind);
    }
    return 0;
}

int cmd_compositions(int n, bool list_all, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_sink(file, out_path);
    out << bht::symbolic_p_n0(n).to_string() << "\n";
    if (list_all) {
        for (const auto& parts : bht::compositions(n)) {
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out << "+";
                out << parts[i];
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_spectra(int n, bool zero_diag, bht::GridConfig config, double window,
                const std::string& colormap_name, const std::string& out_base, bool force) {
    if (n > 14 && !force)
        throw CLI::ValidationError("-n", "orders above 14 enumerate 3^n members; pass --force");
    if (window > 0) {
        config.xmin = config.ymin = -window;
        config.xmax = config.ymax = window;
    }
    bht::Colormap map = bht::colormap_from_name(colormap_name);

    bht::DensityResult result = bht::accumulate_density(n, zero_diag, config);

    const std::string pgm_path = out_base + ".pgm";
    write_bytes(pgm_path, bht::render_pgm(result.grid, map));
    std::string png_path;
    if (bht::png_supported()) {
        png_path = out_base + ".png";
        write_bytes(png_path, bht::render_png(result.grid, map));
    }
    const std::string csv_path = out_base + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open output file: " + csv_path);
    bht::write_grid_csv(csv, result.grid);

    std::printf("spectra n=%d%s members=%" PRIu64 " roots=%" PRIu64 " in_window=%" PRIu64
                " max_residual=%.3g window=[%g,%g]x[%g,%g]\n",
                n, zero_diag ? " zero-diag" : "", bht::family_size(n, zero_diag),
                result.roots_total, result.roots_in_window, result.max_residual,
                result.grid.xmin, result.grid.xmax, result.grid.ymin, result.grid.ymax);
    std::printf("wrote %s%s%s %s\n", pgm_path.c_str(), png_path.empty() ? "" : " ",
                png_path.c_str(), csv_path.c_str());
    return 0;
}

int cmd_verify(const std::string& level_name, int workers, int extended_nmax,
               const std::string& json_path) {
    bht::VerifyOptions options;
    options.level = bht::verify_level_from_name(level_name);
    options.workers = workers;
    options.extended_nmax = extended_nmax;

    std::vector<bht::CheckResult> results = bht::run_verify(options);
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s: %zu checks at level %s\n", all_passed ? "OK" : "FAILED", results.size(),
                level_name.c_str());

    if (!json_path.empty()) {
        nlohmann::json report;
        report["level"] = level_name;
        report["passed"] = all_passed;
        report["checks"] = nlohmann::json::array();
        for (const auto& r : results)
            report["checks"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open output file: " + json_path);
        out << report.dump(2) << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohemian upper Hessenberg Toeplitz toolkit"};
    app.require_subcommand(1);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial as JSON coefficient strings");
    std::string entries, subdiag = "+1", route = "toeplitz", out_path;
    charpoly->add_option("-t,--entries", entries, "comma-separated diagonal entries t_1..t_n")->required();
    charpoly->add_option("-s,--subdiag", subdiag, "subdiagonal value, +1 or -1");
    charpoly->add_option("--route", route, "toeplitz, coeffs or hessenberg");
    charpoly->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* maxheight = app.add_subcommand("maxheight", "stream n,tau,mu records as CSV");
    int mh_nmax = 10;
    std::string mh_out;
    maxheight->add_option("--nmax", mh_nmax, "largest order")->required()->check(CLI::PositiveNumber);
    maxheight->add_option("-o,--out", mh_out, "output file (default stdout)");

    auto* sequences = app.add_subcommand("sequences", "growth ratios and golden-ratio sequences as CSV");
    std::string seq_kind = "ratios", seq_out;
    int seq_nmax = 100;
    sequences->add_option("--kind", seq_kind, "ratios, mu or fibword");
    sequences->add_option("--nmax", seq_nmax, "largest index")->required()->check(CLI::PositiveNumber);
    sequences->add_option("-o,--out", seq_out, "output file (default stdout)");

    auto* comps = app.add_subcommand("compositions", "symbolic p_{n,0} and the compositions of n");
    int comp_n = 5;
    bool comp_list = false;
    std::string comp_out;
    comps->add_option("-n,--order", comp_n, "the integer to compose")->required()->check(CLI::PositiveNumber);
    comps->add_flag("--list", comp_list, "also list every composition");
    comps->add_option("-o,--out", comp_out, "output file (default stdout)");

    auto* spectra = app.add_subcommand("spectra", "eigenvalue density image over the whole family");
    int sp_n = 0;
    bool sp_zero_diag = false, sp_force = false;
    bht::GridConfig sp_config;
    double sp_window = 0.0;
    std::string sp_colormap = "gray", sp_out = "spectra";
    spectra->add_option("-n,--order", sp_n, "matrix order")->required()->check(CLI::PositiveNumber);
    spectra->add_flag("--zero-diag", sp_zero_diag, "pin the diagonal to zero");
    spectra->add_option("--width", sp_config.width, "grid width in pixels")->check(CLI::PositiveNumber);
    spectra->add_option("--height", sp_config.height, "grid height in pixels (odd keeps the real axis centered)")
        ->check(CLI::PositiveNumber);
    spectra->add_option("--window", sp_window, "half-width of a square window centered at 0");
    spectra->add_option("--xmin", sp_config.xmin, "window bound");
    spectra->add_option("--xmax", sp_config.xmax, "window bound");
    spectra->add_option("--ymin", sp_config.ymin, "window bound");
    spectra->add_option("--ymax", sp_config.ymax, "window bound");
    spectra->add_option("--tol", sp_config.tol, "root residual tolerance");
    spectra->add_option("--workers", sp_config.workers, "worker threads (0 = hardware)");
    spectra->add_option("--colormap", sp_colormap, "gray or invgray");
    spectra->add_option("-o,--out", sp_out, "output base path");
    spectra->add_flag("--force", sp_force, "allow orders above 14");

    auto* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
    std::string v_level = "quick", v_json;
    int v_workers = 0, v_nmax = 50000;
    verify->add_option("--level", v_level, "quick, full or extended");
    verify->add_option("--workers", v_workers, "worker threads (0 = hardware)");
    verify->add_option("--nmax", v_nmax, "sequence window for the extended level");
    verify->add_option("--json", v_json, "also write a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (charpoly->parsed()) return cmd_charpoly(entries, subdiag, route, out_path);
        if (maxheight->parsed()) return cmd_maxheight(mh_nmax, mh_out);
        if (sequences->parsed()) return cmd_sequences(seq_kind, seq_nmax, seq_out);
        if (comps->parsed()) return cmd_compositions(comp_n, comp_list, comp_out);
        if (spectra->parsed())
            return cmd_spectra(sp_n, sp_zero_diag, sp_config, sp_window, sp_colormap, sp_out, sp_force);
        if (verify->parsed()) return cmd_verify(v_level, v_workers, v_nmax, v_json);
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
