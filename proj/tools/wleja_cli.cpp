// Command-line front end: experiment orchestration, CSV/JSON/SVG persistence.
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wleja/interp.hpp"
#include "wleja/leja.hpp"
#include "wleja/potential.hpp"
#include "wleja/spacing.hpp"
#include "wleja/weights.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace wleja;

namespace {

struct RunConfig {
    double alpha = 2.0;
    int n_max = 50;
    std::vector<int> n_list;
    double x0 = 0.0;
    double margin = 0.05;
    std::vector<int> grid;  // probes_per_interval [, dense_points]
    std::vector<double> deltas{0.5, 0.25, 0.1, 0.05};
    std::string out = "out";
    std::vector<std::string> formats{"csv", "json"};

    GridSpec grid_spec() const {
        GridSpec g;
        if (!grid.empty()) g.probes_per_interval = grid[0];
        if (grid.size() > 1) g.dense_points = grid[1];
        return g;
    }
    bool wants(const std::string& f) const {
        return std::find(formats.begin(), formats.end(), f) != formats.end();
    }
};

void validate(const RunConfig& c) {
    if (!(c.alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
    if (c.n_max < 1) throw std::invalid_argument("n-max must be at least 1");
    if (!(c.margin > 0.0 && c.margin <= 0.5))
        throw std::invalid_argument("margin must lie in (0, 0.5]");
    for (int n : c.n_list) {
        if (n < 0) throw std::invalid_argument("n-list entries must be nonnegative");
        if (n > c.n_max)
            throw std::invalid_argument("n-list entry " + std::to_string(n) +
                                        " exceeds n-max " + std::to_string(c.n_max));
    }
    if (c.grid.size() > 2) throw std::invalid_argument("grid takes at most two integers");
    for (double d : c.deltas)
        if (!(d > 0.0)) throw std::invalid_argument("deltas must be positive");
    static const std::set<std::string> known{"csv", "json", "svg"};
    for (const auto& f : c.formats)
        if (!known.count(f)) throw std::invalid_argument("unknown format: " + f);
}

std::vector<int> effective_n_list(const RunConfig& c) {
    if (!c.n_list.empty()) return c.n_list;
    return {c.n_max};
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    std::ofstream f(dir / name, std::ios::binary);  // '\n' endings on every platform
    if (!f) throw std::invalid_argument("output directory not writable: " + (dir / name).string());
    return f;
}

json config_json(const RunConfig& c) {
    const GridSpec g = c.grid_spec();
    return json{{"alpha", c.alpha},
                {"n_max", c.n_max},
                {"n_list", effective_n_list(c)},
                {"x0", c.x0},
                {"margin", c.margin},
                {"probes_per_interval", g.probes_per_interval},
                {"dense_points", g.dense_points},
                {"deltas", c.deltas},
                {"out", c.out},
                {"formats", c.formats}};
}

json solver_settings(const RunConfig& c) {
    const GridSpec g = c.grid_spec();
    return json{{"probes_per_interval", g.probes_per_interval},
                {"refine_xtol", g.refine_xtol},
                {"dense_points", g.dense_points},
                {"tie_break", "largest coordinate within 1e-12 relative"},
                {"equilibrium_levels", 40},
                {"equilibrium_gl_order", 16},
                {"fd_probe_seed", 12345},
                {"fd_step", 1e-6},
                {"reference_function", "1/(1+x^2)"}};
}

void write_manifest(const fs::path& dir, const RunConfig& c, const std::string& command,
                    const std::vector<std::string>& outputs) {
    json m{{"command", command},
           {"config", config_json(c)},
           {"solver", solver_settings(c)},
           {"outputs", outputs}};
    auto f = open_out(dir, "manifest.json");
    f << m.dump(2) << "\n";
}

// --- generate ---------------------------------------------------------------

std::vector<std::string> cmd_generate(const RunConfig& c, const fs::path& dir,
                                      const LejaSequence& seq) {
    std::vector<std::string> outs;
    const FreudWeight fw(c.alpha);
    const double s = fw.contraction_factor(c.n_max);
    if (c.wants("csv")) {
        auto f = open_out(dir, "nodes.csv");
        f << "index,point,contracted_point,log_objective\n";
        for (size_t i = 0; i < seq.points.size(); ++i)
            f << i << ',' << fmt17(seq.points[i]) << ',' << fmt17(s * seq.points[i]) << ','
              << fmt17(seq.objective_values[i]) << '\n';
        outs.push_back("nodes.csv");
    }
    if (c.wants("json")) {
        json j{{"alpha", c.alpha},
               {"n_max", c.n_max},
               {"x0", c.x0},
               {"margin", c.margin},
               {"contraction_factor", s},
               {"points", seq.points},
               {"log_objectives", seq.objective_values}};
        auto f = open_out(dir, "nodes.json");
        f << j.dump(2) << "\n";
        outs.push_back("nodes.json");
    }
    return outs;
}

// --- lebesgue ---------------------------------------------------------------

struct LebRow {
    int n;
    double constant, nth_root, argmax;
};

std::vector<LebRow> lebesgue_rows(const RunConfig& c, const LejaSequence& seq) {
    std::vector<LebRow> rows;
    for (int n : effective_n_list(c)) {
        auto rep = lebesgue_constant(seq, n, c.grid_spec());
        rows.push_back({n, rep.constant, rep.nth_root, rep.argmax_location});
    }
    return rows;
}

void write_lebesgue_svg(std::ofstream& f, const std::vector<LebRow>& rows) {
    const double W = 720, H = 440, L = 70, R = 20, T = 20, B = 50;
    double nlo = rows.front().n, nhi = rows.back().n, yhi = 0.0;
    for (const auto& r : rows) {
        nlo = std::min(nlo, double(r.n));
        nhi = std::max(nhi, double(r.n));
        yhi = std::max(yhi, std::log10(r.constant));
    }
    if (nhi == nlo) nhi = nlo + 1.0;
    yhi = std::max(yhi * 1.08, 0.1);
    auto X = [&](double n) { return L + (n - nlo) / (nhi - nlo) * (W - L - R); };
    auto Y = [&](double v) { return H - B - v / yhi * (H - T - B); };
    char buf[256];
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 720 440\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
    f << "<rect width=\"720\" height=\"440\" fill=\"white\"/>\n";
    // axes
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  L, H - B, W - R, H - B);
    f << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", L,
                  T, L, H - B);
    f << buf;
    // x ticks at the sampled degrees
    for (const auto& r : rows) {
        const double x = X(r.n);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>"
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%d</text>\n",
                      x, H - B, x, H - B + 5, x, H - B + 18, r.n);
        f << buf;
    }
    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = yhi * i / 4.0, y = Y(v);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>"
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.2f</text>\n",
                      L - 5, y, L, y, L - 8, y + 4, v);
        f << buf;
    }
    f << "<text x=\"" << (L + (W - L - R) / 2) << "\" y=\"" << (H - 10)
      << "\" text-anchor=\"middle\">n</text>\n";
    f << "<text x=\"16\" y=\"" << (T + (H - T - B) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (T + (H - T - B) / 2) << ")\">log10 value</text>\n";
    // two polylines: the constant and its nth root
    auto poly = [&](const char* color, const std::function<double(const LebRow&)>& val) {
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", X(r.n), Y(std::log10(val(r))));
            f << buf;
        }
        f << "\"/>\n";
    };
    poly("#1f6fb4", [](const LebRow& r) { return r.constant; });
    poly("#c23b22", [](const LebRow& r) { return r.nth_root; });
    f << "<text x=\"" << (W - R - 180) << "\" y=\"" << (T + 14)
      << "\" fill=\"#1f6fb4\">growth constant</text>\n";
    f << "<text x=\"" << (W - R - 180) << "\" y=\"" << (T + 32)
      << "\" fill=\"#c23b22\">nth root</text>\n";
    f << "</svg>\n";
}

std::vector<std::string> cmd_lebesgue(const RunConfig& c, const fs::path& dir,
                                      const LejaSequence& seq, json* summary) {
    std::vector<std::string> outs;
    const auto rows = lebesgue_rows(c, seq);
    if (c.wants("csv")) {
        auto f = open_out(dir, "lebesgue.csv");
        f << "n,lebesgue_constant,nth_root,argmax\n";
        for (const auto& r : rows)
            f << r.n << ',' << fmt17(r.constant) << ',' << fmt17(r.nth_root) << ','
              << fmt17(r.argmax) << '\n';
        outs.push_back("lebesgue.csv");
    }
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back({{"n", r.n},
                         {"lebesgue_constant", r.constant},
                         {"nth_root", r.nth_root},
                         {"argmax", r.argmax}});
    if (c.wants("json")) {
        json j{{"solver", solver_settings(c)}, {"rows", jrows}};
        auto f = open_out(dir, "lebesgue.json");
        f << j.dump(2) << "\n";
        outs.push_back("lebesgue.json");
    }
    if (c.wants("svg")) {
        auto f = open_out(dir, "lebesgue.svg");
        write_lebesgue_svg(f, rows);
        outs.push_back("lebesgue.svg");
    }
    if (summary) (*summary)["lebesgue"] = jrows;
    return outs;
}

// --- potential --------------------------------------------------------------

std::vector<std::string> cmd_potential(const RunConfig& c, const fs::path& dir,
                                       const LejaSequence& seq, json* summary) {
    std::vector<std::string> outs;
    const FreudWeight fw(c.alpha);
    const auto eq = build_equilibrium_measure(c.alpha);
    const GridSpec grid = c.grid_spec();

    json rows = json::array();
    json fek = json::array(), cdfs = json::array();
    std::vector<std::string> csv_lines;
    std::vector<std::string> sum_lines;
    for (int n : effective_n_list(c)) {
        if (n < 1) throw std::invalid_argument("potential diagnostics need n >= 1");
        const auto cs = contract(seq, n);
        const double fk = fekete_functional(cs.nodes, &fw);
        const double cd = cdf_distance(empirical_measure(cs), eq);
        fek.push_back({{"n", n}, {"value", fk}});
        cdfs.push_back({{"n", n}, {"value", cd}});
        sum_lines.push_back(std::to_string(n) + ',' + fmt17(fk) + ',' + fmt17(cd));
        for (int k = 0; k <= n; ++k) {
            const double nm = numerator_limit(cs, fw, k, grid);
            const double dn = denominator_value(cs, fw, k);
            for (double delta : c.deltas) {
                auto [a1, a2] = split_products(cs, fw, k, delta);
                const double ratio = a1 * a2 / dn;
                rows.push_back({{"n", n},
                                {"k", k},
                                {"delta", delta},
                                {"numerator", nm},
                                {"denominator", dn},
                                {"a1", a1},
                                {"a2", a2},
                                {"partition_ratio", ratio}});
                csv_lines.push_back(std::to_string(n) + ',' + std::to_string(k) + ',' +
                                    fmt17(delta) + ',' + fmt17(nm) + ',' + fmt17(dn) + ',' +
                                    fmt17(a1) + ',' + fmt17(a2) + ',' + fmt17(ratio));
            }
        }
    }
    if (c.wants("csv")) {
        auto f = open_out(dir, "potential.csv");
        f << "n,k,delta,numerator,denominator,a1,a2,partition_ratio\n";
        for (const auto& l : csv_lines) f << l << '\n';
        outs.push_back("potential.csv");
        auto g = open_out(dir, "potential_summary.csv");
        g << "n,fekete,cdf_distance\n";
        for (const auto& l : sum_lines) g << l << '\n';
        outs.push_back("potential_summary.csv");
    }
    json pj{{"F_w", eq.robin_constant},
            {"V_w", eq.energy},
            {"c", eq.support_radius},
            {"fekete", fek},
            {"cdf_distance", cdfs},
            {"rows", rows}};
    if (c.wants("json")) {
        auto f = open_out(dir, "potential.json");
        f << pj.dump(2) << "\n";
        outs.push_back("potential.json");
    }
    if (summary) (*summary)["potential"] = pj;
    return outs;
}

// --- spacing ----------------------------------------------------------------

std::vector<std::string> cmd_spacing(const RunConfig& c, const fs::path& dir,
                                     const LejaSequence& seq, json* summary) {
    std::vector<std::string> outs;
    const FreudWeight fw(c.alpha);
    json jrows = json::array();
    std::vector<std::string> lines;
    for (int n : effective_n_list(c)) {
        auto rep = spacing_report(seq, fw, n, c.grid_spec());
        jrows.push_back({{"n", rep.n},
                         {"min_scaled_gap", rep.min_scaled_gap},
                         {"new_point_gap", rep.new_point_gap},
                         {"bernstein_sup_ratio", rep.bernstein_sup_ratio}});
        lines.push_back(std::to_string(rep.n) + ',' + fmt17(rep.min_scaled_gap) + ',' +
                        fmt17(rep.new_point_gap) + ',' + fmt17(rep.bernstein_sup_ratio));
    }
    if (c.wants("csv")) {
        auto f = open_out(dir, "spacing.csv");
        f << "n,min_scaled_gap,new_point_gap,bernstein_sup_ratio\n";
        for (const auto& l : lines) f << l << '\n';
        outs.push_back("spacing.csv");
    }
    if (c.wants("json")) {
        json j{{"solver", solver_settings(c)}, {"rows", jrows}};
        auto f = open_out(dir, "spacing.json");
        f << j.dump(2) << "\n";
        outs.push_back("spacing.json");
    }
    if (summary) (*summary)["spacing"] = jrows;
    return outs;
}

// --- interp -----------------------------------------------------------------

std::vector<std::string> cmd_interp(const RunConfig& c, const fs::path& dir, json* summary) {
    std::vector<std::string> outs;
    const FreudWeight fw(c.alpha);
    auto table = interpolation_error_study(
        fw, [](double x) { return 1.0 / (1.0 + x * x); }, effective_n_list(c), c.grid_spec());
    json jrows = json::array();
    std::vector<std::string> lines;
    for (const auto& [n, err] : table) {
        jrows.push_back({{"n", n}, {"sup_weighted_error", err}});
        lines.push_back(std::to_string(n) + ',' + fmt17(err));
    }
    if (c.wants("csv")) {
        auto f = open_out(dir, "interp.csv");
        f << "n,sup_weighted_error\n";
        for (const auto& l : lines) f << l << '\n';
        outs.push_back("interp.csv");
    }
    if (c.wants("json")) {
        json j{{"solver", solver_settings(c)}, {"reference_function", "1/(1+x^2)"}, {"rows", jrows}};
        auto f = open_out(dir, "interp.json");
        f << j.dump(2) << "\n";
        outs.push_back("interp.json");
    }
    if (summary) (*summary)["interp"] = jrows;
    return outs;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Weighted greedy interpolation nodes for exponential weights: "
                 "generation, growth constants, potential-theoretic diagnostics"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file; flags override");

    app.add_option("--alpha", cfg.alpha, "weight exponent (must exceed 1)");
    app.add_option("--n-max,--n", cfg.n_max, "highest degree to generate");
    app.add_option("--n-list", cfg.n_list, "degrees to evaluate (default: n-max only)")
        ->delimiter(',');
    app.add_option("--x0", cfg.x0, "starting point of the recursion");
    app.add_option("--margin", cfg.margin, "relative width of the scan guard band, in (0, 0.5]");
    app.add_option("--grid", cfg.grid, "probes per interval [and dense grid size]");
    app.add_option("--deltas", cfg.deltas, "gap thresholds for the split diagnostics")
        ->delimiter(',');
    app.add_option("--out", cfg.out, "output directory");
    app.add_option("--format", cfg.formats, "any of: csv json svg")
        ->delimiter(',');

    auto* sc_generate = app.add_subcommand("generate", "emit the node table");
    auto* sc_lebesgue = app.add_subcommand("lebesgue", "growth constants per degree");
    auto* sc_potential = app.add_subcommand("potential", "equilibrium and root diagnostics");
    auto* sc_spacing = app.add_subcommand("spacing", "separation and derivative diagnostics");
    auto* sc_interp = app.add_subcommand("interp", "weighted interpolation error study");
    auto* sc_report = app.add_subcommand("report", "run everything and bundle a summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        validate(cfg);
        const fs::path dir(cfg.out);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw std::invalid_argument("cannot create output directory: " + cfg.out);

        const FreudWeight fw(cfg.alpha);
        const LejaSequence seq = generate_sequence(fw, cfg.n_max, cfg.x0, cfg.margin);

        std::vector<std::string> outs;
        std::string command;
        if (sc_generate->parsed()) {
            command = "generate";
            outs = cmd_generate(cfg, dir, seq);
        } else if (sc_lebesgue->parsed()) {
            command = "lebesgue";
            outs = cmd_lebesgue(cfg, dir, seq, nullptr);
        } else if (sc_potential->parsed()) {
            command = "potential";
            outs = cmd_potential(cfg, dir, seq, nullptr);
        } else if (sc_spacing->parsed()) {
            command = "spacing";
            outs = cmd_spacing(cfg, dir, seq, nullptr);
        } else if (sc_interp->parsed()) {
            command = "interp";
            outs = cmd_interp(cfg, dir, nullptr);
        } else if (sc_report->parsed()) {
            command = "report";
            json summary;
            summary["config"] = config_json(cfg);
            json an = json::array();
            for (int n : effective_n_list(cfg))
                an.push_back({{"n", n}, {"value", n >= 1 ? fw.mrs_number(n) : 0.0}});
            summary["fw"] = json{{"alpha", cfg.alpha}, {"c", fw.support_radius_c}, {"a_n", an}};
            auto app_out = [&](std::vector<std::string> v) {
                outs.insert(outs.end(), v.begin(), v.end());
            };
            app_out(cmd_generate(cfg, dir, seq));
            app_out(cmd_lebesgue(cfg, dir, seq, &summary));
            app_out(cmd_potential(cfg, dir, seq, &summary));
            app_out(cmd_spacing(cfg, dir, seq, &summary));
            app_out(cmd_interp(cfg, dir, &summary));
            auto f = open_out(dir, "summary.json");
            f << summary.dump(2) << "\n";
            outs.push_back("summary.json");
        }
        write_manifest(dir, cfg, command, outs);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}
