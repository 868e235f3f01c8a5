// susyho: tabulate SUSY partners of the harmonic oscillator, their spectra,
// ladder algebra residuals, coherent states and resolution-of-unity weights.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "susyho/susyho.hpp"

namespace {

using susyho::complex;
using susyho::csv::format;

enum Exit { ok = 0, io_failure = 1, domain_failure = 2, convergence_failure = 3 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw susyho::DomainError("cannot parse number '" + s + "'");
    }
    return v;
}

/// "a", "a+bI", "a-bI" or "bI".
complex parse_complex(const std::string& s) {
    static const std::regex re(
        R"(^([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?(?:([+-][0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)I)?$)");
    std::smatch m;
    if (s.empty() || !std::regex_match(s, m, re) || (!m[1].matched && !m[2].matched)) {
        // bare imaginary like "0.5I"
        if (s.size() > 1 && s.back() == 'I') return {0.0, parse_double(s.substr(0, s.size() - 1))};
        throw susyho::DomainError("cannot parse complex literal '" + s + "' (use a, a+bI or a-bI)");
    }
    const double re_part = m[1].matched ? parse_double(m[1].str()) : 0.0;
    std::string im = m[2].matched ? m[2].str() : "0";
    if (!im.empty() && im.front() == '+') im.erase(im.begin());
    return {re_part, parse_double(im)};
}

susyho::GridSpec parse_grid(const std::string& s) {
    const auto a = s.find(':');
    const auto b = s.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) {
        throw susyho::DomainError("grid must be x_min:x_max:n_points, got '" + s + "'");
    }
    susyho::GridSpec g;
    g.x_min = parse_double(s.substr(0, a));
    g.x_max = parse_double(s.substr(a + 1, b - a - 1));
    const double n = parse_double(s.substr(b + 1));
    if (n != std::floor(n) || n < 2 || n > 1e8) throw susyho::DomainError("bad grid point count");
    g.n_points = static_cast<int>(n);
    g.validate();
    return g;
}

std::string grid_string(const susyho::GridSpec& g) {
    return format(g.x_min) + ":" + format(g.x_max) + ":" + format(g.n_points);
}

struct Config {
    std::string command;
    double epsilon = -0.5;
    std::string beta = "0";
    std::string grid;
    std::string output;
    std::string format = "csv";
    bool force = false;
    bool allow_near_half = false;
    // per-command
    int levels = 9;
    std::string state = "0";
    std::string mu = "0";
    std::optional<int> n_max;
    int dim = 20;
    int moments = 6;
    std::string density;
    std::optional<double> abscissa;
    std::string epsilons = "-1.5,-0.5,0.25";
};

struct Output {
    std::ostringstream body;
    std::vector<std::string> params;
    std::string plot; // plot-script text, if any
};

std::string params_line(const Config& cfg, const std::vector<std::string>& extra) {
    std::string line = "params: command=" + cfg.command;
    for (const auto& e : extra) line += " " + e;
    line += " version=" + std::string(susyho::version);
    return line;
}

std::string grid_plot(const std::string& csv_name, const std::vector<std::string>& cols,
                      const std::string& title, std::size_t first, std::size_t last) {
    std::ostringstream gp;
    gp << "# gnuplot script; reads only " << csv_name << "\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set title '" << title << "'\n"
       << "set xlabel '" << cols[0] << "'\n"
       << "plot ";
    for (std::size_t c = first; c <= last; ++c) {
        if (c != first) gp << ", \\\n     ";
        gp << "'" << csv_name << "' using 1:" << c + 1 << " with lines";
    }
    gp << "\n";
    return gp.str();
}

susyho::SeedSolution make_seed(const Config& cfg) {
    return susyho::SeedSolution(cfg.epsilon, parse_complex(cfg.beta), cfg.allow_near_half);
}

void write_table(Output& out, const Config& cfg, const std::vector<std::string>& extra,
                 const std::vector<std::string>& cols,
                 const std::vector<std::vector<std::string>>& rows) {
    susyho::csv::Writer w(out.body);
    w.comment(params_line(cfg, extra));
    w.header(cols);
    for (const auto& r : rows) w.row(r);
}

std::string output_name(const Config& cfg) {
    return std::filesystem::path(cfg.output).filename().string();
}

void run_potential(const Config& cfg, Output& out) {
    const auto seed = make_seed(cfg);
    const auto g = parse_grid(cfg.grid.empty() ? "-12:12:4801" : cfg.grid);
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.x(i);
        const complex v = susyho::partner_potential(seed, x);
        const complex phi = susyho::susy_phi(seed, x);
        rows.push_back({format(x), format(v.real()), format(v.imag()), format(phi.real()),
                        format(phi.imag())});
    }
    const std::vector<std::string> cols = {"x", "V_re", "V_im", "Phi_re", "Phi_im"};
    write_table(out, cfg,
                {"epsilon=" + format(cfg.epsilon), "beta=" + format(seed.beta()),
                 "beta_c=" + format(susyho::beta_critical(cfg.epsilon)), "grid=" + grid_string(g)},
                cols, rows);
    if (!cfg.output.empty()) {
        out.plot = grid_plot(output_name(cfg), cols,
                             "partner potential eps=" + format(cfg.epsilon) +
                                 " beta=" + format(seed.beta()),
                             1, 1);
    }
}

void run_spectrum(const Config& cfg, Output& out) {
    const auto seed = make_seed(cfg);
    const auto g = parse_grid(cfg.grid.empty() ? "-12:12:4801" : cfg.grid);
    if (cfg.levels < 1) throw susyho::DomainError("--levels must be >= 1");
    std::vector<std::vector<std::string>> rows;
    if (!seed.params().complex_family) {
        const auto ground = susyho::ground_state(seed, g);
        const double res = susyho::eigen_residual(susyho::apply_h_minus(seed, ground), ground,
                                                  seed.epsilon());
        rows.push_back({"eps", format(seed.epsilon()), format(susyho::gridops::norm2(ground)),
                        format(res)});
    }
    for (int n = 0; n < cfg.levels; ++n) {
        const auto st = susyho::excited_state(seed, n, g);
        const double e = susyho::level_energy(n);
        const double res = susyho::eigen_residual(susyho::apply_h_minus(seed, st), st, e);
        rows.push_back({format(n), format(e), format(susyho::gridops::norm2(st)), format(res)});
    }
    write_table(out, cfg,
                {"epsilon=" + format(cfg.epsilon), "beta=" + format(seed.beta()),
                 "levels=" + format(cfg.levels), "grid=" + grid_string(g)},
                {"state", "energy", "norm", "eigen_residual"}, rows);
}

void run_wavefunction(const Config& cfg, Output& out) {
    const auto seed = make_seed(cfg);
    const auto g = parse_grid(cfg.grid.empty() ? "-12:12:4801" : cfg.grid);
    susyho::WavefunctionGrid psi;
    if (cfg.state == "eps") {
        psi = susyho::ground_state(seed, g);
    } else if (cfg.state.rfind("plus:", 0) == 0) {
        psi = susyho::oscillator_state(static_cast<int>(parse_double(cfg.state.substr(5))), g);
    } else {
        psi = susyho::excited_state(seed, static_cast<int>(parse_double(cfg.state)), g);
    }
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.n_points; ++i) {
        const complex v = psi.values[i];
        rows.push_back({format(g.x(i)), format(v.real()), format(v.imag()), format(std::norm(v))});
    }
    const std::vector<std::string> cols = {"x", "psi_re", "psi_im", "abs2"};
    write_table(out, cfg,
                {"epsilon=" + format(cfg.epsilon), "beta=" + format(seed.beta()),
                 "state=" + cfg.state, "grid=" + grid_string(g)},
                cols, rows);
    if (!cfg.output.empty()) {
        out.plot = grid_plot(output_name(cfg), cols, "state " + cfg.state, 1, 2);
    }
}

void run_algebra(const Config& cfg, Output& out) {
    const auto rep = susyho::build_fock_rep(cfg.epsilon, cfg.dim);
    constexpr double tol = 1e-12;
    std::vector<std::vector<std::string>> rows;
    const auto add = [&](const susyho::ResidualReport& r) {
        for (const auto& e : r.entries) {
            rows.push_back({e.relation, format(e.residual), format(tol),
                            e.residual <= tol ? "pass" : "fail"});
        }
    };
    add(susyho::commutator_check(rep));
    add(susyho::casimir_check(rep));
    write_table(out, cfg, {"epsilon=" + format(cfg.epsilon), "dim=" + format(cfg.dim)},
                {"relation", "residual", "tolerance", "status"}, rows);
}

void run_coherent(const Config& cfg, Output& out) {
    const complex mu = parse_complex(cfg.mu);
    const auto st = susyho::build_coherent_state(cfg.epsilon, mu, cfg.n_max);
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n < st.n_trunc(); ++n) {
        const complex c = st.coeffs[n];
        rows.push_back({format(n), format(c.real()), format(c.imag()), format(std::norm(c))});
    }
    write_table(out, cfg,
                {"epsilon=" + format(cfg.epsilon), "mu=" + format(mu),
                 "n_max=" + (cfg.n_max ? format(*cfg.n_max) : std::string("auto")),
                 "c0=" + format(st.c0), "n_trunc=" + format(st.n_trunc()),
                 "trunc_tail=" + format(st.trunc_tail)},
                {"n", "coeff_re", "coeff_im", "abs2"}, rows);
}

void run_measure(const Config& cfg, Output& out) {
    const susyho::MeasureDensity sigma(cfg.epsilon, cfg.abscissa);
    const std::string c_str = cfg.abscissa ? format(*cfg.abscissa) : std::string("auto");
    std::vector<std::vector<std::string>> rows;
    if (!cfg.density.empty()) {
        const auto g = parse_grid(cfg.density);
        if (!(g.x_min > 0.0)) throw susyho::DomainError("density grid must have x_min > 0");
        for (int i = 0; i < g.n_points; ++i) {
            const double x = g.x(i);
            rows.push_back({format(x), format(sigma(x)), format(sigma.radial(x))});
        }
        write_table(out, cfg,
                    {"epsilon=" + format(cfg.epsilon), "abscissa=" + c_str,
                     "density=" + grid_string(g)},
                    {"x", "sigma", "f"}, rows);
        return;
    }
    if (cfg.moments < 1) throw susyho::DomainError("--moments must be >= 1");
    for (int n = 0; n < cfg.moments; ++n) {
        const auto m = susyho::measure_moment(sigma, n);
        rows.push_back({format(n), format(m.value), format(m.target), format(m.relative_error())});
    }
    write_table(out, cfg,
                {"epsilon=" + format(cfg.epsilon), "abscissa=" + c_str,
                 "moments=" + format(cfg.moments)},
                {"n", "moment", "target", "rel_error"}, rows);
}

void run_figure1(const Config& cfg, Output& out) {
    std::vector<double> eps;
    std::stringstream ss(cfg.epsilons);
    for (std::string item; std::getline(ss, item, ',');) eps.push_back(parse_double(item));
    if (eps.empty()) throw susyho::DomainError("--epsilons is empty");
    const auto g = parse_grid(cfg.grid.empty() ? "0.01:10:500" : cfg.grid);
    if (!(g.x_min > 0.0)) throw susyho::DomainError("figure1 grid must have x_min > 0");
    std::vector<susyho::MeasureDensity> dens;
    std::vector<std::string> cols = {"x"};
    for (double e : eps) {
        dens.emplace_back(e);
        cols.push_back("f_eps=" + format(e));
    }
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.n_points; ++i) {
        const double x = g.x(i);
        std::vector<std::string> r = {format(x)};
        for (const auto& d : dens) r.push_back(format(d.radial(x)));
        rows.push_back(std::move(r));
    }
    write_table(out, cfg,
                {"epsilons=" + cfg.epsilons, "grid=" + grid_string(g),
                 "note=representative_eps_set"},
                cols, rows);
    if (!cfg.output.empty()) {
        out.plot = grid_plot(output_name(cfg), cols,
                             "radial density f(x) = sigma(x)/c0^2(sqrt x)", 1, cols.size() - 1);
    }
}

void write_file(const std::string& path, const std::string& text, bool force) {
    if (std::filesystem::exists(path) && !force) {
        throw IoError("refusing to overwrite existing file " + path + " (use --force)");
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("write failed for " + path);
}

int run(Config& cfg) {
    Output out;
    if (cfg.command == "potential") run_potential(cfg, out);
    else if (cfg.command == "spectrum") run_spectrum(cfg, out);
    else if (cfg.command == "wavefunction") run_wavefunction(cfg, out);
    else if (cfg.command == "algebra-check") run_algebra(cfg, out);
    else if (cfg.command == "coherent") run_coherent(cfg, out);
    else if (cfg.command == "measure") run_measure(cfg, out);
    else if (cfg.command == "figure1") run_figure1(cfg, out);

    const bool want_plot = cfg.format == "csv+plotscript";
    if (want_plot && (cfg.output.empty() || out.plot.empty())) {
        throw susyho::DomainError(
            "csv+plotscript needs --output and one of potential, wavefunction, figure1");
    }
    if (cfg.output.empty()) {
        std::cout << out.body.str();
        return ok;
    }
    write_file(cfg.output, out.body.str(), cfg.force);
    if (want_plot) write_file(cfg.output + ".gp", out.plot, cfg.force);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SUSY partners of the harmonic oscillator: potentials, spectra, ladder algebra, "
                 "coherent states and their resolution-of-unity weight"};
    app.set_version_flag("--version", std::string(susyho::version));
    app.require_subcommand(1);
    Config cfg;

    const auto common = [&](CLI::App* sub, bool with_beta) {
        sub->add_option("--epsilon", cfg.epsilon, "factorization energy, epsilon < 1/2")
            ->capture_default_str();
        if (with_beta) {
            sub->add_option("--beta", cfg.beta, "seed mixing beta: a, a+bI or a-bI")
                ->capture_default_str();
            sub->add_flag("--allow-near-half", cfg.allow_near_half,
                          "permit 0.499 < epsilon < 0.5");
        }
        sub->add_option("-o,--output", cfg.output, "output CSV path (default: stdout)");
        sub->add_flag("--force", cfg.force, "overwrite existing output");
        sub->add_option("--format", cfg.format, "csv or csv+plotscript")
            ->check(CLI::IsMember({"csv", "csv+plotscript"}))
            ->capture_default_str();
    };

    auto* potential = app.add_subcommand("potential", "tabulate V_-(x) and Phi(x)");
    common(potential, true);
    potential->add_option("--grid", cfg.grid, "x_min:x_max:n_points (default -12:12:4801)");

    auto* spectrum = app.add_subcommand("spectrum", "norms and eigen-residuals of H_- states");
    common(spectrum, true);
    spectrum->add_option("--grid", cfg.grid, "x_min:x_max:n_points (default -12:12:4801)");
    spectrum->add_option("--levels", cfg.levels, "number of excited levels")->capture_default_str();

    auto* wave = app.add_subcommand("wavefunction", "sample one eigenfunction");
    common(wave, true);
    wave->add_option("--grid", cfg.grid, "x_min:x_max:n_points (default -12:12:4801)");
    wave->add_option("--state", cfg.state, "eps, n (excited level of H_-) or plus:n (oscillator)")
        ->capture_default_str();

    auto* algebra = app.add_subcommand("algebra-check", "quadratic algebra and Casimir residuals");
    common(algebra, false);
    algebra->add_option("--dim", cfg.dim, "excited levels kept")->capture_default_str();

    auto* coherent = app.add_subcommand("coherent", "coefficients of the coherent state |mu>");
    common(coherent, false);
    coherent->add_option("--mu", cfg.mu, "eigenvalue mu: a, a+bI or a-bI")->capture_default_str();
    coherent->add_option("--n-max", cfg.n_max, "highest level kept (default: automatic)");

    auto* measure = app.add_subcommand("measure", "moments or samples of the weight sigma(x)");
    common(measure, false);
    measure->add_option("--moments", cfg.moments, "number of moments n = 0..K-1")
        ->capture_default_str();
    measure->add_option("--density", cfg.density, "tabulate sigma and f on x_min:x_max:n instead");
    measure->add_option("--abscissa", cfg.abscissa, "fixed contour abscissa (default: automatic)");

    auto* figure = app.add_subcommand("figure1", "radial densities f(x) for several epsilon");
    figure->add_option("--epsilons", cfg.epsilons, "comma-separated epsilon values")
        ->capture_default_str();
    figure->add_option("--grid", cfg.grid, "x_min:x_max:n_points (default 0.01:10:500)");
    figure->add_option("-o,--output", cfg.output, "output CSV path (default: stdout)");
    figure->add_flag("--force", cfg.force, "overwrite existing output");
    figure->add_option("--format", cfg.format, "csv or csv+plotscript")
        ->check(CLI::IsMember({"csv", "csv+plotscript"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        return run(cfg);
    } catch (const susyho::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain_failure;
    } catch (const susyho::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return convergence_failure;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io_failure;
    }
}
