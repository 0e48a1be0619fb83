// Command-line front end: parameter sweeps and CSV emission for the
// double-slit matter-wave model. All numeric output is deterministic
// (fixed %.17g formatting, rows in input order).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slitwave/csv.hpp"
#include "slitwave/extrema.hpp"
#include "slitwave/fringes.hpp"
#include "slitwave/moments.hpp"
#include "slitwave/oracle.hpp"
#include "slitwave/units.hpp"

namespace {

using namespace slitwave;

struct Options {
    std::string sigma0 = "7.8um";
    std::string beta = "7.8um";
    std::string d = "125um";
    double mass = 1.67e-27;
    std::string lambda = "2nm";
    std::string hbar = "reference";
    std::string t, tau;
    std::string t_range, tau_range, x_range;
    std::string x;
    double v = 0.0;  // m/s, 0 = derive from lambda
    std::string normalization = "unit-peak";
    std::string out;
    QuadratureSpec quad;
};

double parse_hbar(const std::string& text) {
    if (text == "reference") return kReferenceHbar;
    if (text == "codata") return kCodataHbar;
    return std::stod(text);
}

ExperimentParams build_params(const Options& o) {
    ExperimentParams p;
    p.mass = o.mass;
    p.sigma0 = parse_length_m(o.sigma0);
    p.beta = parse_length_m(o.beta);
    p.d = parse_length_m(o.d);
    p.lambda_dB = o.lambda.empty() ? 0.0 : parse_length_m(o.lambda);
    p.hbar = parse_hbar(o.hbar);
    p.validate();
    return p;
}

struct Context {
    ExperimentParams p;
    ReducedParams g;
    double tau0_s;
    Normalization norm;
    std::ostream* out;
    std::unique_ptr<std::ofstream> file;

    std::ostream& stream() { return *out; }
};

Context make_context(const Options& o) {
    Context c{build_params(o), {}, 0.0, Normalization::unit_peak, &std::cout, nullptr};
    c.g = c.p.reduce();
    c.tau0_s = c.p.tau0();
    if (o.normalization == "unit-area") {
        c.norm = Normalization::unit_area;
    } else if (o.normalization == "unit-peak") {
        c.norm = Normalization::unit_peak;
    } else {
        throw std::invalid_argument("normalization must be unit-area or unit-peak");
    }
    if (!o.out.empty()) {
        c.file = std::make_unique<std::ofstream>(o.out, std::ios::binary);
        if (!*c.file) throw std::runtime_error("cannot open output file " + o.out);
        c.out = c.file.get();
    }
    return c;
}

double time_or(const Context& c, const std::string& text, double fallback) {
    if (text.empty()) return fallback;
    return parse_time(text).to_tau0(c.tau0_s);
}

void echo_params(csv::Writer& w, const Context& c, const std::string& command) {
    w.meta("command", command);
    w.meta("mass_kg", c.p.mass);
    w.meta("sigma0_m", c.p.sigma0);
    w.meta("beta_m", c.p.beta);
    w.meta("d_m", c.p.d);
    w.meta("lambda_m", c.p.lambda_dB);
    w.meta("hbar_Js", c.p.hbar);
    w.meta("tau0_s", c.tau0_s);
}

std::vector<double> linspace(const Range& r) {
    std::vector<double> v(r.n);
    for (int i = 0; i < r.n; ++i) {
        v[i] = r.lo + (r.hi - r.lo) * i / (r.n - 1);
    }
    return v;
}

int cmd_derived(Context& c, const Options& o) {
    const double t = time_or(c, o.t, 0.0);
    const double tau = time_or(c, o.tau, 18.0);
    const FreeBeam fb = free_beam(t);
    const SlitBeam sb = slit_beam(c.g, t, tau);
    csv::Writer w(c.stream());
    echo_params(w, c, "derived");
    const std::vector<std::string> cols{
        "t_tau0",    "tau_tau0", "b_sigma0", "inv_r_per_tau0",
        "B_sigma0",  "R_tau0",   "Delta_per_sigma0", "D_sigma0",
        "theta_rad", "mu_rad",   "tau0_s",   "b_m",
        "B_m",       "R_s",      "Delta_per_m", "D_m"};
    w.header(cols);
    const std::vector<double> row{
        t, tau, fb.b, fb.inv_r, sb.B, sb.R(), sb.Delta, sb.D, sb.theta, sb.mu,
        c.tau0_s, fb.b * c.p.sigma0, sb.B * c.p.sigma0, sb.R() * c.tau0_s,
        sb.Delta / c.p.sigma0, sb.D * c.p.sigma0};
    w.row(row);
    return 0;
}

int cmd_scan_xp(Context& c, const Options& o) {
    const double tau = time_or(c, o.tau, 18.0);
    const Range r = o.t_range.empty() ? Range{6.0 / 2000.0, 6.0, 2000}
                                      : parse_time_range(o.t_range, c.tau0_s);
    csv::Writer w(c.stream());
    echo_params(w, c, "scan-xp");
    w.meta("tau_tau0", tau);
    const std::vector<std::string> cols{"t_tau0",         "sigma_xp_hbar",
                                        "term1_abs_hbar", "term2_abs_hbar",
                                        "term3_abs_hbar", "term4_abs_hbar"};
    w.header(cols);
    for (double t : linspace(r)) {
        const auto terms = sigma_xp_terms(slit_beam(c.g, t, tau));
        const double xp = terms[0] + terms[1] + terms[2] + terms[3];
        const std::vector<double> row{t,
                                      xp,
                                      std::abs(terms[0]),
                                      std::abs(terms[1]),
                                      std::abs(terms[2]),
                                      std::abs(terms[3])};
        w.row(row);
    }
    return 0;
}

int cmd_surface(Context& c, const Options& o) {
    const Range tr = o.t_range.empty() ? Range{0.02, 6.0, 300}
                                       : parse_time_range(o.t_range, c.tau0_s);
    const Range taur = o.tau_range.empty() ? Range{2.0, 100.0, 300}
                                           : parse_time_range(o.tau_range, c.tau0_s);
    csv::Writer w(c.stream());
    echo_params(w, c, "surface");
    const std::vector<std::string> cols{"t_tau0", "tau_tau0", "sigma_xp_hbar"};
    w.header(cols);
    for (double tau : linspace(taur)) {
        for (double t : linspace(tr)) {
            const std::vector<double> row{t, tau, sigma_xp(c.g, t, tau)};
            w.row(row);
        }
    }
    return 0;
}

int cmd_table1(Context& c) {
    csv::Writer w(c.stream());
    echo_params(w, c, "table1");
    const std::vector<std::string> cols{
        "tau_tau0",      "t_max_xp_tau0", "t_max_xx_tau0",
        "t_max_pp_tau0", "t_inf_xp_tau0", "sigma_xp_max_hbar",
        "sigma_xx2_max_sigma0sq", "sigma_pp2_max_hbar_per_sigma0_sq",
        "sigma_xp_inf_hbar"};
    w.header(cols);
    for (const ExtremaRow& r : table1(c.g)) {
        const std::vector<double> row{r.tau,      r.t_max_xp, r.t_max_xx,
                                      r.t_max_pp, r.t_inf_xp, r.xp_max,
                                      r.xx2_max,  r.pp2_max,  r.xp_at_inf};
        w.row(row);
    }
    return 0;
}

// the paper's screen plots cover the non-negative half of the symmetric
// pattern; that is the default emission range
std::vector<double> screen_grid(const Context& c, const Options& o, const SlitBeam& sb) {
    if (o.x_range.empty()) {
        const int n = 2048;
        std::vector<double> xs(n);
        const double hi = sb.D / 2.0 + 8.0 * sb.B;
        for (int i = 0; i < n; ++i) xs[i] = hi * i / (n - 1);
        return xs;
    }
    const Range r = parse_length_range(o.x_range);
    std::vector<double> xs = linspace(r);
    for (double& x : xs) x /= c.p.sigma0;  // meters -> sigma0
    return xs;
}

int cmd_screen(Context& c, const Options& o, bool with_duality) {
    const double t = time_or(c, o.t, 0.2);
    const double tau = time_or(c, o.tau, 18.0);
    const SlitBeam sb = slit_beam(c.g, t, tau);
    const auto xs = screen_grid(c, o, sb);
    const double scale = intensity_scale(sb, c.norm);

    std::vector<double> ivals(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ivals[i] = intensity(sb, xs[i], scale);

    csv::Writer w(c.stream());
    echo_params(w, c, with_duality ? "fringes" : "intensity");
    w.meta("t_tau0", t);
    w.meta("tau_tau0", tau);
    w.meta("normalization",
           c.norm == Normalization::unit_area ? "unit-area" : "unit-peak");
    w.meta("nu_fringe_index", fringe_index(sb));
    w.meta("local_maxima", static_cast<double>(count_local_maxima(ivals)));
    std::vector<std::string> cols{"x_sigma0", "x_m", "intensity", "envelope"};
    if (with_duality) {
        cols.insert(cols.end(), {"visibility", "predictability", "p2_plus_v2"});
    }
    w.header(cols);
    for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<double> row{xs[i], xs[i] * c.p.sigma0, ivals[i],
                                intensity_envelope(sb, xs[i], scale)};
        if (with_duality) {
            const double vv = visibility(sb, xs[i]);
            const double pp = predictability(sb, xs[i]);
            row.insert(row.end(), {vv, pp, pp * pp + vv * vv});
        }
        w.row(row);
    }
    return 0;
}

int cmd_duality_scan(Context& c, const Options& o) {
    if (o.x.empty()) throw std::invalid_argument("duality-scan requires --x");
    const double x = parse_length_m(o.x) / c.p.sigma0;
    const double tau = time_or(c, o.tau, 10.0);
    const Range r = o.t_range.empty() ? Range{0.01, 20.0, 1000}
                                      : parse_time_range(o.t_range, c.tau0_s);
    csv::Writer w(c.stream());
    echo_params(w, c, "duality-scan");
    w.meta("x_sigma0", x);
    w.meta("tau_tau0", tau);
    const std::vector<std::string> cols{"t_tau0", "visibility", "predictability",
                                        "p2_plus_v2"};
    w.header(cols);
    for (double t : linspace(r)) {
        const SlitBeam sb = slit_beam(c.g, t, tau);
        const double vv = visibility(sb, x);
        const double pp = predictability(sb, x);
        const std::vector<double> row{t, vv, pp, pp * pp + vv * vv};
        w.row(row);
    }
    return 0;
}

int cmd_validate(Context& c, const Options& o) {
    std::vector<std::pair<double, double>> points;
    if (!o.t.empty() || !o.tau.empty()) {
        points.emplace_back(time_or(c, o.t, 0.2), time_or(c, o.tau, 18.0));
    } else {
        for (double t : {0.2, 0.52, 1.42, 4.0, 18.0}) {
            for (double tau : {10.0, 18.0, 30.0}) points.emplace_back(t, tau);
        }
    }
    csv::Writer w(c.stream());
    echo_params(w, c, "validate");
    const std::vector<std::string> cols{"t_tau0",  "tau_tau0", "rel_l2_psi",
                                        "err_xx2", "err_pp2",  "err_xp",
                                        "ok"};
    w.header(cols);
    bool all_ok = true;
    for (auto [t, tau] : points) {
        const ValidationReport r = validate(c.g, t, tau, o.quad);
        all_ok = all_ok && r.ok();
        const std::vector<double> row{t,
                                      tau,
                                      r.rel_l2_psi,
                                      r.moment_rel_errors[0],
                                      r.moment_rel_errors[1],
                                      r.moment_rel_errors[2],
                                      r.ok() ? 1.0 : 0.0};
        w.row(row);
    }
    return all_ok ? 0 : 1;
}

int cmd_feasibility(Context& c, const Options& o) {
    const double v = (o.v != 0.0) ? o.v : c.p.velocity_from_lambda();
    if (!(v > 0.0)) throw std::invalid_argument("v must be > 0");
    const double t = time_or(c, o.t, 18.0);
    const double tau = time_or(c, o.tau, 18.0);
    const double t_s = t * c.tau0_s;
    const double tau_s = tau * c.tau0_s;
    std::ostream& out = c.stream();
    out << "tau0   = " << csv::format(c.tau0_s) << " s\n";
    out << "t      = " << csv::format(t_s) << " s (" << csv::format(t) << " tau0)\n";
    out << "tau    = " << csv::format(tau_s) << " s (" << csv::format(tau) << " tau0)\n";
    out << "v      = " << csv::format(v) << " m/s\n";
    out << "z_t    = " << csv::format(v * t_s) << " m\n";
    out << "z_tau  = " << csv::format(v * tau_s) << " m\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian matter-wave double-slit model: beam parameters, "
                 "correlations, uncertainty products, fringe profiles"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options o;
    app.add_option("--sigma0", o.sigma0, "initial packet width (um|mm|m)");
    app.add_option("--beta", o.beta, "slit aperture width (um|mm|m)");
    app.add_option("--d", o.d, "slit separation (um|mm|m)");
    app.add_option("--mass", o.mass, "particle mass [kg]");
    app.add_option("--lambda", o.lambda, "de Broglie wavelength (um|mm|m)");
    app.add_option("--hbar", o.hbar, "hbar [J s], or 'reference' (1e-34) / 'codata'");
    app.add_option("--t", o.t, "source->slit time (suffix tau0|s|ms; default tau0)");
    app.add_option("--tau", o.tau, "slit->screen time (suffix tau0|s|ms)");
    app.add_option("--t-range", o.t_range, "t sweep lo:hi:n");
    app.add_option("--tau-range", o.tau_range, "tau sweep lo:hi:n");
    app.add_option("--x-range", o.x_range, "screen sweep lo:hi:n (lengths)");
    app.add_option("--x", o.x, "screen position (um|mm|m)");
    app.add_option("--v", o.v, "longitudinal velocity [m/s]");
    app.add_option("--normalization", o.normalization, "unit-area|unit-peak");
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--oracle-nodes", o.quad.nodes, "initial quadrature order");
    app.add_option("--oracle-half-width", o.quad.half_width,
                   "integration cutoff in packet widths");
    app.add_option("--oracle-grid-points", o.quad.grid_points, "moment grid size");

    auto* sc_derived = app.add_subcommand("derived", "beam parameters at one (t, tau)")->fallthrough();
    auto* sc_scan = app.add_subcommand("scan-xp", "correlation scan over t")->fallthrough();
    auto* sc_surface = app.add_subcommand("surface", "correlation over (t, tau)")->fallthrough();
    auto* sc_table1 = app.add_subcommand("table1", "times of maxima and inflection")->fallthrough();
    auto* sc_intensity = app.add_subcommand("intensity", "screen intensity profile")->fallthrough();
    auto* sc_fringes = app.add_subcommand("fringes", "intensity + visibility profile")->fallthrough();
    auto* sc_duality = app.add_subcommand("duality-scan", "V, P against t at fixed x")->fallthrough();
    auto* sc_validate = app.add_subcommand("validate", "closed forms vs quadrature")->fallthrough();
    auto* sc_feas = app.add_subcommand("feasibility", "flight distances in SI")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Context c = make_context(o);
        if (sc_derived->parsed()) return cmd_derived(c, o);
        if (sc_scan->parsed()) return cmd_scan_xp(c, o);
        if (sc_surface->parsed()) return cmd_surface(c, o);
        if (sc_table1->parsed()) return cmd_table1(c);
        if (sc_intensity->parsed()) return cmd_screen(c, o, false);
        if (sc_fringes->parsed()) return cmd_screen(c, o, true);
        if (sc_duality->parsed()) return cmd_duality_scan(c, o);
        if (sc_validate->parsed()) return cmd_validate(c, o);
        if (sc_feas->parsed()) return cmd_feasibility(c, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
