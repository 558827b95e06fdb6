// divmeas — portfolio diversification measures from the command line.
//
// Exit codes: 0 success, 1 usage/parse error, 2 invalid input values,
// 3 numeric failure, 4 I/O failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "divmeas/emit.hpp"
#include "divmeas/entropy.hpp"
#include "divmeas/errors.hpp"
#include "divmeas/maxent.hpp"
#include "divmeas/overlays.hpp"
#include "divmeas/spectral.hpp"
#include "divmeas/weights.hpp"

namespace {

using nlohmann::json;

constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

std::string resolve_out(const std::string& path) {
    if (path.empty()) return path;
    if (path.front() == '/') return path;
    if (const char* dir = std::getenv("DIVMEAS_OUT_DIR"))
        return std::string(dir) + "/" + path;
    return path;
}

std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw divmeas::numeric_error("cannot open input file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
        std::istringstream ss(line);
        std::vector<double> row;
        double v;
        bool bad = false;
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t used = 0;
                v = std::stod(tok, &used);
                if (used != tok.size()) bad = true;
            } catch (...) {
                bad = true;
            }
            if (bad) break;
            row.push_back(v);
        }
        if (bad && rows.empty()) continue;  // tolerate a single header line
        if (bad) throw divmeas::validation_error("malformed CSV line in " + path);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw divmeas::validation_error("no numeric data in " + path);
    return rows;
}

std::vector<double> parse_list(const std::string& spec) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw divmeas::validation_error("empty list: " + spec);
    return out;
}

// "lo:hi:step" or a comma list.
std::vector<double> parse_axis(const std::string& spec) {
    if (spec.find(':') == std::string::npos) return parse_list(spec);
    double lo, hi, step;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
        throw divmeas::validation_error("bad axis spec (want lo:hi:step): " + spec);
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-9 * step; v += step) out.push_back(v);
    return out;
}

std::string benefit_csv(const std::vector<divmeas::BenefitPoint>& rows) {
    std::string s = "strike_pct,sigma,benefit_nats,benefit_bits,diverged\n";
    for (const auto& r : rows) {
        s += divmeas::format_number(r.strike_pct) + "," + divmeas::format_number(r.sigma) +
             "," + divmeas::format_number(r.nats) + "," +
             divmeas::format_number(r.nats / std::log(2.0)) + "," +
             (r.diverged ? "1" : "0") + "\n";
    }
    return s;
}

void print_diversification(const divmeas::Diversification& d, const std::string& format,
                           const std::string& out) {
    if (format == "json") {
        json j{{"value_nats", d.nats()}, {"value_bits", d.bits()}, {"unit", "nats"}};
        divmeas::write_artifact(out, j.dump(2) + "\n");
    } else {
        divmeas::write_artifact(out, "D = " + divmeas::format_number(d.nats()) +
                                         " nats (" + divmeas::format_number(d.bits()) +
                                         " bits)\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "divmeas — portfolio diversification measures\n"
        "Weight- and covariance-based indices, the entropy measure D of the\n"
        "final-value distribution, derivative-overlay benefits and max-entropy\n"
        "reference surfaces.\n\n"
        "Exit codes: 0 ok, 1 usage, 2 invalid input, 3 numeric failure, 4 I/O.\n"
        "Set DIVMEAS_OUT_DIR to prefix relative --out paths."};
    app.require_subcommand(1);

    std::string out_path, format = "csv";
    unsigned seed = 0;
    app.add_option("--out", out_path, "Output file (default: stdout)");
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "Seed echoed into randomized sweeps");

    // weights
    auto* w_cmd = app.add_subcommand("weights", "Weight-based measures");
    std::vector<double> w_args;
    std::string w_csv;
    bool w_allow_zero = false;
    w_cmd->add_option("w", w_args, "Portfolio weights (sum to 1)");
    w_cmd->add_option("--csv", w_csv, "One-column CSV of weights");
    w_cmd->add_flag("--allow-zero", w_allow_zero, "Permit zero weights (0 log 0 = 0)");

    // pdi
    auto* pdi_cmd = app.add_subcommand("pdi", "Portfolio Diversification Index");
    std::string pdi_cov, pdi_weights;
    pdi_cmd->add_option("--cov", pdi_cov, "Square covariance CSV (header-free)")
        ->required();
    pdi_cmd->add_option("--weights", pdi_weights, "Optional one-column weight CSV");

    // entropy
    auto* ent_cmd = app.add_subcommand("entropy", "Entropy measure D of a density");
    std::string ent_dist, ent_grid;
    double ent_mean = 0.0, ent_sigma = 1.0, ent_x0 = 0.0, ent_gamma = 1.0, ent_nu = 0.0;
    ent_cmd->add_option("--dist", ent_dist, "gaussian | cauchy | lognormal")
        ->check(CLI::IsMember({"gaussian", "cauchy", "lognormal"}));
    ent_cmd->add_option("--grid", ent_grid, "Two-column CSV: abscissa,density");
    ent_cmd->add_option("--mean", ent_mean, "Gaussian mean");
    ent_cmd->add_option("--sigma", ent_sigma, "Gaussian/log-normal sigma");
    ent_cmd->add_option("--x0", ent_x0, "Cauchy location");
    ent_cmd->add_option("--gamma", ent_gamma, "Cauchy scale");
    ent_cmd->add_option("--nu", ent_nu, "Log-normal nu (log of expected value)");

    // overlay
    auto* ov_cmd = app.add_subcommand("overlay", "Single overlay benefit");
    ov_cmd->require_subcommand(1);
    double ov_sigma = 0.25, ov_r = 0.10, ov_nu = 0.10, ov_horizon = 1.0, ov_term = 2.0;
    double ov_strike = 1.0, ov_upper = 1.0, ov_lower = 0.9, ov_put = 1.0, ov_call = 1.2;
    double ov_gap = 0.001;
    for (auto* c : {ov_cmd}) {
        c->add_option("--sigma", ov_sigma, "Annual log-return volatility");
        c->add_option("--r", ov_r, "Risk-free rate");
        c->add_option("--nu", ov_nu, "Log expected growth over the horizon");
        c->add_option("--horizon", ov_horizon, "Measure horizon, years");
        c->add_option("--term", ov_term, "Option term, years");
    }
    auto* ov_put_cmd = ov_cmd->add_subcommand("put", "Long put overlay");
    ov_put_cmd->add_option("--strike", ov_strike, "Put strike, fraction of initial value");
    auto* ov_ps_cmd = ov_cmd->add_subcommand("put-spread", "Put spread overlay");
    ov_ps_cmd->add_option("--upper", ov_upper, "Upper put strike");
    ov_ps_cmd->add_option("--lower", ov_lower, "Lower put strike");
    auto* ov_col_cmd = ov_cmd->add_subcommand("collar", "Collar overlay");
    ov_col_cmd->add_option("--put", ov_put, "Put strike");
    ov_col_cmd->add_option("--call", ov_call, "Call strike");
    ov_col_cmd->add_option("--gap-threshold", ov_gap,
                           "Strike gap below which divergence is flagged");

    // maxent
    auto* me_cmd = app.add_subcommand("maxent", "Moment-constrained max-entropy solve");
    double me_var = 0.0625, me_skew = 0.0, me_kurt = 3.0;
    bool me_excess = false;
    me_cmd->add_option("--variance", me_var, "Target variance");
    me_cmd->add_option("--skew", me_skew, "Target skewness");
    me_cmd->add_option("--kurt", me_kurt, "Target kurtosis (raw; normal = 3)");
    me_cmd->add_flag("--excess", me_excess, "Interpret --kurt as excess kurtosis");

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "Figure-reproduction sweeps (CSV)");
    std::string fig_which;
    fig_cmd->add_option("which", fig_which, "fig2|fig3|fig4|fig5|fig6|fig7")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
    std::string fig_sigmas = "0.15,0.25,0.35", fig_strikes;
    double fig_r = 0.10, fig_nu = 0.10, fig_horizon = 1.0, fig_term = 2.0;
    double fig_width_pct = 10.0, fig_variance = 0.0625, fig_gap = 0.001;
    std::size_t fig_steps = 60;
    fig_cmd->add_option("--sigma", fig_sigmas, "Comma list of volatilities");
    fig_cmd->add_option("--strikes", fig_strikes, "Strike axis, pct (lo:hi:step or list)");
    fig_cmd->add_option("--r", fig_r, "Risk-free rate");
    fig_cmd->add_option("--nu", fig_nu, "Log expected growth over the horizon");
    fig_cmd->add_option("--horizon", fig_horizon, "Measure horizon, years");
    fig_cmd->add_option("--term", fig_term, "Option term, years");
    fig_cmd->add_option("--width-pct", fig_width_pct, "Put-spread width, pct of initial");
    fig_cmd->add_option("--variance", fig_variance, "fig5 variance");
    fig_cmd->add_option("--gap-threshold", fig_gap, "fig4 divergence gap");
    fig_cmd->add_option("--grid-points", fig_steps, "Weight-grid steps for fig6/fig7");

    // Let the global --out/--format/--seed appear after a subcommand too.
    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;  // --help exits 0, anything else is usage
    }
    const std::string out = resolve_out(out_path);

    try {
        if (*w_cmd) {
            std::vector<double> w = w_args;
            if (!w_csv.empty())
                for (const auto& row : read_numeric_csv(w_csv))
                    w.insert(w.end(), row.begin(), row.end());
            divmeas::WeightVector wv(w, w_allow_zero);
            json j{{"herfindahl", divmeas::herfindahl(wv)},
                   {"weight_entropy_bits", divmeas::weight_entropy(wv, divmeas::Unit::bits)},
                   {"weight_entropy_nats", divmeas::weight_entropy(wv, divmeas::Unit::nats)}};
            if (wv.size() >= 2) j["herfindahl_rescaled"] = divmeas::herfindahl_rescaled(wv);
            if (format == "json") {
                divmeas::write_artifact(out, j.dump(2) + "\n");
            } else {
                std::string s;
                for (const auto& [k, v] : j.items())
                    s += k + " = " + divmeas::format_number(v.get<double>()) + "\n";
                divmeas::write_artifact(out, s);
            }
        } else if (*pdi_cmd) {
            auto rows = read_numeric_csv(pdi_cov);
            const std::size_t n = rows.size();
            std::vector<double> entries;
            for (const auto& row : rows) {
                if (row.size() != n)
                    throw divmeas::validation_error("covariance CSV is not square");
                entries.insert(entries.end(), row.begin(), row.end());
            }
            divmeas::CovarianceMatrix cov(std::move(entries), n);
            double value;
            if (!pdi_weights.empty()) {
                std::vector<double> w;
                for (const auto& row : read_numeric_csv(pdi_weights))
                    w.insert(w.end(), row.begin(), row.end());
                value = divmeas::pdi_weighted(cov, divmeas::WeightVector(w, true));
            } else {
                value = divmeas::pdi(divmeas::eigen_spectrum(cov));
            }
            if (format == "json")
                divmeas::write_artifact(out, json{{"pdi", value}}.dump(2) + "\n");
            else
                divmeas::write_artifact(out,
                                        "PDI = " + divmeas::format_number(value) + "\n");
        } else if (*ent_cmd) {
            std::optional<divmeas::Diversification> d;
            if (!ent_grid.empty()) {
                std::vector<double> x, p;
                for (const auto& row : read_numeric_csv(ent_grid)) {
                    if (row.size() != 2)
                        throw divmeas::validation_error("grid CSV needs two columns");
                    x.push_back(row[0]);
                    p.push_back(row[1]);
                }
                d = divmeas::d_measure_grid(divmeas::DensityGrid(std::move(x), std::move(p)));
            } else if (ent_dist == "gaussian") {
                d = divmeas::d_measure_analytic(divmeas::Gaussian(ent_mean, ent_sigma));
            } else if (ent_dist == "cauchy") {
                d = divmeas::d_measure_analytic(divmeas::Cauchy(ent_x0, ent_gamma));
            } else if (ent_dist == "lognormal") {
                d = divmeas::d_measure_analytic(divmeas::LogNormal(ent_nu, ent_sigma));
            } else {
                throw divmeas::validation_error("entropy: give --dist or --grid");
            }
            print_diversification(*d, format, out);
        } else if (*ov_cmd) {
            const divmeas::UnderlyingModel u(ov_nu, ov_sigma, ov_horizon);
            const divmeas::bs::MarketParams m(ov_r, 0.0, ov_sigma, ov_term - ov_horizon);
            divmeas::BenefitResult b;
            if (*ov_put_cmd)
                b = divmeas::benefit_long_put(u, m, ov_strike);
            else if (*ov_ps_cmd)
                b = divmeas::benefit_put_spread(u, m, ov_upper, ov_lower);
            else
                b = divmeas::benefit_collar(u, m, ov_put, ov_call, ov_gap);
            if (format == "json") {
                json j{{"benefit_nats", b.nats},
                       {"benefit_bits", b.nats / std::log(2.0)},
                       {"diverged", b.diverged}};
                divmeas::write_artifact(out, j.dump(2) + "\n");
            } else {
                divmeas::write_artifact(
                    out, "benefit = " + divmeas::format_number(b.nats) + " nats (" +
                             divmeas::format_number(b.nats / std::log(2.0)) + " bits)" +
                             (b.diverged ? " [diverged]" : "") + "\n");
            }
        } else if (*me_cmd) {
            if (me_excess) me_kurt += 3.0;
            const auto sol = divmeas::solve_maxent({me_var, me_skew, me_kurt});
            const double gauss =
                -divmeas::d_measure_analytic(divmeas::Gaussian(0.0, std::sqrt(me_var)))
                     .nats();
            json j{{"converged", sol.converged},
                   {"lagrange_multipliers", sol.lagrange_multipliers},
                   {"log_normalizer", sol.log_normalizer},
                   {"entropy_nats", sol.entropy_nats},
                   {"delta_d_nats", sol.converged ? gauss - sol.entropy_nats : 0.0},
                   {"iterations", sol.iterations},
                   {"residual", sol.residual},
                   {"achieved",
                    {{"variance", sol.achieved_moments.variance},
                     {"skewness", sol.achieved_moments.skewness},
                     {"kurtosis", sol.achieved_moments.kurtosis}}}};
            divmeas::write_artifact(out, j.dump(2) + "\n");
        } else if (*fig_cmd) {
            const auto sigmas = parse_list(fig_sigmas);
            divmeas::SweepConfig cfg;
            cfg.r = fig_r;
            cfg.nu = fig_nu;
            cfg.horizon_years = fig_horizon;
            cfg.term_years = fig_term;
            cfg.spread_width = fig_width_pct / 100.0;
            cfg.gap_threshold = fig_gap;
            std::string text;
            if (fig_which == "fig2") {
                auto strikes = parse_axis(fig_strikes.empty() ? "50:150:2.5" : fig_strikes);
                text = benefit_csv(
                    divmeas::sweep_figure(divmeas::FigureSweep::fig2, strikes, sigmas, cfg));
            } else if (fig_which == "fig3") {
                auto strikes = parse_axis(fig_strikes.empty() ? "60:160:2.5" : fig_strikes);
                text = benefit_csv(
                    divmeas::sweep_figure(divmeas::FigureSweep::fig3, strikes, sigmas, cfg));
            } else if (fig_which == "fig4") {
                auto strikes =
                    parse_axis(fig_strikes.empty() ? "100.2:200:2.45" : fig_strikes);
                text = benefit_csv(
                    divmeas::sweep_figure(divmeas::FigureSweep::fig4, strikes, sigmas, cfg));
            } else if (fig_which == "fig5") {
                std::vector<double> skews, kurts;
                for (int i = 0; i <= 20; ++i) {
                    skews.push_back(-1.0 + 0.1 * i);
                    kurts.push_back(2.0 + 0.2 * i);
                }
                text = "skew,kurt,delta_d_nats,defined\n";
                for (const auto& p :
                     divmeas::d_difference_surface(fig_variance, skews, kurts)) {
                    text += divmeas::format_number(p.skew) + "," +
                            divmeas::format_number(p.kurt) + "," +
                            divmeas::format_number(p.delta_d_nats) + "," +
                            (p.defined ? "1" : "0") + "\n";
                }
            } else if (fig_which == "fig6") {
                text = "w1,entropy,herfindahl,entropy_contrib,herfindahl_contrib\n";
                for (const auto& r : divmeas::two_asset_comparison_grid(fig_steps)) {
                    text += divmeas::format_number(r.w1) + "," +
                            divmeas::format_number(r.entropy_norm) + "," +
                            divmeas::format_number(r.herfindahl_norm) + "," +
                            divmeas::format_number(r.entropy_contrib) + "," +
                            divmeas::format_number(r.herfindahl_contrib) + "\n";
                }
            } else {
                text = "w1,h,entropy,herfindahl,diff\n";
                for (const auto& r :
                     divmeas::three_asset_comparison_grid(fig_steps, fig_steps)) {
                    text += divmeas::format_number(r.w1) + "," +
                            divmeas::format_number(r.h) + "," +
                            divmeas::format_number(r.entropy_norm) + "," +
                            divmeas::format_number(r.herfindahl_norm) + "," +
                            divmeas::format_number(r.difference) + "\n";
                }
            }
            divmeas::write_artifact(out, text);
        }
    } catch (const divmeas::validation_error& e) {
        std::fprintf(stderr, "error (invalid input): %s\n", e.what());
        return exit_validation;
    } catch (const divmeas::infeasible_error& e) {
        std::fprintf(stderr, "error (infeasible): %s\n", e.what());
        return exit_validation;
    } catch (const divmeas::domain_error& e) {
        std::fprintf(stderr, "error (domain): %s\n", e.what());
        return exit_validation;
    } catch (const divmeas::numeric_error& e) {
        std::fprintf(stderr, "error (numeric/I-O): %s\n", e.what());
        return e.what() && std::string(e.what()).find("file") != std::string::npos
                   ? exit_io
                   : exit_numeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
    return 0;
}
