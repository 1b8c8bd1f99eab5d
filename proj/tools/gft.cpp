// Command-line front end: every check in the library is exposed as a
// subcommand with JSON output on stdout and meaningful exit codes
//   0  assertion holds      1  assertion fails
//   2  usage / parse error  3  numerical degeneracy

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gft/gft.hpp"

namespace {

struct ParamFlags {
    double lambda = 1.0;
    double mu = 0.0;
    int eta = 0;
    double k = 0.0;
    double gamma = 0.0;
    double t_re = -1.0; // Sakaguchi case by default
    double t_im = 0.0;

    gft::ClassParams make() const {
        return gft::ClassParams(gft::OperatorParams(lambda, mu, eta), k, gamma,
                                gft::Complex(t_re, t_im));
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--lambda", p.lambda, "operator parameter lambda (>= mu)");
    cmd->add_option("--mu", p.mu, "operator parameter mu (>= 0)");
    cmd->add_option("--eta", p.eta, "operator iteration count (>= 0)");
    cmd->add_option("--k", p.k, "conic parameter k (>= 0)");
    cmd->add_option("--gamma", p.gamma, "order gamma in [0, 1)");
    cmd->add_option("--t-re", p.t_re, "real part of t (|t| <= 1, t != 1)");
    cmd->add_option("--t-im", p.t_im, "imaginary part of t");
}

struct GridFlags {
    double r_min = 0.01;
    double r_max = 0.999;
    int r_count = 64;
    int theta_count = 720;
    std::vector<double> rays;

    gft::GridSpec make() const {
        return gft::GridSpec{gft::GridSpec::log_radii(r_count, r_min, r_max), theta_count, rays};
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--r-min", g.r_min, "smallest grid radius");
    cmd->add_option("--r-max", g.r_max, "largest grid radius (< 1)");
    cmd->add_option("--r-count", g.r_count, "number of log-spaced radii");
    cmd->add_option("--theta-count", g.theta_count, "uniform angle count (>= 8)");
    cmd->add_option("--ray", g.rays, "extra angle(s) injected into the grid");
}

void emit(const std::string& json) { std::cout << json << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"class membership, neighborhood and partial-sum verification "
                 "for generalized symmetric-point starlike series"};
    app.require_subcommand(1);

    // phi -------------------------------------------------------------------
    auto* phi_cmd = app.add_subcommand("phi", "tabulate the operator multipliers for n = 1..N");
    ParamFlags phi_params;
    int phi_order = 64;
    add_param_flags(phi_cmd, phi_params);
    phi_cmd->add_option("-N,--order", phi_order, "table length")->check(CLI::PositiveNumber);

    // check -----------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "exact coefficient-inequality membership test");
    ParamFlags check_params;
    std::string check_file;
    add_param_flags(check_cmd, check_params);
    check_cmd->add_option("-f,--series", check_file, "series JSON file")->required();

    // verify ----------------------------------------------------------------
    auto* verify_cmd =
        app.add_subcommand("verify", "sample the analytic condition over a disk grid");
    ParamFlags verify_params;
    GridFlags verify_grid;
    std::string verify_file;
    std::string verify_dump;
    add_param_flags(verify_cmd, verify_params);
    add_grid_flags(verify_cmd, verify_grid);
    verify_cmd->add_option("-f,--series", verify_file, "series JSON file")->required();
    verify_cmd->add_option("--dump-grid", verify_dump, "write (r,theta,G) CSV to this path");

    // extremal --------------------------------------------------------------
    auto* extremal_cmd = app.add_subcommand("extremal", "emit an extremal function as series JSON");
    ParamFlags extremal_params;
    int extremal_n = 0;
    int extremal_m = 0;
    add_param_flags(extremal_cmd, extremal_params);
    auto* opt_n = extremal_cmd->add_option("--n", extremal_n,
                                           "coefficient index of the boundary member (>= 2)");
    auto* opt_m = extremal_cmd->add_option("--partial-m", extremal_m,
                                           "partial-sum index of the ratio witness (>= 1)");
    opt_n->excludes(opt_m);

    // neighborhood ----------------------------------------------------------
    auto* nbhd_cmd =
        app.add_subcommand("neighborhood", "weighted coefficient distance / inclusion sampling");
    ParamFlags nbhd_params;
    GridFlags nbhd_grid;
    std::string nbhd_f, nbhd_g;
    double nbhd_alpha = 0.0;
    int nbhd_trials = 0;
    std::uint64_t nbhd_seed = 0;
    int nbhd_rings = 8, nbhd_ring_samples = 16, nbhd_order = 64;
    add_param_flags(nbhd_cmd, nbhd_params);
    add_grid_flags(nbhd_cmd, nbhd_grid);
    nbhd_cmd->add_option("--alpha", nbhd_alpha, "neighborhood radius (>= 0)")->required();
    nbhd_cmd->add_option("-f,--series", nbhd_f, "center series JSON file")->required();
    auto* opt_g = nbhd_cmd->add_option("-g,--other", nbhd_g, "candidate series JSON file");
    auto* opt_trials =
        nbhd_cmd->add_option("--trials", nbhd_trials, "sampled inclusion trials (>= 1)");
    auto* opt_seed = nbhd_cmd->add_option("--seed", nbhd_seed, "sampling seed");
    nbhd_cmd->add_option("--rings", nbhd_rings, "epsilon rings for the hypothesis check");
    nbhd_cmd->add_option("--ring-samples", nbhd_ring_samples, "arguments per epsilon ring");
    nbhd_cmd->add_option("--sample-order", nbhd_order, "truncation order of sampled members");
    opt_g->excludes(opt_trials);
    opt_trials->needs(opt_seed);

    // partial-sums ----------------------------------------------------------
    auto* psum_cmd =
        app.add_subcommand("partial-sums", "verify the four partial-sum ratio bounds");
    ParamFlags psum_params;
    GridFlags psum_grid;
    std::string psum_file;
    int psum_m = 1;
    add_param_flags(psum_cmd, psum_params);
    add_grid_flags(psum_cmd, psum_grid);
    psum_cmd->add_option("-f,--series", psum_file, "series JSON file")->required();
    psum_cmd->add_option("--m", psum_m, "partial-sum index (>= 1)")->required();

    // classify-conic --------------------------------------------------------
    auto* conic_cmd = app.add_subcommand("classify-conic", "name the conic region for (k, gamma)");
    double conic_k = 0.0, conic_gamma = 0.0;
    conic_cmd->add_option("--k", conic_k, "conic parameter k (>= 0)");
    conic_cmd->add_option("--gamma", conic_gamma, "order gamma in [0, 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*phi_cmd) {
            const gft::OperatorParams op(phi_params.lambda, phi_params.mu, phi_params.eta);
            emit(gft::phi_table_to_json(op, phi_order));
            return 0;
        }

        if (*check_cmd) {
            const gft::ClassParams p = check_params.make();
            const gft::MembershipVerdict v = gft::is_member(p, gft::load_series(check_file));
            emit(gft::verdict_to_json(v));
            return v.member ? 0 : 1;
        }

        if (*verify_cmd) {
            const gft::ClassParams p = verify_params.make();
            const gft::TruncatedSeries f = gft::load_series(verify_file);
            const gft::GridSpec grid = verify_grid.make();
            const gft::VerificationReport rep = gft::grid_min_condition(p, f, grid);
            if (!verify_dump.empty()) {
                std::ofstream out(verify_dump);
                if (!out) throw gft::ParseError("cannot open dump file: " + verify_dump);
                gft::write_condition_csv(out, p, f, grid);
            }
            emit(gft::condition_report_to_json(rep));
            return rep.pass ? 0 : 1;
        }

        if (*extremal_cmd) {
            const gft::ClassParams p = extremal_params.make();
            if (opt_n->count() == 0 && opt_m->count() == 0)
                throw CLI::ValidationError("extremal", "one of --n or --partial-m is required");
            const gft::TruncatedSeries f = opt_n->count() > 0
                                               ? gft::extremal_function(p, extremal_n)
                                               : gft::extremal_partial(p, extremal_m);
            emit(gft::series_to_json(f));
            return 0;
        }

        if (*nbhd_cmd) {
            const gft::NeighborhoodSpec spec(nbhd_params.make(), nbhd_alpha);
            const gft::TruncatedSeries f = gft::load_series(nbhd_f);
            if (opt_g->count() > 0) {
                const gft::TruncatedSeries g = gft::load_series(nbhd_g);
                const double d = gft::distance(spec.params, f, g);
                const bool inside = d <= spec.alpha;
                emit(gft::distance_report_to_json(spec.alpha, d, inside));
                return inside ? 0 : 1;
            }
            if (opt_trials->count() == 0)
                throw CLI::ValidationError("neighborhood",
                                           "either --other or --trials is required");
            if (!gft::hypothesis_check(spec, f, nbhd_ring_samples, nbhd_rings)) {
                std::cerr << "hypothesis check failed: (f + eps z)/(1 + eps) leaves the class "
                             "on the sampled epsilon rings\n";
                return 1;
            }
            const gft::InclusionReport rep = gft::inclusion_property_test(
                spec, f, nbhd_trials, nbhd_seed, nbhd_grid.make(), nbhd_order);
            emit(gft::inclusion_report_to_json(rep));
            return rep.passes == rep.trials ? 0 : 1;
        }

        if (*psum_cmd) {
            const gft::ClassParams p = psum_params.make();
            const gft::TruncatedSeries f = gft::load_series(psum_file);
            const gft::PartialSumBounds b = gft::ratio_bounds(p, psum_m, std::max(64, f.order()));
            const auto reports = gft::verify_ratio_bounds(p, f, psum_m, psum_grid.make());
            emit(gft::partial_sums_to_json(b, reports));
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (*conic_cmd) {
            std::cout << gft::to_string(gft::classify(gft::ConicSpec(conic_k, conic_gamma)))
                      << "\n";
            return 0;
        }
    } catch (const gft::DegenerateWeight& e) {
        std::cerr << "degenerate weight: " << e.what() << "\n";
        return 3;
    } catch (const gft::ZeroDenominator& e) {
        std::cerr << "zero denominator: " << e.what() << "\n";
        return 3;
    } catch (const gft::DegenerateDenominator& e) {
        std::cerr << "degenerate denominator: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
