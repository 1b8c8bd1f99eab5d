// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criterion 9 drives the installed CLI binary (path injected by the
// build) and compares raw output bytes.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gft/gft.hpp"

using namespace gft;

namespace {

ClassParams set_a() { return ClassParams(OperatorParams(1, 0, 0), 0.0, 0.0, {0.0, 0.0}); }
ClassParams set_b() { return ClassParams(OperatorParams(1, 0, 1), 1.0, 0.25, {-1.0, 0.0}); }
ClassParams set_c() { return ClassParams(OperatorParams(0.75, 0.25, 2), 0.5, 0.5, {0.5, 0.0}); }

std::vector<ClassParams> reference_sets() { return {set_a(), set_b(), set_c()}; }

struct Criterion {
    int id;
    const char* name;
    bool ok = true;
    void check(bool c) {
        ok = ok && c;
        CHECK(c);
    }
};

template <typename Body>
void criterion(int id, const char* name, Body&& body) {
    Criterion c{id, name};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        FAIL_CHECK("unexpected exception: " << e.what());
    }
    std::printf("[acceptance] criterion %d (%s): %s\n", id, name, c.ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    CHECK(c.ok);
}

TruncatedSeries random_general(Rng& rng, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order - 1));
    for (Complex& x : c) x = rng.in_disk(1.0);
    return TruncatedSeries(SignForm::General, order, std::move(c));
}

/// Random sparse member: support in 2..max_order, coefficient sum rescaled
/// to (1 - gamma) * rho with rho uniform in [0, 1].
TruncatedSeries random_member(const ClassParams& p, Rng& rng, int max_order = 32) {
    const Multipliers m = multipliers(p, max_order);
    std::vector<Complex> c(static_cast<std::size_t>(max_order - 1));
    double sum = 0.0;
    const int terms = rng.uniform_int(1, 6);
    for (int i = 0; i < terms; ++i) {
        const int n = rng.uniform_int(2, max_order);
        const double a = rng.uniform01();
        c[static_cast<std::size_t>(n - 2)] += a;
        sum += m.w_at(n) * a;
    }
    const double target = (1.0 - p.gamma) * rng.uniform01();
    if (sum > 0.0)
        for (Complex& x : c) x *= target / sum;
    return TruncatedSeries(SignForm::NegativeCoefficients, max_order, std::move(c));
}

struct CmdResult {
    std::string out;
    int status = -1;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

} // namespace

TEST_CASE("criterion 1: operator equivalence", "[acceptance]") {
    criterion(1, "closed vs recursive operator", [](Criterion& c) {
        const auto start = std::chrono::steady_clock::now();
        Rng rng(1001);

        std::vector<OperatorParams> params;
        for (const ClassParams& p : reference_sets()) params.push_back(p.op);
        for (int i = 0; i < 50; ++i) {
            const double mu = rng.uniform(0.0, 1.0);
            const double lambda = mu + rng.uniform(0.0, 2.0 - mu);
            params.emplace_back(lambda, mu, rng.uniform_int(0, 6));
        }

        std::vector<TruncatedSeries> series;
        for (int i = 0; i < 100; ++i) series.push_back(random_general(rng, 64));

        for (const OperatorParams& p : params) {
            for (const TruncatedSeries& f : series) {
                const TruncatedSeries closed = apply_closed(p, f);
                const TruncatedSeries recursive = apply_recursive(p, f);
                bool all = true;
                for (int n = 2; n <= 64; ++n)
                    all = all && std::abs(closed.coeff(n) - recursive.coeff(n)) <=
                                     1e-12 * std::max(1.0, std::abs(recursive.coeff(n)));
                c.check(all);
            }
        }

        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(elapsed < 5.0);
    });
}

TEST_CASE("criterion 2: special-case reductions", "[acceptance]") {
    criterion(2, "Salagean and Al-Oboudi reductions exact", [](Criterion& c) {
        Rng rng(1002);
        for (int eta = 0; eta <= 6; ++eta) {
            const OperatorParams salagean(1.0, 0.0, eta);
            for (int n = 1; n <= 64; ++n) {
                double npow = 1.0;
                for (int i = 0; i < eta; ++i) npow *= n;
                c.check(phi(salagean, n) == npow);
            }
        }
        for (int draw = 0; draw < 25; ++draw) {
            const double lambda = rng.uniform(0.0, 2.0);
            for (int eta = 0; eta <= 6; ++eta) {
                const OperatorParams p(lambda, 0.0, eta);
                for (int n = 1; n <= 64; ++n) {
                    const double base = 1.0 + lambda * (n - 1);
                    double expected = 1.0;
                    for (int i = 0; i < eta; ++i) expected *= base;
                    c.check(phi(p, n) == expected);
                }
            }
        }
    });
}

TEST_CASE("criterion 3: equivalence checks", "[acceptance]") {
    criterion(3, "half-plane and conic equivalences", [](Criterion& c) {
        Rng rng(1003);
        int disagreements = 0;
        for (int i = 0; i < 100000; ++i) {
            const EquivalenceCheck l = half_plane_equivalence(rng.in_disk(10.0), rng.uniform(-2.0, 2.0));
            if (l.lhs != l.rhs) ++disagreements;
        }
        c.check(disagreements == 0);

        disagreements = 0;
        for (int i = 0; i < 100000; ++i) {
            const EquivalenceCheck l = conic_form_equivalence(rng.in_disk(3.0), rng.uniform(0.0, 2.0),
                                              rng.uniform01() * 0.999, 16);
            if (l.lhs != l.rhs) ++disagreements;
        }
        c.check(disagreements == 0);
    });
}

TEST_CASE("criterion 4: sufficiency on random members", "[acceptance]") {
    criterion(4, "members pass the grid condition", [](Criterion& c) {
        const auto start = std::chrono::steady_clock::now();
        Rng rng(1004);
        for (const ClassParams& p : reference_sets()) {
            for (int trial = 0; trial < 200; ++trial) {
                const TruncatedSeries f = random_member(p, rng);
                const VerificationReport rep = grid_min_condition(p, f);
                c.check(rep.minimum >= -1e-6);
            }
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.check(elapsed < 60.0);
    });
}

TEST_CASE("criterion 5: sharpness of the coefficient inequality", "[acceptance]") {
    criterion(5, "extremal boundary behavior", [](Criterion& c) {
        for (const ClassParams& p : reference_sets()) {
            for (int n : {2, 3, 5}) {
                const TruncatedSeries e = extremal_function(p, n);
                c.check(std::abs(coefficient_sum(p, e) - (1.0 - p.gamma)) <= 1e-12);
                c.check(grid_min_condition(p, e).minimum >= -1e-6);

                std::vector<Complex> over(e.coeffs());
                for (Complex& x : over) x *= 1.01;
                const TruncatedSeries beyond(SignForm::NegativeCoefficients, e.order(),
                                             std::move(over));
                c.check(grid_min_condition(p, beyond).minimum < -1e-4);
            }
        }
    });
}

TEST_CASE("criterion 6: coefficient bound is tight", "[acceptance]") {
    criterion(6, "single-term members at the bound", [](Criterion& c) {
        for (const ClassParams& p : reference_sets()) {
            for (int n = 2; n <= 10; ++n) {
                const double bound = coefficient_bound(p, n);
                std::vector<Complex> at(static_cast<std::size_t>(n - 1));
                at[static_cast<std::size_t>(n - 2)] = bound;
                c.check(is_member(p, TruncatedSeries(SignForm::NegativeCoefficients, n, at)).member);

                std::vector<Complex> beyond(static_cast<std::size_t>(n - 1));
                beyond[static_cast<std::size_t>(n - 2)] = 1.001 * bound;
                c.check(!is_member(p, TruncatedSeries(SignForm::NegativeCoefficients, n, beyond))
                             .member);
            }
        }
    });
}

TEST_CASE("criterion 7: neighborhood inclusion", "[acceptance]") {
    criterion(7, "hypothesis, sampled inclusion, kernel bound", [](Criterion& c) {
        const ClassParams p = set_a();
        const TruncatedSeries e = extremal_function(p, 2);
        std::vector<Complex> half(e.coeffs());
        for (Complex& x : half) x *= 0.5;
        const TruncatedSeries f(SignForm::NegativeCoefficients, e.order(), std::move(half));
        const NeighborhoodSpec spec(p, 0.25);

        c.check(hypothesis_check(spec, f, 16, 8));

        const InclusionReport rep = inclusion_property_test(spec, f, 50, 2024, GridSpec::defaults(), 64);
        c.check(rep.passes == 50);
        c.check(rep.min_grid_margin >= -1e-6);

        Rng rng(1007);
        const Multipliers m = multipliers(p, 16);
        bool bound_holds = true;
        for (int i = 0; i < 10000; ++i) {
            const int n = rng.uniform_int(2, 16);
            const Complex cn = kernel_coefficient(p, n, rng.on_circle(), rng.uniform(-kPi, kPi));
            bound_holds = bound_holds && std::abs(cn) <= m.w_at(n) / (1.0 - p.gamma) + 1e-9;
        }
        c.check(bound_holds);
    });
}

TEST_CASE("criterion 8: partial-sum ratio bounds", "[acceptance]") {
    criterion(8, "four ratio bounds and sharpness", [](Criterion& c) {
        // hand-derived anchor: classical case, m = 1
        const PartialSumBounds anchor = ratio_bounds(set_a(), 1);
        c.check(anchor.bound_f_over_fm == 0.5);
        c.check(anchor.bound_fm_over_f == Catch::Approx(2.0 / 3.0).margin(1e-15));
        c.check(anchor.bound_df_over_dfm == 0.0);
        c.check(anchor.bound_dfm_over_df == 0.5);

        Rng rng(1008);
        for (const ClassParams& p : reference_sets()) {
            for (int m : {1, 2, 4}) {
                for (int trial = 0; trial < 50; ++trial) {
                    const TruncatedSeries f = random_member(p, rng, 16);
                    const auto reports = verify_ratio_bounds(p, f, m);
                    bool all = true;
                    for (const VerificationReport& r : reports)
                        all = all && r.minimum >= r.bound - 1e-6;
                    c.check(all);
                }

                GridSpec grid = GridSpec::defaults();
                grid.include_rays.push_back(kPi / m);
                const auto reports = verify_ratio_bounds(p, extremal_partial(p, m), m, grid);
                c.check(reports[0].minimum >= reports[0].bound - 1e-6);
                c.check(reports[0].minimum - reports[0].bound <= 1e-3);
            }
        }
    });
}

TEST_CASE("criterion 9: determinism", "[acceptance]") {
    criterion(9, "byte-identical CLI output, thread independence", [](Criterion& c) {
        const std::string cli = GFT_CLI_PATH;
        const std::string dir = std::filesystem::temp_directory_path().string();
        const std::string f_path = dir + "/gft_acceptance_series.json";
        {
            std::ofstream out(f_path);
            out << R"({"form":"negative","order":2,"coefficients":[{"n":2,"re":0.25,"im":0.0}]})";
        }
        const std::string params = " --lambda 1 --mu 0 --eta 0 --k 0 --gamma 0 --t-re 0 --t-im 0";

        const std::string verify_cmd = "'" + cli + "' verify" + params + " -f '" + f_path + "'";
        const CmdResult v1 = run_cmd(verify_cmd);
        const CmdResult v2 = run_cmd(verify_cmd);
        c.check(v1.status == 0);
        c.check(!v1.out.empty());
        c.check(v1.out == v2.out);

        const CmdResult seq = run_cmd("GFT_THREADS=1 " + verify_cmd);
        const CmdResult par = run_cmd("GFT_THREADS=8 " + verify_cmd);
        c.check(seq.status == 0);
        c.check(seq.out == par.out);
        c.check(seq.out == v1.out);

        const std::string nbhd_cmd = "'" + cli + "' neighborhood" + params +
                                     " --alpha 0.25 -f '" + f_path +
                                     "' --trials 5 --seed 31415 --r-count 16 --theta-count 90";
        const CmdResult n1 = run_cmd(nbhd_cmd);
        const CmdResult n2 = run_cmd(nbhd_cmd);
        c.check(n1.status == 0);
        c.check(!n1.out.empty());
        c.check(n1.out == n2.out);

        std::filesystem::remove(f_path);
    });
}
