// Acceptance suite: one numbered criterion per block, each printing a
// [PASS]/[FAIL] line. Run as: acceptance_tests <path-to-cli>.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spincorr/measures.hpp"
#include "spincorr/numeric.hpp"
#include "spincorr/oracle.hpp"
#include "spincorr/quadrature.hpp"
#include "spincorr/spin.hpp"

namespace {

using namespace spincorr;
namespace orc = spincorr::oracle;

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

PairConfig pair(int twice_s1, int twice_s2) {
    return PairConfig(SpinNumber(twice_s1), SpinNumber(twice_s2));
}

double b_scale(const PairConfig& cfg) {
    return cfg.s1.value() * (cfg.s1.value() + 1.0) + cfg.s2.value() * (cfg.s2.value() + 1.0);
}

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

Csv read_csv(const std::string& path) {
    Csv csv;
    std::ifstream in(path);
    if (!in) return csv;
    std::string line;
    if (!std::getline(in, line)) return csv;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) csv.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

int run_command(const std::string& cmd) { return std::system(cmd.c_str()); }

// --------------------------------------------------------------------------
// 1. Revival: all quantum measures vanish after a full period.
void criterion_revival() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;
    for (int twice_s : {3, 9}) {
        const PairConfig cfg = pair(twice_s, twice_s);
        const double tj = kPi * twice_s;  // 3*pi for S = 3/2, 9*pi for S = 9/2
        const double tau = cfg.tau_from_tj(tj);
        const double tol = 1e-12 * b_scale(cfg);
        const double values[] = {measures::total_mutual_information(cfg, tau),
                                 measures::povm_mutual_information(cfg, tau),
                                 measures::quantum_part_povm_both(cfg, tau),
                                 measures::quantum_part_povm_one(cfg, tau)};
        for (double v : values) ok = ok && std::abs(v) <= tol;
    }
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 1.0;
    detail << "revival at tJ = 3*pi (S=3/2) and 9*pi (S=9/2), " << elapsed << " s";
    report(1, ok, detail.str());
}

// --------------------------------------------------------------------------
// 2. Midpoint values: second moment at the half period and the symbolic
//    midpoint fractions.
void criterion_midpoint() {
    bool ok = true;
    for (int twice_s : {1, 2, 3, 9}) {
        const SpinNumber s(twice_s);
        ok = ok && std::abs(measures::scs_phase_second_moment(s, kPi) -
                            1.0 / (2.0 * twice_s + 1.0)) <= 1e-12;
    }

    struct Expected {
        int twice_s1;
        int twice_s2;
        double co, qo, cg2, cgg;
    };
    const Expected table[] = {
        {1, 1, 0.5, 0.5, 1.0 / 3.0, 1.0 / 9.0},
        {1, 3, 5.0 / 6.0, 1.0 / 6.0, 11.0 / 21.0, 11.0 / 63.0},
        {3, 3, 0.5, 0.5, 13.0 / 35.0, 3.0 / 35.0},
        {9, 9, 0.5, 0.5, 91.0 / 209.0, 9.0 / 209.0},
        {1, 9, 33.0 / 34.0, 1.0 / 34.0, 257.0 / 323.0, 257.0 / 969.0},
    };
    for (const Expected& e : table) {
        const measures::MidpointRatios r = measures::midpoint_ratios(pair(e.twice_s1, e.twice_s2));
        ok = ok && std::abs(r.co_over_i - e.co) <= 1e-12;
        ok = ok && std::abs(r.qo_over_i - e.qo) <= 1e-12;
        ok = ok && std::abs(r.cg2_over_i - e.cg2) <= 1e-12;
        ok = ok && std::abs(r.cgg_over_i - e.cgg) <= 1e-12;
    }

    // the measures themselves realize the fractions at tau = pi for
    // half-integer spins, where the dephasing factors vanish
    for (const PairConfig& cfg : {pair(1, 1), pair(1, 3), pair(3, 3), pair(9, 9)}) {
        const measures::MidpointRatios r = measures::midpoint_ratios(cfg);
        const double total = measures::total_mutual_information(cfg, kPi);
        ok = ok && std::abs(measures::classical_part_povm_one(cfg, kPi) / total - r.cg2_over_i) <=
                       1e-12;
        ok = ok &&
             std::abs(measures::povm_mutual_information(cfg, kPi) / total - r.cgg_over_i) <= 1e-12;
    }
    report(2, ok, "half-period second moment 1/(4S+1) and midpoint fractions, tol 1e-12");
}

// --------------------------------------------------------------------------
// 3. Short-time laws: quadratic coefficients and the small-tau ratio limits.
void criterion_short_time() {
    Timer timer;
    bool ok = true;
    const double tau = 1e-4;
    for (const PairConfig& cfg : {pair(1, 1), pair(1, 3), pair(3, 3), pair(9, 9)}) {
        const measures::ShortTimeCoefficients c = measures::short_time_coefficients(cfg);
        ok = ok && relative_deviation(measures::total_mutual_information(cfg, tau) / (tau * tau),
                                      c.total) <= 1e-6;
        ok = ok &&
             relative_deviation(measures::classical_mutual_information(cfg, tau) / (tau * tau),
                                c.classical) <= 1e-6;
        ok = ok && relative_deviation(measures::povm_mutual_information(cfg, tau) / (tau * tau),
                                      c.povm) <= 1e-6;
    }

    // measured ratios converge to the exact limits
    for (int twice_s : {3, 9, 49}) {
        const PairConfig cfg = pair(twice_s, twice_s);
        const double t = twice_s >= 40 ? 1e-5 : 1e-4;
        const double total = measures::total_mutual_information(cfg, t);
        ok = ok && relative_deviation(measures::quantum_part_povm_both(cfg, t) / total,
                                      measures::small_tau_limit_qgg_over_i(cfg)) <= 1e-6;
        ok = ok && relative_deviation(measures::quantum_part_povm_one(cfg, t) / total,
                                      measures::small_tau_limit_qg_over_i(cfg)) <= 1e-6;
    }

    // the exact limits approach the coarse large-spin forms 2/S and 1/S
    // (symmetric relative difference)
    const auto approach = [&](int twice_s, double threshold) {
        const PairConfig cfg = pair(twice_s, twice_s);
        const double s = cfg.s2.value();
        ok = ok && symmetric_relative_difference(measures::small_tau_limit_qgg_over_i(cfg),
                                                 2.0 / s) <= threshold;
        ok = ok && symmetric_relative_difference(measures::small_tau_limit_qg_over_i(cfg),
                                                 1.0 / s) <= threshold;
    };
    approach(9, 0.15);
    approach(49, 0.03);

    const double elapsed = timer.seconds();
    ok = ok && elapsed < 1.0;
    std::ostringstream detail;
    detail << "quadratic coefficients at tau = 1e-4 (rel 1e-6), ratio limits, " << elapsed << " s";
    report(3, ok, detail.str());
}

// --------------------------------------------------------------------------
// 4. Oracle equivalence (quantum): extrapolated eigenvalue mutual
//    information against the closed form.
void criterion_oracle_quantum() {
    Timer timer;
    bool ok = true;
    double worst = 0.0;
    for (const PairConfig& cfg : {pair(1, 1), pair(1, 3), pair(3, 3), pair(9, 9)}) {
        for (int k = 0; k < 20; ++k) {
            const double tau = 2.0 * kPi * k / 19.0;
            const double analytic = measures::total_mutual_information(cfg, tau);
            if (analytic <= 1e-8 * b_scale(cfg)) continue;
            const double exact = orc::mutual_information_extrapolated(cfg, tau);
            worst = std::max(worst, relative_deviation(exact, analytic));
        }
    }
    ok = worst <= 1e-6;
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 30.0;
    std::ostringstream detail;
    detail << "eigenvalue MI vs closed form, worst rel dev " << worst << ", " << elapsed << " s";
    report(4, ok, detail.str());
}

// --------------------------------------------------------------------------
// 5. Oracle equivalence (POVM/classical): analytic distribution vs numeric
//    projection, quadrature Shannon MI, second-moment series vs quadrature.
void criterion_oracle_povm() {
    Timer timer;
    bool ok = true;
    std::mt19937 rng(987654u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    double worst_p = 0.0;
    for (int twice_s1 : {1, 2, 3, 9}) {
        for (int twice_s2 : {1, 2, 3, 9}) {
            if (twice_s2 < twice_s1) continue;
            const PairConfig cfg = pair(twice_s1, twice_s2);
            for (int k = 0; k < 100; ++k) {
                const double tau = 4.0 * kPi * u01(rng);
                const orc::EvolvedState st = orc::evolve(cfg, tau, 1e-3);
                const BlochPoint p1(std::acos(2.0 * u01(rng) - 1.0), 2.0 * kPi * u01(rng));
                const BlochPoint p2(std::acos(2.0 * u01(rng) - 1.0), 2.0 * kPi * u01(rng));
                worst_p = std::max(worst_p,
                                   std::abs(orc::scs_joint_probability(st, p1, p2) -
                                            measures::povm_angle_distribution(cfg, tau, st.beta,
                                                                              p1, p2)));
            }
        }
    }
    ok = ok && worst_p <= 1e-12;

    const QuadratureRule rule(64, 128);
    double worst_mi = 0.0;
    const auto check_mi = [&](orc::DistributionKind kind, const PairConfig& cfg, double tau) {
        const double quad = orc::shannon_mi_extrapolated(kind, cfg, tau, rule);
        const double analytic = kind == orc::DistributionKind::povm
                                    ? measures::povm_mutual_information(cfg, tau)
                                    : measures::classical_mutual_information(cfg, tau);
        worst_mi = std::max(worst_mi, relative_deviation(quad, analytic));
    };
    check_mi(orc::DistributionKind::povm, pair(1, 3), 0.7);
    check_mi(orc::DistributionKind::povm, pair(1, 3), 2.1);
    check_mi(orc::DistributionKind::povm, pair(3, 3), 1.3);
    check_mi(orc::DistributionKind::classical, pair(1, 3), 0.9);
    check_mi(orc::DistributionKind::classical, pair(3, 3), 1.7);
    ok = ok && worst_mi <= 1e-6;

    double worst_f = 0.0;
    for (int twice_s : {1, 2, 3, 9, 49}) {
        const SpinNumber s(twice_s);
        for (int k = 0; k < 20; ++k) {
            const double tau = 2.0 * kPi * u01(rng);
            worst_f = std::max(worst_f, std::abs(orc::scs_second_moment_quadrature(s, tau, rule) -
                                                 measures::scs_phase_second_moment(s, tau)));
        }
    }
    ok = ok && worst_f <= 1e-12;

    const double elapsed = timer.seconds();
    ok = ok && elapsed < 60.0;
    std::ostringstream detail;
    detail << "POVM projection dev " << worst_p << ", Shannon MI rel dev " << worst_mi
           << ", second-moment dev " << worst_f << ", " << elapsed << " s";
    report(5, ok, detail.str());
}

// --------------------------------------------------------------------------
// 6. Orthogonal measurement: extrapolated conditional-entropy information
//    against the closed form; exact equal split for two spins 1/2.
void criterion_orthogonal() {
    bool ok = true;
    double worst = 0.0;
    for (int twice_s2 : {3, 9}) {
        const PairConfig cfg = pair(1, twice_s2);
        for (int k = 0; k < 20; ++k) {
            const double tau = 2.0 * kPi * k / 19.0;
            const double analytic = measures::classical_part_orthogonal(cfg, tau);
            if (analytic <= 1e-8 * b_scale(cfg)) continue;
            worst = std::max(worst,
                             relative_deviation(orc::orthogonal_mi_extrapolated(cfg, tau),
                                                analytic));
        }
    }
    ok = ok && worst <= 1e-6;

    const PairConfig half = pair(1, 1);
    for (int k = 0; k <= 40; ++k) {
        const double tau = 2.0 * kPi * k / 40.0;
        const double total = measures::total_mutual_information(half, tau);
        ok = ok && std::abs(measures::classical_part_orthogonal(half, tau) - 0.5 * total) <=
                       1e-12 * (1.0 + total);
        ok = ok && std::abs(measures::quantum_part_orthogonal(half, tau) - 0.5 * total) <=
                       1e-12 * (1.0 + total);
    }
    std::ostringstream detail;
    detail << "conditional-entropy MI vs closed form, worst rel dev " << worst
           << "; equal split at S1=S2=1/2";
    report(6, ok, detail.str());
}

// --------------------------------------------------------------------------
// 7. Figure reproduction through the command line interface.
void criterion_figures(const std::string& cli) {
    bool ok = true;
    std::ostringstream detail;

    // Figure 1: classical plateau, POVM dip, revival at the period end.
    ok = ok && run_command(cli + " figure 1 --out acceptance_fig1.csv") == 0;
    const Csv fig1 = read_csv("acceptance_fig1.csv");
    ok = ok && !fig1.rows.empty();
    if (ok) {
        const int ctj = fig1.column("tJ");
        const int cs2 = fig1.column("s2");
        const int ci = fig1.column("I");
        const int cjc = fig1.column("Jc");
        const int cjgg = fig1.column("Jgg");
        ok = ok && ctj == 0 && cs2 >= 0 && ci >= 0 && cjc >= 0 && cjgg >= 0;
        for (double s : {1.5, 4.5}) {
            std::vector<const std::vector<double>*> rows;
            for (const auto& row : fig1.rows)
                if (row[static_cast<std::size_t>(cs2)] == s) rows.push_back(&row);
            ok = ok && !rows.empty();
            if (!ok) break;
            // revival: the total mutual information vanishes at tJ = 2*pi*S
            const auto& last = *rows.back();
            ok = ok && std::abs(last[static_cast<std::size_t>(ci)]) <= 1e-12;
            // classical plateau: the scaled curve stays within 1/tJ^2 of 1
            const std::size_t tail_start = rows.size() - rows.size() / 10;
            for (std::size_t r = tail_start; r < rows.size(); ++r) {
                const double tj = (*rows[r])[static_cast<std::size_t>(ctj)];
                const double jc = (*rows[r])[static_cast<std::size_t>(cjc)];
                ok = ok && std::abs(jc - 1.0) <= 1.05 / (tj * tj) + 1e-12;
            }
            // POVM curve dips well below the classical one at the half period
            const auto& mid = *rows[rows.size() / 2];
            const double jc_mid = mid[static_cast<std::size_t>(cjc)];
            const double jgg_mid = mid[static_cast<std::size_t>(cjgg)];
            ok = ok && jgg_mid < jc_mid && (jc_mid - jgg_mid) > 0.3 * jc_mid;
        }
    }

    // Figure 3 over a full period of the S2 = 9/2 block: minimum of the
    // orthogonal quantum share and the crossing against the POVM share.
    char cmd[256];
    std::snprintf(cmd, sizeof(cmd), "%s figure 3 --tj-max %.17g --steps 2001 --out %s",
                  cli.c_str(), 9.0 * kPi, "acceptance_fig3.csv");
    ok = ok && run_command(cmd) == 0;
    const Csv fig3 = read_csv("acceptance_fig3.csv");
    ok = ok && !fig3.rows.empty();
    double min_qo = 1.0;
    if (ok) {
        const int ctj = fig3.column("tJ");
        const int cs2 = fig3.column("s2");
        const int cqo = fig3.column("Qo_over_I");
        const int cqg = fig3.column("Qg_over_I");
        ok = ok && ctj >= 0 && cs2 >= 0 && cqo >= 0 && cqg >= 0;
        bool crossing_low = true;   // Qg below Qo while tJ < 2
        bool crossing_high = false; // and above it at the half period
        for (const auto& row : fig3.rows) {
            if (row[static_cast<std::size_t>(cs2)] != 4.5) continue;
            const double tj = row[static_cast<std::size_t>(ctj)];
            const double qo = row[static_cast<std::size_t>(cqo)];
            const double qg = row[static_cast<std::size_t>(cqg)];
            min_qo = std::min(min_qo, qo);
            if (tj > 0.0 && tj < 2.0) crossing_low = crossing_low && qg < qo;
            if (std::abs(tj - 4.5 * kPi) < 1e-9) crossing_high = qg > qo;
        }
        // coarse large-spin estimate 3/(4 S2^2), 20% symmetric tolerance
        const double estimate = 3.0 / (4.0 * 4.5 * 4.5);
        ok = ok && symmetric_relative_difference(min_qo, estimate) <= 0.20;
        ok = ok && crossing_low && crossing_high;
    }

    // Figure 2 emits ratio curves bounded by [0, 1].
    ok = ok && run_command(cli + " figure 2 --out acceptance_fig2.csv") == 0;
    const Csv fig2 = read_csv("acceptance_fig2.csv");
    ok = ok && !fig2.rows.empty();
    if (ok) {
        const int cqgg = fig2.column("Qgg_over_I");
        const int cqg = fig2.column("Qg_over_I");
        ok = ok && cqgg >= 0 && cqg >= 0;
        for (const auto& row : fig2.rows) {
            for (int c : {cqgg, cqg}) {
                const double v = row[static_cast<std::size_t>(c)];
                ok = ok && v >= -1e-12 && v <= 1.0 + 1e-12;
            }
        }
    }

    detail << "figure CSVs: plateau, POVM dip, revival, Qo/I minimum " << min_qo
           << " vs 3/(4 S2^2), crossing checks";
    report(7, ok, detail.str());
}

// --------------------------------------------------------------------------
// 8. Property suite through the command line interface.
void criterion_property_suite(const std::string& cli) {
    Timer timer;
    const int rc = run_command(cli + " verify --suite all > acceptance_verify.txt 2>&1");
    const double elapsed = timer.seconds();
    bool ok = rc == 0 && elapsed < 120.0;

    // degenerate tolerance must fail
    const int rc_zero = run_command(cli + " verify --suite analytic --tol 0 >> acceptance_verify.txt 2>&1");
    ok = ok && rc_zero != 0;

    std::ostringstream detail;
    detail << "verify --suite all exit " << rc << " in " << elapsed
           << " s; --tol 0 exits nonzero";
    report(8, ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance_tests <path-to-spincorr-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion_revival();
    criterion_midpoint();
    criterion_short_time();
    criterion_oracle_quantum();
    criterion_oracle_povm();
    criterion_orthogonal();
    criterion_figures(cli);
    criterion_property_suite(cli);

    if (g_failures > 0) {
        std::printf("acceptance: %d failure(s)\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
