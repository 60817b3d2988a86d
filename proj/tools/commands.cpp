#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grovercorr/correlations.hpp"
#include "grovercorr/error.hpp"
#include "grovercorr/oracle_sim.hpp"
#include "grovercorr/states.hpp"

namespace grovercorr::cli {

namespace {

std::int64_t default_rmax(const GroverConfig &config) { return 2 * optimal_iterations(config); }

std::string format_fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x == 0.0 ? 0.0 : x);
    return buf;
}

void require_range(std::int64_t rmax) {
    if (rmax < 0) throw Error(ErrorKind::InvalidConfig, "rmax must be >= 0");
    if (rmax + 1 > kMaxSweepRows)
        throw Error(ErrorKind::Capacity, "sweep of " + std::to_string(rmax + 1) + " rows exceeds the row limit");
}

struct Tracker {
    Deviation dev;
    void update(double deviation) { dev.max_deviation = std::max(dev.max_deviation, std::abs(deviation)); }
};

std::int64_t argmax_on(std::int64_t hi, const std::function<double(std::int64_t)> &f) {
    std::int64_t lo = 0;
    if (hi > (std::int64_t{1} << 20)) {
        while (hi - lo > 2) {
            const std::int64_t m1 = lo + (hi - lo) / 3;
            const std::int64_t m2 = hi - (hi - lo) / 3;
            const double f1 = f(m1);
            const double f2 = f(m2);
            if (f1 < f2)
                lo = m1 + 1;
            else if (f1 > f2)
                hi = m2 - 1;
            else {
                lo = m1;
                hi = m2;
            }
        }
    }
    std::int64_t best = lo;
    double best_value = f(lo);
    for (std::int64_t r = lo + 1; r <= hi; ++r) {
        const double v = f(r);
        if (v > best_value) {
            best_value = v;
            best = r;
        }
    }
    return best;
}

} // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

SweepOptions resolve(SweepOptions options) {
    const GroverConfig config(options.n, 1, options.target);
    if (config.n() < 2) throw Error(ErrorKind::Partition, "sweeps need n >= 2");
    if (options.grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    if (!options.pair && !options.one_rest && options.k_list.empty())
        throw Error(ErrorKind::Partition, "nothing to compute");
    if (!options.rmax) options.rmax = default_rmax(config);
    require_range(*options.rmax);
    if (options.k_list.empty()) {
        for (int k = 1; k <= std::min(4, options.n / 2); ++k) options.k_list.push_back(k);
    }
    for (int k : options.k_list)
        if (k < 1 || 2 * k > options.n)
            throw Error(ErrorKind::Partition, "k-list entry " + std::to_string(k) + " outside [1, n/2]");
    return options;
}

std::vector<std::string> sweep_columns(const SweepOptions &options) {
    std::vector<std::string> cols = {"r", "theta_r", "a", "b", "P", "rate"};
    if (options.pair) {
        for (const char *c : {"C11_closed", "C11_wootters", "EOF_11", "MI_11", "CC_11", "QD_11"}) cols.emplace_back(c);
    }
    if (options.one_rest) {
        for (const char *c : {"MI_1rest", "CC_1rest", "QD_1rest"}) cols.emplace_back(c);
    }
    for (int k : options.k_list) cols.push_back("C_" + std::to_string(k));
    return cols;
}

std::vector<double> sweep_row(const GroverConfig &config, std::int64_t r, const SweepOptions &options) {
    const auto p = iteration_point(config, r);
    std::vector<double> row = {static_cast<double>(r), p.theta_r, p.a, p.b, p.probability, p.rate};
    if (options.pair) {
        const auto rec = closed_form_record(config, r, Partition::Pair, options.grid);
        const double wootters = wootters_concurrence(pair_state(config, r));
        for (double v : {rec.concurrence, wootters, rec.eof, rec.mutual_info, rec.classical_corr, rec.discord})
            row.push_back(v);
    }
    if (options.one_rest) {
        const auto rec = closed_form_record(config, r, Partition::OneRest, options.grid);
        for (double v : {rec.mutual_info, rec.classical_corr, rec.discord}) row.push_back(v);
    }
    for (int k : options.k_list) row.push_back(bipartite_concurrence_pure(config, r, k));
    return row;
}

void write_sweep(std::ostream &out, const SweepOptions &raw) {
    const auto options = resolve(raw);
    const GroverConfig config(options.n, 1, options.target);
    const auto cols = sweep_columns(options);

    if (!options.json) {
        for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
        out << '\n';
        for (std::int64_t r = 0; r <= *options.rmax; ++r) {
            const auto row = sweep_row(config, r, options);
            out << r;
            for (std::size_t c = 1; c < row.size(); ++c) out << ',' << format_number(row[c]);
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json doc;
    doc["n"] = options.n;
    doc["target"] = options.target;
    doc["grid"] = options.grid;
    doc["columns"] = cols;
    doc["rows"] = nlohmann::json::array();
    for (std::int64_t r = 0; r <= *options.rmax; ++r) {
        const auto row = sweep_row(config, r, options);
        nlohmann::ordered_json obj;
        obj["r"] = r;
        for (std::size_t c = 1; c < row.size(); ++c) obj[cols[c]] = std::stod(format_number(row[c]));
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

bool VerifyReport::ok() const {
    return std::all_of(deviations.begin(), deviations.end(), [](const Deviation &d) { return d.ok(); });
}

VerifyReport run_verify(const VerifyOptions &options) {
    const GroverConfig config(options.n, 1, options.target);
    if (config.n() > oracle::kMaxRecordQubits) throw Error(ErrorKind::Capacity, "verify is limited to n <= 12");
    if (config.n() < 2) throw Error(ErrorKind::Partition, "verify needs n >= 2");
    const std::int64_t optimal = optimal_iterations(config);
    const std::int64_t rmax = options.rmax.value_or(2 * optimal);
    require_range(rmax);
    const int n = config.n();

    auto tracker = [](std::string name, double tol, bool asserted = true) {
        return Tracker{Deviation{std::move(name), 0.0, tol, asserted}};
    };
    Tracker amplitudes = tracker("amplitudes", options.tol_matrix);
    std::vector<Tracker> reduced;
    for (int k = 1; k <= std::min(3, n - 1); ++k)
        reduced.push_back(tracker("reduced_k" + std::to_string(k), options.tol_matrix));
    Tracker c11_in = tracker("C11_vs_wootters[0,R]", options.tol_concurrence);
    Tracker c11_out = tracker("C11_vs_wootters(R,rmax]", options.tol_concurrence, false);
    Tracker eof_in = tracker("EOF_11[0,R]", options.tol_entropy);
    Tracker eof_out = tracker("EOF_11(R,rmax]", options.tol_entropy, false);
    std::vector<Tracker> ck;
    for (int k = 1; 2 * k <= n; ++k) ck.push_back(tracker("C_" + std::to_string(k), options.tol_concurrence));
    Tracker mi11 = tracker("MI_11", options.tol_entropy), cc11 = tracker("CC_11", options.tol_entropy),
            qd11 = tracker("QD_11", options.tol_entropy), mi1 = tracker("MI_1rest", options.tol_entropy),
            cc1 = tracker("CC_1rest", options.tol_entropy), qd1 = tracker("QD_1rest", options.tol_entropy);

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const std::span<const int> qubits(all);

    auto state = oracle::init_uniform(n);
    for (std::int64_t r = 0; r <= rmax; ++r) {
        if (r > 0) oracle::grover_step(state, config.target());
        const auto p = iteration_point(config, r);
        const auto psi = state.amplitudes();
        for (std::size_t x = 0; x < psi.size(); ++x)
            amplitudes.update(psi[x] - (x == config.target() ? p.a : p.b));

        for (std::size_t i = 0; i < reduced.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            const auto keep = qubits.first(k);
            const auto closed = materialize(reduced_closed_form(config, r, k), target_flip_mask(config, keep));
            reduced[i].update(max_abs_diff(closed.entries(), oracle::partial_trace(state, keep).entries()));
        }

        for (std::size_t i = 0; i < ck.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            const double brute = pure_state_concurrence(oracle::reduced_spectrum(state, qubits.first(k)),
                                                        std::uint64_t{1} << k);
            ck[i].update(bipartite_concurrence_pure(config, r, k) - brute);
        }

        const auto closed_pair = closed_form_record(config, r, Partition::Pair, options.grid);
        const auto brute_pair = oracle::brute_force_record(config, r, Partition::Pair, options.grid);
        (r <= optimal ? c11_in : c11_out).update(closed_pair.concurrence - brute_pair.concurrence);
        (r <= optimal ? eof_in : eof_out).update(closed_pair.eof - brute_pair.eof);
        mi11.update(closed_pair.mutual_info - brute_pair.mutual_info);
        cc11.update(closed_pair.classical_corr - brute_pair.classical_corr);
        qd11.update(closed_pair.discord - brute_pair.discord);

        const auto closed_rest = closed_form_record(config, r, Partition::OneRest, options.grid);
        const auto brute_rest = oracle::brute_force_record(config, r, Partition::OneRest, options.grid);
        mi1.update(closed_rest.mutual_info - brute_rest.mutual_info);
        cc1.update(closed_rest.classical_corr - brute_rest.classical_corr);
        qd1.update(closed_rest.discord - brute_rest.discord);
    }

    VerifyReport report;
    report.n = n;
    report.rmax = rmax;
    report.deviations.push_back(amplitudes.dev);
    for (auto &t : reduced) report.deviations.push_back(t.dev);
    report.deviations.push_back(c11_in.dev);
    if (rmax > optimal) report.deviations.push_back(c11_out.dev);
    report.deviations.push_back(eof_in.dev);
    if (rmax > optimal) report.deviations.push_back(eof_out.dev);
    for (auto &t : ck) report.deviations.push_back(t.dev);
    for (auto *t : {&mi11, &cc11, &qd11, &mi1, &cc1, &qd1}) report.deviations.push_back(t->dev);
    return report;
}

void write_report(std::ostream &out, const VerifyReport &report) {
    out << "verify n=" << report.n << " rmax=" << report.rmax << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %-14s %-10s %s\n", "measure", "max_deviation", "tolerance", "status");
    out << line;
    for (const auto &d : report.deviations) {
        const char *status = !d.asserted ? "reported" : (d.ok() ? "ok" : "FAIL");
        std::snprintf(line, sizeof line, "%-26s %-14.6g %-10.3g %s\n", d.measure.c_str(), d.max_deviation, d.tolerance,
                      status);
        out << line;
    }
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
}

PeakRow peak_row(int n) {
    const GroverConfig config(n);
    PeakRow row;
    row.n = n;
    row.alpha = angle(config);
    row.optimal = optimal_iterations(config);
    std::tie(row.r1, row.r2) = peak_iterations(config);
    row.argmax_rate = argmax_on(row.optimal, [&](std::int64_t r) { return iteration_point(config, r).rate; });
    row.argmax_c11 = argmax_on(row.optimal, [&](std::int64_t r) { return pairwise_concurrence_closed(config, r); });
    row.listed_gap_one = std::find(std::begin(kReportedGapOne), std::end(kReportedGapOne), n) != std::end(kReportedGapOne);
    return row;
}

void write_peaks(std::ostream &out, int n_lo, int n_hi) {
    if (n_lo < 2 || n_hi > 60 || n_lo > n_hi) throw Error(ErrorKind::InvalidConfig, "n range must lie within [2, 60]");
    char line[256];
    std::snprintf(line, sizeof line, "%-3s %-20s %-12s %-12s %-12s %-6s %-12s %-12s %-10s %s\n", "n", "alpha", "R", "r1",
                  "r2", "r1-r2", "argmax_rate", "argmax_C11", "peak_gap", "notes");
    out << line;
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto row = peak_row(n);
        std::string notes;
        auto note = [&](const std::string &s) { notes += (notes.empty() ? "" : ";") + s; };
        if (row.argmax_rate != row.r1) note("rate-argmax!=r1");
        if (row.argmax_c11 != row.r2) note("C11-argmax!=r2");
        if (row.listed_gap_one && row.r1 - row.r2 != 1)
            note("listed-r1-r2=1:formula=" + std::to_string(row.r1 - row.r2) + ",argmax=" +
                 std::to_string(row.argmax_rate - row.argmax_c11));
        if (notes.empty()) notes = "-";
        std::snprintf(line, sizeof line, "%-3d %-20.15g %-12lld %-12lld %-12lld %-6lld %-12lld %-12lld %-10lld %s\n",
                      row.n, row.alpha, static_cast<long long>(row.optimal), static_cast<long long>(row.r1),
                      static_cast<long long>(row.r2), static_cast<long long>(row.r1 - row.r2),
                      static_cast<long long>(row.argmax_rate), static_cast<long long>(row.argmax_c11),
                      static_cast<long long>(row.argmax_rate - row.argmax_c11), notes.c_str());
        out << line;
    }
}

void write_matrix(std::ostream &out, int n, std::int64_t r, int k) {
    const GroverConfig config(n);
    const auto form = reduced_closed_form(config, r, k);
    const auto rho = materialize(form);
    out << "n=" << n << " r=" << r << " k=" << k << '\n';
    out << "diag0 " << format_number(form.diag0) << '\n';
    out << "offdiag0 " << format_number(form.offdiag0) << '\n';
    out << "bulk " << format_number(form.bulk) << '\n';
    out << "trace " << format_fixed12(rho.trace()) << '\n';
    out << "purity " << format_number(form.purity()) << '\n';
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) out << (j ? " " : "") << format_number(rho(i, j));
        out << '\n';
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlation measures across the iterations of Grover search"};
    app.require_subcommand(1);

    SweepOptions sweep;
    std::vector<std::string> partitions;
    std::string format = "csv";
    std::string output;
    auto *sweep_cmd = app.add_subcommand("sweep", "per-iteration correlation series as CSV or JSON");
    sweep_cmd->add_option("--n", sweep.n, "qubit count")->required();
    sweep_cmd->add_option("--target", sweep.target, "marked basis index");
    sweep_cmd->add_option("--rmax", sweep.rmax, "last iteration (default 2R)");
    sweep_cmd->add_option("--grid", sweep.grid, "theta/phi lattice resolution");
    sweep_cmd->add_option("--k-list", sweep.k_list, "comma-separated k values for C_k")->delimiter(',');
    sweep_cmd->add_option("--partition", partitions, "1:1 and/or 1:rest (default both)")
        ->delimiter(',')
        ->check(CLI::IsMember({"1:1", "1:rest"}));
    sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--output", output, "output path (default stdout)");

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "closed forms against the brute-force simulator");
    verify_cmd->add_option("--n", verify.n, "qubit count")->required();
    verify_cmd->add_option("--target", verify.target, "marked basis index");
    verify_cmd->add_option("--rmax", verify.rmax, "last iteration (default 2R)");
    verify_cmd->add_option("--grid", verify.grid, "theta/phi lattice resolution");
    verify_cmd->add_option("--tol-matrix", verify.tol_matrix, "amplitude and matrix tolerance");
    verify_cmd->add_option("--tol-entropy", verify.tol_entropy, "entropic measure tolerance");
    verify_cmd->add_option("--tol-concurrence", verify.tol_concurrence, "concurrence tolerance");

    std::string n_range = "2:40";
    auto *peaks_cmd = app.add_subcommand("peaks", "rate and concurrence peak iterations per n");
    peaks_cmd->add_option("--n-range", n_range, "lo:hi within [2, 60]");

    int matrix_n = 0, matrix_k = 0;
    std::int64_t matrix_r = 0;
    auto *matrix_cmd = app.add_subcommand("matrix", "closed-form k-qubit reduced density matrix");
    matrix_cmd->add_option("--n", matrix_n, "qubit count")->required();
    matrix_cmd->add_option("--r", matrix_r, "iteration")->required();
    matrix_cmd->add_option("--k", matrix_k, "kept qubits")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (sweep_cmd->parsed()) {
            if (!partitions.empty()) {
                sweep.pair = std::find(partitions.begin(), partitions.end(), "1:1") != partitions.end();
                sweep.one_rest = std::find(partitions.begin(), partitions.end(), "1:rest") != partitions.end();
            }
            sweep.json = format == "json";
            if (output.empty()) {
                write_sweep(out, sweep);
            } else {
                // Render fully before touching the file so errors leave no partial output.
                std::ostringstream buffer;
                write_sweep(buffer, sweep);
                std::ofstream file(output, std::ios::binary);
                if (!file) {
                    err << "error: cannot open " << output << '\n';
                    return kUsage;
                }
                file << buffer.str();
            }
        } else if (verify_cmd->parsed()) {
            const auto report = run_verify(verify);
            write_report(out, report);
            return report.ok() ? kOk : kVerifyFailed;
        } else if (peaks_cmd->parsed()) {
            int lo = 0, hi = 0;
            char sep = 0;
            std::istringstream in(n_range);
            if (!(in >> lo >> sep >> hi) || sep != ':' || !in.eof()) {
                err << "error: --n-range expects lo:hi\n";
                return kUsage;
            }
            write_peaks(out, lo, hi);
        } else if (matrix_cmd->parsed()) {
            write_matrix(out, matrix_n, matrix_r, matrix_k);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Capacity ? kCapacity : kUsage;
    }
    return kOk;
}

} // namespace grovercorr::cli
