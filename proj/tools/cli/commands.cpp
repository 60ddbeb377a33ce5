#include "commands.hpp"

#include "bundled_mask.hpp"

#include <mtjsyn/constants.hpp>
#include <mtjsyn/errors.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace mtjsyn::cli {

namespace fs = std::filesystem;
using C = PhysicalConstants;

namespace {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void write_file(const RunConfig &config, const std::string &name, std::string_view command,
                const std::function<void(std::ostream &)> &body, std::ostream &out) {
    const fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    const fs::path path = dir / name;
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << output_header(command, config);
    body(f);
    f.flush();
    if (!f) throw IoError("write failed for '" + path.string() + "'");
    out << "wrote " << path.string() << '\n';
}

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

double ns(double seconds) { return seconds / units::ns; }
double mS(double siemens) { return siemens / units::mS; }

LlgIntegrator make_integrator(const RunConfig &config) {
    const DeviceParams device = config.device();
    return LlgIntegrator(device, demag_factors(device), config.stepper());
}

int cmd_trace(const RunConfig &config, std::ostream &out) {
    const LlgIntegrator integrator = make_integrator(config);
    const PulseTrain train = config.pulse_train();
    train.validate();
    RngStream stream(config.seed, 0);
    const MagnetizationState start = initial_ap_state(integrator, stream, config.equilibration());
    const Trace trace = integrator.run(start, train.program(), stream);
    write_file(config, trace_file_name(config), "trace", [&](std::ostream &os) { write_trace_csv(os, trace); }, out);
    const double final_alignment = dot(trace.back().m, integrator.device().m_p);
    out << "final G = " << format_sig(mS(trace.back().G), 6) << " mS, "
        << (final_alignment > kLtpAlignmentThreshold ? "LTP" : "no LTP") << '\n';
    return kExitOk;
}

SweepResult sweep(const RunConfig &config) {
    return ltp_probability_sweep(config.sweep_intervals(), static_cast<int>(config.trials), config.pulse_train(),
                                 make_integrator(config), config.seed, static_cast<unsigned>(config.threads),
                                 config.equilibration());
}

int cmd_ltp_sweep(const RunConfig &config, std::ostream &out) {
    const SweepResult r = sweep(config);
    write_file(config, "ltp_sweep.csv", "ltp-sweep", [&](std::ostream &os) { write_sweep_csv(os, r); }, out);
    write_file(config, "mean_conductance.csv", "ltp-sweep",
               [&](std::ostream &os) { write_mean_conductance_csv(os, r); }, out);
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        out << "interval " << format_double(ns(r.intervals[i])) << " ns: P(LTP) = " << r.ltp_probability[i]
            << " +/- " << format_sig(r.confidence_halfwidth[i], 3) << '\n';
    }
    return kExitOk;
}

int cmd_ppf_ptp(const RunConfig &config, std::ostream &out) {
    if (config.pulse_count < kPtpPulse) {
        throw ProtocolError("ppf-ptp needs pulse_count >= " + std::to_string(kPtpPulse));
    }
    const SweepResult r = sweep(config);
    const PpfPtp values = ppf_ptp(r);
    write_file(config, "ppf_ptp.csv", "ppf-ptp", [&](std::ostream &os) { write_ppf_ptp_csv(os, r, values); }, out);
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        out << "interval " << format_double(ns(r.intervals[i])) << " ns: PPF = " << format_sig(mS(values.ppf[i]), 6)
            << " mS, PTP = " << format_sig(mS(values.ptp[i]), 6) << " mS\n";
    }
    return kExitOk;
}

int cmd_array(const RunConfig &config, std::ostream &out) {
    const std::string pbm = config.mask_path.empty() ? std::string(bundled_mask()) : read_file(config.mask_path);
    const ImageMask mask = load_mask(pbm, kArrayRows, kArrayCols);
    const PulseTrain train = config.array_train();
    const ArrayState state = run_array(mask, train, make_integrator(config), config.seed,
                                       static_cast<unsigned>(config.threads), config.array_post_ns * units::ns,
                                       config.equilibration());
    for (const auto &snap : state.snapshots) {
        write_file(config, "snapshot_" + snap.label + ".csv", "array",
                   [&](std::ostream &os) { write_snapshot_csv(os, snap, state.rows, state.cols); }, out);
    }
    write_file(
        config, "array_summary.csv", "array",
        [&](std::ostream &os) {
            os << "label,t_ns,recall_score,on_ltp_fraction,off_ltp_fraction,off_crossed,charge_per_on_cell_pC\n";
            double charge = 0.0;
            for (std::size_t i = 0; i < mask.size(); ++i) {
                if (mask.pixels[i]) {
                    charge = state.delivered_charge[i];
                    break;
                }
            }
            for (std::size_t s = 0; s < state.snapshots.size(); ++s) {
                os << state.snapshots[s].label << ',' << format_sig(ns(state.snapshots[s].t), 9) << ','
                   << format_sig(recall_score(state, mask, s), 6) << ','
                   << format_sig(ltp_fraction(state, mask, s, true), 6) << ','
                   << format_sig(ltp_fraction(state, mask, s, false), 6) << ','
                   << crossed_count(state, mask, s, false) << ',' << format_sig(charge * 1e12, 9) << '\n';
            }
        },
        out);
    for (std::size_t s = 0; s < state.snapshots.size(); ++s) {
        out << state.snapshots[s].label << ": recall = " << format_sig(recall_score(state, mask, s), 4)
            << ", ON-cell LTP fraction = " << format_sig(ltp_fraction(state, mask, s, true), 4) << '\n';
    }
    return kExitOk;
}

void print_lifetime(std::ostream &out, double barrier_kT, const RunConfig &config) {
    DeviceParams d = config.device();
    d.E_B = barrier_from_kT(barrier_kT, config.EB_reference_K);
    const double tau = retention_lifetime(d, config.attempt_time());
    out << "E_B = " << format_double(barrier_kT) << " k_B T: lifetime = " << format_sig(tau, 6)
        << " s = " << format_sig(tau / units::hour, 6) << " h = " << format_sig(tau / units::year, 6) << " y\n";
}

int cmd_lifetime(const RunConfig &config, std::ostream &out) {
    out << "attempt time = " << format_double(config.attempt_time_ns) << " ns, T = "
        << format_double(config.temperature_K) << " K\n";
    print_lifetime(out, config.EB_kT, config);
    print_lifetime(out, 40.0, config);
    return kExitOk;
}

int cmd_constants(std::ostream &out) {
    auto line = [&](const char *name, double v, const char *unit) {
        out << name << " = " << format_double(v) << ' ' << unit << '\n';
    };
    line("mu_B", C::mu_B, "J/T");
    line("q", C::q, "C");
    line("hbar", C::hbar, "J s");
    line("mu_0", C::mu_0, "T m/A");
    line("k_B", C::k_B, "J/K");
    line("gamma", C::gamma, "m/(A s)");
    return kExitOk;
}

} // namespace

const std::vector<std::string> &subcommands() {
    static const std::vector<std::string> names{"trace",    "ltp-sweep", "ppf-ptp",    "array",
                                                "lifetime", "constants", "dump-config"};
    return names;
}

std::string_view bundled_mask() { return kBundledMask; }

std::string format_sig(double value, int digits) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    return std::string(buf, ptr);
}

std::string trace_file_name(const RunConfig &config) {
    return "trace_interval_" + format_double(config.interval_ns) + "ns.csv";
}

std::string output_header(std::string_view command, const RunConfig &config) {
    std::string h = "# mtjsyn " + std::string(command) + "\n# master_seed = " + std::to_string(config.seed) + "\n";
    std::istringstream lines(dump_config(config));
    for (std::string line; std::getline(lines, line);) {
        // worker count never changes results; leaving it out keeps files byte-identical across --threads
        if (line.starts_with("threads =")) continue;
        h += "# " + line + "\n";
    }
    return h;
}

void write_trace_csv(std::ostream &os, const Trace &trace) {
    os << "t_ns,mx,my,mz,theta_deg,G_mS,I_uA\n";
    for (const auto &s : trace) {
        os << format_sig(ns(s.t), 9) << ',' << format_sig(s.m.x, 9) << ',' << format_sig(s.m.y, 9) << ','
           << format_sig(s.m.z, 9) << ',' << format_sig(s.theta * 180.0 / std::numbers::pi, 9) << ','
           << format_sig(mS(s.G), 9) << ',' << format_sig(s.current / units::uA, 9) << '\n';
    }
}

void write_sweep_csv(std::ostream &os, const SweepResult &r) {
    os << "interval_ns,trials,ltp_probability,ci_halfwidth\n";
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        os << format_sig(ns(r.intervals[i]), 9) << ',' << r.trials << ',' << format_sig(r.ltp_probability[i], 9)
           << ',' << format_sig(r.confidence_halfwidth[i], 9) << '\n';
    }
}

void write_mean_conductance_csv(std::ostream &os, const SweepResult &r) {
    os << "interval_ns,pulse,mean_G_mS,stderr_G_mS\n";
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        for (std::size_t p = 0; p < r.mean_conductance_per_pulse[i].size(); ++p) {
            os << format_sig(ns(r.intervals[i]), 9) << ',' << p + 1 << ','
               << format_sig(mS(r.mean_conductance_per_pulse[i][p]), 9) << ','
               << format_sig(mS(r.conductance_stderr[i][p]), 9) << '\n';
        }
    }
}

void write_ppf_ptp_csv(std::ostream &os, const SweepResult &r, const PpfPtp &values) {
    os << "interval_ns,ppf_mS,ptp_mS\n";
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        os << format_sig(ns(r.intervals[i]), 9) << ',' << format_sig(mS(values.ppf[i]), 9) << ','
           << format_sig(mS(values.ptp[i]), 9) << '\n';
    }
}

void write_snapshot_csv(std::ostream &os, const Snapshot &snapshot, int rows, int cols) {
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) os << ',';
            os << format_sig(mS(snapshot.conductance[static_cast<std::size_t>(r) * cols + c]), 6);
        }
        os << '\n';
    }
}

int dispatch(std::string_view subcommand, const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (subcommand == "trace") return cmd_trace(config, out);
        if (subcommand == "ltp-sweep") return cmd_ltp_sweep(config, out);
        if (subcommand == "ppf-ptp") return cmd_ppf_ptp(config, out);
        if (subcommand == "array") return cmd_array(config, out);
        if (subcommand == "lifetime") return cmd_lifetime(config, out);
        if (subcommand == "constants") return cmd_constants(out);
        if (subcommand == "dump-config") {
            out << dump_config(config);
            return kExitOk;
        }
        err << "error: unknown subcommand '" << subcommand << "'\n";
        return kExitUsage;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MaskError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ProtocolError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace mtjsyn::cli
