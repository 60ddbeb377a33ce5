#pragma once

#include <mtjsyn/array.hpp>
#include <mtjsyn/device.hpp>
#include <mtjsyn/llg.hpp>
#include <mtjsyn/protocols.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtjsyn::cli {

/// Effective run configuration, stored in the boundary units named by each key.
///
/// Unspecified keys take the reference-device defaults. Conversion to SI happens only
/// in the accessors below.
struct RunConfig {
    // device
    double axis_a_nm = 40.0;
    double axis_b_nm = 40.0;
    double thickness_nm = 1.5;
    double Ms_kA_per_m = 1000.0;
    double alpha = 0.0122;
    double eta = 0.5;
    double EB_kT = 31.44;
    double EB_reference_K = 300.0;
    double G_P_mS = 1.0;
    double G_AP_mS = 0.5;
    double temperature_K = 300.0;
    double attempt_time_ns = 1.0;
    // stepper
    double dt_ps = 1.0;
    double sample_every_ps = 10.0;
    bool renormalize = true;
    bool alpha_torque_correction = true;
    double equilibrate_ns = 1.0;
    // pulse train
    double pulse_amplitude_uA = 100.0;
    double pulse_width_ns = 1.0;
    std::int64_t pulse_count = 10;
    double interval_ns = 3.0;
    double relax_ns = 10.0;
    // sweep
    std::vector<double> sweep_intervals_ns{2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
    std::int64_t trials = 100;
    // array
    std::int64_t array_pulse_count = 5;
    double array_interval_ns = 2.5;
    double array_post_ns = 5.0;
    std::string mask_path; ///< empty selects the bundled glyph
    // run
    std::uint64_t seed = 1;
    std::int64_t threads = 0; ///< 0 = hardware concurrency
    std::string out_dir = ".";

    DeviceParams device() const;
    StepperConfig stepper() const;
    PulseTrain pulse_train() const;
    PulseTrain array_train() const;
    std::vector<double> sweep_intervals() const; ///< [s]
    double attempt_time() const;                 ///< [s]
    double equilibration() const;                ///< [s]

    /// Throws ConfigError naming the offending key.
    void validate() const;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

using Override = std::pair<std::string, std::string>;

/// Splits "key=value" into an override; throws ConfigError when '=' is missing.
Override parse_override(std::string_view text);

/// Applies defaults <- file <- overrides, then validates.
/// The file is flat `key = value` text; `#` starts a comment.
RunConfig parse_config(std::string_view file_content, const std::vector<Override> &overrides = {});

/// Effective configuration as `key = value` lines, one per key, that parse back bit-exactly.
std::string dump_config(const RunConfig &config);

/// Names of every recognised key, in dump order.
std::vector<std::string> config_keys();

/// Shortest decimal text that round-trips `value`.
std::string format_double(double value);

} // namespace mtjsyn::cli
