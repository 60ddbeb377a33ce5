#include "config.hpp"

#include <mtjsyn/constants.hpp>
#include <mtjsyn/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>
#include <variant>

namespace mtjsyn::cli {

namespace {

using Member = std::variant<double RunConfig::*, std::int64_t RunConfig::*, std::uint64_t RunConfig::*,
                            bool RunConfig::*, std::string RunConfig::*, std::vector<double> RunConfig::*>;

struct Key {
    const char *name;
    Member member;
};

const std::vector<Key> &registry() {
    static const std::vector<Key> keys{
        {"axis_a_nm", &RunConfig::axis_a_nm},
        {"axis_b_nm", &RunConfig::axis_b_nm},
        {"thickness_nm", &RunConfig::thickness_nm},
        {"Ms_kA_per_m", &RunConfig::Ms_kA_per_m},
        {"alpha", &RunConfig::alpha},
        {"eta", &RunConfig::eta},
        {"EB_kT", &RunConfig::EB_kT},
        {"EB_reference_K", &RunConfig::EB_reference_K},
        {"G_P_mS", &RunConfig::G_P_mS},
        {"G_AP_mS", &RunConfig::G_AP_mS},
        {"temperature_K", &RunConfig::temperature_K},
        {"attempt_time_ns", &RunConfig::attempt_time_ns},
        {"dt_ps", &RunConfig::dt_ps},
        {"sample_every_ps", &RunConfig::sample_every_ps},
        {"renormalize", &RunConfig::renormalize},
        {"alpha_torque_correction", &RunConfig::alpha_torque_correction},
        {"equilibrate_ns", &RunConfig::equilibrate_ns},
        {"pulse_amplitude_uA", &RunConfig::pulse_amplitude_uA},
        {"pulse_width_ns", &RunConfig::pulse_width_ns},
        {"pulse_count", &RunConfig::pulse_count},
        {"interval_ns", &RunConfig::interval_ns},
        {"relax_ns", &RunConfig::relax_ns},
        {"sweep_intervals_ns", &RunConfig::sweep_intervals_ns},
        {"trials", &RunConfig::trials},
        {"array_pulse_count", &RunConfig::array_pulse_count},
        {"array_interval_ns", &RunConfig::array_interval_ns},
        {"array_post_ns", &RunConfig::array_post_ns},
        {"mask_path", &RunConfig::mask_path},
        {"seed", &RunConfig::seed},
        {"threads", &RunConfig::threads},
        {"out_dir", &RunConfig::out_dir},
    };
    return keys;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view text, std::string_view expected) {
    throw ConfigError("config key '" + std::string(key) + "': cannot parse '" + std::string(text) + "' as " +
                      std::string(expected));
}

template <class T>
T parse_number(std::string_view key, std::string_view text, std::string_view expected) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) bad_value(key, text, expected);
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(v)) bad_value(key, text, expected);
    }
    return v;
}

void assign(RunConfig &c, const Key &key, std::string_view text) {
    std::visit(
        [&](auto member) {
            using T = std::remove_reference_t<decltype(c.*member)>;
            if constexpr (std::is_same_v<T, double>) {
                c.*member = parse_number<double>(key.name, text, "a number");
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                c.*member = parse_number<std::int64_t>(key.name, text, "an integer");
            } else if constexpr (std::is_same_v<T, std::uint64_t>) {
                c.*member = parse_number<std::uint64_t>(key.name, text, "a non-negative integer");
            } else if constexpr (std::is_same_v<T, bool>) {
                if (text == "true" || text == "1") {
                    c.*member = true;
                } else if (text == "false" || text == "0") {
                    c.*member = false;
                } else {
                    bad_value(key.name, text, "a boolean (true/false)");
                }
            } else if constexpr (std::is_same_v<T, std::string>) {
                c.*member = std::string(text);
            } else {
                std::vector<double> values;
                std::string_view rest = text;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    values.push_back(parse_number<double>(key.name, trim(rest.substr(0, comma)), "a number list"));
                    if (comma == std::string_view::npos) break;
                    rest = rest.substr(comma + 1);
                }
                c.*member = std::move(values);
            }
        },
        key.member);
}

std::string render(const RunConfig &c, const Key &key) {
    return std::visit(
        [&](auto member) -> std::string {
            const auto &v = c.*member;
            using T = std::remove_cvref_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, std::vector<double>>) {
                std::string out;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ',';
                    out += format_double(v[i]);
                }
                return out;
            } else {
                return std::to_string(v);
            }
        },
        key.member);
}

const Key &find_key(std::string_view name) {
    const auto &keys = registry();
    auto it = std::find_if(keys.begin(), keys.end(), [&](const Key &k) { return name == k.name; });
    if (it == keys.end()) throw ConfigError("unknown config key '" + std::string(name) + "'");
    return *it;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<std::string> config_keys() {
    std::vector<std::string> out;
    for (const auto &k : registry()) out.emplace_back(k.name);
    return out;
}

Override parse_override(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("override '" + std::string(text) + "' is not key=value");
    return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
}

RunConfig parse_config(std::string_view file_content, const std::vector<Override> &overrides) {
    RunConfig c;
    std::size_t line_no = 0;
    std::string_view rest = file_content;
    while (!rest.empty()) {
        ++line_no;
        const auto nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        assign(c, find_key(trim(line.substr(0, eq))), trim(line.substr(eq + 1)));
    }
    for (const auto &[key, value] : overrides) assign(c, find_key(key), value);
    c.validate();
    return c;
}

std::string dump_config(const RunConfig &config) {
    std::string out;
    for (const auto &k : registry()) {
        out += k.name;
        out += " = ";
        out += render(config, k);
        out += '\n';
    }
    return out;
}

DeviceParams RunConfig::device() const {
    DeviceParams d;
    d.axis_a = axis_a_nm * units::nm;
    d.axis_b = axis_b_nm * units::nm;
    d.thickness = thickness_nm * units::nm;
    d.M_s = Ms_kA_per_m * units::kA_per_m;
    d.alpha = alpha;
    d.eta = eta;
    d.E_B = barrier_from_kT(EB_kT, EB_reference_K);
    d.G_P = G_P_mS * units::mS;
    d.G_AP = G_AP_mS * units::mS;
    d.T_K = temperature_K;
    return d;
}

StepperConfig RunConfig::stepper() const {
    StepperConfig s;
    s.dt = dt_ps * units::ps;
    s.sample_every = sample_every_ps * units::ps;
    s.renormalize = renormalize;
    s.include_alpha_torque_correction = alpha_torque_correction;
    return s;
}

PulseTrain RunConfig::pulse_train() const {
    PulseTrain t;
    t.amplitude = pulse_amplitude_uA * units::uA;
    t.width = pulse_width_ns * units::ns;
    t.interval = interval_ns * units::ns;
    t.count = static_cast<int>(pulse_count);
    t.relax_after = relax_ns * units::ns;
    return t;
}

PulseTrain RunConfig::array_train() const {
    PulseTrain t = pulse_train();
    t.interval = array_interval_ns * units::ns;
    t.count = static_cast<int>(array_pulse_count);
    t.relax_after = array_post_ns * units::ns;
    return t;
}

std::vector<double> RunConfig::sweep_intervals() const {
    std::vector<double> out;
    for (double v : sweep_intervals_ns) out.push_back(v * units::ns);
    return out;
}

double RunConfig::attempt_time() const { return attempt_time_ns * units::ns; }

double RunConfig::equilibration() const { return equilibrate_ns * units::ns; }

void RunConfig::validate() const {
    auto require = [](bool ok, const char *key, const char *what) {
        if (!ok) throw ConfigError(std::string("config key '") + key + "': " + what);
    };
    require(axis_a_nm > 0.0, "axis_a_nm", "must be > 0");
    require(axis_b_nm > 0.0, "axis_b_nm", "must be > 0");
    require(thickness_nm > 0.0, "thickness_nm", "must be > 0");
    require(Ms_kA_per_m > 0.0, "Ms_kA_per_m", "must be > 0");
    require(alpha >= 0.0, "alpha", "must be >= 0");
    require(eta > 0.0 && eta <= 1.0, "eta", "must be in (0, 1]");
    require(EB_kT >= 0.0, "EB_kT", "must be >= 0");
    require(EB_reference_K > 0.0, "EB_reference_K", "must be > 0");
    require(G_AP_mS > 0.0, "G_AP_mS", "must be > 0");
    require(G_P_mS > G_AP_mS, "G_P_mS", "must exceed G_AP_mS");
    require(temperature_K >= 0.0, "temperature_K", "must be >= 0");
    require(attempt_time_ns > 0.0, "attempt_time_ns", "must be > 0");
    require(dt_ps > 0.0, "dt_ps", "must be > 0");
    require(sample_every_ps >= dt_ps, "sample_every_ps", "must be >= dt_ps");
    require(equilibrate_ns >= 0.0, "equilibrate_ns", "must be >= 0");
    require(pulse_amplitude_uA >= 0.0, "pulse_amplitude_uA", "must be >= 0");
    require(pulse_width_ns > 0.0, "pulse_width_ns", "must be > 0");
    require(pulse_count >= 1 && pulse_count <= 100000, "pulse_count", "must be in [1, 100000]");
    require(interval_ns >= 0.0, "interval_ns", "must be >= 0");
    require(relax_ns >= 0.0, "relax_ns", "must be >= 0");
    require(!sweep_intervals_ns.empty(), "sweep_intervals_ns", "must list at least one interval");
    for (double v : sweep_intervals_ns) require(v >= 0.0, "sweep_intervals_ns", "intervals must be >= 0");
    require(trials >= 1, "trials", "must be >= 1");
    require(array_pulse_count >= 1 && array_pulse_count <= 100000, "array_pulse_count", "must be in [1, 100000]");
    require(array_interval_ns >= 0.0, "array_interval_ns", "must be >= 0");
    require(array_post_ns >= 0.0, "array_post_ns", "must be >= 0");
    require(threads >= 0, "threads", "must be >= 0");
    require(!out_dir.empty(), "out_dir", "must not be empty");
    device().validate();
    stepper().validate();
}

} // namespace mtjsyn::cli
