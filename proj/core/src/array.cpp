#include "mtjsyn/array.hpp"

#include "mtjsyn/errors.hpp"
#include "mtjsyn/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>

namespace mtjsyn {

ImageMask ImageMask::filled(int rows, int cols, bool on) {
    return {rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, on ? 1 : 0)};
}

std::size_t ImageMask::count_on() const {
    return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), std::uint8_t{1}));
}

namespace {

class PbmReader {
  public:
    explicit PbmReader(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    std::string_view token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#') {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    int positive_int(const char *what) {
        const std::string_view t = token();
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || v <= 0) {
            throw MaskError(std::string("pbm: invalid ") + what + " '" + std::string(t) + "'");
        }
        return v;
    }

    // P1 permits pixels with or without separating whitespace.
    char pixel() {
        skip_space();
        if (pos_ >= text_.size()) throw MaskError("pbm: too few pixels");
        return text_[pos_++];
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ImageMask load_mask(std::string_view pbm, int rows, int cols) {
    PbmReader in(pbm);
    if (in.token() != "P1") throw MaskError("pbm: expected plain bitmap magic 'P1'");
    const int width = in.positive_int("width");
    const int height = in.positive_int("height");
    if (width != cols || height != rows) {
        throw MaskError("pbm: dimensions " + std::to_string(height) + "x" + std::to_string(width) +
                        " (rows x cols) do not match array " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    ImageMask mask = ImageMask::filled(rows, cols, false);
    for (auto &p : mask.pixels) {
        const char c = in.pixel();
        if (c != '0' && c != '1') throw MaskError(std::string("pbm: non-binary pixel value '") + c + "'");
        p = c == '1' ? 1 : 0;
    }
    if (!in.done()) throw MaskError("pbm: trailing data after pixel block");
    return mask;
}

namespace {

std::string ns_label(double seconds) {
    const double ns = seconds * 1e9;
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::round(ns * 1e6) / 1e6);
    return std::string(buf, ptr) + "ns";
}

} // namespace

ArrayState run_array(const ImageMask &mask, const PulseTrain &train, const LlgIntegrator &integrator,
                     std::uint64_t master_seed, unsigned threads, double post_window, double equilibration) {
    train.validate();
    if (!(post_window >= 0.0)) throw ConfigError("run_array: post_window must be >= 0");
    if (mask.rows <= 0 || mask.cols <= 0 || mask.size() != static_cast<std::size_t>(mask.rows) * mask.cols) {
        throw MaskError("run_array: malformed mask");
    }
    const DeviceParams &device = integrator.device();
    const StepperConfig &config = integrator.config();
    const std::size_t n_cells = mask.size();
    const std::size_t n_snaps = static_cast<std::size_t>(train.count) + 1;

    ArrayState state;
    state.rows = mask.rows;
    state.cols = mask.cols;
    state.device = device;
    state.cells.resize(n_cells);
    state.delivered_charge.assign(n_cells, 0.0);
    state.snapshots.resize(n_snaps);
    for (std::size_t s = 0; s < n_snaps; ++s) {
        Snapshot &snap = state.snapshots[s];
        snap.conductance.assign(n_cells, 0.0);
        snap.alignment.assign(n_cells, 0.0);
        const int pulses_done = static_cast<int>(std::min<std::size_t>(s + 1, train.count));
        snap.t = pulses_done * train.width + (pulses_done - 1) * train.interval;
        if (s < static_cast<std::size_t>(train.count)) {
            snap.label = "pulse" + std::to_string(s + 1);
        } else {
            snap.t += post_window;
            snap.label = "post" + ns_label(post_window);
        }
    }

    const std::int64_t width_steps = config.steps_for(train.width);
    const std::int64_t gap_steps = config.steps_for(train.interval);
    const std::int64_t post_steps = config.steps_for(post_window);

    parallel_for(n_cells, threads, [&](std::size_t cell) {
        const double current = mask.pixels[cell] != 0 ? train.amplitude : 0.0;
        RngStream stream(master_seed, cell);
        MagnetizationState m = initial_ap_state(integrator, stream, equilibration);
        double charge = 0.0;
        auto record = [&](std::size_t s) {
            state.snapshots[s].conductance[cell] = conductance(m.m, device);
            state.snapshots[s].alignment[cell] = dot(m.m, device.m_p);
        };
        for (int p = 0; p < train.count; ++p) {
            m = integrator.advance(m, current, width_steps, stream);
            charge += static_cast<double>(width_steps) * config.dt * current;
            record(static_cast<std::size_t>(p));
            if (p + 1 < train.count) m = integrator.advance(m, 0.0, gap_steps, stream);
        }
        m = integrator.advance(m, 0.0, post_steps, stream);
        record(n_snaps - 1);
        state.cells[cell] = m;
        state.delivered_charge[cell] = charge;
    });
    return state;
}

namespace {

const Snapshot &snapshot_at(const ArrayState &state, const ImageMask &mask, std::size_t index) {
    if (index >= state.snapshots.size()) throw ProtocolError("snapshot index out of range");
    if (mask.rows != state.rows || mask.cols != state.cols) throw MaskError("mask does not match array dimensions");
    return state.snapshots[index];
}

} // namespace

double recall_score(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index) {
    const Snapshot &snap = snapshot_at(state, mask, snapshot_index);
    const double threshold = 0.5 * (state.device.G_P + state.device.G_AP);
    std::size_t match = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        const bool high = snap.conductance[i] > threshold;
        match += high == (mask.pixels[i] != 0) ? 1 : 0;
    }
    return static_cast<double>(match) / static_cast<double>(mask.size());
}

double ltp_fraction(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index, bool on_cells) {
    const Snapshot &snap = snapshot_at(state, mask, snapshot_index);
    std::size_t total = 0;
    std::size_t ltp = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if ((mask.pixels[i] != 0) != on_cells) continue;
        ++total;
        ltp += snap.alignment[i] > kLtpAlignmentThreshold ? 1 : 0;
    }
    return total == 0 ? 0.0 : static_cast<double>(ltp) / static_cast<double>(total);
}

std::size_t crossed_count(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index, bool on_cells) {
    const Snapshot &snap = snapshot_at(state, mask, snapshot_index);
    std::size_t n = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if ((mask.pixels[i] != 0) == on_cells && snap.alignment[i] > 0.0) ++n;
    }
    return n;
}

} // namespace mtjsyn
