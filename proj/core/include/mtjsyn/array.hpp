#pragma once

#include "mtjsyn/protocols.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtjsyn {

inline constexpr int kArrayRows = 34;
inline constexpr int kArrayCols = 43;

/// Binary stimulus pattern, row-major, true = ON.
struct ImageMask {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    static ImageMask filled(int rows, int cols, bool on);

    bool on(int row, int col) const { return pixels[static_cast<std::size_t>(row) * cols + col] != 0; }
    std::size_t size() const { return pixels.size(); }
    std::size_t count_on() const;
};

/// Parses a plain (P1) portable bitmap; foreground `1` maps to ON.
/// Throws MaskError on malformed content or when the bitmap is not rows x cols.
ImageMask load_mask(std::string_view pbm, int rows = kArrayRows, int cols = kArrayCols);

/// Conductance and alignment of every cell at one instant, row-major.
struct Snapshot {
    std::string label;
    double t = 0.0;                 ///< [s] from the first rising edge
    std::vector<double> conductance; ///< [S]
    std::vector<double> alignment;   ///< m . m_p
};

struct ArrayState {
    int rows = 0;
    int cols = 0;
    DeviceParams device;
    std::vector<MagnetizationState> cells;   ///< final state of each cell
    std::vector<double> delivered_charge;    ///< integral of I_Q per cell [C]
    std::vector<Snapshot> snapshots;         ///< one per pulse end, then one after the post window
};

/// Stimulates every ON cell with `train` (OFF cells get zero current, full
/// thermal dynamics). Cell (r, c) uses stream (master_seed, r * cols + c).
/// Snapshots are taken at each falling edge and `post_window` after the
/// last pulse; train.relax_after is not used. Output is independent of `threads`.
ArrayState run_array(const ImageMask &mask, const PulseTrain &train, const LlgIntegrator &integrator,
                     std::uint64_t master_seed, unsigned threads = 0, double post_window = 5e-9,
                     double equilibration = 1e-9);

/// Fraction of cells whose binarized conductance (threshold (G_P + G_AP)/2) matches the mask.
double recall_score(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index);

/// Fraction of the ON (or OFF) cells with m . m_p above the LTP threshold.
double ltp_fraction(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index, bool on_cells);

/// Number of ON (or OFF) cells that have crossed the barrier (m . m_p > 0).
std::size_t crossed_count(const ArrayState &state, const ImageMask &mask, std::size_t snapshot_index, bool on_cells);

} // namespace mtjsyn
