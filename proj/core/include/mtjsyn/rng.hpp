#pragma once

#include <cstdint>
#include <random>

namespace mtjsyn {

/// Reproducible random stream addressed by (master_seed, stream_id).
///
/// A stream is derived directly from its two identifiers, so selecting a
/// stream is O(1) and independent of which other streams exist or the order
/// in which they are created. Trials and array cells use their index as the
/// stream_id; single runs use 0.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    /// Next standard-normal variate.
    double gaussian() { return normal_(engine_); }

    /// Next uniform variate in [0, 1).
    double uniform() { return uniform_(engine_); }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace mtjsyn
