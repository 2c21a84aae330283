#ifndef LQSYN_RNG_HPP
#define LQSYN_RNG_HPP

#include <cstdint>
#include <random>

#include "lqsyn/linalg.hpp"

namespace lqsyn {

/// Counter-addressed random stream: a (seed, stream) pair fully determines
/// the draw sequence, and substream(k) derives an independent stream from
/// the same seed. Parallel loops give worker k the substream with index k
/// and stay bit-reproducible regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  RngStream substream(std::uint64_t index) const;

  double normal();
  Vector normal_vec(int n);
  double uniform();  // [0, 1)

  std::uint64_t seed_value() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_;
};

}  // namespace lqsyn

#endif
