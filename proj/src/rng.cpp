#include "lqsyn/rng.hpp"

namespace lqsyn {

namespace {

// splitmix64; decorrelates nearby (seed, stream) pairs before seeding.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(mix(mix(seed) ^ mix(stream + 1))) {}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(seed_, mix(stream_) + index + 1);
}

double RngStream::normal() { return gauss_(engine_); }

Vector RngStream::normal_vec(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = gauss_(engine_);
  return v;
}

double RngStream::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

}  // namespace lqsyn
