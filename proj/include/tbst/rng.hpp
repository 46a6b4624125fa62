#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tbst {

// Counter-based generator: draw i of a stream is mix64(key + i * GOLDEN),
// i.e. splitmix64 evaluated at index i. Every consumer derives its own
// stream by name from the root seed, so adding draws to one consumer never
// perturbs another:
//
//   Rng root(seed);
//   Rng init  = root.stream("init");    // parameter initialization
//   Rng synth = root.stream("synth");   // scene/noise synthesis
//   Rng batch = root.stream("batch");   // mini-batch sampling
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0);

  // Child generator with an independent key; counter starts at 0.
  Rng stream(std::string_view name) const;
  Rng stream(std::uint64_t index) const;

  std::uint64_t next_u64();

  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  double normal(double mean = 0.0, double stddev = 1.0);
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
  bool bernoulli(double p);
  int poisson(double lambda);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::int64_t i = static_cast<std::int64_t>(v.size()) - 1; i > 0; --i) {
      const auto j = uniform_int(0, i);
      std::swap(v[i], v[static_cast<std::size_t>(j)]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace tbst
