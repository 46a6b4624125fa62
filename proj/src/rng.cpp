#include "tbst/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tbst {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(seed + kGolden * (stream_id + 1))) {}

Rng Rng::stream(std::string_view name) const {
  Rng child(0);
  child.key_ = mix64(key_ ^ (fnv1a64(name) | 1));
  child.counter_ = 0;
  return child;
}

Rng Rng::stream(std::uint64_t index) const {
  Rng child(0);
  child.key_ = mix64(key_ ^ mix64(0xA24BAED4963EE407ULL + index));
  child.counter_ = 0;
  return child;
}

std::uint64_t Rng::next_u64() { return mix64(key_ + kGolden * counter_++); }

double Rng::uniform() {
  // 53 random bits into [0, 1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal(double mean, double stddev) {
  // Box-Muller; two draws per sample keeps the stream a pure function of
  // the call sequence.
  double u1 = uniform();
  const double u2 = uniform();
  if (u1 < 1e-300) u1 = 1e-300;
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(6.283185307179586476925287 * u2);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
  const auto v = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
  return lo + static_cast<std::int64_t>(v);
}

bool Rng::bernoulli(double p) { return uniform() < p; }

int Rng::poisson(double lambda) {
  if (lambda <= 0.0) return 0;
  const double limit = std::exp(-lambda);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform();
  } while (p > limit);
  return k - 1;
}

}  // namespace tbst
