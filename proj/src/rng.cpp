#include "robotask/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace robotask {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string label)
    : seed_(seed), label_(std::move(label)) {
  state_ = scramble(seed_ + 0x9E3779B97F4A7C15ull * (fnv1a64(label_) | 1ull));
}

RngStream RngStream::child(std::string_view label) const {
  if (label.empty()) throw std::invalid_argument("RngStream: empty child label");
  std::string path = label_.empty() ? std::string(label) : label_ + "/" + std::string(label);
  return RngStream(seed_, std::move(path));
}

std::uint64_t RngStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return scramble(state_);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double RngStream::normal() {
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::normal(double mean, double sigma) {
  return mean + sigma * normal();
}

std::int64_t RngStream::uniform_int(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("RngStream: uniform_int needs n > 0");
  auto un = static_cast<std::uint64_t>(n);
  std::uint64_t limit = ~0ull - ~0ull % un;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % un);
}

RngStream derive_stream(const RngStream& root, std::string_view label) {
  return root.child(label);
}

}  // namespace robotask
