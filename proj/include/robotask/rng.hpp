#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace robotask {

// Deterministic splittable random stream. A stream is fully identified by
// (seed, label); child streams are derived by hashing the extended label
// path, so draws from one stream never shift another stream's sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::string label = "");

  RngStream child(std::string_view label) const;

  std::uint64_t next_u64();
  double uniform();                           // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  double normal(double mean, double sigma);
  std::int64_t uniform_int(std::int64_t n);   // [0, n), unbiased

  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }

 private:
  std::uint64_t seed_ = 0;
  std::string label_;
  std::uint64_t state_ = 0;
};

RngStream derive_stream(const RngStream& root, std::string_view label);

}  // namespace robotask
