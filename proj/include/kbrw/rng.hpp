#pragma once

#include <cmath>
#include <cstdint>

namespace kbrw {

// Counter-based random stream built on the splitmix64 finalizer. Every output
// is a pure function of (key, counter), so draws can be indexed arbitrarily:
// deriving one stream per particle makes parallel sampling independent of the
// worker count. Algorithm id recorded in run metadata.
inline constexpr const char* kRngAlgorithmId = "splitmix64-counter-v1";

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

class RandomStream {
 public:
  RandomStream() = default;
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  // Child stream for a labelled substream; chain calls to mix in more labels.
  RandomStream child(std::uint64_t label) const {
    return RandomStream(detail::splitmix64_finalize(key_ + detail::kGolden * (label + 1)));
  }
  RandomStream child(std::uint64_t a, std::uint64_t b) const { return child(a).child(b); }
  RandomStream child(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return child(a).child(b).child(c);
  }

  std::uint64_t next_u64() { return detail::splitmix64_finalize(key_ + detail::kGolden * (++counter_)); }

  // Uniform on the open interval (0,1); never returns an exact endpoint.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform01()); }

  double gumbel() { return -std::log(-std::log(uniform01())); }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace kbrw
