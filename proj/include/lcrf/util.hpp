#ifndef LCRF_UTIL_HPP
#define LCRF_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcrf {

// ASCII lowercasing; non-ASCII bytes pass through untouched.
std::string to_lower(std::string_view s);

// Split on runs of ASCII whitespace; no empty fields.
std::vector<std::string> split_whitespace(std::string_view s);

// Split on a single delimiter; keeps empty fields.
std::vector<std::string> split_on(std::string_view s, char delim);

bool contains_whitespace(std::string_view s);

// Deterministic PRNG for everything that must reproduce across platforms
// and standard libraries (std::shuffle is not portable).
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); modulo bias is irrelevant here.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a(std::string_view s);

template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed) {
  Splitmix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace lcrf

#endif  // LCRF_UTIL_HPP
