#pragma once

#include <cstdint>
#include <string>

#include "affkm/description.hpp"
#include "affkm/scalars.hpp"

namespace affkm::testing {

inline LoopAlgebraPtr data_algebra(const std::string& file) {
  return load_algebra(std::string(AFFKM_DATA_DIR) + "/" + file);
}

inline std::string data_path(const std::string& file) { return std::string(AFFKM_DATA_DIR) + "/" + file; }

// splitmix64; kept separate from the library's Rng so properties are not
// driven by the code under test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  int nonzero(int lo, int hi) {
    for (;;) {
      int v = range(lo, hi);
      if (v != 0) return v;
    }
  }
  Rational rational() { return Rational(range(-9, 9), nonzero(1, 6)); }
  CycScalar scalar(int m) { return CycScalar(m, rational(), m == 3 ? rational() : Rational(0)); }

 private:
  std::uint64_t state_;
};

}  // namespace affkm::testing
