// include/diarcomb/prng.h

// Copyright 2026  The diarcomb authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARCOMB_PRNG_H_
#define DIARCOMB_PRNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace diarcomb {

// Deterministic random source. The generator is std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and all variate mappings below are
// spelled out here instead of using std:: distributions (those are
// implementation-defined and would break reproducibility across toolchains).
class Prng {
 public:
  explicit Prng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1): top 53 bits of one engine output.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, n). Modulo mapping; the bias is negligible for the
  // small ranges used here and keeps the mapping trivially portable.
  uint64_t UniformInt(uint64_t n) { return n <= 1 ? 0 : engine_() % n; }

  // Standard normal via Box-Muller (one variate per call, two uniforms).
  double Normal() {
    double u1 = 1.0 - Uniform();  // (0, 1]
    double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Poisson count by inversion of the exponential product (Knuth).
  uint64_t Poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= Uniform();
    } while (p > limit);
    return k - 1;
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::vector<T> *items) {
    for (size_t i = items->size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(i));
      std::swap((*items)[i - 1], (*items)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace diarcomb

#endif  // DIARCOMB_PRNG_H_
