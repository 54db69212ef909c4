// Copyright 2026 The tcspan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCSPAN_COMMON_HPP_
#define TCSPAN_COMMON_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tcspan {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kNotADag,
  kTooLarge,
  kInfeasible,
  kKTooSmall,
  kNotATree,
  kDisconnected,
  kNotPlanar,
  kInvalidFactor,
  kParamsInfeasible,
  kNotARepCover,
  kInvalidShape,
  kInvalidInstance,
  kInvalidSpanner,
  kOverflow,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Deterministic random source. Only the raw mt19937_64 stream is used so that
// outputs are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Uniform(uint64_t bound);
  // Uniform double in [0, 1).
  double UniformReal();
  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename It>
  void Shuffle(It first, It last) {
    auto n = last - first;
    for (decltype(n) i = n - 1; i > 0; --i) {
      auto j = static_cast<decltype(n)>(Uniform(static_cast<uint64_t>(i) + 1));
      std::swap(first[i], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Per-component seed: the user seed mixed with a hash of the component name.
uint64_t DeriveSeed(uint64_t seed, std::string_view component);

// Size cap for exhaustive searches. The TCS_SIZE_CAP environment variable,
// when set to a positive integer, overrides the default.
int SizeCap(int default_cap);

}  // namespace tcspan

#endif  // TCSPAN_COMMON_HPP_
