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

#include "tcspan/common.hpp"

#include <cstdlib>
#include <limits>

namespace tcspan {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotADag: return "NotADag";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kInvalidFactor: return "InvalidFactor";
    case ErrorCode::kParamsInfeasible: return "ParamsInfeasible";
    case ErrorCode::kNotARepCover: return "NotARepCover";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kInvalidSpanner: return "InvalidSpanner";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

uint64_t Rng::Uniform(uint64_t bound) {
  // Rejection sampling keeps the distribution exact.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % bound;
  uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

double Rng::UniformReal() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t DeriveSeed(uint64_t seed, std::string_view component) {
  // FNV-1a over the name, then a splitmix64 finalizer over the combination.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : component) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SizeCap(int default_cap) {
  const char* env = std::getenv("TCS_SIZE_CAP");
  if (env == nullptr) return default_cap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0 || v > 1 << 20) return default_cap;
  return static_cast<int>(v);
}

}  // namespace tcspan
