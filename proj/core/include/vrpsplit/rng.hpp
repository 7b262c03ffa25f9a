// Copyright 2026 The vrpsplit Authors
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

#ifndef VRPSPLIT_RNG_HPP_
#define VRPSPLIT_RNG_HPP_

#include <cstdint>
#include <span>

namespace vrpsplit {

// splitmix64 finalizer; used for seed mixing and derivation everywhere so
// runs are reproducible across platforms.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt));
}

// Order-sensitive hash of an id sequence folded into a master seed; gives
// every subproblem / tree node its own reproducible RNG stream.
inline std::uint64_t seed_for_ids(std::uint64_t seed, std::span<const int> ids) {
  std::uint64_t h = mix64(seed);
  for (int id : ids) h = mix64(h ^ static_cast<std::uint64_t>(id) * 0x9e3779b97f4a7c15ULL);
  return h;
}

}  // namespace vrpsplit

#endif  // VRPSPLIT_RNG_HPP_
