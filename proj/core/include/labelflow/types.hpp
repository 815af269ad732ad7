#pragma once

#include <cstdint>
#include <random>

namespace labelflow {

using NodeId = std::uint32_t;
using ExternalId = std::uint64_t;
using Label = std::uint32_t;

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent RNG streams from a base seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return mix_seed(base ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace labelflow
