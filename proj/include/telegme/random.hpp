#pragma once

#include <cstdint>
#include <random>

#include "telegme/qstate.hpp"

namespace telegme {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; derives independent per-trial seeds from a root seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) {
  return splitmix64(root ^ splitmix64(index));
}

/// Haar-distributed pure state: normalized i.i.d. complex Gaussian amplitudes.
PureState haar_state(int n_qubits, Rng& rng);

/// Haar-distributed 2x2 unitary (QR of a complex Ginibre matrix with the
/// phases of R's diagonal folded back into Q).
Matrix2c haar_unitary(Rng& rng);

/// Applies an independent Haar unitary to every qubit.
PureState random_local_unitaries(const PureState& state, Rng& rng);

struct BiseparableSample {
  PureState state;
  int lone_qubit;  // the qubit that factors out
};

/// Random 1-qubit state tensored with a Haar two-qubit state, with the lone
/// qubit placed at a uniformly random position.
BiseparableSample random_biseparable_3(Rng& rng);

}  // namespace telegme
