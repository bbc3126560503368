#include "telegme/random.hpp"

#include <array>
#include <cmath>

namespace telegme {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

PureState haar_state(int n_qubits, Rng& rng) {
  CVector amps(Eigen::Index{1} << n_qubits);
  for (auto& a : amps) a = gaussian(rng);
  return PureState::renormalize(n_qubits, std::move(amps));
}

Matrix2c haar_unitary(Rng& rng) {
  Matrix2c z;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) z(r, c) = gaussian(rng);
  Eigen::HouseholderQR<Matrix2c> qr(z);
  Matrix2c q = qr.householderQ();
  const Matrix2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < 2; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

PureState random_local_unitaries(const PureState& state, Rng& rng) {
  PureState out = state;
  for (int q = 0; q < state.n_qubits(); ++q) out = apply_local_unitary(out, q, haar_unitary(rng));
  return out;
}

BiseparableSample random_biseparable_3(Rng& rng) {
  const PureState single = haar_state(1, rng);
  const PureState pair = haar_state(2, rng);
  const int lone = static_cast<int>(rng() % 3);
  // tensor() puts the single qubit at position 0; move it to `lone`.
  std::array<int, 3> perm{};
  perm[0] = lone;
  int next = 0;
  for (int q = 1; q < 3; ++q) {
    if (next == lone) ++next;
    perm[static_cast<std::size_t>(q)] = next++;
  }
  return {permute_qubits(tensor(single, pair), perm), lone};
}

}  // namespace telegme
