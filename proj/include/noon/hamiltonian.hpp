#pragma once

#include <Eigen/Sparse>

#include "noon/model.hpp"
#include "noon/pulses.hpp"

namespace noon {

struct BuildOptions {
  /// Add the classical-drive level shifts as diagonal entries.
  bool include_stark = false;
  /// Add -i*gamma_f/2 on fiber-populated labels and -i*kappa_c/2 on
  /// cavity-populated labels (norm-loss picture of photon decay).
  bool include_decay = false;
};

struct HamiltonianMatrix {
  double time;
  Matrix10 entries;
};

/// The single-excitation Hamiltonian at time t. Couplings, with
/// O_xi := effective_rabi(t, xi):
///   Psi1-Psi2 = O1, Psi2-Psi3 = eta_A, Psi3-Psi4 = eta_A, Psi4-Psi5 = OL
/// and the mirror chain Psi6..Psi10 with (O1, eta_B, eta_B, OR).
/// Hermitian unless include_decay is set.
HamiltonianMatrix build(double t, const SystemParams& p,
                        const BuildOptions& opts = {});

/// The -i/2 loss diagonal added by include_decay, as a vector.
StateVector decay_diagonal(const SystemParams& p);

/// Generic tensor-basis Hamiltonian used to verify the hand-coded
/// 10-dimensional build: {ancilla fL,fR,gL,gR} x {left atom s,k} x
/// {right atom s,k} x Fock(4 cavity modes + 2 fiber modes, occupation
/// <= n_max). Indices are mixed-radix in that field order.
class FockOracle {
 public:
  FockOracle(double t, const SystemParams& p, int n_max);

  const Eigen::SparseMatrix<Complex>& matrix() const { return matrix_; }
  int n_max() const { return n_max_; }
  Eigen::Index dim() const { return dim_; }

  /// ancilla in [0,4) ordered {fL, fR, gL, gR}; atoms 0 = s, 1 = k.
  Eigen::Index state_index(int ancilla, int atom_l, int atom_r,
                           const std::array<int, 6>& photons) const;

  /// Oracle index of one of the ten single-excitation labels.
  Eigen::Index label_index(BasisLabel label) const;

 private:
  int n_max_;
  Eigen::Index dim_;
  Eigen::SparseMatrix<Complex> matrix_;
};

/// Convenience wrapper matching the one-shot builder signature.
FockOracle build_fock_oracle(double t, const SystemParams& p, int n_max);

}  // namespace noon
