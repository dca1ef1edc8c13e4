#include "noon/hamiltonian.hpp"

#include <cmath>
#include <vector>

namespace noon {

namespace {

constexpr Complex kMinusIHalf(0.0, -0.5);

void set_pair(Matrix10& m, int i, int j, double value) {
  m(i, j) = Complex(value, 0.0);
  m(j, i) = Complex(value, 0.0);
}

}  // namespace

StateVector decay_diagonal(const SystemParams& p) {
  StateVector d = StateVector::Zero();
  // Fiber-populated labels: Psi3, Psi8.
  d[2] = kMinusIHalf * p.gamma_f;
  d[7] = kMinusIHalf * p.gamma_f;
  // Cavity-populated labels: Psi2, Psi4, Psi7, Psi9.
  d[1] = kMinusIHalf * p.kappa_c;
  d[3] = kMinusIHalf * p.kappa_c;
  d[6] = kMinusIHalf * p.kappa_c;
  d[8] = kMinusIHalf * p.kappa_c;
  return d;
}

HamiltonianMatrix build(double t, const SystemParams& p,
                        const BuildOptions& opts) {
  p.validate();
  if (!std::isfinite(t)) {
    throw InvalidParameters("hamiltonian time must be finite");
  }

  const double o1 = effective_rabi(t, PulseId::One, p);
  const double ol = effective_rabi(t, PulseId::L, p);
  const double or_ = effective_rabi(t, PulseId::R, p);

  HamiltonianMatrix h{t, Matrix10::Zero()};
  set_pair(h.entries, 0, 1, o1);
  set_pair(h.entries, 1, 2, p.eta_a);
  set_pair(h.entries, 2, 3, p.eta_a);
  set_pair(h.entries, 3, 4, ol);
  set_pair(h.entries, 5, 6, o1);
  set_pair(h.entries, 6, 7, p.eta_b);
  set_pair(h.entries, 7, 8, p.eta_b);
  set_pair(h.entries, 8, 9, or_);

  if (opts.include_stark) {
    // Level shifts of the raw drives and the photon-number shifts,
    // evaluated on each basis label.
    const double w1 = gaussian_pulse(t, PulseId::One, p);
    const double wl = gaussian_pulse(t, PulseId::L, p);
    const double wr = gaussian_pulse(t, PulseId::R, p);
    const double g2 = p.g * p.g / p.delta;
    h.entries(0, 0) += w1 * w1 / p.delta;
    h.entries(5, 5) += w1 * w1 / p.delta;
    h.entries(1, 1) += g2;
    h.entries(3, 3) += g2;
    h.entries(6, 6) += g2;
    h.entries(8, 8) += g2;
    h.entries(4, 4) += wl * wl / p.delta;
    h.entries(9, 9) += wr * wr / p.delta;
  }

  if (opts.include_decay) {
    h.entries += decay_diagonal(p).asDiagonal().toDenseMatrix();
  }
  return h;
}

namespace {

// Ancilla level codes for the oracle basis.
enum Ancilla { kFL = 0, kFR = 1, kGL = 2, kGR = 3 };

int ancilla_code(std::string_view name) {
  if (name == "fL") return kFL;
  if (name == "fR") return kFR;
  if (name == "gL") return kGL;
  return kGR;
}

// One interaction term: an optional ancilla flip, an optional atom flip,
// and up to two mode moves (raise one, lower another).
struct Term {
  double amplitude;
  int ancilla_from = -1;  // -1: no ancilla condition
  int ancilla_to = -1;
  int atom = -1;  // 0 = left atom, 1 = right atom, -1 = none
  char atom_from = 0;
  char atom_to = 0;
  int raise_mode = -1;  // mode index to apply a creation operator to
  int lower_mode = -1;  // mode index to apply an annihilation operator to
};

}  // namespace

FockOracle::FockOracle(double t, const SystemParams& p, int n_max)
    : n_max_(n_max) {
  p.validate();
  if (!std::isfinite(t)) {
    throw InvalidParameters("hamiltonian time must be finite");
  }
  if (n_max < 1) {
    throw InvalidParameters("fock oracle needs n_max >= 1");
  }
  if (n_max > 2) {
    throw CapacityExceeded("fock oracle capped at n_max <= 2, got " +
                           std::to_string(n_max));
  }

  const Eigen::Index per_mode = n_max_ + 1;
  dim_ = 4 * 2 * 2;
  for (int m = 0; m < 6; ++m) dim_ *= per_mode;

  const double o1 = effective_rabi(t, PulseId::One, p);
  const double ol = effective_rabi(t, PulseId::L, p);
  const double or_ = effective_rabi(t, PulseId::R, p);

  // Modes: 0 = cavity1, 1 = cavity2l, 2 = cavity2r, 3 = cavity3,
  // 4 = fiberA, 5 = fiberB.
  const Term terms[] = {
      {ol, -1, -1, 0, 'k', 's', 0, -1},   // a1^dag |s>L<k|
      {o1, kFL, kGL, -1, 0, 0, 1, -1},    // a2l^dag |gL><fL|
      {o1, kFR, kGR, -1, 0, 0, 2, -1},    // a2r^dag |gR><fR|
      {or_, -1, -1, 1, 'k', 's', 3, -1},  // a3^dag |s>R<k|
      {p.eta_a, -1, -1, -1, 0, 0, 0, 4},  // b_A a1^dag
      {p.eta_a, -1, -1, -1, 0, 0, 1, 4},  // b_A a2l^dag
      {p.eta_b, -1, -1, -1, 0, 0, 2, 5},  // b_B a2r^dag
      {p.eta_b, -1, -1, -1, 0, 0, 3, 5},  // b_B a3^dag
  };

  std::vector<Eigen::Triplet<Complex>> triplets;
  std::array<int, 6> ph{};
  for (int anc = 0; anc < 4; ++anc) {
    for (int al = 0; al < 2; ++al) {
      for (int ar = 0; ar < 2; ++ar) {
        ph.fill(0);
        while (true) {
          const Eigen::Index col = state_index(anc, al, ar, ph);
          for (const Term& term : terms) {
            int anc2 = anc, al2 = al, ar2 = ar;
            if (term.ancilla_from >= 0) {
              if (anc != term.ancilla_from) continue;
              anc2 = term.ancilla_to;
            }
            if (term.atom >= 0) {
              const char level = (term.atom == 0 ? (al ? 'k' : 's')
                                                 : (ar ? 'k' : 's'));
              if (level != term.atom_from) continue;
              const int to = term.atom_to == 'k' ? 1 : 0;
              (term.atom == 0 ? al2 : ar2) = to;
            }
            std::array<int, 6> ph2 = ph;
            double factor = term.amplitude;
            if (term.lower_mode >= 0) {
              if (ph2[term.lower_mode] == 0) continue;
              factor *= std::sqrt(static_cast<double>(ph2[term.lower_mode]));
              --ph2[term.lower_mode];
            }
            if (term.raise_mode >= 0) {
              if (ph2[term.raise_mode] >= n_max_) continue;  // truncated
              ++ph2[term.raise_mode];
              factor *= std::sqrt(static_cast<double>(ph2[term.raise_mode]));
            }
            const Eigen::Index row = state_index(anc2, al2, ar2, ph2);
            triplets.emplace_back(row, col, Complex(factor, 0.0));
            triplets.emplace_back(col, row, Complex(factor, 0.0));
          }
          // next occupation pattern
          int m = 5;
          while (m >= 0 && ph[m] == n_max_) ph[m--] = 0;
          if (m < 0) break;
          ++ph[m];
        }
      }
    }
  }

  matrix_.resize(dim_, dim_);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
}

Eigen::Index FockOracle::state_index(int ancilla, int atom_l, int atom_r,
                                     const std::array<int, 6>& photons) const {
  Eigen::Index idx = (ancilla * 2 + atom_l) * 2 + atom_r;
  for (int m = 0; m < 6; ++m) {
    idx = idx * (n_max_ + 1) + photons[m];
  }
  return idx;
}

Eigen::Index FockOracle::label_index(BasisLabel label) const {
  const LabelInfo& info = label_info(label);
  return state_index(ancilla_code(info.ancilla), info.atom_left == 'k',
                     info.atom_right == 'k', info.photons);
}

FockOracle build_fock_oracle(double t, const SystemParams& p, int n_max) {
  return FockOracle(t, p, n_max);
}

}  // namespace noon
