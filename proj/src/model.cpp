#include "noon/model.hpp"

#include <cmath>
#include <sstream>

namespace noon {

namespace {

bool nonneg(double x) { return std::isfinite(x) && x >= 0.0; }
bool positive(double x) { return std::isfinite(x) && x > 0.0; }

const std::array<LabelInfo, kDim> kLabelTable = {{
    // ancilla, atomL, atomR, {c1, c2l, c2r, c3, fA, fB}
    {"fL", 's', 's', {0, 0, 0, 0, 0, 0}},  // Psi1
    {"gL", 's', 's', {0, 1, 0, 0, 0, 0}},  // Psi2
    {"gL", 's', 's', {0, 0, 0, 0, 1, 0}},  // Psi3
    {"gL", 's', 's', {1, 0, 0, 0, 0, 0}},  // Psi4
    {"gL", 'k', 's', {0, 0, 0, 0, 0, 0}},  // Psi5
    {"fR", 's', 's', {0, 0, 0, 0, 0, 0}},  // Psi6
    {"gR", 's', 's', {0, 0, 1, 0, 0, 0}},  // Psi7
    {"gR", 's', 's', {0, 0, 0, 0, 0, 1}},  // Psi8
    {"gR", 's', 's', {0, 0, 0, 1, 0, 0}},  // Psi9
    {"gR", 's', 'k', {0, 0, 0, 0, 0, 0}},  // Psi10
}};

// Ket strings exactly as the basis is written out: polarization tags l/r
// ride on the occupied cavity/fiber slot.
const std::array<std::string_view, kDim> kKets = {{
    "|fL⟩|s⟩L|s⟩R|000⟩c|00⟩f",
    "|gL⟩|s⟩L|s⟩R|01l0⟩c|00⟩f",
    "|gL⟩|s⟩L|s⟩R|000⟩c|1l0⟩f",
    "|gL⟩|s⟩L|s⟩R|1l00⟩c|00⟩f",
    "|gL⟩|k⟩L|s⟩R|000⟩c|00⟩f",
    "|fR⟩|s⟩L|s⟩R|000⟩c|00⟩f",
    "|gR⟩|s⟩L|s⟩R|01r0⟩c|00⟩f",
    "|gR⟩|s⟩L|s⟩R|000⟩c|01r⟩f",
    "|gR⟩|s⟩L|s⟩R|001r⟩c|00⟩f",
    "|gR⟩|s⟩L|k⟩R|000⟩c|00⟩f",
}};

}  // namespace

void SystemParams::validate() const {
  std::ostringstream bad;
  if (!positive(g)) bad << " g";
  if (!positive(delta)) bad << " delta";
  if (!nonneg(eta_a)) bad << " eta_a";
  if (!nonneg(eta_b)) bad << " eta_b";
  if (!nonneg(gamma_f)) bad << " gamma_f";
  if (!nonneg(kappa_c)) bad << " kappa_c";
  if (!nonneg(omega0)) bad << " omega0";
  if (!positive(total_time)) bad << " total_time";
  if (!positive(tau_pulse)) bad << " tau_pulse";
  if (!std::isfinite(t_l)) bad << " t_l";
  if (!std::isfinite(t_r)) bad << " t_r";
  if (!std::isfinite(t_1)) bad << " t_1";
  if (!bad.str().empty()) {
    throw InvalidParameters("invalid system parameters:" + bad.str());
  }
}

SystemParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw InvalidParameters("parameter JSON must be an object");
  }
  SystemParams p;  // missing fields keep the reference defaults
  auto get = [&j](const char* key, double& slot) {
    if (auto it = j.find(key); it != j.end()) {
      if (!it->is_number()) {
        throw InvalidParameters(std::string("parameter '") + key +
                                "' must be a number");
      }
      slot = it->get<double>();
    }
  };
  get("g", p.g);
  get("delta", p.delta);
  get("eta_a", p.eta_a);
  get("eta_b", p.eta_b);
  get("gamma_f", p.gamma_f);
  get("kappa_c", p.kappa_c);
  get("omega0", p.omega0);
  get("total_time", p.total_time);
  get("tau_pulse", p.tau_pulse);
  get("t_l", p.t_l);
  get("t_r", p.t_r);
  get("t_1", p.t_1);
  return p;
}

nlohmann::json params_to_json(const SystemParams& p) {
  return nlohmann::json{
      {"g", p.g},
      {"delta", p.delta},
      {"eta_a", p.eta_a},
      {"eta_b", p.eta_b},
      {"gamma_f", p.gamma_f},
      {"kappa_c", p.kappa_c},
      {"omega0", p.omega0},
      {"total_time", p.total_time},
      {"tau_pulse", p.tau_pulse},
      {"t_l", p.t_l},
      {"t_r", p.t_r},
      {"t_1", p.t_1},
  };
}

int index_of(BasisLabel label) { return static_cast<int>(label); }

BasisLabel label_of(int index) {
  if (index < 0 || index >= kDim) {
    throw InvalidParameters("basis index out of range: " +
                            std::to_string(index));
  }
  return static_cast<BasisLabel>(index);
}

const LabelInfo& label_info(BasisLabel label) {
  return kLabelTable[static_cast<std::size_t>(index_of(label))];
}

std::string describe(BasisLabel label) {
  return std::string(kKets[static_cast<std::size_t>(index_of(label))]);
}

int excitation_number(BasisLabel label) {
  const LabelInfo& info = label_info(label);
  int n = info.ancilla[0] == 'f' ? 1 : 0;
  if (info.atom_left == 'k') ++n;
  if (info.atom_right == 'k') ++n;
  for (int ph : info.photons) n += ph;
  return n;
}

bool is_left_chain(BasisLabel label) { return index_of(label) < 5; }

StateVector basis_state(BasisLabel label) {
  StateVector v = StateVector::Zero();
  v[index_of(label)] = Complex(1.0, 0.0);
  return v;
}

}  // namespace noon
