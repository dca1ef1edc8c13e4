#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "noon/fidelity.hpp"
#include "noon/protocol.hpp"

using namespace noon;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double register_norm2(const NoonRegister& reg) {
  return std::norm(reg.amp_l) + std::norm(reg.amp_r);
}

}  // namespace

TEST_CASE("initial register") {
  const NoonRegister reg = init_register();
  CHECK(reg.n == 0);
  CHECK(reg.amp_l == Complex(kInvSqrt2, 0.0));
  CHECK(reg.amp_r == Complex(kInvSqrt2, 0.0));
  CHECK(reg.ancilla_level == AncillaLevel::F);
  CHECK(reg.est_fidelity == 1.0);
  CHECK(std::abs(register_norm2(reg) - 1.0) <= 1e-12);

  const NoonRegister again = init_register();
  CHECK(again.n == reg.n);
  CHECK(again.amp_l == reg.amp_l);
  CHECK(again.amp_r == reg.amp_r);
}

TEST_CASE("adiabatic round bookkeeping") {
  const SystemParams p;  // gamma_f = 0
  const NoonRegister reg = adiabatic_round(init_register(), p,
                                           RoundMode::Analytic);
  CHECK(reg.n == 1);
  CHECK(reg.ancilla_level == AncillaLevel::G);
  CHECK(reg.amp_l == Complex(kInvSqrt2, 0.0));
  CHECK(reg.amp_r == Complex(kInvSqrt2, 0.0));
  CHECK(reg.est_fidelity == 1.0);

  SUBCASE("round on a g-level register is rejected") {
    CHECK_THROWS_AS(adiabatic_round(reg, p, RoundMode::Analytic),
                    ProtocolOrderError);
  }
  SUBCASE("two rounds with a reset between") {
    const NoonRegister reg2 =
        adiabatic_round(reset_pulse(reg), p, RoundMode::Analytic);
    CHECK(reg2.n == 2);
    CHECK(reg2.amp_l == Complex(kInvSqrt2, 0.0));
    CHECK(reg2.amp_r == Complex(kInvSqrt2, 0.0));
    CHECK(std::abs(register_norm2(reg2) - 1.0) <= 1e-12);
  }
  SUBCASE("lossy rounds accumulate the round fidelity") {
    SystemParams lossy;
    lossy.gamma_f = 0.2;
    const NoonRegister r1 =
        adiabatic_round(init_register(), lossy, RoundMode::Analytic);
    CHECK(r1.est_fidelity == round_fidelity(lossy));
  }
}

TEST_CASE("reset pulse") {
  const SystemParams p;
  const NoonRegister after_round =
      adiabatic_round(init_register(), p, RoundMode::Analytic);
  const NoonRegister reg = reset_pulse(after_round);
  CHECK(reg.ancilla_level == AncillaLevel::F);
  CHECK(reg.amp_l == after_round.amp_l);
  CHECK(reg.amp_r == after_round.amp_r);
  CHECK(std::abs(register_norm2(reg) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(reset_pulse(reg), ProtocolOrderError);
  CHECK_THROWS_AS(reset_pulse(init_register()), ProtocolOrderError);
}

TEST_CASE("hadamard") {
  const SystemParams p;
  const NoonRegister g_level =
      adiabatic_round(init_register(), p, RoundMode::Analytic);

  const NoonRegister h1 = hadamard(g_level);
  CHECK(h1.amp_l.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(h1.amp_r) <= 1e-15);

  SUBCASE("basis state fans out") {
    NoonRegister basis = g_level;
    basis.amp_l = Complex(1.0, 0.0);
    basis.amp_r = Complex(0.0, 0.0);
    const NoonRegister h = hadamard(basis);
    CHECK(h.amp_l.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(h.amp_r.real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  }
  SUBCASE("involution") {
    const NoonRegister twice = hadamard(hadamard(g_level));
    CHECK(std::abs(twice.amp_l - g_level.amp_l) <= 1e-15);
    CHECK(std::abs(twice.amp_r - g_level.amp_r) <= 1e-15);
  }
  SUBCASE("requires the g level") {
    CHECK_THROWS_AS(hadamard(init_register()), ProtocolOrderError);
  }
  SUBCASE("norm preserved") {
    CHECK(std::abs(register_norm2(h1) - 1.0) <= 1e-12);
  }
}

TEST_CASE("measurement") {
  const SystemParams p;
  const NoonRegister ready =
      hadamard(adiabatic_round(init_register(), p, RoundMode::Analytic));

  SUBCASE("requires a preceding hadamard") {
    const NoonRegister unready =
        adiabatic_round(init_register(), p, RoundMode::Analytic);
    CHECK_THROWS_AS(measure(unready, 0), ProtocolOrderError);
  }
  SUBCASE("deterministic given the seed") {
    for (std::uint64_t seed : {0u, 1u, 2u, 17u, 12345u}) {
      const MeasurementOutcome a = measure(ready, seed);
      const MeasurementOutcome b = measure(ready, seed);
      CHECK(a.detected == b.detected);
      CHECK(a.resulting_state == b.resulting_state);
      CHECK(a.n == 1);
    }
  }
  SUBCASE("outcome map: g_L gives NOON+, g_R gives NOON-") {
    bool saw_gl = false;
    bool saw_gr = false;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
      const MeasurementOutcome o = measure(ready, seed);
      if (o.detected == Detected::GL) {
        saw_gl = true;
        CHECK(o.resulting_state == NoonSign::Plus);
      } else {
        saw_gr = true;
        CHECK(o.resulting_state == NoonSign::Minus);
      }
    }
    CHECK(saw_gl);
    CHECK(saw_gr);
  }
  SUBCASE("born frequencies over 1e4 seeded trials") {
    int gl = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      if (measure(ready, seed).detected == Detected::GL) ++gl;
    }
    const double freq = gl / 10000.0;
    CHECK(freq >= 0.49);
    CHECK(freq <= 0.51);
  }
}

TEST_CASE("full protocol run, analytic mode") {
  SystemParams p;

  SUBCASE("lossless single round") {
    const ProtocolResult r = run_protocol(1, p, 7, RoundMode::Analytic);
    CHECK(r.est_fidelity == 1.0);
    CHECK(r.outcome.n == 1);
    CHECK(r.transcript.size() == 4);  // init, round, hadamard, measure
  }
  SUBCASE("ten rounds at gamma_f = 0.2 reach about 0.934") {
    p.gamma_f = 0.2;
    const ProtocolResult r = run_protocol(10, p, 0, RoundMode::Analytic);
    CHECK(r.est_fidelity == doctest::Approx(0.934).epsilon(0.011));
    CHECK(std::abs(r.est_fidelity - noon_fidelity(p, 10)) <= 1e-12);
    CHECK(r.transcript.size() == 22);  // 2n + 2
  }
  SUBCASE("transcript structure and running norm") {
    p.gamma_f = 0.1;
    const ProtocolResult r = run_protocol(3, p, 5, RoundMode::Analytic);
    REQUIRE(r.transcript.size() == 8);
    CHECK(r.transcript[0].name == "init");
    CHECK(r.transcript[1].name == "round");
    CHECK(r.transcript[2].name == "reset");
    CHECK(r.transcript[3].name == "round");
    CHECK(r.transcript[6].name == "hadamard");
    CHECK(r.transcript[7].name == "measure");
    for (const ProtocolStep& step : r.transcript) {
      CHECK(std::abs(register_norm2(step.reg) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("est_fidelity equals the compounded fidelity") {
    p.gamma_f = 0.13;
    const ProtocolResult r = run_protocol(7, p, 1, RoundMode::Analytic);
    CHECK(std::abs(r.est_fidelity - noon_fidelity(p, 7)) <= 1e-12);
  }
  SUBCASE("n must be at least one") {
    CHECK_THROWS_AS(run_protocol(0, p, 0, RoundMode::Analytic),
                    InvalidParameters);
  }
}

TEST_CASE("full protocol run, simulated mode") {
  const SystemParams p;  // lossless; transfer probability < 1 still applies
  const ProtocolResult r = run_protocol(2, p, 3, RoundMode::Simulated);
  REQUIRE(r.transcript.size() == 6);
  double expected = 1.0;
  for (const ProtocolStep& step : r.transcript) {
    if (step.name == "round") {
      REQUIRE(step.transfer_probability.has_value());
      CHECK(*step.transfer_probability >= 0.99);
      expected *= *step.transfer_probability;
    }
  }
  CHECK(r.est_fidelity == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.est_fidelity < 1.0);
}
