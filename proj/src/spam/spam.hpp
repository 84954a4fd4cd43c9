#ifndef NVQC_SPAM_SPAM_HPP
#define NVQC_SPAM_SPAM_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "metrics/metrics.hpp"
#include "pulse/pulses.hpp"

// Full state-preparation-and-measurement pipeline: preparation of the four
// phase-variant probe states and of the uniform probe, the V2 readout
// rotation, the three-population readout routines, diagonal reconstruction
// and assembly of the measured figure of merit.
//
// Every pulse is simulated as its own rotating-frame unitary over [0, T] and
// the sequence is the ordered product of those unitaries, so all pulses that
// do not depend on the gate under test are cached per system.

namespace nvqc {

struct PhaseTuple {
  double phi1 = 0.0;  // nuclear preparation pulse phase
  double phi2 = 0.0;  // electron preparation pulse phase
};

// the set S = {0, pi} x {0, pi}
std::array<PhaseTuple, 4> phase_tuple_set();

struct PrepAngles {
  double theta1 = 37.0 * M_PI / 58.0;  // nuclear rotation
  double theta2 = 3.0 * M_PI / 10.0;   // electron rotation, non-selective
};

struct MeasurementTriple {
  double m1 = 0.0, m2 = 0.0, m3 = 0.0;  // electron m_s=0 populations
};

enum class SpamFidelity {
  Simulated,       // pulses propagated through the full Hamiltonian
  IdealRotations,  // analytic block rotations, perfect selectivity
  ExactProbes,     // probe states injected exactly, ideal readout chains
};

struct SpamConfig {
  int rf_multiple = 57;            // slow rf duration in units of T_hf
  double fast_mw_duration = 0.01;  // us
  int readout_pi_multiple = 2;     // selective pi duration in units of T_hf
  std::optional<long> shots;       // absent -> noiseless expectation values
  SpamFidelity mode = SpamFidelity::Simulated;
  PrepAngles prep;
  GridPolicy grid;

  double rf_duration(const SystemParams& p) const { return rf_multiple * p.t_hf(); }
  double readout_pi_duration(const SystemParams& p) const {
    return readout_pi_multiple * p.t_hf();
  }
};

// all gate-independent unitaries of the pipeline, cached per (system, config)
struct SpamContext {
  SystemParams params;
  SpamConfig cfg;
  std::array<UnitaryOp, 4> prep_rho1;  // one per phase tuple
  UnitaryOp prep_rho2;
  UnitaryOp v2;
  UnitaryOp readout_pi;   // selective pi on 01<->11
  UnitaryOp chain_m2;     // rf pi on 10<->11 then selective pi on 01<->11
  UnitaryOp chain_m3;     // selective pi on 01<->11

  static SpamContext build(const SystemParams& p, const SpamConfig& cfg);
};

DensityMatrix prepare_rho1_variant(const SpamContext& ctx, int variant_index);
DensityMatrix average_rho1(const SpamContext& ctx);
DensityMatrix prepare_rho2(const SpamContext& ctx);
DensityMatrix apply_v2(const SpamContext& ctx, const DensityMatrix& rho);

// bookkeeping for the measurement-economy claim: a preparation recipe is a
// distinct pulse program up to phase settings, a measurement setting is one
// of the two readout routines applied to one recipe (the direct routine
// yields m1 and m2 within a single experimental schedule, the flip routine
// yields m3)
struct MeasurementEconomy {
  std::array<bool, 2> recipe_used{false, false};
  std::array<std::array<bool, 2>, 2> setting_used{{{false, false}, {false, false}}};
  long population_reads = 0;

  void record(int recipe, int routine);
  int prep_recipes() const;
  int measurement_settings() const;
};

MeasurementTriple readout_triple(const SpamContext& ctx, const DensityMatrix& rho,
                                 Rng* rng = nullptr, long shots_per_read = 0,
                                 MeasurementEconomy* econ = nullptr, int recipe = 0);

// diag = 0.5 * M * (m1, m2, m3, 1)^T; entries sum to one by construction
std::array<double, 4> reconstruct_diagonal(const MeasurementTriple& m);

// the measured figure of merit for an arbitrary trial channel; noise_seed is
// consumed only when cfg.shots is set (one substream per prepared state, the
// four phase variants splitting the shot budget)
FomReport measured_fj(const SpamContext& ctx, const Channel4& channel,
                      std::uint64_t noise_seed = 0,
                      MeasurementEconomy* econ = nullptr);

// convenience overloads for a unitary gate or a shaped pulse under test
FomReport measured_fj(const SpamContext& ctx, const UnitaryOp& gate,
                      std::uint64_t noise_seed = 0,
                      MeasurementEconomy* econ = nullptr);
FomReport measured_fj(const SpamContext& ctx, const ShapedPulse& gate_pulse,
                      std::uint64_t noise_seed = 0,
                      MeasurementEconomy* econ = nullptr);

}  // namespace nvqc

#endif
