#include "spam/spam.hpp"

#include <algorithm>
#include <cmath>

namespace nvqc {

std::array<PhaseTuple, 4> phase_tuple_set() {
  return {PhaseTuple{0.0, 0.0}, PhaseTuple{0.0, M_PI}, PhaseTuple{M_PI, 0.0},
          PhaseTuple{M_PI, M_PI}};
}

namespace {

UnitaryOp realize(const ConstantPulse& pulse, const SystemParams& p,
                  const SpamConfig& cfg) {
  if (cfg.mode == SpamFidelity::Simulated) {
    return simulate_pulse(pulse, p, cfg.grid);
  }
  return ideal_unitary(pulse);
}

}  // namespace

SpamContext SpamContext::build(const SystemParams& p, const SpamConfig& cfg) {
  SpamContext ctx;
  ctx.params = p;
  ctx.cfg = cfg;

  const double rf_dur = cfg.rf_duration(p);
  const double pi_dur = cfg.readout_pi_duration(p);

  const auto tuples = phase_tuple_set();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const ConstantPulse rf{Transition::N00_01, cfg.prep.theta1, tuples[i].phi1, rf_dur};
    const ConstantPulse mw{Transition::E_NONSEL, cfg.prep.theta2, tuples[i].phi2,
                           cfg.fast_mw_duration};
    ctx.prep_rho1[i] = realize(mw, p, cfg) * realize(rf, p, cfg);
  }

  {
    const ConstantPulse rf{Transition::N00_01, M_PI / 2.0, M_PI / 2.0, rf_dur};
    const ConstantPulse mw{Transition::E_NONSEL, M_PI / 2.0, M_PI / 2.0,
                           cfg.fast_mw_duration};
    ctx.prep_rho2 = realize(mw, p, cfg) * realize(rf, p, cfg);
  }

  {
    // fast electron (-pi/2)_y first, slow nuclear (-pi/2)_x afterwards
    const ConstantPulse mw{Transition::E_NONSEL, -M_PI / 2.0, M_PI / 2.0,
                           cfg.fast_mw_duration};
    const ConstantPulse rf{Transition::N00_01, -M_PI / 2.0, 0.0, rf_dur};
    ctx.v2 = realize(rf, p, cfg) * realize(mw, p, cfg);
  }

  {
    const ConstantPulse mw_pi{Transition::E01_11, M_PI, 0.0, pi_dur};
    const ConstantPulse rf_pi{Transition::N10_11, M_PI, 0.0, rf_dur};
    ctx.readout_pi = realize(mw_pi, p, cfg);
    ctx.chain_m3 = ctx.readout_pi;
    ctx.chain_m2 = ctx.readout_pi * realize(rf_pi, p, cfg);
  }

  return ctx;
}

DensityMatrix prepare_rho1_variant(const SpamContext& ctx, int variant_index) {
  if (ctx.cfg.mode == SpamFidelity::ExactProbes) return probe_rho1();
  return apply_channel(ctx.prep_rho1[static_cast<std::size_t>(variant_index)],
                       DensityMatrix::basis_state(0));
}

DensityMatrix average_rho1(const SpamContext& ctx) {
  DensityMatrix avg;
  avg.mat = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) avg.mat += 0.25 * prepare_rho1_variant(ctx, i).mat;
  return avg;
}

DensityMatrix prepare_rho2(const SpamContext& ctx) {
  if (ctx.cfg.mode == SpamFidelity::ExactProbes) return probe_rho2();
  return apply_channel(ctx.prep_rho2, DensityMatrix::basis_state(0));
}

DensityMatrix apply_v2(const SpamContext& ctx, const DensityMatrix& rho) {
  if (ctx.cfg.mode == SpamFidelity::ExactProbes) {
    const ConstantPulse mw{Transition::E_NONSEL, -M_PI / 2.0, M_PI / 2.0, 1.0};
    const ConstantPulse rf{Transition::N00_01, -M_PI / 2.0, 0.0, 1.0};
    return apply_channel(ideal_unitary(rf) * ideal_unitary(mw), rho);
  }
  return apply_channel(ctx.v2, rho);
}

void MeasurementEconomy::record(int recipe, int routine) {
  recipe_used[static_cast<std::size_t>(recipe)] = true;
  setting_used[static_cast<std::size_t>(recipe)][static_cast<std::size_t>(routine)] = true;
  ++population_reads;
}

int MeasurementEconomy::prep_recipes() const {
  int n = 0;
  for (bool used : recipe_used) n += used ? 1 : 0;
  return n;
}

int MeasurementEconomy::measurement_settings() const {
  int n = 0;
  for (const auto& row : setting_used) {
    for (bool used : row) n += used ? 1 : 0;
  }
  return n;
}

namespace {

double ground_population(const DensityMatrix& rho) {
  return rho.mat(0, 0).real() + rho.mat(1, 1).real();
}

double read_population(double p, Rng* rng, long shots) {
  if (rng == nullptr || shots <= 0) return p;
  return rng->binomial_mean(std::clamp(p, 0.0, 1.0), shots);
}

}  // namespace

MeasurementTriple readout_triple(const SpamContext& ctx, const DensityMatrix& rho,
                                 Rng* rng, long shots_per_read,
                                 MeasurementEconomy* econ, int recipe) {
  const UnitaryOp& swap_chain =
      ctx.cfg.mode == SpamFidelity::Simulated ? ctx.chain_m2 : ctx.chain_m2;
  MeasurementTriple m;
  m.m1 = read_population(ground_population(rho), rng, shots_per_read);
  if (econ) econ->record(recipe, 0);
  m.m2 = read_population(ground_population(apply_channel(swap_chain, rho)), rng,
                         shots_per_read);
  if (econ) econ->record(recipe, 0);
  m.m3 = read_population(ground_population(apply_channel(ctx.chain_m3, rho)), rng,
                         shots_per_read);
  if (econ) econ->record(recipe, 1);
  return m;
}

std::array<double, 4> reconstruct_diagonal(const MeasurementTriple& m) {
  return {0.5 * (m.m1 + m.m2 + m.m3 - 1.0), 0.5 * (m.m1 - m.m2 - m.m3 + 1.0),
          0.5 * (-m.m1 + m.m2 - m.m3 + 1.0), 0.5 * (-m.m1 - m.m2 + m.m3 + 1.0)};
}

FomReport measured_fj(const SpamContext& ctx, const Channel4& channel,
                      std::uint64_t noise_seed, MeasurementEconomy* econ) {
  const bool noisy = ctx.cfg.shots.has_value();
  const long total_shots = noisy ? *ctx.cfg.shots : 0;
  const long variant_shots = noisy ? std::max<long>(1, total_shots / 4) : 0;

  double term1 = 0.0;
  for (int i = 0; i < 4; ++i) {
    const DensityMatrix evolved = channel(prepare_rho1_variant(ctx, i));
    Rng stream = Rng::substream(noise_seed, static_cast<std::uint64_t>(i));
    const MeasurementTriple triple =
        readout_triple(ctx, evolved, noisy ? &stream : nullptr, variant_shots, econ, 0);
    const auto diag = reconstruct_diagonal(triple);
    double score = 0.0;
    for (int x = 0; x < 4; ++x) {
      score += kRho1DiagonalSwapped[static_cast<std::size_t>(x)] *
               diag[static_cast<std::size_t>(x)];
    }
    term1 += 0.25 * score;
  }

  const DensityMatrix evolved2 = channel(prepare_rho2(ctx));
  Rng stream2 = Rng::substream(noise_seed, 4);
  const MeasurementTriple triple2 = readout_triple(
      ctx, apply_v2(ctx, evolved2), noisy ? &stream2 : nullptr, total_shots, econ, 1);
  const double term2 = reconstruct_diagonal(triple2)[0];

  return make_fom_report(term1, term2);
}

FomReport measured_fj(const SpamContext& ctx, const UnitaryOp& gate,
                      std::uint64_t noise_seed, MeasurementEconomy* econ) {
  return measured_fj(
      ctx, [&gate](const DensityMatrix& rho) { return apply_channel(gate, rho); },
      noise_seed, econ);
}

FomReport measured_fj(const SpamContext& ctx, const ShapedPulse& gate_pulse,
                      std::uint64_t noise_seed, MeasurementEconomy* econ) {
  const UnitaryOp gate = ctx.cfg.mode == SpamFidelity::Simulated
                             ? simulate_pulse(gate_pulse, ctx.params, ctx.cfg.grid)
                             : simulate_pulse(gate_pulse, ctx.params, ctx.cfg.grid);
  return measured_fj(ctx, gate, noise_seed, econ);
}

}  // namespace nvqc
