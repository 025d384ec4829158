#include "fidest/simulator/protocol.hpp"

#include "fidest/posterior/moment.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {

std::size_t sample_outcome(const PureState& hidden, const MeasurementBasis& basis, RandomSource& rng) {
  if (hidden.dim() != basis.dim()) throw DimensionMismatch("sample_outcome: dimension mismatch");
  const double u = rng.uniform();
  double cdf = 0.0;
  for (std::size_t n = 0; n + 1 < basis.dim(); ++n) {
    cdf += fidelity(basis[n], hidden);
    if (u < cdf) return n;
  }
  return basis.dim() - 1;
}

namespace {

// Emits measurement outcomes for the hidden state. The estimator side of the
// loop never holds a reference to it.
class Oven {
 public:
  Oven(PureState hidden, RandomSource rng, OutcomeScript script)
      : hidden_(std::move(hidden)), rng_(std::move(rng)), script_(std::move(script)) {}

  std::size_t measure(std::size_t k, const MeasurementBasis& basis) {
    if (script_) {
      const std::size_t n = script_(k, basis);
      if (n >= basis.dim()) throw ValidationError("outcome script returned an out-of-range index");
      return n;
    }
    return sample_outcome(hidden_, basis, rng_);
  }

  double infidelity(const PureState& estimate) const { return 1.0 - fidelity(hidden_, estimate); }

 private:
  PureState hidden_;
  RandomSource rng_;
  OutcomeScript script_;
};

struct Posterior {
  PosteriorMoment moment;
  std::optional<BlochMoments> bloch;
};

Posterior posterior_of(const MeasurementRecord& record, const MomentPolicy& policy) {
  if (record.dim() == 2) {
    auto bm = evaluate_bloch_moments(record, policy);
    auto moment = bm.to_posterior_moment(record.size());
    return {std::move(moment), std::move(bm)};
  }
  return {evaluate_moment(record, policy), std::nullopt};
}

Estimate estimate_from(const PosteriorMoment& moment, const Oven& oven) {
  auto ml = most_likely_state(moment);
  const double inf = oven.infidelity(ml.state);
  return {std::move(ml.state), ml.fidelity, inf, purity(moment)};
}

}  // namespace

ProtocolRun run_protocol(const PureState& hidden, const Strategy& strategy, const StoppingRule& stopping,
                         const RandomSource& rng, const ProtocolOptions& options) {
  const std::size_t d = hidden.dim();
  strategy.validate(d);
  if (options.first_basis && options.first_basis->dim() != d)
    throw DimensionMismatch("run_protocol: first basis dimension mismatch");

  Oven oven(hidden, rng.split(0), options.outcome_script);
  BasisPlanner planner(strategy, d, rng.split(1), options.optimizer, options.moments);

  MeasurementRecord record(d);
  Posterior post = posterior_of(record, options.moments);
  ProtocolRun run{hidden, record, estimate_from(post.moment, oven), {}, {}, {}, {}, stopping};
  if (stopping.max_iterations == 0) return run;

  MeasurementBasis basis = options.first_basis ? *options.first_basis : planner.first_basis(options.random_catalog_start);
  bool degenerate = false;

  for (std::size_t k = 1; k <= stopping.max_iterations; ++k) {
    if (options.basis_hook) {
      basis = options.basis_hook(k, basis);
      if (basis.dim() != d) throw DimensionMismatch("basis hook returned a basis of the wrong dimension");
    }
    const std::size_t n = oven.measure(k, basis);
    MeasurementRecord next = record.with_appended(basis[n]);
    try {
      post = posterior_of(next, options.moments);
    } catch (const SizeLimitExceeded&) {
      run.truncated = true;
      run.stop_reason = StopReason::Truncated;
      break;
    }
    record = std::move(next);
    run.bases_used.push_back(basis);
    run.outcomes.push_back(n);
    run.degenerate_choice.push_back(degenerate);
    run.estimates.push_back(estimate_from(post.moment, oven));

    const Estimate& est = run.estimates.back();
    if (stopping.kind == StoppingRule::Kind::FidelityDelta && k >= 2 &&
        fidelity(run.estimates[k - 2].state, est.state) > 1.0 - stopping.epsilon) {
      run.stop_reason = StopReason::FidelityDelta;
      break;
    }
    if (stopping.kind == StoppingRule::Kind::PurityThreshold && est.purity > 1.0 - stopping.epsilon) {
      run.stop_reason = StopReason::PurityThreshold;
      break;
    }
    if (k == stopping.max_iterations) break;

    try {
      basis = planner.next_basis(record, post.bloch ? &*post.bloch : nullptr);
    } catch (const SizeLimitExceeded&) {
      run.truncated = true;
      run.stop_reason = StopReason::Truncated;
      break;
    }
    degenerate = planner.last_report() && planner.last_report()->degenerate;
  }
  run.record = std::move(record);
  return run;
}

}  // namespace fidest
