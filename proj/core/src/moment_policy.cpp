#include "fidest/optimizer/moment_policy.hpp"

#include "fidest/closedform/pauli.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {

std::string_view to_string(MomentRoute route) {
  switch (route) {
    case MomentRoute::Auto: return "auto";
    case MomentRoute::Permanent: return "permanent";
    case MomentRoute::ClosedForm: return "closed-form";
    case MomentRoute::Quadrature: return "quadrature";
  }
  return "unknown";
}

namespace {

PauliCounts require_pauli(const MeasurementRecord& record) {
  auto counts = PauliCounts::from_record(record);
  if (!counts) throw ValidationError("closed-form route requires a record of Pauli eigenstates");
  return *counts;
}

void require_qubit(const MeasurementRecord& record, const char* what) {
  if (record.dim() != 2) throw DimensionMismatch(std::string(what) + " requires a qubit record");
}

}  // namespace

PosteriorMoment evaluate_moment(const MeasurementRecord& record, const MomentPolicy& policy) {
  policy.prior.validate(record.dim());
  if (policy.prior.kind == PriorSpec::Kind::PlanarQubit) return planar_moment(record);

  switch (policy.route) {
    case MomentRoute::Permanent:
      return unnormalized_moment(record);
    case MomentRoute::ClosedForm:
      return closedform_moment(require_pauli(record));
    case MomentRoute::Quadrature:
      require_qubit(record, "quadrature route");
      return quadrature_moment(record, policy.grid);
    case MomentRoute::Auto:
      break;
  }
  if (record.dim() == 2) {
    if (auto counts = PauliCounts::from_record(record); counts && counts->total() <= kClosedFormCountCap)
      return closedform_moment(*counts);
    if (record.size() + 1 <= policy.permanent_order_limit) return unnormalized_moment(record);
    return quadrature_moment(record, policy.grid);
  }
  return unnormalized_moment(record);
}

BlochMoments evaluate_bloch_moments(const MeasurementRecord& record, const MomentPolicy& policy) {
  require_qubit(record, "Bloch moments");
  policy.prior.validate(record.dim());
  if (policy.prior.kind == PriorSpec::Kind::PlanarQubit) return planar_bloch_moments(record);

  switch (policy.route) {
    case MomentRoute::Permanent:
      return permanent_bloch_moments(record);
    case MomentRoute::ClosedForm:
      return closedform_bloch_moments(require_pauli(record));
    case MomentRoute::Quadrature:
      return quadrature_bloch_moments(record, policy.grid);
    case MomentRoute::Auto:
      break;
  }
  if (auto counts = PauliCounts::from_record(record); counts && counts->total() <= kClosedFormCountCap)
    return closedform_bloch_moments(*counts);
  if (record.size() + 2 <= policy.permanent_order_limit) return permanent_bloch_moments(record);
  return quadrature_bloch_moments(record, policy.grid);
}

}  // namespace fidest
