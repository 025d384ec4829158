#pragma once

#include <cstddef>
#include <string_view>

#include "fidest/closedform/bloch_moments.hpp"
#include "fidest/closedform/quadrature.hpp"
#include "fidest/posterior/moment.hpp"
#include "fidest/posterior/record.hpp"

namespace fidest {

// How posterior moments are evaluated.
//   Permanent:  exact permanents (any d), capped by the permanent order.
//   ClosedForm: exact Pauli-restricted qubit closed form.
//   Quadrature: qubit sphere quadrature.
//   Auto:       planar grid under the planar prior; otherwise closed form for
//               Pauli qubit records, permanents while the order stays within
//               permanent_order_limit, quadrature for larger qubit records,
//               permanents (up to the hard cap) for d > 2.
enum class MomentRoute { Auto, Permanent, ClosedForm, Quadrature };

std::string_view to_string(MomentRoute route);

struct MomentPolicy {
  PriorSpec prior = PriorSpec::uniform();
  MomentRoute route = MomentRoute::Auto;
  std::size_t permanent_order_limit = 12;
  QuadratureGrid grid{};
};

PosteriorMoment evaluate_moment(const MeasurementRecord& record, const MomentPolicy& policy = {});

// Qubit records only.
BlochMoments evaluate_bloch_moments(const MeasurementRecord& record, const MomentPolicy& policy = {});

}  // namespace fidest
