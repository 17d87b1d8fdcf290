/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COMOD_ERROR_HPP
#define COMOD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace comod {

enum class errc {
  parse_error,
  invalid_interval,
  duplicate_subset,
  subset_out_of_range,
  n_exceeds_limit,
  not_signed_capacity,
  bad_role,
  dimension_mismatch,
  out_of_box,
  bad_threshold_sign,
  negative_radius,
  internal_cross_check_failed,
  tuple_outside_interval,
  phi_missing_property,
  phi_range_outside_interval,
  invalid_transform,
  extrapolation,
  negative_input,
  missing_transform,
  empty_applicable_set,
  bad_grid,
  domain_gap,
  off_axis_point,
  not_nondecreasing,
};

inline std::string_view errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::invalid_interval: return "InvalidInterval";
    case errc::duplicate_subset: return "DuplicateSubset";
    case errc::subset_out_of_range: return "SubsetOutOfRange";
    case errc::n_exceeds_limit: return "NExceedsLimit";
    case errc::not_signed_capacity: return "NotSignedCapacity";
    case errc::bad_role: return "BadRole";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::out_of_box: return "OutOfBox";
    case errc::bad_threshold_sign: return "BadThresholdSign";
    case errc::negative_radius: return "NegativeRadius";
    case errc::internal_cross_check_failed: return "InternalCrossCheckFailed";
    case errc::tuple_outside_interval: return "TupleOutsideInterval";
    case errc::phi_missing_property: return "PhiMissingProperty";
    case errc::phi_range_outside_interval: return "PhiRangeOutsideI";
    case errc::invalid_transform: return "InvalidTransform";
    case errc::extrapolation: return "Extrapolation";
    case errc::negative_input: return "NegativeInput";
    case errc::missing_transform: return "MissingTransform";
    case errc::empty_applicable_set: return "EmptyApplicableSet";
    case errc::bad_grid: return "BadGrid";
    case errc::domain_gap: return "DomainGap";
    case errc::off_axis_point: return "OffAxisPoint";
    case errc::not_nondecreasing: return "NotNondecreasing";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace comod

#endif  // COMOD_ERROR_HPP
