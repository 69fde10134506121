#pragma once

#include <string>
#include <variant>

#include "pnr/loop_detector.hpp"
#include "pnr/response_matrix.hpp"
#include "pnr/spatial_array.hpp"
#include "pnr/temporal_array.hpp"
#include "pnr/truncation.hpp"

namespace pnr {

using DetectorConfig = std::variant<SpatialArrayConfig, TemporalArrayConfig, LoopDetectorConfig>;

/// Largest meaningful output class: M for arrays, max_loops for the loop.
int max_output_class(const DetectorConfig& config);

/// Element count driving the default m_max: M for arrays, max_loops for
/// the loop.
int effective_elements(const DetectorConfig& config);

const ClickModel& click_model_of(const DetectorConfig& config);
DetectorConfig with_eta(DetectorConfig config, double eta);
DetectorConfig with_dark_prob(DetectorConfig config, double dark_prob);

std::string describe(const DetectorConfig& config);

/// Dispatches to the architecture-specific response builder.
ResponseMatrix build_response(const DetectorConfig& config, int n,
                              const TruncationPolicy& policy = {});

} // namespace pnr
