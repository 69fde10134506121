#include "pnr/detector.hpp"

namespace pnr {

namespace {

template <class... Fs> struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs> Overload(Fs...) -> Overload<Fs...>;

} // namespace

int max_output_class(const DetectorConfig& config) {
    return std::visit(Overload{[](const SpatialArrayConfig& c) { return c.elements; },
                               [](const TemporalArrayConfig& c) { return c.effective_segments; },
                               [](const LoopDetectorConfig& c) { return c.max_loops; }},
                      config);
}

int effective_elements(const DetectorConfig& config) { return max_output_class(config); }

const ClickModel& click_model_of(const DetectorConfig& config) {
    return std::visit(Overload{[](const SpatialArrayConfig& c) -> const ClickModel& { return c.click; },
                               [](const TemporalArrayConfig& c) -> const ClickModel& { return c.click; },
                               [](const LoopDetectorConfig& c) -> const ClickModel& { return c.click; }},
                      config);
}

DetectorConfig with_eta(DetectorConfig config, double eta) {
    std::visit([eta](auto& c) { c.click = ClickModel(eta, c.click.dark_prob); }, config);
    return config;
}

DetectorConfig with_dark_prob(DetectorConfig config, double dark_prob) {
    std::visit([dark_prob](auto& c) { c.click = ClickModel(c.click.eta, dark_prob); }, config);
    return config;
}

std::string describe(const DetectorConfig& config) {
    return std::visit(
        Overload{[](const SpatialArrayConfig& c) {
                     return "spatial(M=" + std::to_string(c.elements) + ")";
                 },
                 [](const TemporalArrayConfig& c) {
                     return "temporal(M=" + std::to_string(c.effective_segments) + ")";
                 },
                 [](const LoopDetectorConfig& c) {
                     return "loop(loops=" + std::to_string(c.max_loops) + ")";
                 }},
        config);
}

ResponseMatrix build_response(const DetectorConfig& config, int n, const TruncationPolicy& policy) {
    return std::visit(
        Overload{[&](const SpatialArrayConfig& c) { return spatial_response(c, n, policy); },
                 [&](const TemporalArrayConfig& c) { return temporal_response(c, n, policy); },
                 [&](const LoopDetectorConfig& c) { return loop_response(c, n, policy); }},
        config);
}

} // namespace pnr
