#include "pnr/temporal_array.hpp"

#include <cmath>
#include <sstream>

#include "pnr/spatial_array.hpp"

namespace pnr {

double effective_efficiency(double eta_c, int M, double eta) {
    if (M < 1 || (M & (M - 1)) != 0)
        throw std::invalid_argument("effective_efficiency: M must be a power of two");
    int stages = 0;
    for (int v = M; v > 1; v >>= 1) ++stages;
    return std::pow(eta_c, stages) * eta;
}

ResponseMatrix temporal_response(const TemporalArrayConfig& config, int n,
                                 const TruncationPolicy& policy) {
    const double eta_eff =
        effective_efficiency(config.coupler_efficiency, config.effective_segments,
                             config.click.eta);
    SpatialArrayConfig equivalent(config.effective_segments,
                                  ClickModel(eta_eff, config.click.dark_prob));
    ResponseMatrix out = spatial_response(equivalent, n, policy);
    std::ostringstream os;
    os << "temporal(M=" << config.effective_segments << ",eta_c=" << config.coupler_efficiency
       << ",eta=" << config.click.eta << ",dark=" << config.click.dark_prob << ",n=" << n
       << ",m_max=" << out.m_max() << ")";
    out.set_source(os.str());
    return out;
}

} // namespace pnr
