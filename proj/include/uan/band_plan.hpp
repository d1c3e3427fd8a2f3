#ifndef UAN_BAND_PLAN_HPP
#define UAN_BAND_PLAN_HPP

#include "uan/waterfill.hpp"

#include <cstddef>
#include <vector>

namespace uan {

/// Contiguous non-overlapping bands of common width delta_f covering
/// [f_lo, f_hi]; the last band may be narrower.
struct BandPlan {
    std::vector<Band> bands;
    double delta_f = 0.0;

    double f_lo() const { return bands.front().f_min; }
    double f_hi() const { return bands.back().f_max; }
};

BandPlan make_plan(double f_lo, double f_hi, double delta_f);

struct BandAssignment {
    std::size_t index;
    bool clamped;  ///< f_c(l) fell outside the plan; nearest edge band used
};

/// Index of the band containing f. Bands are half-open [f_min, f_max);
/// the top band is closed. Frequencies outside the plan clamp with a flag.
BandAssignment locate_band(double f_khz, const BandPlan& plan);

/// Band assignment for a link: the band containing f_c(l). Longer links
/// map to lower bands.
BandAssignment assign_band(double l_km, const BandPlan& plan, const ChannelParams& params);

} // namespace uan

#endif
