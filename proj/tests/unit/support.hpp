#pragma once

#include "ifnstat/ifn_space.hpp"
#include "ifnstat/unit_interval.hpp"

namespace ifnstat::testing {

inline IFNorm line_ifn() { return standard_ifn(abs_norm(), product_tnorm(), prob_sum_tconorm()); }
inline IFNorm plane_ifn() { return standard_ifn(euclidean_norm(), product_tnorm(), prob_sum_tconorm()); }

}  // namespace ifnstat::testing
