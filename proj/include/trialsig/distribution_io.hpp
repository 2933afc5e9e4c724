#pragma once

#include <iosfwd>
#include <string>

#include "trialsig/contdist.hpp"

namespace trialsig::io {

/// Reads a `value,mass` CSV (header row required). Values must lie on a
/// uniform grid (spacing validated to 1e-9 relative); masses must be
/// nonnegative and sum to 1 within 1e-9 (then renormalized exactly).
contdist::DiscreteDistribution load_distribution_csv(std::istream& in);
contdist::DiscreteDistribution load_distribution_csv(const std::string& path);

/// Writes the `value,mass` CSV with full double precision.
void save_distribution_csv(std::ostream& out,
                           const contdist::DiscreteDistribution& dist);

}  // namespace trialsig::io
