#pragma once

#include "holecolor/model.hpp"

namespace holecolor {

// Outcome of the counting test: an instance is m-colorable exactly when
// the total sector cardinality stays within m * floor(m/2).
struct ColorabilityVerdict {
    int m = 0;
    int half = 0;                   // floor(m/2)
    long long intersection_sum = 0; // total sector cardinality
    long long bound = 0;            // m * half
    bool colorable = false;
    long long slack = 0;            // bound - sum; negative when not colorable

    bool operator==(const ColorabilityVerdict&) const = default;
};

// m * floor(m/2). Throws DomainError for m < 4.
long long colorability_bound(int m);

ColorabilityVerdict decide(const RingProfile& profile);
ColorabilityVerdict decide(const Ring& ring);
ColorabilityVerdict decide(const CliqueHole& hole);

}  // namespace holecolor
