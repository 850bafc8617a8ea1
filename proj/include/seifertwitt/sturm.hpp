#pragma once

#include "seifertwitt/poly.hpp"

#include <string>
#include <vector>

namespace sw {

// isolating interval (lo, hi] with exactly one root; lo == hi marks an exact root
struct RootInterval {
    Rat lo, hi;
    std::string label() const;
};

std::vector<QPoly> sturm_sequence(const QPoly& p);
// distinct real roots in (a, b]
int count_roots(const std::vector<QPoly>& seq, const Rat& a, const Rat& b);

struct RealRootData {
    int count = 0;
    std::vector<RootInterval> intervals;  // increasing
};
RealRootData real_root_data(const QPoly& p);

RootInterval refine(const QPoly& p, RootInterval iv, const Rat& width);
// sign of q at the root of p isolated by iv; q must not vanish there
int sign_at_root(const QPoly& p, const RootInterval& iv, const QPoly& q);

}  // namespace sw
