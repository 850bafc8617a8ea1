#pragma once

#include "seifertwitt/poly.hpp"

#include <vector>

namespace sw {

struct Factorization {
    Rat unit;
    std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, sorted
};

// squarefree split, then mod-p factorization, Hensel lifting and recombination
Factorization factor(const QPoly& p);
bool is_irreducible(const QPoly& p);

}  // namespace sw
