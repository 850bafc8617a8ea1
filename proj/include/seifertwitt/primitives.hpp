#pragma once

#include "seifertwitt/seifert.hpp"

#include <vector>

namespace sw {

struct TrivialSocle {
    QMatrix w0;  // s = 0 on it
    QMatrix w1;  // s = 1 on it
};
TrivialSocle trivial_socle(const SeifertModule& v);

struct PrimitiveLayer {
    int step = 0;
    int value = 0;  // s acts as 0 or 1
    std::size_t dim = 0;
};

struct PrimitiveAnalysis {
    QMatrix max_primitive;
    QMatrix min_coprimitive;
    std::vector<PrimitiveLayer> filtration;
    bool primitive = false;
};

// ascending socle loop; fills max_primitive and filtration only
PrimitiveAnalysis max_primitive_submodule(const SeifertModule& v);
QMatrix min_coprimitive(const SeifertModule& v);
bool is_primitive(const SeifertModule& v);
PrimitiveAnalysis analyze_primitive(const SeifertModule& v);

// Hom in Sei/Prim as maps from min_coprimitive(a) into b / max_primitive(b)
std::vector<QMatrix> hom_in_quotient(const SeifertModule& a, const SeifertModule& b);

}  // namespace sw
