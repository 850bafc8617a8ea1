#pragma once

#include "seifertwitt/poly.hpp"
#include "seifertwitt/seifert.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sw {

QMatrix random_algebra_element(const SeifertModule& m, Rng& rng);

// Norton's test. When simple, f(element) has nullity deg f, `vector` spans
// V and `dual_vector` spans V under the transposed action.
struct SimplicityResult {
    bool simple = false;
    QMatrix submodule;  // proper nonzero submodule when not simple
    QMatrix element;
    QPoly factor;
    QMatrix vector, dual_vector;
};

// throws PreconditionError on the zero module, UnsupportedError when no
// certificate is found (End noncommutative, or the search budget ran out)
SimplicityResult is_simple(const SeifertModule& m, Rng& rng);
QMatrix find_simple_submodule(const SeifertModule& m, Rng& rng);
// bases of 0 = V_0 < V_1 < ... < V_s = V
std::vector<QMatrix> composition_series(const SeifertModule& m, Rng& rng);

struct Piece {
    SeifertForm form;
    bool certified = true;  // false: the module could not be certified simple
    std::string note;
};

struct AnisotropicDecomposition {
    std::uint64_t seed = 0;
    std::vector<Piece> pieces;
    std::vector<std::string> log;
};

AnisotropicDecomposition witt_reduce(const SeifertForm& f, std::uint64_t seed);

struct IsotypicGroup {
    SeifertModule representative;
    std::vector<std::size_t> members;  // indices into the decomposition
    std::vector<QMatrix> witnesses;    // representative -> member module
    std::vector<QMatrix> forms;        // pulled back onto the representative
};

// certified pieces only
std::vector<IsotypicGroup> isotypic_group(const AnisotropicDecomposition& d, Rng& rng);

}  // namespace sw
