#pragma once

#include "seifertwitt/poly.hpp"
#include "seifertwitt/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

struct EndomorphismRing {
    SeifertModule module;
    std::vector<QMatrix> basis;
    // basis[i] * basis[j] = sum_k structure[i][j][k] basis[k]
    std::vector<std::vector<std::vector<Rat>>> structure;
    bool commutative = true;
    bool certified = true;  // module certified simple
    std::size_t dim() const { return basis.size(); }
};

// throws PreconditionError("not simple") when a proper submodule is found
EndomorphismRing endomorphism_ring(const SeifertModule& m, Rng& rng);

// Q(alpha) = Q[x]/(minpoly), alpha realised as `embedding` inside End(M).
// Elements are polynomials of degree < deg minpoly.
struct NumberField {
    QPoly minpoly;
    QMatrix embedding;
    std::optional<QPoly> involution;  // image of alpha
    int fixed_field_degree = 0;

    int degree() const { return minpoly.degree(); }
    QPoly reduce(const QPoly& p) const { return p % minpoly; }
    QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
    QPoly inv(const QPoly& a) const;  // throws SingularError on zero
    QPoly conj(const QPoly& a) const;
    bool trivial_involution() const { return fixed_field_degree == degree(); }
    QMatrix to_matrix(const QPoly& p) const { return reduce(p)(embedding); }
    std::optional<QPoly> from_matrix(const QMatrix& x) const;
};

struct NoncommutativeInfo {
    std::size_t dimension = 0;
    std::size_t center_dimension = 0;
    std::size_t fix_dimension = 0;  // 0 when no involution was supplied
    std::string row;
};

struct FieldOrAlgebra {
    std::optional<NumberField> field;
    std::optional<NoncommutativeInfo> noncommutative;
};

FieldOrAlgebra as_number_field(const EndomorphismRing& e);
// b, when given, is the form whose adjoint defines the involution
NoncommutativeInfo classify_noncommutative(const EndomorphismRing& e, const QMatrix* b);
std::string table_row(const NumberField& f);

// sets involution and fixed_field_degree from alpha -> b^-1 alpha^T b
NumberField involution_from_form(NumberField f, const SeifertForm& b);

struct HermitianForm {
    NumberField field;
    std::vector<std::vector<QPoly>> gram;
    std::size_t rank() const { return gram.size(); }
};

bool is_hermitian(const HermitianForm& h);

// forms are all on `rep`; gram(k, l) = zeta b^-1 alpha_l^T Phi alpha_k over the
// summand inclusions alpha_k
HermitianForm morita_transport(const NumberField& field, const SeifertModule& rep, int zeta, const QMatrix& b,
                               const std::vector<QMatrix>& forms);

}  // namespace sw
