#pragma once

#include "seifertwitt/endo_field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sw {

struct Diagonalization {
    std::vector<QPoly> entries;
    std::vector<std::vector<QPoly>> congruence;  // P with P* H P diagonal
};
Diagonalization diagonalize(const HermitianForm& h);

QPoly element_minpoly(const NumberField& f, const QPoly& a);

// Fix(I) = Q(beta)
struct FixedField {
    QPoly beta;     // as a polynomial in alpha
    QPoly minpoly;  // of beta
};
FixedField fixed_field(const NumberField& f);
// a in Fix(I) written as a polynomial in beta
std::optional<QPoly> in_fixed_field(const NumberField& f, const FixedField& k, const QPoly& a);

struct Signature {
    std::string place;  // isolating interval of the real root
    int value = 0;
};
std::vector<Signature> signatures(const NumberField& f, const std::vector<QPoly>& diag);

struct DiscriminantClass {
    QPoly representative;  // in alpha
    std::string group;     // square-class | norm-class | symbolic
    bool decidable = false;
    bool trivial = false;
    std::string label;
};
DiscriminantClass discriminant_class(const NumberField& f, const std::vector<QPoly>& diag);

// p = 0 is the real place
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);
// primes dividing 2 and the numerators and denominators
std::vector<Int> relevant_primes(const std::vector<Rat>& values);

struct HasseWitt {
    std::vector<Int> nontrivial;  // places with c = -1, 0 for the real place
    bool matches_hyperbolic = false;
};
HasseWitt hasse_witt_over_Q(const std::vector<Rat>& entries);

bool norm_class_test_quadratic(const Rat& d, const Int& m);

struct InvariantReport {
    std::string algebra_kind;
    std::string minpoly;
    std::string involution;
    std::size_t rank = 0;
    int rank_mod2 = 0;
    std::vector<std::string> diagonal;
    std::vector<Signature> signatures;
    DiscriminantClass discriminant;
    std::optional<HasseWitt> hasse;
    std::string status = "complete";
    bool nontrivial = false;  // some defined invariant is nontrivial
    bool trivial = false;     // every invariant is defined and trivial
};

InvariantReport invariant_report(const HermitianForm& h);
InvariantReport unsupported_report(std::size_t rank, const std::string& kind, const std::string& reason);

std::string verdict(const std::vector<InvariantReport>& reports);

}  // namespace sw
