#pragma once

#include "seifertwitt/matrix.hpp"
#include "seifertwitt/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

enum class Ring { Z, Q };

// Representation of the path algebra: an endomorphism s and a complete
// family of orthogonal idempotents e_1..e_mu.
struct SeifertModule {
    int mu = 1;
    QMatrix s;
    std::vector<QMatrix> proj;
    Ring ring = Ring::Q;

    std::size_t dim() const { return s.rows(); }
    bool operator==(const SeifertModule& o) const {
        return mu == o.mu && s == o.s && proj == o.proj && ring == o.ring;
    }
};

// phi(x)(y) = (phi x)^T y ; phi^T = zeta phi
struct SeifertForm {
    SeifertModule module;
    int zeta = 1;
    QMatrix phi;
};

struct Violation {
    std::string kind;
    std::string detail;
};

SeifertModule block_module(const QMatrix& s, const std::vector<std::size_t>& sizes, Ring ring = Ring::Q);
std::vector<std::size_t> block_sizes(const SeifertModule& m);  // empty if not coordinate blocks

std::optional<Violation> validate_module(const SeifertModule& m);
std::optional<Violation> validate_form(const SeifertForm& f);
std::optional<Violation> validate_morphism(const SeifertModule& src, const SeifertModule& dst, const QMatrix& f);

SeifertModule promote(const SeifertModule& m);  // Z -> Q

SeifertModule dual_module(const SeifertModule& m);
SeifertModule direct_sum(const SeifertModule& a, const SeifertModule& b);
SeifertForm direct_sum(const SeifertForm& a, const SeifertForm& b);
SeifertForm negate(const SeifertForm& f);
// the hyperbolic form on M + M*
SeifertForm hyperbolic(const SeifertModule& m, int zeta);

// canonical basis of the submodule generated by the columns
QMatrix spin(const SeifertModule& m, const QMatrix& vectors);
// spin for the transposed action (used for dual-side tests)
QMatrix spin_transposed(const SeifertModule& m, const QMatrix& vectors);
bool is_submodule(const SeifertModule& m, const QMatrix& basis);

// action on the given basis of an invariant subspace
SeifertModule restrict_module(const SeifertModule& m, const QMatrix& basis);

struct Subquotient {
    SeifertModule module;
    QMatrix section;     // ambient n x k
    QMatrix projection;  // k x n, defined on `big`
};
// big / small, both invariant with small inside big
Subquotient subquotient(const SeifertModule& m, const QMatrix& big, const QMatrix& small);
Subquotient quotient_module(const SeifertModule& m, const QMatrix& sub);

std::vector<QMatrix> hom_space(const SeifertModule& a, const SeifertModule& b);
std::optional<QMatrix> find_isomorphism(const SeifertModule& a, const SeifertModule& b, Rng& rng);

QMatrix orthogonal_complement(const SeifertForm& f, const QMatrix& sub);
// gram matrix of the form on the span of the columns
QMatrix restricted_gram(const QMatrix& phi, const QMatrix& basis);
// L isotropic submodule; returns the form on L^perp / L
SeifertForm induced_form_on_subquotient(const SeifertForm& f, const QMatrix& sub);
SeifertForm restrict_form(const SeifertForm& f, const QMatrix& basis);

// transport a form along an isomorphism t: a -> b
QMatrix pull_back_form(const QMatrix& phi_b, const QMatrix& t);

}  // namespace sw
