#include "seifertwitt/primitives.hpp"

#include "seifertwitt/linalg.hpp"

namespace sw {

namespace {

QMatrix stacked_kernel(const SeifertModule& v, const QMatrix& a) {
    std::size_t n = v.dim();
    QMatrix stack(0, n);
    for (const auto& p : v.proj) stack = vstack(stack, a * p);
    return canonical_basis(kernel(stack));
}

}  // namespace

TrivialSocle trivial_socle(const SeifertModule& v) {
    return {stacked_kernel(v, v.s), stacked_kernel(v, QMatrix::identity(v.dim()) - v.s)};
}

PrimitiveAnalysis max_primitive_submodule(const SeifertModule& v) {
    std::size_t n = v.dim();
    PrimitiveAnalysis out;
    QMatrix u(n, 0);
    for (int step = 1;; ++step) {
        Subquotient q = quotient_module(v, u);
        TrivialSocle soc = trivial_socle(q.module);
        if (soc.w0.cols() == 0 && soc.w1.cols() == 0) break;
        if (soc.w0.cols()) out.filtration.push_back({step, 0, soc.w0.cols()});
        if (soc.w1.cols()) out.filtration.push_back({step, 1, soc.w1.cols()});
        u = canonical_basis(hstack(hstack(u, q.section * soc.w0), q.section * soc.w1));
    }
    out.max_primitive = u;
    out.primitive = u.cols() == n;
    return out;
}

QMatrix min_coprimitive(const SeifertModule& v) {
    QMatrix dual_u = max_primitive_submodule(dual_module(v)).max_primitive;
    return canonical_basis(annihilator(dual_u, v.dim()));
}

bool is_primitive(const SeifertModule& v) { return max_primitive_submodule(v).primitive; }

PrimitiveAnalysis analyze_primitive(const SeifertModule& v) {
    PrimitiveAnalysis out = max_primitive_submodule(v);
    out.min_coprimitive = min_coprimitive(v);
    return out;
}

std::vector<QMatrix> hom_in_quotient(const SeifertModule& a, const SeifertModule& b) {
    QMatrix w = min_coprimitive(a);
    SeifertModule src = restrict_module(a, w);
    SeifertModule dst = quotient_module(b, max_primitive_submodule(b).max_primitive).module;
    return hom_space(src, dst);
}

}  // namespace sw
