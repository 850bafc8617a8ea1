#include "seifertwitt/sturm.hpp"

#include "seifertwitt/errors.hpp"

namespace sw {

std::string RootInterval::label() const {
    if (lo == hi) return "{" + to_string(lo) + "}";
    return "(" + to_string(lo) + ", " + to_string(hi) + "]";
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq;
    QPoly a = squarefree_part(p);
    if (a.degree() < 0) return seq;
    seq.push_back(a);
    QPoly b = a.derivative();
    while (!b.is_zero()) {
        seq.push_back(b);
        QPoly r = -(seq[seq.size() - 2] % b);
        b = r;
    }
    return seq;
}

namespace {

int variations(const std::vector<QPoly>& seq, const Rat& t) {
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q(t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Rat root_bound(const QPoly& p) {
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p[i] / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

Rat split_point(const QPoly& p, const Rat& lo, const Rat& hi) {
    for (long den = 2;; ++den)
        for (long num = 1; num < den; ++num) {
            Rat mid = lo + (hi - lo) * Rat(num, den);
            if (sgn(p(mid)) != 0) return mid;
        }
}

void isolate(const QPoly& p, const std::vector<QPoly>& seq, const Rat& lo, const Rat& hi,
             std::vector<RootInterval>& out) {
    int n = count_roots(seq, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = split_point(p, lo, hi);
    isolate(p, seq, lo, mid, out);
    isolate(p, seq, mid, hi, out);
}

}  // namespace

int count_roots(const std::vector<QPoly>& seq, const Rat& a, const Rat& b) {
    if (seq.empty()) return 0;
    return variations(seq, a) - variations(seq, b);
}

RealRootData real_root_data(const QPoly& p) {
    RealRootData out;
    if (p.degree() < 1) return out;
    QPoly sq = squarefree_part(p);
    auto seq = sturm_sequence(sq);
    Rat b = root_bound(sq);
    isolate(sq, seq, -b, b, out.intervals);
    out.count = static_cast<int>(out.intervals.size());
    return out;
}

RootInterval refine(const QPoly& p, RootInterval iv, const Rat& width) {
    QPoly sq = squarefree_part(p);
    auto seq = sturm_sequence(sq);
    while (iv.lo != iv.hi && iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sgn(sq(mid)) == 0) return {mid, mid};
        if (count_roots(seq, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

int sign_at_root(const QPoly& p, const RootInterval& start, const QPoly& q) {
    if (q.is_zero()) throw PreconditionError("sign of the zero polynomial");
    if (start.lo == start.hi) {
        int s = sgn(q(start.lo));
        if (s == 0) throw PreconditionError("polynomial vanishes at the root");
        return s;
    }
    QPoly sq = squarefree_part(p);
    auto pseq = sturm_sequence(sq);
    QPoly common = gcd(sq, q);
    if (common.degree() >= 1 && count_roots(sturm_sequence(common), start.lo, start.hi) > 0)
        throw PreconditionError("polynomial vanishes at the root");
    auto qseq = sturm_sequence(q);
    RootInterval iv = start;
    for (;;) {
        if (count_roots(qseq, iv.lo, iv.hi) == 0 && sgn(q(iv.hi)) != 0) return sgn(q(iv.hi));
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sgn(sq(mid)) == 0) return sgn(q(mid));
        if (count_roots(pseq, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

}  // namespace sw
