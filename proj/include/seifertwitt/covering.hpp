#pragma once

#include "seifertwitt/seifert.hpp"
#include "seifertwitt/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sw {

// reduced word in z_1..z_mu; letter +i is z_i, -i is z_i^-1
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(const std::vector<int>& letters);
    static FreeWord generator(int i, int exponent = 1);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    FreeWord inverse() const;
    std::string to_string() const;  // "z1 z2^-1", identity "1"

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const FreeWord& a, const FreeWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;
};

FreeWord parse_word(const std::string& text);

class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(const Rat& c);  // NOLINT: scalars embed
    GroupRingElem(int c) : GroupRingElem(Rat(c)) {}  // NOLINT
    static GroupRingElem word(const FreeWord& w, const Rat& c = 1);
    static GroupRingElem z(int i) { return word(FreeWord::generator(i)); }

    const std::map<FreeWord, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const FreeWord& w, const Rat& c);
    Rat augmentation() const;
    GroupRingElem bar() const;  // g -> g^-1
    std::size_t max_length() const;

    GroupRingElem& operator+=(const GroupRingElem& o);
    GroupRingElem& operator-=(const GroupRingElem& o);
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator-(const GroupRingElem& a) { return GroupRingElem() - a; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<FreeWord, Rat> terms_;
};

using GroupRingMatrix = std::vector<std::vector<GroupRingElem>>;

struct FlkPresentation {
    int mu = 1;
    GroupRingMatrix sigma;
    Ring ring = Ring::Q;

    std::size_t size() const { return sigma.size(); }
    QMatrix augmentation() const;
};

// throws ValidationError when the augmentation is singular
void validate_presentation(const FlkPresentation& p);

FlkPresentation cover_presentation(const SeifertModule& v);
TruncSeries magnus_expand(const GroupRingElem& g, int mu, int degree);
SeriesMatrix magnus_expand(const GroupRingMatrix& m, int mu, int degree);

std::vector<std::vector<NCRationalSeries>> sigma_inverse_series(const SeifertModule& v);
SeriesMatrix sigma_inverse_truncated(const SeifertModule& v, int degree);

struct PairingValue {
    NCRationalSeries exact;
    TruncSeries truncated;
    int degree = 0;
};
using PairingMatrix = std::vector<std::vector<PairingValue>>;

PairingMatrix blanchfield_pairing(const SeifertForm& f, int degree);
TruncSeries series_involution(const TruncSeries& p);

// g_jk with magnus(g_jk) = P_jk - (-zeta) bar(P_kj) to the truncation degree,
// supported on words of length <= degree / 2
std::optional<GroupRingMatrix> symmetry_witness(const SeriesMatrix& p, int zeta, int mu, int degree);
SeriesMatrix truncations(const PairingMatrix& p);

struct Linearization {
    FlkPresentation presentation;         // I - sum sigma_i (1 - z_i)
    std::vector<QMatrix> coefficients;    // sigma_1 .. sigma_mu
    std::vector<std::string> moves;
};
Linearization linearize_presentation(const FlkPresentation& p);
bool is_linear(const FlkPresentation& p);
// coefficient matrices of a linear presentation with augmentation I
std::vector<QMatrix> linear_coefficients(const FlkPresentation& p);

SeifertModule seifert_from_flk(const FlkPresentation& linear);
// the block matrix with (a, b) block delta_ab - sigma_b (1 - z_b)
GroupRingMatrix block_presentation(const std::vector<QMatrix>& coefficients);

FlkPresentation change_coefficients(const FlkPresentation& p, Ring target);
SeifertModule change_coefficients(const SeifertModule& v, Ring target);

// Delta(t_1..t_mu) = det sigma(t) normalised up to units, and per degree d
// the number of monomials of degree <= d and the Q-dimension of the cokernel
// of the diagonal specialisation truncated there
struct CokernelDegree {
    int degree = 0;
    Int multiplicity = 0;
    Int dimension = 0;
};
struct CokernelData {
    std::map<std::vector<int>, Rat> delta;
    bool vanishes = false;  // delta is a unit
    std::vector<CokernelDegree> degrees;
    std::string delta_string() const;
    friend bool operator==(const CokernelData& a, const CokernelData& b) {
        if (a.delta != b.delta || a.degrees.size() != b.degrees.size()) return false;
        for (std::size_t i = 0; i < a.degrees.size(); ++i)
            if (a.degrees[i].degree != b.degrees[i].degree || a.degrees[i].multiplicity != b.degrees[i].multiplicity ||
                a.degrees[i].dimension != b.degrees[i].dimension)
                return false;
        return true;
    }
};
CokernelData cokernel_data(const FlkPresentation& p, int max_degree);

}  // namespace sw
