#include "genps/small_k.hpp"

#include <algorithm>

namespace genps::smallk {

using roots::LieType;
using roots::Series;

std::string label_str(Label l) {
    switch (l) {
        case Label::S: return "s";
        case Label::SP1: return "s*p1";
        case Label::SP2: return "s*p2";
        case Label::C8: return "C8";
        case Label::C8Star: return "C8*";
        case Label::C16: return "C16";
        case Label::C2P1: return "C2*p1";
        case Label::C2P2: return "C2*p2";
    }
    return "?";
}

Label parse_label(const std::string& s) {
    std::string t;
    for (char c : s) {
        if (c == '.' || c == 'o') c = '*';  // accept s.p1 / sop1 spellings
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (t == "s") return Label::S;
    if (t == "s*p1" || t == "sp1") return Label::SP1;
    if (t == "s*p2" || t == "sp2") return Label::SP2;
    if (t == "c8") return Label::C8;
    if (t == "c8*" || t == "c8star") return Label::C8Star;
    if (t == "c16") return Label::C16;
    if (t == "c2*p1" || t == "c2p1") return Label::C2P1;
    if (t == "c2*p2" || t == "c2p2") return Label::C2P2;
    throw std::invalid_argument("unknown small K type label '" + s + "'");
}

namespace {

long two_pow(int e) { return 1L << e; }

// dim of the spin representation of Spin(m) (m odd) or of either half-spin
// representation (m even): 2^((m-1)/2) resp. 2^(m/2 - 1).
long spin_rep_dim(int m) { return m % 2 == 1 ? two_pow((m - 1) / 2) : two_pow(m / 2 - 1); }

// dim of the pin representation(s) of Pin(m): 2^floor(m/2).
long pin_rep_dim(int m) { return two_pow(m / 2); }

SmallKType make(LieType t, Label l, std::string k_group, long dim, std::optional<Rat> t_short,
                std::optional<std::string> note = std::nullopt) {
    SmallKType out{t, l, std::move(k_group), dim, Rat(1, 2), std::move(t_short), std::move(note)};
    return out;
}

}  // namespace

std::vector<SmallKType> classify(const LieType& type) {
    const int n = type.rank;
    switch (type.series) {
        case Series::C:
            throw DomainError("type C_n: the genuine small K types are 1 dimensional and handled "
                              "by the one-dimensional-K-type theory, outside this engine's scope");
        case Series::A: {
            if (n < 2) throw DomainError("type A_n classification requires n >= 2");
            // K = Spin(n+1); Clifford constraint: dim = 2^(n/2) or 2^((n-1)/2)
            return {make(type, Label::S, "Spin(" + std::to_string(n + 1) + ")", spin_rep_dim(n + 1),
                         std::nullopt)};
        }
        case Series::B: {
            if (n < 3) throw DomainError("type B_n classification requires n >= 3");
            std::string k =
                "Spin(" + std::to_string(n + 1) + ")xSpin(" + std::to_string(n) + ")";
            std::vector<SmallKType> out;
            if (n % 2 == 1) out.push_back(make(type, Label::SP1, k, spin_rep_dim(n + 1), Rat(1)));
            out.push_back(make(type, Label::SP2, k, spin_rep_dim(n), Rat(0)));
            return out;
        }
        case Series::D: {
            if (n < 3) throw DomainError("type D_n classification requires n >= 3");
            std::string k = "Spin(" + std::to_string(n) + ")xSpin(" + std::to_string(n) + ")";
            std::optional<std::string> note;
            if (n == 3) note = "A3=D3 alias";
            return {make(type, Label::SP1, k, spin_rep_dim(n), std::nullopt, note),
                    make(type, Label::SP2, k, spin_rep_dim(n), std::nullopt, note)};
        }
        case Series::E: {
            if (n == 6) return {make(type, Label::C8, "Sp(4)", 8, std::nullopt)};
            if (n == 7)
                return {make(type, Label::C8, "SU(8)", 8, std::nullopt),
                        make(type, Label::C8Star, "SU(8)", 8, std::nullopt)};
            return {make(type, Label::C16, "Spin(16)", 16, std::nullopt)};
        }
        case Series::F:
            return {make(type, Label::C2P2, "Sp(3)xSU(2)", 2, Rat(0))};
        case Series::G:
            return {make(type, Label::C2P1, "SU(2)xSU(2)", 2, Rat(1, 2)),
                    make(type, Label::C2P2, "SU(2)xSU(2)", 2, Rat(3, 2))};
    }
    throw std::logic_error("unreachable");
}

std::vector<SmallKType> classify_cover(CoverKind kind, int n) {
    if (n < 3) throw DomainError("cover classification requires n >= 3");
    // Cover types reuse the A_(n-1) tag for the underlying split data.
    LieType tag(Series::A, n - 1);
    if (kind == CoverKind::MetalinearGL) {
        return {make(tag, Label::S, "Pin(" + std::to_string(n) + ")", pin_rep_dim(n),
                     std::nullopt, "GL(" + std::to_string(n) + ",R)~")};
    }
    std::string k = "Pin(" + std::to_string(n) + ")xPin(" + std::to_string(n) + ")";
    std::string note = "Pin(" + std::to_string(n) + "," + std::to_string(n) + ")~";
    return {make(tag, Label::SP1, k, pin_rep_dim(n), std::nullopt, note),
            make(tag, Label::SP2, k, pin_rep_dim(n), std::nullopt, note)};
}

Rat dominant_t_weight(const SmallKType& tau, const roots::Root& phi) {
    if (phi.length_class == roots::LengthClass::Long) return tau.t_long;
    if (!tau.t_short)
        throw std::invalid_argument(tau.str() + ": no short roots in this root system");
    return *tau.t_short;
}

SmallKType find_type(const LieType& type, Label label) {
    for (auto& t : classify(type))
        if (t.label == label) return t;
    throw DomainError("small K type " + label_str(label) + " does not exist for " + type.name());
}

}  // namespace genps::smallk
