#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genps/rational.hpp"
#include "genps/root_system.hpp"

namespace genps::smallk {

enum class Label { S, SP1, SP2, C8, C8Star, C16, C2P1, C2P2 };

std::string label_str(Label l);
Label parse_label(const std::string& s);

/// A classified genuine small K type with the dominant t_alpha weight data
/// attached: 1/2 on long roots always; on short roots the label-dependent
/// value (0 meaning t_alpha acts trivially).
struct SmallKType {
    roots::LieType lie_type;
    Label label;
    std::string k_group;
    long dim = 0;
    Rat t_long = Rat(1, 2);
    std::optional<Rat> t_short;  // absent for simply laced types
    std::optional<std::string> note;

    std::string str() const { return lie_type.name() + "/" + label_str(label); }
};

/// The complete list of genuine small K types for a split simple cover.
/// Rejects C_n (one-dimensional small K types, outside this engine's scope)
/// and ranks outside the classification table (A_n needs n >= 2, B_n and
/// D_n need n >= 3).
std::vector<SmallKType> classify(const roots::LieType& type);

enum class CoverKind { MetalinearGL, PinPin };

/// Small K types of the metalinear group GL(n,R)~ (K = Pin(n), type s) and
/// of Pin(n,n)~ (K = Pin(n) x Pin(n), types s.p1 and s.p2), n >= 3.
std::vector<SmallKType> classify_cover(CoverKind kind, int n);

/// The unique dominant t_alpha weight of tau under the rank-one compact
/// group of phi: 1/2 for long phi, the tabulated short value otherwise.
Rat dominant_t_weight(const SmallKType& tau, const roots::Root& phi);

/// Finds the entry with the given label among classify(type).
SmallKType find_type(const roots::LieType& type, Label label);

}  // namespace genps::smallk
