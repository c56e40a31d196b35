#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genps/rational.hpp"
#include "genps/root_system.hpp"

namespace genps::rep {

/// Default desk-scale cap on representation dimensions in the Freudenthal
/// and Klimyk oracles.
inline constexpr long kDefaultDimCap = 100000;

enum class GroupKind { Spin, Pin, SU, Sp };

std::string group_name(GroupKind g, int n);

/// An irreducible representation of one of the compact groups appearing as
/// (a factor of) K. Highest weights are epsilon-basis coordinates: length
/// floor(n/2) for Spin(n)/Pin(n), n for SU(n) (sum need not vanish), n for
/// Sp(n).
struct Irrep {
    GroupKind group = GroupKind::Spin;
    int n = 0;
    Vec highest_weight;
    /// Sign of the disconnected-component action, carried by Pin(2k+1)
    /// irreps and by Pin(2k) irreps with m_k = 0.
    std::optional<int> pin_epsilon;

    static Irrep spin(int n, Vec hw);
    static Irrep pin(int n, Vec hw, std::optional<int> epsilon = std::nullopt);
    static Irrep su(int n, Vec hw);
    static Irrep sp(int n, Vec hw);

    /// All epsilon coordinates in Z + 1/2 (the spinor / genuine class).
    bool genuine() const;
    std::string str() const;

    friend bool operator==(const Irrep& a, const Irrep& b) {
        return a.group == b.group && a.n == b.n && a.highest_weight == b.highest_weight &&
               a.pin_epsilon == b.pin_epsilon;
    }
    friend bool operator<(const Irrep& a, const Irrep& b);
};

/// Outer tensor product representation of a product of two compact groups.
struct ProductIrrep {
    Irrep first;
    Irrep second;
};

struct BranchingList {
    std::vector<std::pair<Irrep, long>> constituents;

    long total_dim() const;
};

/// Root system underlying the compact group (B/D for Spin-Pin, A for SU,
/// C for Sp), including the degenerate Spin(3) = B1 and Spin(4) = D2 cases.
roots::RootSystem group_root_system(GroupKind g, int n);

/// Throws std::invalid_argument unless the highest weight is dominant and
/// in a consistent integrality class for the group.
void validate(const Irrep& irrep);

/// Exact dimension by the Weyl product formula over the positive roots.
long weyl_dim(const Irrep& irrep);
long weyl_dim(const ProductIrrep& irrep);

/// The closed-form orthogonal dimension formula
///   Spin(2k+1):  prod_{i<j} ((x_i^2 - x_j^2)/(r_i^2 - r_j^2)) * prod_i x_i/r_i
///   Spin(2k)  :  prod_{i<j} ((x_i^2 - x_j^2)/(r_i^2 - r_j^2))
/// with x = xi + rho, rho_i = k-i+1/2 resp. k-i. Independent route used to
/// cross-check weyl_dim.
long spin_dim_closed_form(int n, const Vec& hw);

/// Full weight diagram with exact multiplicities (Freudenthal recursion).
/// Throws DomainError if weyl_dim exceeds the cap.
std::map<Vec, long, VecLess> freudenthal_multiplicities(const Irrep& irrep,
                                                        long dim_cap = kDefaultDimCap);

/// Exact tensor product decomposition by the Klimyk algorithm.
/// Requires matching groups; throws DomainError if dim(a)*dim(b) > cap.
BranchingList tensor_decompose(const Irrep& a, const Irrep& b, long dim_cap = kDefaultDimCap);

/// Iterated interlacing (Gelfand-Tsetlin) branching
/// Spin(n) -> Spin(n-1) -> ... -> Spin(3) of a genuine irrep. Returns the
/// multiset of odd integers j with Spin(3) constituents of highest weight
/// j/2, counting multiplicity; sum of (j_k + 1) equals the dimension.
std::vector<long> branch_to_spin3(const Irrep& irrep);

/// Restriction of an irreducible Pin(n) module to Spin(n) per the
/// classification: a single constituent except for Pin(2k) with m_k != 0,
/// which restricts to V_(m_1..m_k) + V_(m_1..-m_k).
BranchingList pin_restrict(const Irrep& pin_irrep);

}  // namespace genps::rep
