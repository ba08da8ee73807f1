#ifndef CQS_GENERATORS_HPP
#define CQS_GENERATORS_HPP

#include <string>
#include <vector>

#include "cqs/resolution.hpp"

namespace cqs {

/// Integer vector (m_0,...,m_{s+1}) with m_{v-1} - k_v m_v + m_{v+1} = 0
/// for 1 <= v <= s: the vanishing orders of an invariant monomial along
/// S~, E_1..E_s, S~'. The monomial is z1^{m_{s+1}} z2^{m_0}.
using MultiplicitySystem = std::vector<Int>;

/// Fills m[w+2..s+1] from the known pair (m[w], m[w+1]) via the recursion.
/// Throws InvalidInput if an interior entry drops below 1 or the end below 0.
void complete_right(const ResolutionGraph& g, MultiplicitySystem& m, int w);

/// Fills m[w-1..0] from the known pair (m[w], m[w+1]).
void complete_left(const ResolutionGraph& g, MultiplicitySystem& m, int w);

/// The unique multiplicity system with m_u = 1 and m_{u-1} = left_of_u.
MultiplicitySystem system_through(const ResolutionGraph& g, int u, const Int& left_of_u);

/// The ordered table of multiplicity systems of the minimal invariant-
/// monomial generators g_0..g_{t+1}, rows sorted by m_0 ascending.
struct GeneratorTable {
    ResolutionGraph graph;
    std::vector<MultiplicitySystem> rows;

    int t() const { return static_cast<int>(rows.size()) - 2; }
};

GeneratorTable generator_table(const CyclicType& t);

/// Number of generator rows with m_u = 1; asserted equal to k_u - val_u + 1.
int dim_count(const GeneratorTable& tab, int u);

/// Reads [d_1..d_t] off the zigzag (d_j = 1 + number of 1-entries of row j
/// among vertices 1..s) and asserts it equals hj_expand(n, n-q).
HJExpansion dual_expansion_from_zigzag(const GeneratorTable& tab);

/// Componentwise identity m^{j-1} - d_j m^j + m^{j+1} = 0 for 1 <= j <= t;
/// at exponent level this is the binomial relation g_{j-1} g_{j+1} = g_j^{d_j}.
bool dual_recursion_check(const GeneratorTable& tab);

/// Exponent-level check of g_{j-1} g_{k+1} =
/// g_j^{d_j-1} (prod_{j<l<k} g_l^{d_l-2}) g_k^{d_k-1} for 1 <= j < k <= t;
/// for j = k the dual recursion g_{j-1} g_{j+1} = g_j^{d_j} is used.
bool equation_exponent_check(const GeneratorTable& tab, int j, int k);

/// Exponent-level check of x y^{n-q} = z^n: m^{t+1} + (n-q) m^0 = n m^1.
bool xy_identity_check(const GeneratorTable& tab);

/// "z1^15", "z1^4*z2", "1", ...
std::string monomial_name(const GeneratorTable& tab, int j);

/// Fixed-width text table: monomial, m_0, left
/// arrow, vertex multiplicities (1-entries bracketed), right arrow, m_{s+1}.
std::string render_table(const GeneratorTable& tab);

/// Staircase dot diagram of the dual expansion (row j carries d_j - 1 dots,
/// consecutive rows overlap in one column), followed by the full table.
std::string riemenschneider_diagram(const GeneratorTable& tab);

}  // namespace cqs

#endif  // CQS_GENERATORS_HPP
