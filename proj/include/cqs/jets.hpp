#ifndef CQS_JETS_HPP
#define CQS_JETS_HPP

#include <climits>
#include <string>
#include <vector>

#include "cqs/generators.hpp"
#include "cqs/scalar.hpp"

namespace cqs {

/// Polynomial in t over the Gaussian rationals, coefficient at index = degree.
/// Trailing zeros are allowed; jet_trim removes them.
using Jet = std::vector<GaussRat>;

/// Degree of the lowest nonzero coefficient; INT_MAX for the zero polynomial.
int jet_order(const Jet& p);

void jet_trim(Jet& p);

/// Product truncated at degree cap (inclusive).
Jet jet_mul(const Jet& a, const Jet& b, int cap);

/// Coefficient-wise equality up to degree cap (inclusive).
bool jet_equal_to(const Jet& a, const Jet& b, int cap);

/// "2*t^3 - 1/2*t + (1+1/2*i)*t^2"; "0" for zero. Parseable by parse_jet.
std::string jet_to_string(const Jet& p);

/// Terms joined by top-level +/-; each term is COEFF, COEFF*t^K, t^K, t or i.
/// COEFF is p, p/q, i, p*i, p/q*i or a parenthesized sum (p/q+r/s*i).
Jet parse_jet(const std::string& text);

GaussRat parse_gauss(const std::string& text);

/// One curve branch as an exact polynomial parametrization of the embedding
/// coordinates. Coefficients above order_cap are unknown (not zero); the
/// default marks the polynomial as exact at every order.
struct BranchParam {
    std::vector<Jet> coords;
    int order_cap = INT_MAX;
};

/// Branch cut through E_v (1-based) at chart position c != 0: coordinate j
/// is c^{m^j_{v+1}} t^{m^j_v}. Exact, so order_cap stays unbounded.
BranchParam branch_from_cut(const GeneratorTable& tab, int v, const GaussRat& c);

}  // namespace cqs

#endif  // CQS_JETS_HPP
