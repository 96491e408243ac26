#pragma once

#include <optional>
#include <vector>

#include "diffalg/rosenfeld.hpp"

namespace diffalg {

/// sigma_g: relabels every indeterminate's block by left multiplication,
/// delta^xi x_{h,j} -> delta^xi x_{g*h,j}; coefficients are fixed.
DiffPoly sigma_apply(int g, const DiffPoly& f);
DiffPoly sigma_apply(const std::string& g, const DiffPoly& f);
Indeterminate sigma_apply(const GroupSpec& group, int g, const Indeterminate& u);

/// The sigma-bar expansion of a point: for base slots (a_1, ..., a_n)
/// produces the l*n tuple (sigma_{g_i}(a_j)) ordered block-major
/// (i = 1..l outer, j = 1..n inner).
std::vector<DiffPoly> bar_sigma_expand(const std::vector<DiffPoly>& base);

/// Symbolic variant: the tuple of order-zero indeterminates
/// (x_{g_i, j} : i, j) in the same order -- the relabeling map a
/// substitution into polynomials in the block variables uses.
std::vector<Indeterminate> bar_sigma_expand_symbolic(const AmbientPtr& ambient);

/// Per-element outcome of the invariance test: the four containment
/// conditions between [Lambda]:H^inf and its sigma_g image, decided in
/// derivative-enriched truncated saturations (exact for characteristic
/// sets).
struct InvarianceElementCheck {
	int g = 0;
	bool lambda_g_in_sat_lambda = false;
	bool sigma_h_outside_sat_lambda = false;
	bool lambda_in_sat_lambda_g = false;
	bool h_outside_sat_lambda_g = false;
	bool holds() const
	{
		return lambda_g_in_sat_lambda && sigma_h_outside_sat_lambda && lambda_in_sat_lambda_g &&
		       h_outside_sat_lambda_g;
	}
};

struct InvarianceReport {
	bool invariant = true;
	std::vector<InvarianceElementCheck> per_element; // non-identity elements, in group order
	int order_cap_used = 0;
};

/// Lambda is assumed to pass charset_report at the caller's caps (the
/// caller's responsibility, recorded by the caller); tests P = sigma_g(P)
/// for every non-identity g.
InvarianceReport g_invariance_check(const AutoreducedSet& lambda);

/// Diagonal construction: Lambda (mentioning only the identity block)
/// together with the linear relations x_{g_1,j} - x_{g_i,j} for i >= 2.
std::vector<DiffPoly> diagonal_ideal(const AutoreducedSet& lambda);

} // namespace diffalg
