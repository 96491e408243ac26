#include "diffalg/gaction.hpp"

#include <algorithm>

namespace diffalg {

Indeterminate sigma_apply(const GroupSpec& group, int g, const Indeterminate& u)
{
	return Indeterminate{group.compose(g, u.block), u.index, u.op};
}

DiffPoly sigma_apply(int g, const DiffPoly& f)
{
	const AmbientPtr& ambient = f.ambient();
	if (g < 0 || g >= ambient->blocks())
		throw value_error("sigma_apply: unknown group element");
	DiffPoly out = DiffPoly::zero(ambient);
	for (const auto& [mono, c] : f.terms()) {
		Monomial image = Monomial::one();
		for (const auto& [u, e] : mono.factors())
			image = image.times_indet(sigma_apply(ambient->group, g, u), e);
		out = out + DiffPoly::monomial(ambient, image, c);
	}
	return out;
}

DiffPoly sigma_apply(const std::string& g, const DiffPoly& f)
{
	const int idx = f.ambient()->group.index_of(g);
	if (idx < 0)
		throw value_error("sigma_apply: unknown group element '" + g + "'");
	return sigma_apply(idx, f);
}

std::vector<DiffPoly> bar_sigma_expand(const std::vector<DiffPoly>& base)
{
	if (base.empty())
		throw value_error("bar_sigma_expand: empty point");
	const AmbientPtr& ambient = base.front().ambient();
	if (static_cast<int>(base.size()) != ambient->n)
		throw value_error("bar_sigma_expand: expected one slot per base variable");
	for (const auto& p : base)
		require_same_ambient(ambient, p.ambient(), "bar_sigma_expand");
	std::vector<DiffPoly> out;
	out.reserve(static_cast<size_t>(ambient->blocks()) * base.size());
	for (int i = 0; i < ambient->blocks(); ++i)
		for (const auto& a : base)
			out.push_back(sigma_apply(i, a));
	return out;
}

std::vector<Indeterminate> bar_sigma_expand_symbolic(const AmbientPtr& ambient)
{
	std::vector<Indeterminate> out;
	out.reserve(static_cast<size_t>(ambient->blocks()) * ambient->n);
	for (int i = 0; i < ambient->blocks(); ++i)
		for (int j = 0; j < ambient->n; ++j)
			out.push_back(Indeterminate{i, j, DerivOp::zero(ambient->m)});
	return out;
}

namespace {

// Saturated, derivative-enriched stand-in for [gens]:h^inf inside the
// given truncation window.
TruncatedIdeal enriched_saturation(const std::vector<DiffPoly>& gens, const DiffPoly& h,
                                   const Truncation& window, int order_cap)
{
	std::vector<DiffPoly> enriched = differential_generators(gens, order_cap);
	std::vector<DiffPoly> all = enriched;
	all.push_back(h);
	Truncation trunc = truncation_union(window, truncation_of(all));
	return saturate(make_ideal(trunc, enriched), to_mpoly(h, trunc));
}

} // namespace

InvarianceReport g_invariance_check(const AutoreducedSet& lambda)
{
	InvarianceReport report;
	if (lambda.empty())
		return report;
	const AmbientPtr ambient = lambda.ambient();
	const GroupSpec& group = ambient->group;
	const DiffPoly h = lambda.h_product();

	// joint truncation across all sigma images
	std::vector<DiffPoly> everything = lambda.elements();
	everything.push_back(h);
	for (int g = 1; g < group.size(); ++g) {
		for (const DiffPoly& lam : lambda.elements())
			everything.push_back(sigma_apply(g, lam));
		everything.push_back(sigma_apply(g, h));
	}
	Truncation window = truncation_of(everything);
	int order_cap = 0;
	for (const DiffPoly& p : everything)
		order_cap = std::max(order_cap, p.max_order());
	report.order_cap_used = order_cap;

	TruncatedIdeal sat_lambda = enriched_saturation(lambda.elements(), h, window, order_cap);

	for (int g = 1; g < group.size(); ++g) {
		InvarianceElementCheck check;
		check.g = g;
		std::vector<DiffPoly> lambda_g;
		lambda_g.reserve(lambda.size());
		for (const DiffPoly& lam : lambda.elements())
			lambda_g.push_back(sigma_apply(g, lam));
		const DiffPoly h_g = sigma_apply(g, h);

		check.lambda_g_in_sat_lambda = true;
		for (const DiffPoly& p : lambda_g)
			if (!ideal_member(p, sat_lambda)) {
				check.lambda_g_in_sat_lambda = false;
				break;
			}
		check.sigma_h_outside_sat_lambda = !ideal_member(h_g, sat_lambda);

		TruncatedIdeal sat_lambda_g = enriched_saturation(lambda_g, h_g, window, order_cap);
		check.lambda_in_sat_lambda_g = true;
		for (const DiffPoly& p : lambda.elements())
			if (!ideal_member(p, sat_lambda_g)) {
				check.lambda_in_sat_lambda_g = false;
				break;
			}
		check.h_outside_sat_lambda_g = !ideal_member(h, sat_lambda_g);

		if (!check.holds())
			report.invariant = false;
		report.per_element.push_back(check);
	}
	return report;
}

std::vector<DiffPoly> diagonal_ideal(const AutoreducedSet& lambda)
{
	if (lambda.empty())
		throw value_error("diagonal_ideal: empty set");
	const AmbientPtr ambient = lambda.ambient();
	for (const DiffPoly& lam : lambda.elements())
		for (const Indeterminate& u : lam.indets())
			if (u.block != 0)
				throw value_error("diagonal_ideal: input mentions a block other than the "
				                  "identity block");
	std::vector<DiffPoly> out = lambda.elements();
	for (int i = 1; i < ambient->blocks(); ++i)
		for (int j = 0; j < ambient->n; ++j) {
			Indeterminate first{0, j, DerivOp::zero(ambient->m)};
			Indeterminate other{i, j, DerivOp::zero(ambient->m)};
			out.push_back(DiffPoly::indet(ambient, first) - DiffPoly::indet(ambient, other));
		}
	return out;
}

} // namespace diffalg
