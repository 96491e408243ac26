#include "diffalg/rosenfeld.hpp"

#include <algorithm>
#include <functional>

#include "diffalg/detail/linalg.hpp"

namespace diffalg {

namespace {

void enumerate_derivops(int m, int budget, DerivOp& cur, int slot, std::vector<DerivOp>& out)
{
	if (slot == m) {
		out.push_back(cur);
		return;
	}
	for (int e = 0; e <= budget; ++e) {
		cur.exponents[slot] = e;
		enumerate_derivops(m, budget - e, cur, slot + 1, out);
	}
	cur.exponents[slot] = 0;
}

std::vector<DerivOp> derivops_up_to(int m, int max_order)
{
	std::vector<DerivOp> out;
	DerivOp cur = DerivOp::zero(m);
	if (m == 0) {
		out.push_back(cur);
		return out;
	}
	enumerate_derivops(m, std::max(0, max_order), cur, 0, out);
	return out;
}

} // namespace

std::vector<DeltaPair> delta_pairs(const AutoreducedSet& lambda)
{
	std::vector<DeltaPair> out;
	for (size_t i = 0; i < lambda.size(); ++i)
		for (size_t j = i + 1; j < lambda.size(); ++j) {
			const Indeterminate ui = lambda[i].leader();
			const Indeterminate uj = lambda[j].leader();
			if (ui.block != uj.block || ui.index != uj.index)
				continue;
			DerivOp top = derivop_max(ui.op, uj.op);
			Indeterminate u{ui.block, ui.index, top};
			out.push_back(DeltaPair{i, j, derivop_diff(top, ui.op), derivop_diff(top, uj.op), u});
		}
	return out;
}

DiffPoly delta_polynomial(const AutoreducedSet& lambda, const DeltaPair& pair)
{
	const DiffPoly& fi = lambda[pair.i];
	const DiffPoly& fj = lambda[pair.j];
	return fj.separant() * fi.apply_derivop(pair.xi) - fi.separant() * fj.apply_derivop(pair.eta);
}

std::vector<DiffPoly> lower_ideal_generators(const AutoreducedSet& lambda, const Indeterminate& u)
{
	std::vector<DiffPoly> gens;
	const int m = lambda.ambient()->m;
	for (size_t i = 0; i < lambda.size(); ++i) {
		const Indeterminate ui = lambda[i].leader();
		const int budget = u.op.order() - ui.op.order();
		if (budget < 0)
			continue;
		for (const DerivOp& kappa : derivops_up_to(m, budget)) {
			Indeterminate led{ui.block, ui.index, ui.op};
			for (int k = 0; k < m; ++k)
				led.op.exponents[k] += kappa.exponents[k];
			if (compare_indets(led, u) != Ordering::Less)
				continue;
			gens.push_back(lambda[i].apply_derivop(kappa));
		}
	}
	return gens;
}

TruncatedIdeal lower_ideal(const AutoreducedSet& lambda, const Indeterminate& u)
{
	std::vector<DiffPoly> gens = lower_ideal_generators(lambda, u);
	Truncation trunc = truncation_of(gens);
	return make_ideal(trunc, gens);
}

CoherenceResult is_coherent(const AutoreducedSet& lambda)
{
	CoherenceResult res;
	const std::vector<DeltaPair> pairs = delta_pairs(lambda);
	if (pairs.empty())
		return res; // vacuously coherent
	const DiffPoly h = lambda.h_product();
	for (const DeltaPair& pair : pairs) {
		DiffPoly dpoly = delta_polynomial(lambda, pair);
		std::vector<DiffPoly> gens = lower_ideal_generators(lambda, pair.u);
		std::vector<DiffPoly> all = gens;
		all.push_back(dpoly);
		all.push_back(h);
		Truncation trunc = truncation_of(all);
		TruncatedIdeal sat = saturate(make_ideal(trunc, gens), to_mpoly(h, trunc));
		const bool member = dpoly.is_zero() || ideal_member(dpoly, sat);
		res.checks.push_back(CoherencePairCheck{pair, std::move(dpoly), member});
		if (!member && !res.failing) {
			res.coherent = false;
			res.failing = res.checks.size() - 1;
		}
	}
	return res;
}

std::vector<DiffPoly> differential_generators(std::span<const DiffPoly> polys, int order_cap)
{
	std::vector<DiffPoly> out;
	if (polys.empty())
		return out;
	const int m = polys.front().ambient()->m;
	for (const DiffPoly& p : polys) {
		const int budget = std::max(0, order_cap - p.max_order());
		for (const DerivOp& kappa : derivops_up_to(m, budget))
			out.push_back(p.apply_derivop(kappa));
	}
	return out;
}

bool saturation_membership_bridge(const DiffPoly& f, const AutoreducedSet& lambda)
{
	if (lambda.empty())
		return f.is_zero();
	require_same_ambient(f.ambient(), lambda.ambient(), "saturation_membership_bridge");
	int order_cap = f.max_order();
	for (const DiffPoly& lam : lambda.elements())
		order_cap = std::max(order_cap, lam.max_order());
	std::vector<DiffPoly> gens = differential_generators(lambda.elements(), order_cap);
	const DiffPoly h = lambda.h_product();
	std::vector<DiffPoly> all = gens;
	all.push_back(f);
	all.push_back(h);
	Truncation trunc = truncation_of(all);
	TruncatedIdeal sat = saturate(make_ideal(trunc, gens), to_mpoly(h, trunc));
	return ideal_member(f, sat);
}

ReducedElementProbe reduced_element_probe(const AutoreducedSet& lambda, int degree_cap,
                                          int order_cap)
{
	ReducedElementProbe probe;
	probe.degree_cap = degree_cap;
	probe.order_cap = order_cap;
	if (lambda.empty())
		return probe;
	const AmbientPtr ambient = lambda.ambient();
	const int m = ambient->m;

	// leaders and their degree ceilings
	std::vector<Indeterminate> leaders;
	std::vector<int> lead_degree;
	for (const DiffPoly& lam : lambda.elements()) {
		leaders.push_back(lam.leader());
		lead_degree.push_back(lam.degree_in_leader());
	}

	// (block, index) pairs occurring in Lambda; reduced elements involving
	// fresh variables reduce to this case componentwise
	std::vector<std::pair<int, int>> spots;
	for (const DiffPoly& lam : lambda.elements())
		for (const Indeterminate& v : lam.indets()) {
			std::pair<int, int> s{v.block, v.index};
			if (std::find(spots.begin(), spots.end(), s) == spots.end())
				spots.push_back(s);
		}
	std::sort(spots.begin(), spots.end());

	// admissible indeterminates: order <= cap, not a proper derivative of
	// any leader
	std::vector<Indeterminate> reduced_vars;
	std::vector<int> max_exp; // per-variable degree ceiling (from leader degrees)
	for (const auto& [block, index] : spots)
		for (const DerivOp& op : derivops_up_to(m, order_cap)) {
			Indeterminate v{block, index, op};
			bool bad = false;
			for (const Indeterminate& led : leaders)
				if (is_proper_derivative(v, led)) {
					bad = true;
					break;
				}
			if (bad)
				continue;
			int ceiling = degree_cap;
			for (size_t k = 0; k < leaders.size(); ++k)
				if (v == leaders[k])
					ceiling = std::min(ceiling, lead_degree[k] - 1);
			if (ceiling <= 0)
				continue; // a degree-1 leader cannot occur in a reduced element
			reduced_vars.push_back(v);
			max_exp.push_back(ceiling);
		}

	// reduced monomials up to total degree degree_cap
	std::vector<Monomial> monos;
	{
		std::function<void(size_t, int, Monomial)> rec = [&](size_t slot, int budget,
		                                                     Monomial acc) {
			if (slot == reduced_vars.size()) {
				monos.push_back(acc);
				return;
			}
			const int top = std::min(budget, max_exp[slot]);
			for (int e = 0; e <= top; ++e)
				rec(slot + 1, budget - e, e == 0 ? acc : acc.times_indet(reduced_vars[slot], e));
		};
		rec(0, degree_cap, Monomial::one());
	}

	// saturated algebraic ideal (Lambda):H^inf in the probe truncation
	const DiffPoly h = lambda.h_product();
	std::vector<DiffPoly> all = lambda.elements();
	all.push_back(h);
	for (const Indeterminate& v : reduced_vars)
		all.push_back(DiffPoly::indet(ambient, v));
	Truncation trunc = truncation_of(all);
	TruncatedIdeal sat = saturate(make_ideal(trunc, lambda.elements()), to_mpoly(h, trunc));

	// kernel of the normal-form map on the reduced-monomial span
	std::vector<MPoly> nfs;
	nfs.reserve(monos.size());
	std::vector<Expvec> support;
	auto support_index = [&](const Expvec& e) -> int {
		for (size_t i = 0; i < support.size(); ++i)
			if (support[i] == e)
				return static_cast<int>(i);
		return -1;
	};
	for (const Monomial& mo : monos) {
		MPoly nf = normal_form_mod(to_mpoly(DiffPoly::monomial(ambient, mo, 1), trunc), sat);
		for (const auto& [mono, c] : nf.terms())
			if (support_index(mono) < 0)
				support.push_back(mono);
		nfs.push_back(std::move(nf));
	}
	detail::RatMatrix M(support.size(), std::vector<Rational>(monos.size(), Rational(0)));
	for (size_t j = 0; j < nfs.size(); ++j)
		for (const auto& [mono, c] : nfs[j].terms())
			M[support_index(mono)][j] = c;
	auto kernel = detail::nullspace(std::move(M), monos.size());
	if (!kernel.empty()) {
		DiffPoly witness = DiffPoly::zero(ambient);
		for (size_t j = 0; j < monos.size(); ++j)
			if (kernel.front()[j] != 0)
				witness = witness + DiffPoly::monomial(ambient, monos[j], kernel.front()[j]);
		probe.violation = true;
		probe.witness = std::move(witness);
	}
	return probe;
}

bool CharSetReport::refuted() const
{
	if (!autoreduced)
		return true;
	if (coherence && !coherence->coherent)
		return true;
	if (reduced_probe && reduced_probe->violation)
		return true;
	if (prime_probe && prime_probe->not_prime)
		return true;
	return false;
}

bool CharSetReport::no_violation() const
{
	return autoreduced && coherence && coherence->coherent && reduced_probe &&
	       !reduced_probe->violation && prime_probe && !prime_probe->not_prime;
}

CharSetReport charset_report(const std::vector<DiffPoly>& S, int degree_cap, int order_cap)
{
	if (degree_cap < 1 || order_cap < 0)
		throw value_error("charset_report: caps must satisfy D >= 1, O >= 0");
	CharSetReport report;
	report.degree_cap = degree_cap;
	report.order_cap = order_cap;
	AutoreducedCheck check = validate_autoreduced(S);
	if (!check.ok()) {
		report.autoreduced = false;
		report.autoreduced_violation = check.violation;
		return report;
	}
	const AutoreducedSet& lambda = *check.set;
	report.autoreduced = true;
	if (lambda.empty())
		return report;

	report.coherence = is_coherent(lambda);
	report.reduced_probe = reduced_element_probe(lambda, degree_cap, order_cap);

	const DiffPoly h = lambda.h_product();
	std::vector<DiffPoly> all = lambda.elements();
	all.push_back(h);
	Truncation trunc = truncation_of(all);
	TruncatedIdeal sat = saturate(make_ideal(trunc, lambda.elements()), to_mpoly(h, trunc));
	report.prime_probe = bounded_prime_probe(sat, degree_cap);
	report.truncation_used = trunc;
	return report;
}

IdealEqualityReport ideal_equal_charsets_report(const AutoreducedSet& a, const AutoreducedSet& b)
{
	require_same_ambient(a.ambient(), b.ambient(), "ideal_equal_charsets");
	IdealEqualityReport rep;
	const DiffPoly ha = a.h_product();
	const DiffPoly hb = b.h_product();
	std::vector<DiffPoly> all = a.elements();
	all.insert(all.end(), b.elements().begin(), b.elements().end());
	all.push_back(ha);
	all.push_back(hb);
	Truncation trunc = truncation_of(all);
	TruncatedIdeal sat_a = saturate(make_ideal(trunc, a.elements()), to_mpoly(ha, trunc));
	TruncatedIdeal sat_b = saturate(make_ideal(trunc, b.elements()), to_mpoly(hb, trunc));

	rep.a_subset_of_sat_b = true;
	for (const DiffPoly& f : a.elements())
		if (!ideal_member(f, sat_b)) {
			rep.a_subset_of_sat_b = false;
			break;
		}
	rep.b_subset_of_sat_a = true;
	for (const DiffPoly& g : b.elements())
		if (!ideal_member(g, sat_a)) {
			rep.b_subset_of_sat_a = false;
			break;
		}
	rep.h_a_outside_sat_b = !ideal_member(ha, sat_b);
	rep.h_b_outside_sat_a = !ideal_member(hb, sat_a);
	return rep;
}

bool ideal_equal_charsets(const AutoreducedSet& a, const AutoreducedSet& b)
{
	return ideal_equal_charsets_report(a, b).equal();
}

} // namespace diffalg
