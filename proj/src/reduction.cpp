#include "diffalg/reduction.hpp"

#include <algorithm>
#include <map>

namespace diffalg {

namespace {

std::string describe_rank(const DiffPoly& p)
{
	Rank r = p.rank();
	return "(leader block " + std::to_string(r.leader.block) + ", index " +
	       std::to_string(r.leader.index) + ", degree " + std::to_string(r.degree) + ")";
}

// Exact multivariate division; empty when b does not divide a.
std::optional<DiffPoly> try_exact_divide(const DiffPoly& a, const DiffPoly& b)
{
	if (b.is_zero())
		return std::nullopt;
	if (b.is_constant())
		return a.scaled(Rational(1) / b.constant_value());
	DiffPoly rem = a;
	DiffPoly quot = DiffPoly::zero(a.ambient());
	while (!rem.is_zero()) {
		const auto& [ma, ca] = *rem.terms().begin();
		const auto& [mb, cb] = *b.terms().begin();
		if (!ma.divisible_by(mb))
			return std::nullopt;
		DiffPoly t = DiffPoly::monomial(a.ambient(), ma.divided_by(mb), ca / cb);
		quot = quot + t;
		rem = rem - t * b;
	}
	return quot;
}

} // namespace

DiffPoly AutoreducedSet::h_product() const
{
	if (elems_.empty())
		return DiffPoly::constant(ambient_, 1);
	return diffalg::h_product(elems_);
}

AutoreducedCheck validate_autoreduced(const std::vector<DiffPoly>& S)
{
	AutoreducedCheck out;
	if (S.empty()) {
		out = AutoreducedCheck::valid(nullptr, {});
		return out;
	}
	const AmbientPtr ambient = S.front().ambient();
	for (size_t i = 0; i < S.size(); ++i) {
		if (!same_ambient(ambient, S[i].ambient()))
			throw ambient_error("validate_autoreduced: mixed ambients");
		if (S[i].is_constant()) {
			out.violation = "element " + std::to_string(i) + " is constant";
			out.offender_a = static_cast<int>(i);
			return out;
		}
	}
	std::vector<size_t> order(S.size());
	for (size_t i = 0; i < order.size(); ++i)
		order[i] = i;
	std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
		return rank_less(S[a].rank(), S[b].rank());
	});
	for (size_t k = 0; k + 1 < order.size(); ++k) {
		const DiffPoly& a = S[order[k]];
		const DiffPoly& b = S[order[k + 1]];
		if (a.leader() == b.leader()) {
			out.violation = "elements " + std::to_string(order[k]) + " and " +
			                std::to_string(order[k + 1]) + " share the leader";
			out.offender_a = static_cast<int>(order[k]);
			out.offender_b = static_cast<int>(order[k + 1]);
			return out;
		}
	}
	for (size_t a = 0; a < order.size(); ++a)
		for (size_t b = 0; b < order.size(); ++b) {
			if (a == b)
				continue;
			if (!is_reduced(S[order[a]], S[order[b]])) {
				out.violation = "element " + std::to_string(order[a]) + " " +
				                describe_rank(S[order[a]]) + " is not reduced w.r.t. element " +
				                std::to_string(order[b]) + " " + describe_rank(S[order[b]]);
				out.offender_a = static_cast<int>(order[a]);
				out.offender_b = static_cast<int>(order[b]);
				return out;
			}
		}
	std::vector<DiffPoly> sorted;
	sorted.reserve(S.size());
	for (size_t i : order)
		sorted.push_back(S[i]);
	return AutoreducedCheck::valid(ambient, std::move(sorted));
}

AutoreducedSet require_autoreduced(const std::vector<DiffPoly>& S)
{
	AutoreducedCheck c = validate_autoreduced(S);
	if (!c.ok())
		throw value_error("not an autoreduced set: " + c.violation);
	return *std::move(c.set);
}

namespace {

struct CofKey {
	DerivOp kappa;
	size_t index;
	bool operator<(const CofKey& o) const
	{
		if (index != o.index)
			return index < o.index;
		return kappa.exponents < o.kappa.exponents;
	}
};

struct CofEntry {
	DiffPoly coeff;
	int r_at;
};

// Mutable state of the division loop, maintaining the exact identity
//   H^r * f = g + sum cofactors
// with cofactor coefficients stored lazily (scaled by H^{r - r_at} on use).
struct DivisionState {
	const DiffPoly& H;
	int r = 0;
	DiffPoly g;
	std::map<CofKey, CofEntry> cof;
	long steps = 0;

	DivisionState(const DiffPoly& h, DiffPoly start) : H(h), g(std::move(start)) {}

	void guard()
	{
		if (++steps > 200000 || r > 512)
			throw value_error("diff_remainder: iteration fuse tripped (H^r conversion "
			                  "did not converge)");
	}

	void multiply_by_h()
	{
		g = g * H;
		r += 1;
	}

	void add_cofactor(const DiffPoly& q, const DerivOp& kappa, size_t idx)
	{
		CofKey key{kappa, idx};
		auto it = cof.find(key);
		if (it == cof.end()) {
			cof.emplace(key, CofEntry{q, r});
			return;
		}
		CofEntry& e = it->second;
		if (e.r_at < r)
			e.coeff = e.coeff * H.pow(r - e.r_at);
		e.coeff = e.coeff + q;
		e.r_at = r;
	}

	std::vector<Cofactor> materialize()
	{
		std::vector<Cofactor> out;
		for (auto& [key, entry] : cof) {
			DiffPoly c = entry.r_at < r ? entry.coeff * H.pow(r - entry.r_at) : entry.coeff;
			if (!c.is_zero())
				out.push_back(Cofactor{std::move(c), key.kappa, key.index});
		}
		return out;
	}
};

} // namespace

ReductionCertificate diff_remainder(const DiffPoly& f, const AutoreducedSet& lambda)
{
	if (!lambda.empty())
		require_same_ambient(f.ambient(), lambda.ambient(), "diff_remainder");
	if (lambda.empty() || f.is_constant())
		return ReductionCertificate{0, f, {}};

	const auto& elems = lambda.elements();
	const DiffPoly H = lambda.h_product();
	DivisionState st(H, f);

	// Phase 1: partial reduction. Attack the highest indeterminate of g
	// that is a proper derivative of some leader; among matching elements
	// take the one of highest rank. The divisor delta^kappa(lambda_i) is
	// linear in the offender with leading coefficient s_{lambda_i}, so one
	// H-multiplication (when the top coefficient is not exactly divisible)
	// always unblocks the step.
	for (;;) {
		st.guard();
		std::optional<Indeterminate> offender;
		for (const Indeterminate& v : st.g.indets()) {
			bool offends = false;
			for (const DiffPoly& lam : elems)
				if (is_proper_derivative(v, lam.leader())) {
					offends = true;
					break;
				}
			if (offends && (!offender || indet_less(*offender, v)))
				offender = v;
		}
		if (!offender)
			break;
		const Indeterminate v = *offender;
		size_t pick = elems.size();
		for (size_t i = 0; i < elems.size(); ++i)
			if (is_proper_derivative(v, elems[i].leader()))
				pick = i; // elements are rank-sorted, the last match is highest
		const DiffPoly& lam = elems[pick];
		const DerivOp kappa = derivop_diff(v.op, lam.leader().op);
		const DiffPoly divisor = lam.apply_derivop(kappa);
		const DiffPoly sep = lam.separant();
		while (st.g.degree_in(v) > 0) {
			st.guard();
			const int e = st.g.degree_in(v);
			const DiffPoly a = st.g.univariate_in(v).at(e);
			auto q = try_exact_divide(a, sep);
			if (!q) {
				st.multiply_by_h(); // s | a*H afterwards, since s | H
				continue;
			}
			DiffPoly qv = *q * DiffPoly::monomial(f.ambient(), Monomial::indet(v, e - 1), 1);
			st.g = st.g - qv * divisor;
			st.add_cofactor(qv, kappa, pick);
		}
	}

	// Phase 2: degree reduction, highest offending leader first. Top-term
	// elimination with exact division where possible; otherwise one full
	// pseudo-division round whose i^E multiplier is absorbed into a single
	// H^E multiplication.
	for (;;) {
		st.guard();
		size_t pick = elems.size();
		for (size_t i = 0; i < elems.size(); ++i)
			if (st.g.degree_in(elems[i].leader()) >= elems[i].degree_in_leader())
				pick = i; // rank-sorted: keep the highest
		if (pick == elems.size())
			break;
		const DiffPoly& lam = elems[pick];
		const Indeterminate u = lam.leader();
		const int d = lam.degree_in_leader();
		const DiffPoly init = lam.initial();
		const int e = st.g.degree_in(u);
		const DiffPoly a = st.g.univariate_in(u).at(e);
		if (auto q = try_exact_divide(a, init)) {
			DiffPoly qv = *q * DiffPoly::monomial(f.ambient(), Monomial::indet(u, e - d), 1);
			st.g = st.g - qv * lam;
			st.add_cofactor(qv, DerivOp::zero(f.ambient()->m), pick);
			continue;
		}
		// classical pseudo-division: init^E * g = Q * lam + R with deg_u(R) < d
		const int E = e - d + 1;
		DiffPoly rem = st.g;
		DiffPoly quot = DiffPoly::zero(f.ambient());
		for (int t = 0; t < E; ++t) {
			const int et = rem.degree_in(u);
			if (et < d) {
				rem = rem * init;
				quot = quot * init;
				continue;
			}
			const DiffPoly at = rem.univariate_in(u).at(et);
			DiffPoly shift = at * DiffPoly::monomial(f.ambient(), Monomial::indet(u, et - d), 1);
			rem = rem * init - shift * lam;
			quot = quot * init + shift;
		}
		// multiply the identity by H^E and absorb (H/init)^E:
		//   H^E g = w^E (init^E g) = (w^E Q) lam + w^E R
		DiffPoly w = *try_exact_divide(H, init); // init divides H by construction
		DiffPoly wpow = w.pow(E);
		st.r += E;
		st.g = wpow * rem;
		st.add_cofactor(wpow * quot, DerivOp::zero(f.ambient()->m), pick);
	}

	return ReductionCertificate{st.r, st.g, st.materialize()};
}

bool verify_certificate(const DiffPoly& f, const AutoreducedSet& lambda,
                        const ReductionCertificate& cert)
{
	DiffPoly lhs = lambda.h_product().pow(cert.exponent) * f;
	DiffPoly rhs = cert.remainder;
	for (const Cofactor& c : cert.cofactors)
		rhs = rhs + c.coeff * lambda[c.index].apply_derivop(c.kappa);
	if (!(lhs == rhs))
		return false;
	return is_reduced_wrt_set(cert.remainder, lambda.elements());
}

bool membership_by_remainder(const DiffPoly& f, const AutoreducedSet& lambda)
{
	return diff_remainder(f, lambda).remainder.is_zero();
}

Ordering compare_autoreduced_sets(const AutoreducedSet& a, const AutoreducedSet& b)
{
	if (!a.empty() && !b.empty())
		require_same_ambient(a.ambient(), b.ambient(), "compare_autoreduced_sets");
	const size_t r = a.size(), s = b.size();
	for (size_t i = 0; i < std::min(r, s); ++i) {
		Ordering c = compare_ranks(a[i].rank(), b[i].rank());
		if (c != Ordering::Equal)
			return c;
	}
	// equal ranks along the common prefix: the longer set is LOWER
	if (r == s)
		return Ordering::Equal;
	return r > s ? Ordering::Less : Ordering::Greater;
}

AutoreducedSet minimal_autoreduced_subset(const std::vector<DiffPoly>& S)
{
	std::vector<DiffPoly> pool;
	for (const auto& p : S)
		if (!p.is_constant())
			pool.push_back(p);
	if (pool.empty())
		throw constant_error("minimal_autoreduced_subset: no nonconstant element");
	const AmbientPtr ambient = pool.front().ambient();
	std::vector<DiffPoly> chosen;
	while (!pool.empty()) {
		size_t best = 0;
		for (size_t i = 1; i < pool.size(); ++i)
			if (rank_less(pool[i].rank(), pool[best].rank()))
				best = i;
		DiffPoly picked = pool[best];
		std::vector<DiffPoly> next;
		for (const auto& p : pool)
			if (!(p == picked) && is_reduced(p, picked))
				next.push_back(p);
		chosen.push_back(std::move(picked));
		pool = std::move(next);
	}
	return require_autoreduced(chosen);
}

} // namespace diffalg
