#include "diffalg/ideal.hpp"

#include <algorithm>
#include <set>

#include "diffalg/detail/linalg.hpp"

namespace diffalg {

// ---------------------------------------------------------------- truncations

int Truncation::index_of(const Indeterminate& u) const
{
	for (size_t i = 0; i < vars.size(); ++i)
		if (vars[i] == u)
			return static_cast<int>(i);
	return -1;
}

Truncation make_truncation(std::vector<Indeterminate> vars)
{
	std::sort(vars.begin(), vars.end(),
	          [](const Indeterminate& a, const Indeterminate& b) { return indet_less(b, a); });
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	return Truncation{std::move(vars)};
}

Truncation truncation_of(std::span<const DiffPoly> polys)
{
	std::vector<Indeterminate> vs;
	for (const auto& p : polys)
		for (const auto& u : p.indets())
			vs.push_back(u);
	return make_truncation(std::move(vs));
}

Truncation truncation_union(const Truncation& a, const Truncation& b)
{
	std::vector<Indeterminate> vs = a.vars;
	vs.insert(vs.end(), b.vars.begin(), b.vars.end());
	return make_truncation(std::move(vs));
}

MPoly to_mpoly(const DiffPoly& f, const Truncation& trunc)
{
	const int nv = static_cast<int>(trunc.size());
	MPoly p(nv, MonoOrder::DegRevLex);
	for (const auto& [mono, c] : f.terms()) {
		Expvec e(nv, 0);
		for (const auto& [u, k] : mono.factors()) {
			const int idx = trunc.index_of(u);
			if (idx < 0)
				throw value_error("polynomial mentions a variable outside the truncation");
			e[idx] = k;
		}
		p.add_term(e, c);
	}
	return p;
}

DiffPoly from_mpoly(const MPoly& p, const Truncation& trunc, const AmbientPtr& ambient)
{
	DiffPoly out = DiffPoly::zero(ambient);
	for (const auto& [mono, c] : p.terms()) {
		Monomial m = Monomial::one();
		for (size_t k = 0; k < mono.size(); ++k)
			if (mono[k] > 0)
				m = m.times_indet(trunc.vars[k], mono[k]);
		out = out + DiffPoly::monomial(ambient, m, c);
	}
	return out;
}

// ----------------------------------------------------------------- buchberger

namespace {

struct BElem {
	MPoly poly;
	std::vector<MPoly> rep; // cofactors over the original generators
};

MPoly term_poly(int nv, MonoOrder ord, const Expvec& mono, const Rational& c)
{
	MPoly t(nv, ord);
	t.add_term(mono, c);
	return t;
}

// Leading-term division of f by the basis; returns the remainder and, when
// quot is given, the division cofactors. skip marks one basis index to
// leave out (used by tail reduction).
MPoly normal_form(const MPoly& f, const std::vector<BElem>& basis, std::vector<MPoly>* quot,
                  size_t skip = static_cast<size_t>(-1))
{
	const int nv = f.nvars();
	const MonoOrder ord = f.order();
	if (quot)
		quot->assign(basis.size(), MPoly(nv, ord));
	MPoly p = f;
	MPoly r(nv, ord);
	while (!p.is_zero()) {
		const Expvec lm = p.leading_monomial();
		const Rational lc = p.leading_coeff();
		bool reduced = false;
		for (size_t i = 0; i < basis.size(); ++i) {
			if (i == skip || basis[i].poly.is_zero())
				continue;
			const MPoly& b = basis[i].poly;
			if (!expvec_divides(b.leading_monomial(), lm))
				continue;
			const Rational c = lc / b.leading_coeff();
			const Expvec m = expvec_sub(lm, b.leading_monomial());
			p = p - b.times_term(m, c);
			if (quot)
				(*quot)[i].add_term(m, c);
			reduced = true;
			break;
		}
		if (!reduced) {
			r.add_term(lm, lc);
			p = p - term_poly(nv, ord, lm, lc);
		}
	}
	return r;
}

std::vector<MPoly> rep_linear(const std::vector<MPoly>& a, const std::vector<MPoly>& b,
                              const Rational& cb)
{
	std::vector<MPoly> r = a;
	for (size_t i = 0; i < r.size(); ++i)
		r[i] = r[i] + b[i].scaled(cb);
	return r;
}

struct PendingPair {
	Expvec lcm;
	size_t i, j;
};

struct PendingLess {
	MonoOrder ord;
	bool operator()(const PendingPair& a, const PendingPair& b) const
	{
		if (a.lcm != b.lcm)
			return expvec_greater(b.lcm, a.lcm, ord); // smaller lcm first
		if (a.i != b.i)
			return a.i < b.i;
		return a.j < b.j;
	}
};

// Buchberger with the product and chain criteria, tracking the transform
// over the original generators; output is the reduced monic basis.
void buchberger(const std::vector<MPoly>& gens, int nv, MonoOrder ord,
                std::vector<MPoly>& out_basis, std::vector<std::vector<MPoly>>& out_rows)
{
	const size_t ng = gens.size();
	std::vector<BElem> basis;
	for (size_t i = 0; i < ng; ++i) {
		if (gens[i].is_zero())
			continue;
		std::vector<MPoly> rep(ng, MPoly(nv, ord));
		rep[i] = MPoly::constant(nv, ord, 1);
		basis.push_back(BElem{gens[i], std::move(rep)});
	}

	std::set<PendingPair, PendingLess> pending(PendingLess{ord});
	std::set<std::pair<size_t, size_t>> treated;
	auto queue_pairs_with = [&](size_t j) {
		for (size_t i = 0; i < j; ++i)
			pending.insert(PendingPair{
			    expvec_lcm(basis[i].poly.leading_monomial(), basis[j].poly.leading_monomial()),
			    i, j});
	};
	for (size_t j = 1; j < basis.size(); ++j)
		queue_pairs_with(j);

	while (!pending.empty()) {
		PendingPair pr = *pending.begin();
		pending.erase(pending.begin());
		treated.insert({pr.i, pr.j});

		const MPoly& fi = basis[pr.i].poly;
		const MPoly& fj = basis[pr.j].poly;
		const Expvec& li = fi.leading_monomial();
		const Expvec& lj = fj.leading_monomial();
		// product criterion: coprime leading monomials
		{
			Expvec sum(li.size());
			for (size_t k = 0; k < li.size(); ++k)
				sum[k] = li[k] + lj[k];
			if (sum == pr.lcm)
				continue;
		}
		// chain criterion
		{
			bool skip = false;
			for (size_t k = 0; k < basis.size() && !skip; ++k) {
				if (k == pr.i || k == pr.j || basis[k].poly.is_zero())
					continue;
				if (!expvec_divides(basis[k].poly.leading_monomial(), pr.lcm))
					continue;
				auto p1 = std::minmax(pr.i, k);
				auto p2 = std::minmax(pr.j, k);
				if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
					skip = true;
			}
			if (skip)
				continue;
		}

		const Rational ci = Rational(1) / fi.leading_coeff();
		const Rational cj = Rational(1) / fj.leading_coeff();
		MPoly s = fi.times_term(expvec_sub(pr.lcm, li), ci) -
		          fj.times_term(expvec_sub(pr.lcm, lj), cj);
		std::vector<MPoly> rep_s(ng, MPoly(nv, ord));
		for (size_t t = 0; t < ng; ++t)
			rep_s[t] = basis[pr.i].rep[t].times_term(expvec_sub(pr.lcm, li), ci) -
			           basis[pr.j].rep[t].times_term(expvec_sub(pr.lcm, lj), cj);

		std::vector<MPoly> q;
		MPoly r = normal_form(s, basis, &q);
		if (r.is_zero())
			continue;
		std::vector<MPoly> rep_r = rep_s;
		for (size_t b = 0; b < basis.size(); ++b)
			if (!q[b].is_zero())
				for (size_t t = 0; t < ng; ++t)
					rep_r[t] = rep_r[t] - q[b] * basis[b].rep[t];
		const Rational inv = Rational(1) / r.leading_coeff();
		r = r.scaled(inv);
		for (auto& c : rep_r)
			c = c.scaled(inv);
		basis.push_back(BElem{std::move(r), std::move(rep_r)});
		queue_pairs_with(basis.size() - 1);
	}

	// minimal basis: drop any element whose leading monomial another divides
	std::vector<bool> keep(basis.size(), true);
	for (size_t i = 0; i < basis.size(); ++i) {
		if (!keep[i])
			continue;
		for (size_t j = 0; j < basis.size(); ++j) {
			if (i == j || !keep[j])
				continue;
			const Expvec& li = basis[i].poly.leading_monomial();
			const Expvec& lj = basis[j].poly.leading_monomial();
			if (expvec_divides(lj, li) && (!(li == lj) || j < i)) {
				keep[i] = false;
				break;
			}
		}
	}
	std::vector<BElem> minimal;
	for (size_t i = 0; i < basis.size(); ++i)
		if (keep[i])
			minimal.push_back(std::move(basis[i]));

	// tail reduction to the reduced basis, then monic normalization
	for (size_t i = 0; i < minimal.size(); ++i) {
		std::vector<MPoly> q;
		MPoly r = normal_form(minimal[i].poly, minimal, &q, i);
		for (size_t b = 0; b < minimal.size(); ++b)
			if (b != i && !q[b].is_zero())
				for (size_t t = 0; t < ng; ++t)
					minimal[i].rep[t] = minimal[i].rep[t] - q[b] * minimal[b].rep[t];
		minimal[i].poly = std::move(r);
	}
	for (auto& e : minimal) {
		if (e.poly.is_zero())
			continue;
		const Rational inv = Rational(1) / e.poly.leading_coeff();
		e.poly = e.poly.scaled(inv);
		for (auto& c : e.rep)
			c = c.scaled(inv);
	}

	std::sort(minimal.begin(), minimal.end(), [&](const BElem& a, const BElem& b) {
		return expvec_greater(b.poly.leading_monomial(), a.poly.leading_monomial(), ord);
	});
	out_basis.clear();
	out_rows.clear();
	for (auto& e : minimal) {
		out_basis.push_back(std::move(e.poly));
		out_rows.push_back(std::move(e.rep));
	}
}

} // namespace

// ------------------------------------------------------------- TruncatedIdeal

TruncatedIdeal::TruncatedIdeal(Truncation trunc, std::vector<MPoly> gens)
    : trunc_(std::move(trunc)), gens_(std::move(gens)), cache_(std::make_shared<Cache>())
{
	const int nv = static_cast<int>(trunc_.size());
	for (const auto& g : gens_)
		if (g.nvars() != nv || g.order() != MonoOrder::DegRevLex)
			throw value_error("TruncatedIdeal: generator ring mismatch");
}

void TruncatedIdeal::fill_cache() const
{
	std::call_once(cache_->once, [this] {
		buchberger(gens_, static_cast<int>(trunc_.size()), MonoOrder::DegRevLex, cache_->basis,
		           cache_->rows);
	});
}

const std::vector<MPoly>& TruncatedIdeal::groebner() const
{
	fill_cache();
	return cache_->basis;
}

const std::vector<std::vector<MPoly>>& TruncatedIdeal::transform() const
{
	fill_cache();
	return cache_->rows;
}

bool TruncatedIdeal::is_unit() const
{
	const auto& gb = groebner();
	return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

TruncatedIdeal make_ideal(const Truncation& trunc, std::span<const DiffPoly> gens)
{
	std::vector<MPoly> ms;
	ms.reserve(gens.size());
	for (const auto& g : gens)
		ms.push_back(to_mpoly(g, trunc));
	return TruncatedIdeal(trunc, std::move(ms));
}

// ----------------------------------------------------------------- membership

bool ideal_member(const MPoly& f, const TruncatedIdeal& I, MembershipCertificate* cert)
{
	const auto& gb = I.groebner();
	std::vector<BElem> basis;
	basis.reserve(gb.size());
	for (const auto& b : gb)
		basis.push_back(BElem{b, {}});
	std::vector<MPoly> q;
	MPoly r = normal_form(f, basis, cert ? &q : nullptr);
	if (!r.is_zero())
		return false;
	if (cert) {
		const auto& rows = I.transform();
		const size_t ng = I.generators().size();
		const int nv = f.nvars();
		cert->cofactors.assign(ng, MPoly(nv, f.order()));
		cert->exponent = 0;
		for (size_t b = 0; b < gb.size(); ++b)
			if (!q[b].is_zero())
				for (size_t t = 0; t < ng; ++t)
					cert->cofactors[t] = cert->cofactors[t] + q[b] * rows[b][t];
	}
	return true;
}

bool ideal_member(const DiffPoly& f, const TruncatedIdeal& I, MembershipCertificate* cert)
{
	return ideal_member(to_mpoly(f, I.truncation()), I, cert);
}

MPoly normal_form_mod(const MPoly& f, const TruncatedIdeal& I)
{
	const auto& gb = I.groebner();
	std::vector<BElem> basis;
	basis.reserve(gb.size());
	for (const auto& b : gb)
		basis.push_back(BElem{b, {}});
	return normal_form(f, basis, nullptr);
}

bool verify_membership(const MPoly& f, const TruncatedIdeal& I, const MembershipCertificate& cert)
{
	if (cert.cofactors.size() != I.generators().size())
		return false;
	MPoly sum(f.nvars(), f.order());
	for (size_t i = 0; i < cert.cofactors.size(); ++i)
		sum = sum + cert.cofactors[i] * I.generators()[i];
	return sum == f;
}

// ----------------------------------------------------------------- saturation

namespace {

MPoly lift_ext(const MPoly& p)
{
	MPoly q(p.nvars() + 1, MonoOrder::ElimFirst);
	for (const auto& [mono, c] : p.terms()) {
		Expvec e(mono.size() + 1, 0);
		std::copy(mono.begin(), mono.end(), e.begin() + 1);
		q.add_term(e, c);
	}
	return q;
}

MPoly drop_ext(const MPoly& p)
{
	MPoly q(p.nvars() - 1, MonoOrder::DegRevLex);
	for (const auto& [mono, c] : p.terms())
		q.add_term(Expvec(mono.begin() + 1, mono.end()), c);
	return q;
}

} // namespace

TruncatedIdeal saturate(const TruncatedIdeal& I, const MPoly& h)
{
	if (h.is_zero())
		throw value_error("saturate: h must be nonzero");
	if (h.is_constant())
		return I;
	const int nv = static_cast<int>(I.truncation().size());
	std::vector<MPoly> ext;
	for (const auto& g : I.generators())
		if (!g.is_zero())
			ext.push_back(lift_ext(g));
	// 1 - t*h
	MPoly th = lift_ext(h);
	{
		MPoly t = MPoly::variable(nv + 1, MonoOrder::ElimFirst, 0);
		MPoly one = MPoly::constant(nv + 1, MonoOrder::ElimFirst, 1);
		ext.push_back(one - t * th);
	}
	std::vector<MPoly> basis;
	std::vector<std::vector<MPoly>> rows;
	buchberger(ext, nv + 1, MonoOrder::ElimFirst, basis, rows);
	std::vector<MPoly> kept;
	for (const auto& b : basis)
		if (b.leading_monomial()[0] == 0) // an elimination order: t-free leading monomial
			kept.push_back(drop_ext(b));
	return TruncatedIdeal(I.truncation(), std::move(kept));
}

TruncatedIdeal saturate(const TruncatedIdeal& I, const DiffPoly& h)
{
	return saturate(I, to_mpoly(h, I.truncation()));
}

std::optional<MembershipCertificate> saturation_member(const TruncatedIdeal& I, const MPoly& h,
                                                       const MPoly& f, int max_exponent)
{
	MPoly candidate = f;
	for (int r = 0; r <= max_exponent; ++r) {
		MembershipCertificate cert;
		if (ideal_member(candidate, I, &cert)) {
			cert.exponent = r;
			return cert;
		}
		candidate = candidate * h;
	}
	return std::nullopt;
}

bool ideal_equal_trunc(const TruncatedIdeal& I, const TruncatedIdeal& J)
{
	if (!(I.truncation() == J.truncation()))
		throw value_error("ideal_equal_trunc: truncation mismatch");
	return I.groebner() == J.groebner();
}

// ---------------------------------------------------------------- prime probe

namespace {

void enumerate_expvecs(int nv, int budget, Expvec& cur, int slot, std::vector<Expvec>& out)
{
	if (slot == nv) {
		out.push_back(cur);
		return;
	}
	for (int e = 0; e <= budget; ++e) {
		cur[slot] = e;
		enumerate_expvecs(nv, budget - e, cur, slot + 1, out);
	}
	cur[slot] = 0;
}

std::vector<Expvec> monomials_up_to(int nv, int maxdeg)
{
	std::vector<Expvec> out;
	if (nv == 0) {
		out.push_back(Expvec{});
		return out;
	}
	Expvec cur(nv, 0);
	enumerate_expvecs(nv, maxdeg, cur, 0, out);
	std::sort(out.begin(), out.end(), [](const Expvec& a, const Expvec& b) {
		return expvec_greater(b, a, MonoOrder::DegRevLex); // ascending
	});
	return out;
}

} // namespace

PrimeProbeResult bounded_prime_probe(const TruncatedIdeal& I, int degree_cap)
{
	PrimeProbeResult res;
	res.cap = degree_cap;
	if (degree_cap < 1)
		throw value_error("bounded_prime_probe: degree cap must be >= 1");
	if (I.is_unit()) {
		res.not_prime = true;
		res.unit = true;
		return res;
	}
	const auto& gb = I.groebner();
	const int nv = static_cast<int>(I.truncation().size());
	const MonoOrder ord = MonoOrder::DegRevLex;
	auto is_normal = [&](const Expvec& m) {
		for (const auto& b : gb)
			if (expvec_divides(b.leading_monomial(), m))
				return false;
		return true;
	};
	std::vector<Expvec> cols; // normal monomials of degree <= cap (g basis)
	for (auto& m : monomials_up_to(nv, degree_cap))
		if (is_normal(m))
			cols.push_back(m);
	std::vector<Expvec> rows; // normal monomials of degree <= 2*cap
	for (auto& m : monomials_up_to(nv, 2 * degree_cap))
		if (is_normal(m))
			rows.push_back(m);
	auto row_index = [&](const Expvec& m) -> int {
		for (size_t i = 0; i < rows.size(); ++i)
			if (rows[i] == m)
				return static_cast<int>(i);
		return -1;
	};

	std::vector<BElem> gb_basis;
	for (const auto& b : gb)
		gb_basis.push_back(BElem{b, {}});

	// coordinates of NF(cols[i] * cols[j]) over the row basis
	const size_t nc = cols.size();
	std::vector<std::vector<std::vector<Rational>>> prod(nc);
	for (size_t i = 0; i < nc; ++i) {
		prod[i].resize(nc);
		for (size_t j = 0; j < nc; ++j) {
			if (j < i) {
				prod[i][j] = prod[j][i];
				continue;
			}
			Expvec m(nv, 0);
			for (int k = 0; k < nv; ++k)
				m[k] = cols[i][k] + cols[j][k];
			MPoly nf = normal_form(term_poly(nv, ord, m, 1), gb_basis, nullptr);
			std::vector<Rational> coords(rows.size(), Rational(0));
			for (const auto& [mono, c] : nf.terms()) {
				const int idx = row_index(mono);
				if (idx < 0)
					throw value_error("prime probe: normal form escaped the row basis");
				coords[idx] = c;
			}
			prod[i][j] = std::move(coords);
		}
	}

	auto poly_of = [&](const std::vector<std::pair<size_t, Rational>>& combo) {
		MPoly p(nv, ord);
		for (const auto& [idx, c] : combo)
			p.add_term(cols[idx], c);
		return p;
	};

	// candidate f = sum combo; witness g searched as a kernel vector of
	// multiplication-by-f restricted to the normal monomials of degree <= cap
	auto try_candidate = [&](const std::vector<std::pair<size_t, Rational>>& combo)
	    -> std::optional<MPoly> {
		detail::RatMatrix M(rows.size(), std::vector<Rational>(nc, Rational(0)));
		for (size_t j = 0; j < nc; ++j)
			for (const auto& [idx, c] : combo)
				for (size_t r = 0; r < rows.size(); ++r)
					M[r][j] += c * prod[idx][j][r];
		auto kernel = detail::nullspace(std::move(M), nc);
		if (kernel.empty())
			return std::nullopt;
		MPoly g(nv, ord);
		for (size_t j = 0; j < nc; ++j)
			g.add_term(cols[j], kernel.front()[j]);
		return g;
	};

	const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2),
	                           Rational(-2), Rational(3), Rational(-3)};
	// single normal monomials (skip the constant 1)
	for (size_t i = 0; i < nc; ++i) {
		if (expvec_degree(cols[i]) == 0)
			continue;
		if (auto g = try_candidate({{i, Rational(1)}})) {
			res.not_prime = true;
			res.witness_f = poly_of({{i, Rational(1)}});
			res.witness_g = *g;
			return res;
		}
	}
	// two-term combinations
	for (size_t i = 0; i < nc; ++i)
		for (size_t j = i + 1; j < nc; ++j)
			for (const Rational& c : coeffs) {
				if (auto g = try_candidate({{i, Rational(1)}, {j, c}})) {
					res.not_prime = true;
					res.witness_f = poly_of({{i, Rational(1)}, {j, c}});
					res.witness_g = *g;
					return res;
				}
			}
	return res;
}

} // namespace diffalg
