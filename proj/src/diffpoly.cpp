#include "diffalg/diffpoly.hpp"

#include <algorithm>

namespace diffalg {

DiffPoly DiffPoly::zero(AmbientPtr ambient)
{
	if (!ambient)
		throw ambient_error("DiffPoly: null ambient");
	return DiffPoly(std::move(ambient));
}

DiffPoly DiffPoly::constant(AmbientPtr ambient, const Rational& c)
{
	DiffPoly p = zero(std::move(ambient));
	p.add_term(Monomial::one(), c);
	return p;
}

DiffPoly DiffPoly::indet(AmbientPtr ambient, const Indeterminate& u)
{
	DiffPoly p = zero(std::move(ambient));
	validate_indet(*p.ambient_, u);
	p.add_term(Monomial::indet(u), 1);
	return p;
}

DiffPoly DiffPoly::monomial(AmbientPtr ambient, const Monomial& mono, const Rational& c)
{
	DiffPoly p = zero(std::move(ambient));
	for (const auto& [u, e] : mono.factors())
		validate_indet(*p.ambient_, u);
	p.add_term(mono, c);
	return p;
}

void DiffPoly::add_term(const Monomial& mono, const Rational& c)
{
	if (c == 0)
		return;
	auto it = terms_.find(mono);
	if (it == terms_.end()) {
		terms_.emplace(mono, c);
	} else {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Rational DiffPoly::constant_value() const
{
	if (!is_constant())
		throw constant_error("constant_value: polynomial is not constant");
	return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

DiffPoly DiffPoly::operator-() const
{
	DiffPoly r(ambient_);
	for (const auto& [mono, c] : terms_)
		r.terms_.emplace(mono, -c);
	return r;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const
{
	require_same_ambient(ambient_, o.ambient_, "DiffPoly addition");
	DiffPoly r = *this;
	for (const auto& [mono, c] : o.terms_)
		r.add_term(mono, c);
	return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const
{
	require_same_ambient(ambient_, o.ambient_, "DiffPoly subtraction");
	DiffPoly r = *this;
	for (const auto& [mono, c] : o.terms_)
		r.add_term(mono, -c);
	return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const
{
	require_same_ambient(ambient_, o.ambient_, "DiffPoly multiplication");
	DiffPoly r(ambient_);
	for (const auto& [m1, c1] : terms_)
		for (const auto& [m2, c2] : o.terms_)
			r.add_term(m1.times(m2), c1 * c2);
	return r;
}

DiffPoly DiffPoly::scaled(const Rational& c) const
{
	DiffPoly r(ambient_);
	if (c == 0)
		return r;
	for (const auto& [mono, k] : terms_)
		r.terms_.emplace(mono, k * c);
	return r;
}

DiffPoly DiffPoly::pow(int e) const
{
	if (e < 0)
		throw value_error("DiffPoly::pow: negative exponent");
	DiffPoly r = constant(ambient_, 1);
	DiffPoly base = *this;
	while (e > 0) {
		if (e & 1)
			r = r * base;
		base = (e >>= 1) ? base * base : base;
	}
	return r;
}

bool DiffPoly::operator==(const DiffPoly& o) const
{
	return same_ambient(ambient_, o.ambient_) && terms_ == o.terms_;
}

std::vector<Indeterminate> DiffPoly::indets() const
{
	std::set<Indeterminate, IndetLess> seen;
	for (const auto& [mono, c] : terms_)
		for (const auto& [u, e] : mono.factors())
			seen.insert(u);
	return {seen.begin(), seen.end()};
}

int DiffPoly::max_order() const
{
	int o = 0;
	for (const auto& [mono, c] : terms_)
		for (const auto& [u, e] : mono.factors())
			o = std::max(o, u.op.order());
	return o;
}

int DiffPoly::total_degree() const
{
	int d = 0;
	for (const auto& [mono, c] : terms_)
		d = std::max(d, mono.total_degree());
	return d;
}

int DiffPoly::degree_in(const Indeterminate& u) const
{
	int d = 0;
	for (const auto& [mono, c] : terms_)
		d = std::max(d, mono.degree_in(u));
	return d;
}

Indeterminate DiffPoly::leader() const
{
	if (is_constant())
		throw constant_error("leader: constant polynomial has no leader");
	bool have = false;
	Indeterminate best{};
	for (const auto& [mono, c] : terms_)
		for (const auto& [u, e] : mono.factors())
			if (!have || indet_less(best, u)) {
				best = u;
				have = true;
			}
	return best;
}

int DiffPoly::degree_in_leader() const
{
	return degree_in(leader());
}

Rank DiffPoly::rank() const
{
	Indeterminate u = leader();
	return Rank{u, degree_in(u)};
}

DiffPoly DiffPoly::partial(const Indeterminate& u) const
{
	DiffPoly r(ambient_);
	for (const auto& [mono, c] : terms_) {
		const int e = mono.degree_in(u);
		if (e == 0)
			continue;
		r.add_term(mono.without(u).times_indet(u, e - 1), c * e);
	}
	return r;
}

DiffPoly DiffPoly::separant() const
{
	return partial(leader());
}

DiffPoly DiffPoly::initial() const
{
	const Indeterminate u = leader();
	const int d = degree_in(u);
	DiffPoly r(ambient_);
	for (const auto& [mono, c] : terms_)
		if (mono.degree_in(u) == d)
			r.add_term(mono.without(u), c);
	return r;
}

DiffPoly DiffPoly::apply_derivation(int j) const
{
	if (j < 1 || j > ambient_->m)
		throw value_error("apply_derivation: derivation index out of range");
	DiffPoly r(ambient_);
	for (const auto& [mono, c] : terms_) {
		// Leibniz rule over the factors of the monomial
		for (size_t i = 0; i < mono.factors().size(); ++i) {
			const auto& [u, e] = mono.factors()[i];
			Indeterminate du{u.block, u.index, u.op.bumped(j - 1)};
			Monomial rest = mono.without(u).times_indet(u, e - 1).times_indet(du, 1);
			r.add_term(rest, c * e);
		}
	}
	return r;
}

DiffPoly DiffPoly::apply_derivop(const DerivOp& kappa) const
{
	DiffPoly r = *this;
	for (int j = 0; j < kappa.m(); ++j)
		for (int t = 0; t < kappa.exponents[j]; ++t)
			r = r.apply_derivation(j + 1);
	return r;
}

std::vector<DiffPoly> DiffPoly::univariate_in(const Indeterminate& v) const
{
	std::vector<DiffPoly> coeffs(degree_in(v) + 1, DiffPoly::zero(ambient_));
	for (const auto& [mono, c] : terms_) {
		const int e = mono.degree_in(v);
		coeffs[e].add_term(mono.without(v), c);
	}
	return coeffs;
}

Rational DiffPoly::evaluate(const std::map<Indeterminate, Rational, IndetLess>& assignment) const
{
	Rational total = 0;
	for (const auto& [mono, c] : terms_) {
		Rational term = c;
		for (const auto& [u, e] : mono.factors()) {
			auto it = assignment.find(u);
			if (it == assignment.end())
				throw value_error("evaluate: assignment misses an indeterminate");
			for (int k = 0; k < e; ++k)
				term *= it->second;
		}
		total += term;
	}
	return total;
}

bool is_partially_reduced(const DiffPoly& g, const DiffPoly& f)
{
	const Indeterminate u = f.leader();
	for (const auto& [mono, c] : g.terms())
		for (const auto& [v, e] : mono.factors())
			if (is_proper_derivative(v, u))
				return false;
	return true;
}

bool is_reduced(const DiffPoly& g, const DiffPoly& f)
{
	return is_partially_reduced(g, f) && g.degree_in(f.leader()) < f.degree_in_leader();
}

bool is_reduced_wrt_set(const DiffPoly& g, std::span<const DiffPoly> lambda)
{
	for (const auto& f : lambda)
		if (!is_reduced(g, f))
			return false;
	return true;
}

DiffPoly h_product(std::span<const DiffPoly> lambda)
{
	if (lambda.empty())
		throw value_error("h_product: empty set");
	DiffPoly h = DiffPoly::constant(lambda[0].ambient(), 1);
	for (const auto& f : lambda)
		h = h * f.initial() * f.separant();
	return h;
}

} // namespace diffalg
