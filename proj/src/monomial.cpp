#include "diffalg/monomial.hpp"

#include <algorithm>

namespace diffalg {

Monomial Monomial::indet(const Indeterminate& u, int e)
{
	Monomial mono;
	if (e < 0)
		throw value_error("monomial: negative exponent");
	if (e > 0)
		mono.factors_.push_back({u, e});
	return mono;
}

int Monomial::total_degree() const
{
	int d = 0;
	for (const auto& [u, e] : factors_)
		d += e;
	return d;
}

int Monomial::degree_in(const Indeterminate& u) const
{
	for (const auto& [v, e] : factors_)
		if (v == u)
			return e;
	return 0;
}

Monomial Monomial::times(const Monomial& o) const
{
	Monomial r;
	r.factors_.reserve(factors_.size() + o.factors_.size());
	auto a = factors_.begin(), ae = factors_.end();
	auto b = o.factors_.begin(), be = o.factors_.end();
	while (a != ae && b != be) {
		switch (compare_indets(a->first, b->first)) {
		case Ordering::Less:
			r.factors_.push_back(*a++);
			break;
		case Ordering::Greater:
			r.factors_.push_back(*b++);
			break;
		case Ordering::Equal:
			r.factors_.push_back({a->first, a->second + b->second});
			++a, ++b;
			break;
		}
	}
	r.factors_.insert(r.factors_.end(), a, ae);
	r.factors_.insert(r.factors_.end(), b, be);
	return r;
}

Monomial Monomial::times_indet(const Indeterminate& u, int e) const
{
	return times(indet(u, e));
}

Monomial Monomial::without(const Indeterminate& u) const
{
	Monomial r;
	for (const auto& f : factors_)
		if (!(f.first == u))
			r.factors_.push_back(f);
	return r;
}

bool Monomial::divisible_by(const Monomial& o) const
{
	for (const auto& [u, e] : o.factors_)
		if (degree_in(u) < e)
			return false;
	return true;
}

Monomial Monomial::divided_by(const Monomial& o) const
{
	Monomial r;
	for (const auto& [u, e] : factors_) {
		const int q = e - o.degree_in(u);
		if (q < 0)
			throw value_error("monomial division: not divisible");
		if (q > 0)
			r.factors_.push_back({u, q});
	}
	return r;
}

Ordering compare_monomials(const Monomial& a, const Monomial& b)
{
	const int da = a.total_degree(), db = b.total_degree();
	if (da != db)
		return da < db ? Ordering::Less : Ordering::Greater;
	// scan from the highest-ranked factor down; the first variable whose
	// exponents differ decides, higher exponent wins
	auto ia = a.factors().rbegin(), ea = a.factors().rend();
	auto ib = b.factors().rbegin(), eb = b.factors().rend();
	while (ia != ea && ib != eb) {
		switch (compare_indets(ia->first, ib->first)) {
		case Ordering::Greater:
			return Ordering::Greater; // a has the higher variable
		case Ordering::Less:
			return Ordering::Less;
		case Ordering::Equal:
			if (ia->second != ib->second)
				return ia->second > ib->second ? Ordering::Greater : Ordering::Less;
			++ia, ++ib;
			break;
		}
	}
	if (ia != ea)
		return Ordering::Greater;
	if (ib != eb)
		return Ordering::Less;
	return Ordering::Equal;
}

} // namespace diffalg
