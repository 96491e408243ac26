#include "diffalg/mpoly.hpp"

#include <numeric>

namespace diffalg {

int expvec_degree(const Expvec& a)
{
	return std::accumulate(a.begin(), a.end(), 0);
}

bool expvec_greater(const Expvec& a, const Expvec& b, MonoOrder order)
{
	size_t start = 0;
	if (order == MonoOrder::ElimFirst) {
		if (a.empty())
			return false;
		if (a[0] != b[0])
			return a[0] > b[0];
		start = 1;
	}
	int da = 0, db = 0;
	for (size_t k = start; k < a.size(); ++k)
		da += a[k];
	for (size_t k = start; k < b.size(); ++k)
		db += b[k];
	if (da != db)
		return da > db;
	// degrevlex tie-break: the last nonzero entry of a-b decides,
	// negative meaning a is the larger monomial
	for (size_t k = a.size(); k > start; --k) {
		const int diff = a[k - 1] - b[k - 1];
		if (diff != 0)
			return diff < 0;
	}
	return false;
}

Expvec expvec_lcm(const Expvec& a, const Expvec& b)
{
	Expvec r = a;
	for (size_t k = 0; k < r.size(); ++k)
		if (b[k] > r[k])
			r[k] = b[k];
	return r;
}

Expvec expvec_sub(const Expvec& a, const Expvec& b)
{
	Expvec r = a;
	for (size_t k = 0; k < r.size(); ++k)
		r[k] -= b[k];
	return r;
}

MPoly MPoly::constant(int nvars, MonoOrder order, const Rational& c)
{
	MPoly p(nvars, order);
	p.add_term(Expvec(nvars, 0), c);
	return p;
}

MPoly MPoly::variable(int nvars, MonoOrder order, int index)
{
	if (index < 0 || index >= nvars)
		throw value_error("MPoly::variable: index out of range");
	MPoly p(nvars, order);
	Expvec e(nvars, 0);
	e[index] = 1;
	p.add_term(e, 1);
	return p;
}

void MPoly::add_term(const Expvec& mono, const Rational& c)
{
	if (c == 0)
		return;
	if (static_cast<int>(mono.size()) != nvars_)
		throw value_error("MPoly::add_term: exponent vector length mismatch");
	auto it = terms_.find(mono);
	if (it == terms_.end()) {
		terms_.emplace(mono, c);
	} else {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

const Expvec& MPoly::leading_monomial() const
{
	if (terms_.empty())
		throw value_error("leading_monomial of zero polynomial");
	return terms_.begin()->first;
}

const Rational& MPoly::leading_coeff() const
{
	if (terms_.empty())
		throw value_error("leading_coeff of zero polynomial");
	return terms_.begin()->second;
}

int MPoly::total_degree() const
{
	int d = 0;
	for (const auto& [mono, c] : terms_)
		d = std::max(d, expvec_degree(mono));
	return d;
}

MPoly MPoly::operator-() const
{
	MPoly r(nvars_, order_);
	for (const auto& [mono, c] : terms_)
		r.terms_.emplace(mono, -c);
	return r;
}

MPoly MPoly::operator+(const MPoly& o) const
{
	if (nvars_ != o.nvars_ || order_ != o.order_)
		throw value_error("MPoly addition: ring mismatch");
	MPoly r = *this;
	for (const auto& [mono, c] : o.terms_)
		r.add_term(mono, c);
	return r;
}

MPoly MPoly::operator-(const MPoly& o) const
{
	if (nvars_ != o.nvars_ || order_ != o.order_)
		throw value_error("MPoly subtraction: ring mismatch");
	MPoly r = *this;
	for (const auto& [mono, c] : o.terms_)
		r.add_term(mono, -c);
	return r;
}

MPoly MPoly::operator*(const MPoly& o) const
{
	if (nvars_ != o.nvars_ || order_ != o.order_)
		throw value_error("MPoly multiplication: ring mismatch");
	MPoly r(nvars_, order_);
	for (const auto& [m1, c1] : terms_)
		for (const auto& [m2, c2] : o.terms_) {
			Expvec m(nvars_);
			for (int k = 0; k < nvars_; ++k)
				m[k] = m1[k] + m2[k];
			r.add_term(m, c1 * c2);
		}
	return r;
}

MPoly MPoly::scaled(const Rational& c) const
{
	MPoly r(nvars_, order_);
	if (c == 0)
		return r;
	for (const auto& [mono, k] : terms_)
		r.terms_.emplace(mono, k * c);
	return r;
}

MPoly MPoly::times_term(const Expvec& mono, const Rational& c) const
{
	MPoly r(nvars_, order_);
	if (c == 0)
		return r;
	for (const auto& [m1, c1] : terms_) {
		Expvec m(nvars_);
		for (int k = 0; k < nvars_; ++k)
			m[k] = m1[k] + mono[k];
		r.terms_.emplace(m, c1 * c);
	}
	return r;
}

MPoly MPoly::pow(int e) const
{
	if (e < 0)
		throw value_error("MPoly::pow: negative exponent");
	MPoly r = constant(nvars_, order_, 1);
	MPoly base = *this;
	while (e > 0) {
		if (e & 1)
			r = r * base;
		e >>= 1;
		if (e)
			base = base * base;
	}
	return r;
}

MPoly MPoly::monic() const
{
	if (is_zero())
		return *this;
	return scaled(Rational(1) / leading_coeff());
}

MPoly MPoly::with_order(MonoOrder order) const
{
	MPoly r(nvars_, order);
	for (const auto& [mono, c] : terms_)
		r.add_term(mono, c);
	return r;
}

} // namespace diffalg
