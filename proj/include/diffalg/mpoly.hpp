#pragma once

#include <map>
#include <vector>

#include "diffalg/errors.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

/// Monomial orders for the finite-variable engine. DegRevLex is the
/// working default; ElimFirst makes variable 0 dominant (lexicographic on
/// its exponent, then degrevlex on the rest) and is the elimination order
/// used inside saturation.
enum class MonoOrder { DegRevLex, ElimFirst };

using Expvec = std::vector<int>;

// a > b in the given order.
bool expvec_greater(const Expvec& a, const Expvec& b, MonoOrder order);

struct ExpvecGreater {
	MonoOrder order = MonoOrder::DegRevLex;
	bool operator()(const Expvec& a, const Expvec& b) const
	{
		return expvec_greater(a, b, order);
	}
};

/// A polynomial over Q in nvars variables indexed 0..nvars-1, terms kept
/// in descending monomial order (begin() is the leading term).
class MPoly {
public:
	using TermMap = std::map<Expvec, Rational, ExpvecGreater>;

	MPoly() : MPoly(0, MonoOrder::DegRevLex) {}
	MPoly(int nvars, MonoOrder order)
	    : nvars_(nvars), order_(order), terms_(ExpvecGreater{order})
	{
	}

	static MPoly constant(int nvars, MonoOrder order, const Rational& c);
	static MPoly variable(int nvars, MonoOrder order, int index);

	int nvars() const { return nvars_; }
	MonoOrder order() const { return order_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
	}

	const Expvec& leading_monomial() const;
	const Rational& leading_coeff() const;
	int total_degree() const;

	MPoly operator-() const;
	MPoly operator+(const MPoly& o) const;
	MPoly operator-(const MPoly& o) const;
	MPoly operator*(const MPoly& o) const;
	MPoly scaled(const Rational& c) const;
	// this * (c * x^mono)
	MPoly times_term(const Expvec& mono, const Rational& c) const;
	MPoly pow(int e) const;
	MPoly monic() const;

	bool operator==(const MPoly& o) const
	{
		return nvars_ == o.nvars_ && order_ == o.order_ && terms_ == o.terms_;
	}

	void add_term(const Expvec& mono, const Rational& c);

	// Same polynomial under another monomial order.
	MPoly with_order(MonoOrder order) const;

private:
	int nvars_;
	MonoOrder order_;
	TermMap terms_;
};

inline bool expvec_divides(const Expvec& a, const Expvec& b)
{
	for (size_t k = 0; k < a.size(); ++k)
		if (a[k] > b[k])
			return false;
	return true;
}

Expvec expvec_lcm(const Expvec& a, const Expvec& b);
Expvec expvec_sub(const Expvec& a, const Expvec& b);
int expvec_degree(const Expvec& a);

} // namespace diffalg
