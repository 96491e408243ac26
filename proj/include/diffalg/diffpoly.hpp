#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "diffalg/ambient.hpp"
#include "diffalg/monomial.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

/// A differential polynomial over Q: a finite map monomial -> nonzero
/// rational, kept in canonical (descending) term order. Values are
/// immutable after construction; all operations are pure.
class DiffPoly {
public:
	using TermMap = std::map<Monomial, Rational, MonomialGreater>;

	static DiffPoly zero(AmbientPtr ambient);
	static DiffPoly constant(AmbientPtr ambient, const Rational& c);
	static DiffPoly indet(AmbientPtr ambient, const Indeterminate& u);
	static DiffPoly monomial(AmbientPtr ambient, const Monomial& mono, const Rational& c);

	const AmbientPtr& ambient() const { return ambient_; }
	const TermMap& terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
	}
	// Defined only for constants.
	Rational constant_value() const;

	DiffPoly operator-() const;
	DiffPoly operator+(const DiffPoly& o) const;
	DiffPoly operator-(const DiffPoly& o) const;
	DiffPoly operator*(const DiffPoly& o) const;
	DiffPoly scaled(const Rational& c) const;
	DiffPoly pow(int e) const;

	bool operator==(const DiffPoly& o) const;

	// Every indeterminate occurring in some term, in increasing rank order.
	std::vector<Indeterminate> indets() const;
	int max_order() const;
	int total_degree() const;
	int degree_in(const Indeterminate& u) const;

	// -- structure w.r.t. the ranking (nonconstant polynomials only) --
	Indeterminate leader() const;
	int degree_in_leader() const;
	Rank rank() const;
	DiffPoly separant() const;
	DiffPoly initial() const;

	// Formal partial derivative with respect to one indeterminate.
	DiffPoly partial(const Indeterminate& u) const;
	// The Leibniz-rule action of delta_j (1-based j in [1, m]).
	DiffPoly apply_derivation(int j) const;
	// delta^kappa applied via repeated apply_derivation.
	DiffPoly apply_derivop(const DerivOp& kappa) const;

	// Coefficients of this polynomial viewed as univariate in v;
	// result[d] is the coefficient of v^d (a DiffPoly free of v).
	std::vector<DiffPoly> univariate_in(const Indeterminate& v) const;

	// Plain polynomial evaluation; the assignment must cover every
	// indeterminate that occurs.
	Rational evaluate(const std::map<Indeterminate, Rational, IndetLess>& assignment) const;

private:
	explicit DiffPoly(AmbientPtr ambient) : ambient_(std::move(ambient)) {}
	void add_term(const Monomial& mono, const Rational& c);

	AmbientPtr ambient_;
	TermMap terms_;
};

// g has no proper derivative of f's leader (f nonconstant).
bool is_partially_reduced(const DiffPoly& g, const DiffPoly& f);
// ... and additionally deg_{u_f}(g) < deg_{u_f}(f).
bool is_reduced(const DiffPoly& g, const DiffPoly& f);
bool is_reduced_wrt_set(const DiffPoly& g, std::span<const DiffPoly> lambda);

// H = product over the set of initial * separant.
DiffPoly h_product(std::span<const DiffPoly> lambda);

} // namespace diffalg
