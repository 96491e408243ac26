#pragma once

#include <utility>
#include <vector>

#include "diffalg/indet.hpp"

namespace diffalg {

/// A power product of indeterminates. Factors are kept sorted by
/// increasing rank with strictly positive exponents; the empty product
/// is the monomial 1.
class Monomial {
public:
	Monomial() = default;

	static Monomial one() { return Monomial(); }
	static Monomial indet(const Indeterminate& u, int e = 1);

	const std::vector<std::pair<Indeterminate, int>>& factors() const { return factors_; }
	bool is_one() const { return factors_.empty(); }
	int total_degree() const;
	int degree_in(const Indeterminate& u) const;

	Monomial times(const Monomial& o) const;
	Monomial times_indet(const Indeterminate& u, int e) const;
	// This monomial with the power of u removed entirely.
	Monomial without(const Indeterminate& u) const;

	bool divisible_by(const Monomial& o) const;
	// Componentwise quotient; only valid when divisible_by(o).
	Monomial divided_by(const Monomial& o) const;

	bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
	std::vector<std::pair<Indeterminate, int>> factors_;
};

/// Canonical term order: total degree first, ties broken lexicographically
/// on exponents with indeterminates scanned from the highest rank down.
Ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialGreater {
	bool operator()(const Monomial& a, const Monomial& b) const
	{
		return compare_monomials(a, b) == Ordering::Greater;
	}
};

} // namespace diffalg
