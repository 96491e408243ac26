#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "diffalg/ambient.hpp"
#include "diffalg/errors.hpp"

namespace diffalg {

enum class Ordering { Less, Equal, Greater };

/// A derivative operator delta_1^{e_1} ... delta_m^{e_m}, stored as its
/// exponent vector (length m).
struct DerivOp {
	std::vector<int> exponents;

	static DerivOp zero(int m) { return DerivOp{std::vector<int>(m, 0)}; }

	int m() const { return static_cast<int>(exponents.size()); }
	int order() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
	bool is_zero() const
	{
		for (int e : exponents)
			if (e != 0)
				return false;
		return true;
	}

	// This operator followed by one application of delta_j (0-based slot).
	DerivOp bumped(int j) const
	{
		DerivOp d = *this;
		d.exponents.at(j) += 1;
		return d;
	}

	bool operator==(const DerivOp& o) const { return exponents == o.exponents; }
};

// a divides b: componentwise a <= b.
inline bool derivop_divides(const DerivOp& a, const DerivOp& b)
{
	if (a.m() != b.m())
		return false;
	for (int k = 0; k < a.m(); ++k)
		if (a.exponents[k] > b.exponents[k])
			return false;
	return true;
}

inline DerivOp derivop_max(const DerivOp& a, const DerivOp& b)
{
	DerivOp r = a;
	for (int k = 0; k < a.m(); ++k)
		if (b.exponents[k] > r.exponents[k])
			r.exponents[k] = b.exponents[k];
	return r;
}

// b - a, defined when a divides b.
inline DerivOp derivop_diff(const DerivOp& b, const DerivOp& a)
{
	DerivOp r = b;
	for (int k = 0; k < a.m(); ++k)
		r.exponents[k] -= a.exponents[k];
	return r;
}

/// An algebraic indeterminate delta^xi x_{g,j}: block = position of g in
/// the group element order, index = j (0-based internally), op = xi.
struct Indeterminate {
	int block;
	int index;
	DerivOp op;

	bool operator==(const Indeterminate& o) const
	{
		return block == o.block && index == o.index && op == o.op;
	}
};

/// The canonical orderly ranking. Indeterminates compare lexicographically
/// by (total derivative order, block, index, exponent vector); the (block,
/// index) pair plays the role of the linearized variable position, blocks
/// taken in the declared group-element order with the identity first.
inline Ordering compare_indets(const Indeterminate& u, const Indeterminate& v)
{
	auto cmp = [](int a, int b) { return a < b ? Ordering::Less : (a > b ? Ordering::Greater : Ordering::Equal); };
	if (auto c = cmp(u.op.order(), v.op.order()); c != Ordering::Equal)
		return c;
	if (auto c = cmp(u.block, v.block); c != Ordering::Equal)
		return c;
	if (auto c = cmp(u.index, v.index); c != Ordering::Equal)
		return c;
	const int m = std::min(u.op.m(), v.op.m());
	for (int k = 0; k < m; ++k)
		if (auto c = cmp(u.op.exponents[k], v.op.exponents[k]); c != Ordering::Equal)
			return c;
	return cmp(u.op.m(), v.op.m());
}

// Ambient-checked variant: validates that both indeterminates fit the
// ambient before comparing.
Ordering compare_indets(const AmbientPtr& ambient, const Indeterminate& u, const Indeterminate& v);

// The explicit comparison key (sum xi, linearized position, xi_1..xi_m),
// with position = block * n + index.
inline std::vector<int> ranking_key(const Indeterminate& u, const Ambient& ambient)
{
	std::vector<int> key{u.op.order(), u.block * ambient.n + u.index};
	key.insert(key.end(), u.op.exponents.begin(), u.op.exponents.end());
	return key;
}

inline bool indet_less(const Indeterminate& u, const Indeterminate& v)
{
	return compare_indets(u, v) == Ordering::Less;
}

struct IndetLess {
	bool operator()(const Indeterminate& u, const Indeterminate& v) const
	{
		return indet_less(u, v);
	}
};

// v is a proper derivative of u: same block and index, op componentwise
// >= and not equal.
inline bool is_proper_derivative(const Indeterminate& v, const Indeterminate& u)
{
	return v.block == u.block && v.index == u.index && derivop_divides(u.op, v.op) &&
	       !(u.op == v.op);
}

void validate_indet(const Ambient& ambient, const Indeterminate& u);

/// Rank of a differential polynomial: its leader and the leader's degree.
/// Ranks compare lexicographically on (leader, degree).
struct Rank {
	Indeterminate leader;
	int degree;

	bool operator==(const Rank& o) const { return leader == o.leader && degree == o.degree; }
};

inline Ordering compare_ranks(const Rank& a, const Rank& b)
{
	if (auto c = compare_indets(a.leader, b.leader); c != Ordering::Equal)
		return c;
	return a.degree < b.degree ? Ordering::Less
	                           : (a.degree > b.degree ? Ordering::Greater : Ordering::Equal);
}

inline bool rank_less(const Rank& a, const Rank& b)
{
	return compare_ranks(a, b) == Ordering::Less;
}

} // namespace diffalg
