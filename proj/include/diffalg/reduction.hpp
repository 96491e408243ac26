#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffalg/diffpoly.hpp"

namespace diffalg {

/// A finite set of nonconstant differential polynomials, pairwise reduced,
/// stored in strictly increasing rank order. Only obtainable through
/// validation, so an AutoreducedSet in hand satisfies the invariants.
class AutoreducedSet {
public:
	const AmbientPtr& ambient() const { return ambient_; }
	const std::vector<DiffPoly>& elements() const { return elems_; }
	const DiffPoly& operator[](size_t i) const { return elems_.at(i); }
	size_t size() const { return elems_.size(); }
	bool empty() const { return elems_.empty(); }

	DiffPoly h_product() const;

	friend struct AutoreducedCheck;
	friend AutoreducedSet minimal_autoreduced_subset(const std::vector<DiffPoly>& S);

private:
	AutoreducedSet(AmbientPtr ambient, std::vector<DiffPoly> elems)
	    : ambient_(std::move(ambient)), elems_(std::move(elems))
	{
	}
	AmbientPtr ambient_;
	std::vector<DiffPoly> elems_;
};

/// Result of validate_autoreduced: either the sorted set, or a violation
/// report naming the offending elements (indices into the input list).
struct AutoreducedCheck {
	std::optional<AutoreducedSet> set;
	std::string violation;
	int offender_a = -1;
	int offender_b = -1;

	bool ok() const { return set.has_value(); }

	static AutoreducedCheck valid(AmbientPtr ambient, std::vector<DiffPoly> elems)
	{
		AutoreducedCheck c;
		c.set = AutoreducedSet(std::move(ambient), std::move(elems));
		return c;
	}
};

AutoreducedCheck validate_autoreduced(const std::vector<DiffPoly>& S);
// Same, but throws value_error with the violation message.
AutoreducedSet require_autoreduced(const std::vector<DiffPoly>& S);

/// One summand of a division certificate: coeff * delta^kappa(Lambda[index]).
struct Cofactor {
	DiffPoly coeff;
	DerivOp kappa;
	size_t index;
};

/// Verifiable output of the differential division algorithm:
///   H_Lambda^exponent * f  =  remainder + sum_t coeff_t * delta^{kappa_t}(Lambda[index_t])
/// holds exactly, and the remainder is reduced with respect to Lambda.
struct ReductionCertificate {
	int exponent = 0;
	DiffPoly remainder;
	std::vector<Cofactor> cofactors;
};

ReductionCertificate diff_remainder(const DiffPoly& f, const AutoreducedSet& lambda);

// Recomputes the certificate identity from scratch; true iff it holds
// exactly and the remainder is reduced.
bool verify_certificate(const DiffPoly& f, const AutoreducedSet& lambda,
                        const ReductionCertificate& cert);

// Remainder-based membership test (valid when lambda is a characteristic
// set of a prime differential ideal; that premise is the caller's).
bool membership_by_remainder(const DiffPoly& f, const AutoreducedSet& lambda);

/// The canonical orderly ranking on autoreduced sets: A < B when A's rank
/// sequence is lexicographically smaller, or A properly extends B's.
Ordering compare_autoreduced_sets(const AutoreducedSet& a, const AutoreducedSet& b);

/// Greedy Ritt extraction: the minimal autoreduced subset of S under the
/// set ranking. Constants in S are skipped; all-constant input is an error.
AutoreducedSet minimal_autoreduced_subset(const std::vector<DiffPoly>& S);

} // namespace diffalg
