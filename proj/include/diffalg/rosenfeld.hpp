#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffalg/ideal.hpp"
#include "diffalg/reduction.hpp"

namespace diffalg {

/// Two elements whose leaders share a least common derivative u:
/// delta^xi(u_{f_i}) = delta^eta(u_{f_j}) = u.
struct DeltaPair {
	size_t i, j;
	DerivOp xi, eta;
	Indeterminate u;
};

std::vector<DeltaPair> delta_pairs(const AutoreducedSet& lambda);

// s_{f_j} * delta^xi(f_i) - s_{f_i} * delta^eta(f_j)
DiffPoly delta_polynomial(const AutoreducedSet& lambda, const DeltaPair& pair);

/// (Lambda)_u: the f_i and their derivatives whose leaders rank strictly
/// below u. Finite under the orderly ranking.
std::vector<DiffPoly> lower_ideal_generators(const AutoreducedSet& lambda,
                                             const Indeterminate& u);
TruncatedIdeal lower_ideal(const AutoreducedSet& lambda, const Indeterminate& u);

struct CoherencePairCheck {
	DeltaPair pair;
	DiffPoly dpoly;
	bool member;
};

struct CoherenceResult {
	bool coherent = true;
	std::vector<CoherencePairCheck> checks;
	std::optional<size_t> failing; // first failing check, when any
};

CoherenceResult is_coherent(const AutoreducedSet& lambda);

/// All delta^kappa(p) with |kappa| <= order_cap - max_order(p) (kappa = 0
/// always included). The finite-variable stand-in for the differential
/// ideal, per the reduction to polynomial rings in finitely many variables.
std::vector<DiffPoly> differential_generators(std::span<const DiffPoly> polys, int order_cap);

/// Membership f in [Lambda]:H^inf decided algebraically: enumerate the
/// derivatives of Lambda up to the joint order of (f, Lambda), saturate by
/// H in the joint truncation, test membership. Agrees with the remainder
/// test on characteristic sets.
bool saturation_membership_bridge(const DiffPoly& f, const AutoreducedSet& lambda);

struct ReducedElementProbe {
	bool violation = false;
	std::optional<DiffPoly> witness; // nonzero reduced member of (Lambda):H^inf
	int degree_cap = 0;
	int order_cap = 0;
};

/// Bounded search for a nonzero reduced element of (Lambda):H_Lambda^inf:
/// enumerate the reduced-monomial basis up to the caps and solve a kernel
/// problem against normal forms. Refutation-complete up to the caps.
ReducedElementProbe reduced_element_probe(const AutoreducedSet& lambda, int degree_cap,
                                          int order_cap);

/// The Rosenfeld-criterion battery for a characteristic-set candidate.
/// A passing report never claims "is a characteristic set" -- only that no
/// violation was found up to the caps; any failing check carries a witness.
struct CharSetReport {
	bool autoreduced = false;
	std::string autoreduced_violation;
	std::optional<CoherenceResult> coherence;
	std::optional<ReducedElementProbe> reduced_probe;
	std::optional<PrimeProbeResult> prime_probe;
	Truncation truncation_used;
	int degree_cap = 0;
	int order_cap = 0;

	bool refuted() const;
	// true when every check ran and found no violation up to the caps
	bool no_violation() const;
};

CharSetReport charset_report(const std::vector<DiffPoly>& S, int degree_cap, int order_cap);

/// The four containment conditions of the ideal-equality test for
/// characteristic-set-presented prime differential ideals, evaluated in
/// the joint truncation.
struct IdealEqualityReport {
	bool a_subset_of_sat_b = false;
	bool h_a_outside_sat_b = false;
	bool b_subset_of_sat_a = false;
	bool h_b_outside_sat_a = false;
	bool equal() const
	{
		return a_subset_of_sat_b && h_a_outside_sat_b && b_subset_of_sat_a && h_b_outside_sat_a;
	}
};

IdealEqualityReport ideal_equal_charsets_report(const AutoreducedSet& a, const AutoreducedSet& b);
bool ideal_equal_charsets(const AutoreducedSet& a, const AutoreducedSet& b);

} // namespace diffalg
