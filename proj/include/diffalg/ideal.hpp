#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "diffalg/diffpoly.hpp"
#include "diffalg/mpoly.hpp"

namespace diffalg {

/// The finite-variable window a differential question is decided in:
/// an ordered list of indeterminates, highest rank first (so the induced
/// degrevlex order on MPoly exponent vectors follows the ranking).
struct Truncation {
	std::vector<Indeterminate> vars;

	int index_of(const Indeterminate& u) const;
	size_t size() const { return vars.size(); }
	bool operator==(const Truncation& o) const { return vars == o.vars; }
};

// Sorts descending by rank and deduplicates.
Truncation make_truncation(std::vector<Indeterminate> vars);
// The truncation spanned by every indeterminate of the given polynomials.
Truncation truncation_of(std::span<const DiffPoly> polys);
Truncation truncation_union(const Truncation& a, const Truncation& b);

// Throws value_error when f mentions a variable outside the truncation.
MPoly to_mpoly(const DiffPoly& f, const Truncation& trunc);
DiffPoly from_mpoly(const MPoly& p, const Truncation& trunc, const AmbientPtr& ambient);

/// An ideal of Q[truncation] given by generators, with the reduced
/// Groebner basis (degrevlex) computed once on first use and cached;
/// the cache fill is race-free under concurrent readers. The extended
/// Buchberger transform expresses every basis element over the input
/// generators, powering membership certificates.
class TruncatedIdeal {
public:
	TruncatedIdeal(Truncation trunc, std::vector<MPoly> gens);

	const Truncation& truncation() const { return trunc_; }
	const std::vector<MPoly>& generators() const { return gens_; }

	// Reduced monic Groebner basis; unique for (ideal, order), so
	// recomputation is bit-identical.
	const std::vector<MPoly>& groebner() const;
	// transform()[i] holds cofactors writing groebner()[i] over generators().
	const std::vector<std::vector<MPoly>>& transform() const;

	bool is_unit() const;

private:
	struct Cache {
		std::once_flag once;
		std::vector<MPoly> basis;
		std::vector<std::vector<MPoly>> rows;
	};
	void fill_cache() const;

	Truncation trunc_;
	std::vector<MPoly> gens_;
	std::shared_ptr<Cache> cache_;
};

TruncatedIdeal make_ideal(const Truncation& trunc, std::span<const DiffPoly> gens);

/// Exact membership data: f = sum_i cofactors[i] * generators[i]
/// (saturation queries additionally carry h^exponent on the left).
struct MembershipCertificate {
	std::vector<MPoly> cofactors;
	int exponent = 0;
};

bool ideal_member(const MPoly& f, const TruncatedIdeal& I,
                  MembershipCertificate* cert = nullptr);
bool ideal_member(const DiffPoly& f, const TruncatedIdeal& I,
                  MembershipCertificate* cert = nullptr);

// Remainder of f on division by the reduced Groebner basis of I.
MPoly normal_form_mod(const MPoly& f, const TruncatedIdeal& I);

bool verify_membership(const MPoly& f, const TruncatedIdeal& I,
                       const MembershipCertificate& cert);

/// Radical-division I : h^infty via the auxiliary-variable elimination
/// (adjoin t, add 1 - t*h, eliminate t).
TruncatedIdeal saturate(const TruncatedIdeal& I, const MPoly& h);
TruncatedIdeal saturate(const TruncatedIdeal& I, const DiffPoly& h);

/// Least r <= max_exponent with h^r * f in I, plus the cofactors for
/// h^r * f; empty when no such r is found.
std::optional<MembershipCertificate> saturation_member(const TruncatedIdeal& I, const MPoly& h,
                                                       const MPoly& f, int max_exponent = 256);

// Same truncation required; equality of reduced Groebner bases.
bool ideal_equal_trunc(const TruncatedIdeal& I, const TruncatedIdeal& J);

/// Bounded primality refutation. Searches f * g in I with f, g not in I,
/// where f runs over normal monomials of degree <= cap and two-term
/// integer combinations of them, and g is found exactly as a kernel
/// vector of multiplication-by-f on the normal-monomial basis. The
/// no-violation verdict is not a primality proof.
struct PrimeProbeResult {
	bool not_prime = false;
	bool unit = false;
	int cap = 0;
	std::optional<MPoly> witness_f;
	std::optional<MPoly> witness_g;
};

PrimeProbeResult bounded_prime_probe(const TruncatedIdeal& I, int degree_cap);

} // namespace diffalg
