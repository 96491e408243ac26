#include <doctest.h>

#include <thread>

#include "testutil.hpp"

using namespace tu;

namespace {

// Independent S-polynomial reduction check (Buchberger criterion), written
// against the public MPoly API only.
MPoly lt_divide_full(MPoly f, const std::vector<MPoly>& basis)
{
	MPoly r(f.nvars(), f.order());
	while (!f.is_zero()) {
		const Expvec lm = f.leading_monomial();
		const Rational lc = f.leading_coeff();
		bool hit = false;
		for (const auto& b : basis) {
			if (b.is_zero())
				continue;
			if (expvec_divides(b.leading_monomial(), lm)) {
				f = f - b.times_term(expvec_sub(lm, b.leading_monomial()),
				                     lc / b.leading_coeff());
				hit = true;
				break;
			}
		}
		if (!hit) {
			r.add_term(lm, lc);
			MPoly t(f.nvars(), f.order());
			t.add_term(lm, lc);
			f = f - t;
		}
	}
	return r;
}

bool buchberger_criterion(const std::vector<MPoly>& basis)
{
	for (size_t i = 0; i < basis.size(); ++i)
		for (size_t j = i + 1; j < basis.size(); ++j) {
			const Expvec lcm = expvec_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
			MPoly s = basis[i].times_term(expvec_sub(lcm, basis[i].leading_monomial()),
			                              Rational(1) / basis[i].leading_coeff()) -
			          basis[j].times_term(expvec_sub(lcm, basis[j].leading_monomial()),
			                              Rational(1) / basis[j].leading_coeff());
			if (!lt_divide_full(s, basis).is_zero())
				return false;
		}
	return true;
}

TruncatedIdeal ideal_of(const AmbientPtr& a, const std::vector<std::string>& gens)
{
	std::vector<DiffPoly> ps;
	for (const auto& s : gens)
		ps.push_back(P(a, s));
	return make_ideal(truncation_of(ps), ps);
}

} // namespace

TEST_CASE("groebner bases of simple ideals")
{
	auto a = ctx(0, 3); // plain polynomial ring in x[1], x[2], x[3]
	SUBCASE("principal ideal is its own basis")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]"});
		REQUIRE(I.groebner().size() == 1);
		CHECK(from_mpoly(I.groebner()[0], I.truncation(), a) == P(a, "x[1]"));
	}
	SUBCASE("2x2 linear elimination: {y+z, y-z} -> {y, z}")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] + x[2]", "x[1] - x[2]"});
		REQUIRE(I.groebner().size() == 2);
		std::vector<DiffPoly> got;
		for (const auto& b : I.groebner())
			got.push_back(from_mpoly(b, I.truncation(), a));
		CHECK(((got[0] == P(a, "x[1]") && got[1] == P(a, "x[2]")) ||
		       (got[0] == P(a, "x[2]") && got[1] == P(a, "x[1]"))));
	}
	SUBCASE("zero ideal")
	{
		std::vector<DiffPoly> none;
		TruncatedIdeal I = make_ideal(make_truncation({iv(0, 0, {}), iv(0, 1, {})}), none);
		CHECK(I.groebner().empty());
	}
	SUBCASE("a classic nonlinear pair satisfies the Buchberger criterion")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]^2 - x[2]", "x[1] * x[2] - x[3]"});
		CHECK(buchberger_criterion(I.groebner()));
		CHECK(!I.is_unit());
	}
}

TEST_CASE("membership with verified certificates")
{
	auto a = ctx(0, 3);
	SUBCASE("difference of generators")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]", "x[1] + x[2]"});
		MembershipCertificate cert;
		REQUIRE(ideal_member(P(a, "x[2]"), I, &cert));
		CHECK(verify_membership(to_mpoly(P(a, "x[2]"), I.truncation()), I, cert));
	}
	SUBCASE("y is not in (y z)")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] * x[2]"});
		CHECK(!ideal_member(P(a, "x[1]"), I));
		CHECK(!linear_membership_oracle(P(a, "x[1]"), {P(a, "x[1] * x[2]")}, 6));
	}
	SUBCASE("zero is everywhere")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]"});
		CHECK(ideal_member(DiffPoly::zero(a), I));
	}
	SUBCASE("truncation violation is reported")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]"});
		CHECK_THROWS_AS(ideal_member(P(a, "x[3]"), I), value_error);
	}
}

TEST_CASE("membership agrees with the degree-bounded linear-algebra oracle")
{
	Rng rng(777);
	auto a = ctx(0, 3);
	int checked = 0;
	// fixed full-variable window so probes never fall outside the truncation
	Truncation trunc = make_truncation({iv(0, 0, {}), iv(0, 1, {}), iv(0, 2, {})});
	while (checked < 40) {
		std::vector<DiffPoly> gens;
		const int k = rng.uniform(1, 3);
		for (int i = 0; i < k; ++i)
			gens.push_back(rng.nonconstant_poly(a, 0, 3, 3));
		TruncatedIdeal I = make_ideal(trunc, gens);

		// a member by construction and a random probe polynomial
		DiffPoly member = gens[0] * rng.poly(a, 0, 2, 2);
		if (k > 1)
			member = member + gens[1];
		DiffPoly probe = rng.poly(a, 0, 3, 3);

		int maxdeg = 0;
		for (const auto& g : gens)
			maxdeg = std::max(maxdeg, g.total_degree());
		for (const DiffPoly& f : {member, probe}) {
			MembershipCertificate cert;
			const bool inside = ideal_member(f, I, &cert);
			int cap = f.total_degree() + maxdeg + 2;
			if (inside) {
				REQUIRE(verify_membership(to_mpoly(f, I.truncation()), I, cert));
				for (size_t t = 0; t < cert.cofactors.size(); ++t)
					if (!cert.cofactors[t].is_zero())
						cap = std::max(cap, cert.cofactors[t].total_degree() +
						                        gens[t].total_degree());
				CHECK(linear_membership_oracle(f, gens, cap));
			} else {
				CHECK(!linear_membership_oracle(f, gens, cap));
			}
		}
		++checked;
	}
}

TEST_CASE("saturation fixtures")
{
	auto a = ctx(0, 3);
	SUBCASE("(y z) : y^inf = (z)")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] * x[2]"});
		TruncatedIdeal S = saturate(I, to_mpoly(P(a, "x[1]"), I.truncation()));
		REQUIRE(S.groebner().size() == 1);
		CHECK(from_mpoly(S.groebner()[0], S.truncation(), a) == P(a, "x[2]"));
		// exponent certificate: x[2] needs r = 1
		auto cert = saturation_member(I, to_mpoly(P(a, "x[1]"), I.truncation()),
		                              to_mpoly(P(a, "x[2]"), I.truncation()));
		REQUIRE(cert.has_value());
		CHECK(cert->exponent == 1);
	}
	SUBCASE("(y^2) : y^inf = (1)")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]^2"});
		TruncatedIdeal S = saturate(I, to_mpoly(P(a, "x[1]"), I.truncation()));
		CHECK(S.is_unit());
		auto cert = saturation_member(I, to_mpoly(P(a, "x[1]"), I.truncation()),
		                              to_mpoly(P(a, "1"), I.truncation()));
		REQUIRE(cert.has_value());
		CHECK(cert->exponent == 2);
	}
	SUBCASE("saturation by a unit changes nothing")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] * x[2]"});
		TruncatedIdeal S = saturate(I, to_mpoly(P(a, "2"), I.truncation()));
		CHECK(ideal_equal_trunc(I, S));
	}
	SUBCASE("every input generator stays in the saturation with r = 0")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] * x[2]", "x[2] * x[3]"});
		TruncatedIdeal S = saturate(I, to_mpoly(P(a, "x[2]"), I.truncation()));
		for (const auto& g : I.generators())
			CHECK(ideal_member(g, S));
	}
	SUBCASE("zero h is rejected")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]"});
		CHECK_THROWS_AS(saturate(I, to_mpoly(DiffPoly::zero(a), I.truncation())), value_error);
	}
}

TEST_CASE("ideal equality via reduced bases")
{
	auto a = ctx(0, 2);
	CHECK(ideal_equal_trunc(ideal_of(a, {"x[1]"}), ideal_of(a, {"2 * x[1]"})));
	CHECK(!ideal_equal_trunc(ideal_of(a, {"x[1]"}), ideal_of(a, {"x[1]^2"})));
	TruncatedIdeal I = ideal_of(a, {"x[1] + x[2]"});
	CHECK(ideal_equal_trunc(I, I));
}

TEST_CASE("reduced groebner bases are reproducible bit-exactly")
{
	auto a = ctx(0, 3);
	auto build = [&] {
		return ideal_of(a, {"x[1]^2 - x[2] * x[3]", "x[1] * x[3] - x[2]", "x[2]^2 - x[1]"});
	};
	TruncatedIdeal I1 = build();
	TruncatedIdeal I2 = build();
	REQUIRE(I1.groebner().size() == I2.groebner().size());
	for (size_t i = 0; i < I1.groebner().size(); ++i)
		CHECK(I1.groebner()[i] == I2.groebner()[i]);
	CHECK(buchberger_criterion(I1.groebner()));
}

TEST_CASE("random bases satisfy the Buchberger criterion")
{
	Rng rng(4242);
	auto a = ctx(0, 3);
	for (int t = 0; t < 25; ++t) {
		std::vector<DiffPoly> gens;
		const int k = rng.uniform(1, 3);
		for (int i = 0; i < k; ++i)
			gens.push_back(rng.nonconstant_poly(a, 0, 3, 3));
		TruncatedIdeal I = make_ideal(truncation_of(gens), gens);
		CHECK(buchberger_criterion(I.groebner()));
		// transform rows reproduce the basis exactly
		const auto& rows = I.transform();
		for (size_t b = 0; b < I.groebner().size(); ++b) {
			MPoly sum(I.groebner()[b].nvars(), I.groebner()[b].order());
			for (size_t g = 0; g < gens.size(); ++g)
				sum = sum + rows[b][g] * I.generators()[g];
			CHECK(sum == I.groebner()[b]);
		}
	}
}

TEST_CASE("groebner cache fills once under concurrent readers")
{
	auto a = ctx(0, 3);
	TruncatedIdeal I = ideal_of(a, {"x[1]^2 - x[2] * x[3]", "x[1] * x[3] - x[2]"});
	TruncatedIdeal J = I; // copies share the compute-once cache
	std::vector<std::thread> workers;
	std::vector<std::vector<MPoly>> seen(8);
	for (int t = 0; t < 8; ++t)
		workers.emplace_back([&, t] { seen[t] = (t % 2 ? I : J).groebner(); });
	for (auto& w : workers)
		w.join();
	for (int t = 1; t < 8; ++t)
		CHECK(seen[t] == seen[0]);
}

TEST_CASE("bounded prime probe")
{
	auto a = ctx(0, 2);
	SUBCASE("(y z) is refuted at degree 1")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1] * x[2]"});
		PrimeProbeResult pr = bounded_prime_probe(I, 1);
		REQUIRE(pr.not_prime);
		REQUIRE(!pr.unit);
		DiffPoly f = from_mpoly(*pr.witness_f, I.truncation(), a);
		DiffPoly g = from_mpoly(*pr.witness_g, I.truncation(), a);
		CHECK(ideal_member(f * g, I));
		CHECK(!ideal_member(f, I));
		CHECK(!ideal_member(g, I));
		CHECK(((f == P(a, "x[1]") && g == P(a, "x[2]")) ||
		       (f == P(a, "x[2]") && g == P(a, "x[1]"))));
	}
	SUBCASE("(y) shows no violation up to degree 2")
	{
		TruncatedIdeal I = ideal_of(a, {"x[1]"});
		PrimeProbeResult pr = bounded_prime_probe(I, 2);
		CHECK(!pr.not_prime);
	}
	SUBCASE("unit ideal reported as not prime")
	{
		TruncatedIdeal I = ideal_of(a, {"1"});
		PrimeProbeResult pr = bounded_prime_probe(I, 1);
		CHECK(pr.not_prime);
		CHECK(pr.unit);
	}
	SUBCASE("(x^2 - 1) splits into degree-1 witnesses")
	{
		auto a1 = ctx(0, 1);
		TruncatedIdeal I = ideal_of(a1, {"x[1]^2 - 1"});
		PrimeProbeResult pr = bounded_prime_probe(I, 1);
		REQUIRE(pr.not_prime);
		DiffPoly f = from_mpoly(*pr.witness_f, I.truncation(), a1);
		DiffPoly g = from_mpoly(*pr.witness_g, I.truncation(), a1);
		CHECK(ideal_member(f * g, I));
		CHECK(!ideal_member(f, I));
		CHECK(!ideal_member(g, I));
	}
}
