#include "diffalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "diffalg/gaction.hpp"
#include "diffalg/textio.hpp"

namespace diffalg {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kInternal = 70;

struct Session {
	SessionConfig cfg;
	AmbientPtr ambient;
	std::ostream& out;

	json record;

	explicit Session(std::ostream& o) : out(o) {}

	void stamp(const std::string& command)
	{
		record["command"] = command;
		record["caps"] = {{"degree", cfg.degree_cap}, {"order", cfg.order_cap}};
		record["ambient"] = {{"m", cfg.m}, {"n", cfg.n}, {"group", group_label()}};
	}

	std::string group_label() const
	{
		std::string s;
		for (const auto& e : cfg.group.elements())
			s += (s.empty() ? "" : " ") + e;
		return s;
	}

	json truncation_json(const Truncation& t) const
	{
		json arr = json::array();
		for (const auto& v : t.vars)
			arr.push_back(print_indet(v, *ambient));
		return arr;
	}

	int finish(int exit_code, const std::string& status)
	{
		if (cfg.machine) {
			record["status"] = status;
			record["exit"] = exit_code;
			out << record.dump() << "\n";
		}
		return exit_code;
	}

	void text(const std::string& line)
	{
		if (!cfg.machine)
			out << line << "\n";
	}
};

std::string kappa_str(const DerivOp& kappa)
{
	std::string s = "[";
	for (int k = 0; k < kappa.m(); ++k)
		s += (k ? "," : "") + std::to_string(kappa.exponents[k]);
	return s + "]";
}

AutoreducedSet load_lambda(const Session& s, const std::string& path)
{
	return require_autoreduced(load_poly_file(s.ambient, path));
}

// ------------------------------------------------------------- subcommands

int cmd_rank(Session& s, const std::string& poly_file)
{
	auto polys = load_poly_file(s.ambient, poly_file);
	json items = json::array();
	for (const auto& f : polys) {
		if (f.is_constant())
			throw constant_error("rank: constant polynomial '" + print_poly(f) + "'");
		json item;
		item["poly"] = print_poly(f);
		item["leader"] = print_indet(f.leader(), *s.ambient);
		item["degree"] = f.degree_in_leader();
		item["separant"] = print_poly(f.separant());
		item["initial"] = print_poly(f.initial());
		items.push_back(item);
		s.text("poly: " + print_poly(f));
		s.text("  leader: " + print_indet(f.leader(), *s.ambient) +
		       "  degree: " + std::to_string(f.degree_in_leader()));
		s.text("  separant: " + print_poly(f.separant()));
		s.text("  initial: " + print_poly(f.initial()));
	}
	s.record["items"] = items;
	return s.finish(kOk, "ok");
}

int cmd_reduce(Session& s, const std::string& lambda_file, const std::string& poly_file)
{
	AutoreducedSet lambda = load_lambda(s, lambda_file);
	auto polys = load_poly_file(s.ambient, poly_file);
	json items = json::array();
	for (const auto& f : polys) {
		ReductionCertificate cert = diff_remainder(f, lambda);
		json item;
		item["poly"] = print_poly(f);
		item["remainder"] = print_poly(cert.remainder);
		item["exponent"] = cert.exponent;
		json cofs = json::array();
		for (const auto& c : cert.cofactors)
			cofs.push_back({{"index", c.index},
			                {"kappa", kappa_str(c.kappa)},
			                {"coeff", print_poly(c.coeff)}});
		item["cofactors"] = cofs;
		item["verified"] = verify_certificate(f, lambda, cert);
		items.push_back(item);
		s.text("poly: " + print_poly(f));
		s.text("  remainder: " + print_poly(cert.remainder));
		s.text("  exponent: " + std::to_string(cert.exponent));
		for (const auto& c : cert.cofactors)
			s.text("  cofactor idx=" + std::to_string(c.index) + " kappa=" + kappa_str(c.kappa) +
			       ": " + print_poly(c.coeff));
	}
	s.record["items"] = items;
	return s.finish(kOk, "ok");
}

int cmd_autoreduced(Session& s, const std::string& lambda_file)
{
	auto polys = load_poly_file(s.ambient, lambda_file);
	AutoreducedCheck check = validate_autoreduced(polys);
	if (!check.ok()) {
		s.record["violation"] = check.violation;
		s.record["offenders"] = {check.offender_a, check.offender_b};
		s.text("not autoreduced: " + check.violation);
		return s.finish(kRefuted, "refuted");
	}
	json elems = json::array();
	for (size_t i = 0; i < check.set->size(); ++i) {
		elems.push_back(print_poly((*check.set)[i]));
		s.text(std::to_string(i) + ": " + print_poly((*check.set)[i]));
	}
	s.record["elements"] = elems;
	return s.finish(kOk, "holds");
}

int cmd_compare_sets(Session& s, const std::string& a_file, const std::string& b_file)
{
	AutoreducedSet a = load_lambda(s, a_file);
	AutoreducedSet b = load_lambda(s, b_file);
	Ordering c = compare_autoreduced_sets(a, b);
	const std::string word =
	    c == Ordering::Less ? "less" : (c == Ordering::Greater ? "greater" : "equal");
	s.record["comparison"] = word;
	s.text(word);
	return s.finish(kOk, "ok");
}

int cmd_coherent(Session& s, const std::string& lambda_file)
{
	AutoreducedSet lambda = load_lambda(s, lambda_file);
	CoherenceResult res = is_coherent(lambda);
	s.record["pairs_checked"] = res.checks.size();
	json pairs = json::array();
	for (const auto& chk : res.checks)
		pairs.push_back({{"i", chk.pair.i},
		                 {"j", chk.pair.j},
		                 {"u", print_indet(chk.pair.u, *s.ambient)},
		                 {"delta_poly", print_poly(chk.dpoly)},
		                 {"member", chk.member}});
	s.record["pairs"] = pairs;
	if (res.coherent) {
		s.text("coherent (" + std::to_string(res.checks.size()) + " delta pairs checked)");
		return s.finish(kOk, "holds");
	}
	const auto& bad = res.checks[*res.failing];
	s.text("not coherent: pair (" + std::to_string(bad.pair.i) + ", " +
	       std::to_string(bad.pair.j) + ") at u = " + print_indet(bad.pair.u, *s.ambient));
	s.text("  delta polynomial: " + print_poly(bad.dpoly));
	s.text("  fails membership in the saturated lower ideal");
	return s.finish(kRefuted, "refuted");
}

int cmd_charset_check(Session& s, const std::string& lambda_file)
{
	auto polys = load_poly_file(s.ambient, lambda_file);
	CharSetReport rep = charset_report(polys, s.cfg.degree_cap, s.cfg.order_cap);
	s.record["autoreduced"] = rep.autoreduced;
	if (!rep.autoreduced) {
		s.record["violation"] = rep.autoreduced_violation;
		s.text("autoreduced: NO (" + rep.autoreduced_violation + ")");
		return s.finish(kRefuted, "refuted");
	}
	s.text("autoreduced: yes");
	s.record["coherent"] = rep.coherence->coherent;
	if (rep.coherence->coherent) {
		s.text("coherent: yes (" + std::to_string(rep.coherence->checks.size()) + " pairs)");
	} else {
		const auto& bad = rep.coherence->checks[*rep.coherence->failing];
		s.record["coherence_witness"] = print_poly(bad.dpoly);
		s.text("coherent: NO, delta polynomial " + print_poly(bad.dpoly) +
		       " escapes the saturated lower ideal");
	}
	s.record["reduced_element_found"] = rep.reduced_probe->violation;
	if (rep.reduced_probe->violation) {
		s.record["reduced_element"] = print_poly(*rep.reduced_probe->witness);
		s.text("reduced member of (Lambda):H^inf found: " +
		       print_poly(*rep.reduced_probe->witness));
	} else {
		s.text("no nonzero reduced member of (Lambda):H^inf up to caps");
	}
	s.record["prime_violation"] = rep.prime_probe->not_prime;
	if (rep.prime_probe->not_prime) {
		if (rep.prime_probe->unit) {
			s.record["unit_ideal"] = true;
			s.text("saturated ideal is the unit ideal: not prime");
		} else {
			DiffPoly wf = from_mpoly(*rep.prime_probe->witness_f, rep.truncation_used, s.ambient);
			DiffPoly wg = from_mpoly(*rep.prime_probe->witness_g, rep.truncation_used, s.ambient);
			s.record["prime_witness_f"] = print_poly(wf);
			s.record["prime_witness_g"] = print_poly(wg);
			s.text("prime probe: violation, f = " + print_poly(wf) + ", g = " + print_poly(wg));
		}
	} else {
		s.text("prime probe: no violation up to degree " + std::to_string(s.cfg.degree_cap));
	}
	s.record["truncation"] = s.truncation_json(rep.truncation_used);
	if (rep.refuted())
		return s.finish(kRefuted, "refuted");
	s.text("no violation found up to caps (not a proof)");
	return s.finish(kInconclusive, "inconclusive");
}

int cmd_member(Session& s, const std::string& lambda_file, const std::string& poly_file)
{
	AutoreducedSet lambda = load_lambda(s, lambda_file);
	auto polys = load_poly_file(s.ambient, poly_file);
	bool all = true;
	json items = json::array();
	for (const auto& f : polys) {
		ReductionCertificate cert = diff_remainder(f, lambda);
		const bool member = cert.remainder.is_zero();
		all = all && member;
		items.push_back({{"poly", print_poly(f)},
		                 {"member", member},
		                 {"remainder", print_poly(cert.remainder)}});
		s.text(print_poly(f) + (member ? ": member" : ": NOT a member, remainder " +
		                                                  print_poly(cert.remainder)));
	}
	s.record["items"] = items;
	return all ? s.finish(kOk, "holds") : s.finish(kRefuted, "refuted");
}

int cmd_saturate(Session& s, const std::string& ideal_file, const std::string& h_expr)
{
	auto gens = load_poly_file(s.ambient, ideal_file);
	DiffPoly h = parse_poly(s.ambient, h_expr);
	if (h.is_zero())
		throw value_error("saturate: h must be nonzero");
	std::vector<DiffPoly> all = gens;
	all.push_back(h);
	Truncation trunc = truncation_of(all);
	TruncatedIdeal sat = saturate(make_ideal(trunc, gens), to_mpoly(h, trunc));
	json basis = json::array();
	for (const auto& b : sat.groebner()) {
		DiffPoly p = from_mpoly(b, trunc, s.ambient);
		basis.push_back(print_poly(p));
		s.text(print_poly(p));
	}
	if (sat.groebner().empty())
		s.text("0");
	s.record["basis"] = basis;
	s.record["truncation"] = s.truncation_json(trunc);
	return s.finish(kOk, "ok");
}

int cmd_ideal_eq(Session& s, const std::string& a_file, const std::string& b_file)
{
	AutoreducedSet a = load_lambda(s, a_file);
	AutoreducedSet b = load_lambda(s, b_file);
	IdealEqualityReport rep = ideal_equal_charsets_report(a, b);
	s.record["a_subset_of_sat_b"] = rep.a_subset_of_sat_b;
	s.record["h_a_outside_sat_b"] = rep.h_a_outside_sat_b;
	s.record["b_subset_of_sat_a"] = rep.b_subset_of_sat_a;
	s.record["h_b_outside_sat_a"] = rep.h_b_outside_sat_a;
	s.text(std::string("A in (B):H_B^inf: ") + (rep.a_subset_of_sat_b ? "yes" : "no"));
	s.text(std::string("H_A outside (B):H_B^inf: ") + (rep.h_a_outside_sat_b ? "yes" : "no"));
	s.text(std::string("B in (A):H_A^inf: ") + (rep.b_subset_of_sat_a ? "yes" : "no"));
	s.text(std::string("H_B outside (A):H_A^inf: ") + (rep.h_b_outside_sat_a ? "yes" : "no"));
	if (rep.equal()) {
		s.text("equal");
		return s.finish(kOk, "holds");
	}
	s.text("not equal");
	return s.finish(kRefuted, "refuted");
}

int cmd_g_invariant(Session& s, const std::string& lambda_file)
{
	AutoreducedSet lambda = load_lambda(s, lambda_file);
	InvarianceReport rep = g_invariance_check(lambda);
	s.record["order_cap_used"] = rep.order_cap_used;
	json elems = json::array();
	for (const auto& chk : rep.per_element) {
		elems.push_back({{"g", s.cfg.group.name_of(chk.g)},
		                 {"lambda_g_in_sat_lambda", chk.lambda_g_in_sat_lambda},
		                 {"sigma_h_outside_sat_lambda", chk.sigma_h_outside_sat_lambda},
		                 {"lambda_in_sat_lambda_g", chk.lambda_in_sat_lambda_g},
		                 {"h_outside_sat_lambda_g", chk.h_outside_sat_lambda_g}});
		s.text("g = " + s.cfg.group.name_of(chk.g) + ": " + (chk.holds() ? "ok" : "FAILS") +
		       " (Lg in satL " + (chk.lambda_g_in_sat_lambda ? "y" : "n") + ", sH out satL " +
		       (chk.sigma_h_outside_sat_lambda ? "y" : "n") + ", L in satLg " +
		       (chk.lambda_in_sat_lambda_g ? "y" : "n") + ", H out satLg " +
		       (chk.h_outside_sat_lambda_g ? "y" : "n") + ")");
	}
	s.record["per_element"] = elems;
	if (rep.invariant) {
		s.text("G-invariant");
		return s.finish(kOk, "holds");
	}
	s.text("not G-invariant");
	return s.finish(kRefuted, "refuted");
}

int cmd_diagonal(Session& s, const std::string& lambda_file)
{
	AutoreducedSet lambda = load_lambda(s, lambda_file);
	std::vector<DiffPoly> gens = diagonal_ideal(lambda);
	json out = json::array();
	for (const auto& g : gens) {
		out.push_back(print_poly(g));
		s.text(print_poly(g));
	}
	s.record["generators"] = out;
	return s.finish(kOk, "ok");
}

int cmd_sigma(Session& s, const std::string& element, const std::string& poly_file)
{
	auto polys = load_poly_file(s.ambient, poly_file);
	json items = json::array();
	for (const auto& f : polys) {
		DiffPoly image = sigma_apply(element, f);
		items.push_back({{"poly", print_poly(f)}, {"image", print_poly(image)}});
		s.text(print_poly(image));
	}
	s.record["items"] = items;
	return s.finish(kOk, "ok");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"exact differential-algebra workbench"};
	app.require_subcommand(1);

	Session s(out);
	std::string group_spec = "trivial";
	app.add_option("--m", s.cfg.m, "number of derivations")->capture_default_str();
	app.add_option("--n", s.cfg.n, "number of base variables per block")->capture_default_str();
	app.add_option("--group", group_spec,
	               "group: trivial, cyclic:k, sym:k, klein, or a group file")
	    ->capture_default_str();
	app.add_option("--degree-cap", s.cfg.degree_cap, "degree cap for bounded probes")
	    ->capture_default_str();
	app.add_option("--order-cap", s.cfg.order_cap, "derivative-order cap for bounded probes")
	    ->capture_default_str();
	app.add_flag("--machine", s.cfg.machine, "one self-delimiting JSON record per result");

	std::string poly_file, lambda_file, a_file, b_file, ideal_file, h_expr, element;

	CLI::App* rank = app.add_subcommand("rank", "leader, degree, separant, initial");
	rank->add_option("--poly", poly_file, "polynomial file")->required();

	CLI::App* reduce = app.add_subcommand("reduce", "differential division with certificate");
	reduce->add_option("--lambda", lambda_file, "autoreduced set file")->required();
	reduce->add_option("--poly", poly_file, "polynomial file")->required();

	CLI::App* autored = app.add_subcommand("autoreduced", "validate an autoreduced set");
	autored->add_option("--lambda", lambda_file, "candidate set file")->required();

	CLI::App* cmp = app.add_subcommand("compare-sets", "ranking on autoreduced sets");
	cmp->add_option("--a", a_file, "first set")->required();
	cmp->add_option("--b", b_file, "second set")->required();

	CLI::App* coher = app.add_subcommand("coherent", "coherence of an autoreduced set");
	coher->add_option("--lambda", lambda_file, "autoreduced set file")->required();

	CLI::App* charset = app.add_subcommand("charset-check", "Rosenfeld-criterion battery");
	charset->add_option("--lambda", lambda_file, "candidate set file")->required();

	CLI::App* member = app.add_subcommand("member", "membership by remainder");
	member->add_option("--lambda", lambda_file, "characteristic set file")->required();
	member->add_option("--poly", poly_file, "polynomial file")->required();

	CLI::App* sat = app.add_subcommand("saturate", "radical-division I : h^inf");
	sat->add_option("--ideal", ideal_file, "generator file")->required();
	sat->add_option("--by", h_expr, "polynomial expression to saturate by")->required();

	CLI::App* ideq = app.add_subcommand("ideal-eq", "ideal equality for characteristic sets");
	ideq->add_option("--a", a_file, "first characteristic set")->required();
	ideq->add_option("--b", b_file, "second characteristic set")->required();

	CLI::App* ginv = app.add_subcommand("g-invariant", "G-invariance of the presented ideal");
	ginv->add_option("--lambda", lambda_file, "characteristic set file")->required();

	CLI::App* diag = app.add_subcommand("diagonal", "diagonal ideal generators");
	diag->add_option("--lambda", lambda_file, "identity-block set file")->required();

	CLI::App* sigma = app.add_subcommand("sigma", "apply a group element");
	sigma->add_option("--g", element, "group element name")->required();
	sigma->add_option("--poly", poly_file, "polynomial file")->required();

	std::vector<const char*> argv;
	argv.push_back("diffalg");
	for (const auto& a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp& e) {
		out << app.help();
		return kOk;
	} catch (const CLI::ParseError& e) {
		err << "usage error: " << e.what() << "\n";
		return kUsage;
	}

	try {
		s.cfg.group = load_group(group_spec);
		s.ambient = make_ambient(s.cfg.m, s.cfg.n, s.cfg.group);
		if (s.cfg.degree_cap < 1 || s.cfg.order_cap < 0)
			throw value_error("caps must satisfy degree >= 1, order >= 0");

		if (rank->parsed()) {
			s.stamp("rank");
			return cmd_rank(s, poly_file);
		}
		if (reduce->parsed()) {
			s.stamp("reduce");
			return cmd_reduce(s, lambda_file, poly_file);
		}
		if (autored->parsed()) {
			s.stamp("autoreduced");
			return cmd_autoreduced(s, lambda_file);
		}
		if (cmp->parsed()) {
			s.stamp("compare-sets");
			return cmd_compare_sets(s, a_file, b_file);
		}
		if (coher->parsed()) {
			s.stamp("coherent");
			return cmd_coherent(s, lambda_file);
		}
		if (charset->parsed()) {
			s.stamp("charset-check");
			return cmd_charset_check(s, lambda_file);
		}
		if (member->parsed()) {
			s.stamp("member");
			return cmd_member(s, lambda_file, poly_file);
		}
		if (sat->parsed()) {
			s.stamp("saturate");
			return cmd_saturate(s, ideal_file, h_expr);
		}
		if (ideq->parsed()) {
			s.stamp("ideal-eq");
			return cmd_ideal_eq(s, a_file, b_file);
		}
		if (ginv->parsed()) {
			s.stamp("g-invariant");
			return cmd_g_invariant(s, lambda_file);
		}
		if (diag->parsed()) {
			s.stamp("diagonal");
			return cmd_diagonal(s, lambda_file);
		}
		if (sigma->parsed()) {
			s.stamp("sigma");
			return cmd_sigma(s, element, poly_file);
		}
		err << "usage error: no subcommand\n";
		return kUsage;
	} catch (const parse_error& e) {
		err << "parse error: " << e.what() << "\n";
		return kData;
	} catch (const ambient_error& e) {
		err << "data error: " << e.what() << "\n";
		return kData;
	} catch (const constant_error& e) {
		err << "data error: " << e.what() << "\n";
		return kData;
	} catch (const value_error& e) {
		err << "data error: " << e.what() << "\n";
		return kData;
	} catch (const error& e) {
		err << "internal error: " << e.what() << "\n";
		return kInternal;
	}
}

} // namespace diffalg
