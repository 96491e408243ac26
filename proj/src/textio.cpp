#include "diffalg/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace diffalg {

namespace {

struct Scanner {
	std::string_view text;
	size_t pos = 0;
	int line;
	int col = 1;

	explicit Scanner(std::string_view t, int start_line) : text(t), line(start_line) {}

	void skip_ws()
	{
		while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
			advance();
	}

	bool eof()
	{
		skip_ws();
		return pos >= text.size();
	}

	char peek()
	{
		skip_ws();
		return pos < text.size() ? text[pos] : '\0';
	}

	// peek without skipping whitespace first (used to detect separation)
	char raw_peek() const { return pos < text.size() ? text[pos] : '\0'; }

	void advance()
	{
		if (text[pos] == '\n') {
			++line;
			col = 1;
		} else {
			++col;
		}
		++pos;
	}

	[[noreturn]] void fail(const std::string& msg)
	{
		skip_ws();
		throw parse_error(msg, line, col);
	}

	bool eat(char c)
	{
		if (peek() != c)
			return false;
		advance();
		return true;
	}

	void expect(char c)
	{
		if (!eat(c))
			fail(std::string("expected '") + c + "'");
	}

	long number()
	{
		skip_ws();
		if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
			fail("expected a number");
		long v = 0;
		while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
			v = v * 10 + (text[pos] - '0');
			if (v > 1000000000L)
				fail("number too large");
			advance();
		}
		return v;
	}

	// name: letters, digits, '_' -- first char a letter or '_'
	std::string name()
	{
		skip_ws();
		if (pos >= text.size() ||
		    !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
			fail("expected a name");
		std::string s;
		while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
		                             text[pos] == '_')) {
			s += text[pos];
			advance();
		}
		return s;
	}

	// token inside x[..]: a run of name characters (element names may be
	// all digits, e.g. permutation words)
	std::string bracket_token()
	{
		skip_ws();
		std::string s;
		while (pos < text.size() &&
		       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
			s += text[pos];
			advance();
		}
		if (s.empty())
			fail("expected an element name or index");
		return s;
	}
};

struct PolyParser {
	Scanner& sc;
	const AmbientPtr& ambient;

	DiffPoly parse()
	{
		DiffPoly p = poly();
		if (!sc.eof())
			sc.fail("trailing input after polynomial");
		return p;
	}

	DiffPoly poly()
	{
		bool neg = false;
		if (sc.eat('-'))
			neg = true;
		else
			(void)sc.eat('+');
		DiffPoly acc = term();
		if (neg)
			acc = -acc;
		for (;;) {
			if (sc.eat('+'))
				acc = acc + term();
			else if (sc.eat('-'))
				acc = acc - term();
			else
				break;
		}
		return acc;
	}

	bool at_rational()
	{
		const char c = sc.peek();
		return std::isdigit(static_cast<unsigned char>(c));
	}

	Rational rational()
	{
		long num = sc.number();
		long den = 1;
		if (sc.eat('/')) {
			den = sc.number();
			if (den == 0)
				sc.fail("zero denominator");
		}
		Rational q(num, den);
		q.canonicalize();
		return q;
	}

	DiffPoly term()
	{
		DiffPoly acc = factor();
		while (sc.eat('*'))
			acc = acc * factor();
		return acc;
	}

	DiffPoly factor()
	{
		const char c = sc.peek();
		if (c == '(') {
			sc.advance();
			DiffPoly inner = poly();
			sc.expect(')');
			return maybe_power_of(inner);
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
			return DiffPoly::constant(ambient, rational());
		if (c == 'd' || c == 'x')
			return maybe_power_of(indet());
		sc.fail("expected a factor");
	}

	DiffPoly maybe_power_of(const DiffPoly& base)
	{
		if (sc.eat('^')) {
			long e = sc.number();
			return base.pow(static_cast<int>(e));
		}
		return base;
	}

	DiffPoly indet()
	{
		DerivOp op = DerivOp::zero(ambient->m);
		for (;;) {
			sc.skip_ws();
			// a deriv is 'd' immediately followed by digits
			if (sc.raw_peek() == 'd' && sc.pos + 1 < sc.text.size() &&
			    std::isdigit(static_cast<unsigned char>(sc.text[sc.pos + 1]))) {
				sc.advance(); // 'd'
				long j = sc.number();
				if (j < 1 || j > ambient->m)
					sc.fail("derivation index out of range (derivations are d1..d" +
					        std::to_string(ambient->m) + ")");
				long e = 1;
				if (sc.raw_peek() == '^') {
					sc.advance();
					e = sc.number();
					if (e < 1)
						sc.fail("derivative exponent must be positive");
				}
				op.exponents[j - 1] += static_cast<int>(e);
				continue;
			}
			break;
		}
		if (sc.peek() != 'x')
			sc.fail("expected 'x[' after derivative operators");
		sc.advance();
		sc.expect('[');
		std::string tok = sc.bracket_token();
		int block = 0;
		long index;
		if (sc.eat(',')) {
			block = ambient->group.index_of(tok);
			if (block < 0)
				sc.fail("unknown group element '" + tok + "'");
			std::string idx = sc.bracket_token();
			for (char ch : idx)
				if (!std::isdigit(static_cast<unsigned char>(ch)))
					sc.fail("expected a variable index");
			index = std::stol(idx);
		} else {
			for (char ch : tok)
				if (!std::isdigit(static_cast<unsigned char>(ch)))
					sc.fail("expected a variable index (or element, index)");
			index = std::stol(tok);
		}
		sc.expect(']');
		if (index < 1 || index > ambient->n)
			sc.fail("variable index out of range (variables are 1.." +
			        std::to_string(ambient->n) + ")");
		return DiffPoly::indet(ambient,
		                       Indeterminate{block, static_cast<int>(index - 1), op});
	}
};

} // namespace

DiffPoly parse_poly(const AmbientPtr& ambient, std::string_view text, int line)
{
	Scanner sc(text, line);
	PolyParser p{sc, ambient};
	return p.parse();
}

std::vector<DiffPoly> parse_poly_lines(const AmbientPtr& ambient, std::string_view text)
{
	std::vector<DiffPoly> out;
	int line = 1;
	size_t start = 0;
	while (start <= text.size()) {
		size_t end = text.find('\n', start);
		std::string_view raw =
		    text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
		std::string_view body = raw.substr(0, raw.find('#'));
		bool blank = true;
		for (char c : body)
			if (!std::isspace(static_cast<unsigned char>(c))) {
				blank = false;
				break;
			}
		if (!blank)
			out.push_back(parse_poly(ambient, body, line));
		if (end == std::string_view::npos)
			break;
		start = end + 1;
		++line;
	}
	return out;
}

std::vector<DiffPoly> load_poly_file(const AmbientPtr& ambient, const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw value_error("cannot open polynomial file '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_poly_lines(ambient, buf.str());
}

std::string print_indet(const Indeterminate& u, const Ambient& ambient)
{
	std::string s;
	for (int k = 0; k < u.op.m(); ++k) {
		const int e = u.op.exponents[k];
		if (e == 0)
			continue;
		if (!s.empty())
			s += ' ';
		s += 'd' + std::to_string(k + 1);
		if (e > 1)
			s += '^' + std::to_string(e);
	}
	if (!s.empty())
		s += ' ';
	s += "x[";
	if (!ambient.group.is_trivial())
		s += ambient.group.name_of(u.block) + ",";
	s += std::to_string(u.index + 1) + "]";
	return s;
}

namespace {

std::string print_monomial(const Monomial& mono, const Ambient& ambient)
{
	std::string s;
	// descending rank, matching the canonical reading order
	for (auto it = mono.factors().rbegin(); it != mono.factors().rend(); ++it) {
		if (!s.empty())
			s += " * ";
		s += print_indet(it->first, ambient);
		if (it->second > 1)
			s += '^' + std::to_string(it->second);
	}
	return s;
}

} // namespace

std::string print_poly(const DiffPoly& f)
{
	if (f.is_zero())
		return "0";
	const Ambient& ambient = *f.ambient();
	std::string s;
	bool first = true;
	for (const auto& [mono, c] : f.terms()) {
		const bool neg = c < 0;
		Rational abs = neg ? Rational(-c) : c;
		std::string mag;
		if (mono.is_one())
			mag = rat_str(abs);
		else if (abs == 1)
			mag = print_monomial(mono, ambient);
		else
			mag = rat_str(abs) + " * " + print_monomial(mono, ambient);
		if (first) {
			s += neg ? "-" + mag : mag;
			first = false;
		} else {
			s += neg ? " - " : " + ";
			s += mag;
		}
	}
	return s;
}

std::string print_rank(const Rank& r, const Ambient& ambient)
{
	return "(" + print_indet(r.leader, ambient) + ", " + std::to_string(r.degree) + ")";
}

GroupSpec parse_group_text(std::string_view text)
{
	std::vector<std::string> lines;
	{
		size_t start = 0;
		while (start <= text.size()) {
			size_t end = text.find('\n', start);
			std::string_view raw = text.substr(
			    start, end == std::string_view::npos ? text.size() - start : end - start);
			std::string body(raw.substr(0, raw.find('#')));
			bool blank = true;
			for (char c : body)
				if (!std::isspace(static_cast<unsigned char>(c))) {
					blank = false;
					break;
				}
			if (!blank)
				lines.push_back(body);
			if (end == std::string_view::npos)
				break;
			start = end + 1;
		}
	}
	if (lines.empty())
		throw value_error("group file: empty");
	std::istringstream head(lines[0]);
	std::string kw;
	head >> kw;
	if (kw != "elements:")
		throw value_error("group file: first line must start with 'elements:'");
	std::vector<std::string> names;
	for (std::string n; head >> n;)
		names.push_back(n);
	if (names.empty())
		throw value_error("group file: no elements listed");
	const size_t l = names.size();
	if (lines.size() != l + 1)
		throw value_error("group file: expected " + std::to_string(l) + " table rows, found " +
		                  std::to_string(lines.size() - 1));
	auto index_of = [&](const std::string& n) {
		for (size_t i = 0; i < names.size(); ++i)
			if (names[i] == n)
				return static_cast<int>(i);
		throw value_error("group file: unknown element '" + n + "' in table");
	};
	std::vector<std::vector<int>> table(l, std::vector<int>(l));
	for (size_t i = 0; i < l; ++i) {
		std::istringstream row(lines[i + 1]);
		for (size_t j = 0; j < l; ++j) {
			std::string cell;
			if (!(row >> cell))
				throw value_error("group file: row " + std::to_string(i + 1) + " is too short");
			table[i][j] = index_of(cell);
		}
		std::string extra;
		if (row >> extra)
			throw value_error("group file: row " + std::to_string(i + 1) + " is too long");
	}
	return GroupSpec::from_table(std::move(names), std::move(table));
}

GroupSpec load_group(const std::string& spec)
{
	if (spec.empty() || spec == "trivial")
		return GroupSpec::trivial();
	if (spec == "klein")
		return GroupSpec::klein();
	if (spec.rfind("cyclic:", 0) == 0)
		return GroupSpec::cyclic(std::stoi(spec.substr(7)));
	if (spec.rfind("sym:", 0) == 0)
		return GroupSpec::symmetric(std::stoi(spec.substr(4)));
	std::ifstream in(spec);
	if (!in)
		throw value_error("unknown group spec or unreadable file '" + spec + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_group_text(buf.str());
}

} // namespace diffalg
