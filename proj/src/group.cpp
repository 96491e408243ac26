#include "diffalg/group.hpp"

#include <algorithm>
#include <numeric>

namespace diffalg {

GroupSpec GroupSpec::from_table(std::vector<std::string> elements,
                                std::vector<std::vector<int>> table)
{
	const int l = static_cast<int>(elements.size());
	if (l == 0)
		throw value_error("group: empty element list");
	for (int i = 0; i < l; ++i)
		for (int j = i + 1; j < l; ++j)
			if (elements[i] == elements[j])
				throw value_error("group: duplicate element name '" + elements[i] + "'");
	if (static_cast<int>(table.size()) != l)
		throw value_error("group: table must have one row per element");
	for (const auto& row : table) {
		if (static_cast<int>(row.size()) != l)
			throw value_error("group: ragged Cayley table");
		for (int v : row)
			if (v < 0 || v >= l)
				throw value_error("group: table entry out of range");
	}
	// identity must be the first element
	for (int j = 0; j < l; ++j)
		if (table[0][j] != j || table[j][0] != j)
			throw value_error("group: first element is not a two-sided identity");
	// associativity, exhaustive (l is small by construction)
	for (int a = 0; a < l; ++a)
		for (int b = 0; b < l; ++b)
			for (int c = 0; c < l; ++c)
				if (table[table[a][b]][c] != table[a][table[b][c]])
					throw value_error("group: associativity fails at (" + elements[a] + ", " +
					                  elements[b] + ", " + elements[c] + ")");
	std::vector<int> inverse(l, -1);
	for (int a = 0; a < l; ++a) {
		for (int b = 0; b < l; ++b)
			if (table[a][b] == 0 && table[b][a] == 0) {
				inverse[a] = b;
				break;
			}
		if (inverse[a] < 0)
			throw value_error("group: element '" + elements[a] + "' has no two-sided inverse");
	}
	GroupSpec g;
	g.elements_ = std::move(elements);
	g.table_ = std::move(table);
	g.inverse_ = std::move(inverse);
	return g;
}

GroupSpec GroupSpec::trivial()
{
	return from_table({"e"}, {{0}});
}

GroupSpec GroupSpec::cyclic(int k)
{
	if (k < 1)
		throw value_error("cyclic group order must be >= 1");
	std::vector<std::string> names;
	names.push_back("e");
	for (int i = 1; i < k; ++i)
		names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
	std::vector<std::vector<int>> table(k, std::vector<int>(k));
	for (int i = 0; i < k; ++i)
		for (int j = 0; j < k; ++j)
			table[i][j] = (i + j) % k;
	return from_table(std::move(names), std::move(table));
}

namespace {

// Permutations of {0..k-1} in lexicographic order; identity comes first.
std::vector<std::vector<int>> all_perms(int k)
{
	std::vector<int> p(k);
	std::iota(p.begin(), p.end(), 0);
	std::vector<std::vector<int>> out;
	do {
		out.push_back(p);
	} while (std::next_permutation(p.begin(), p.end()));
	return out;
}

std::string perm_name(const std::vector<int>& p)
{
	std::string s;
	for (int v : p)
		s += static_cast<char>('0' + v);
	return s;
}

} // namespace

GroupSpec GroupSpec::symmetric(int k)
{
	if (k < 1 || k > 5)
		throw value_error("symmetric group supported for 1 <= k <= 5");
	auto perms = all_perms(k);
	const int l = static_cast<int>(perms.size());
	std::vector<std::string> names;
	names.reserve(l);
	for (const auto& p : perms)
		names.push_back(perm_name(p));
	// product = apply right factor first: (p*q)(i) = p[q[i]]
	auto index_of_perm = [&](const std::vector<int>& p) {
		for (int i = 0; i < l; ++i)
			if (perms[i] == p)
				return i;
		return -1;
	};
	std::vector<std::vector<int>> table(l, std::vector<int>(l));
	for (int i = 0; i < l; ++i)
		for (int j = 0; j < l; ++j) {
			std::vector<int> prod(k);
			for (int t = 0; t < k; ++t)
				prod[t] = perms[i][perms[j][t]];
			table[i][j] = index_of_perm(prod);
		}
	return from_table(std::move(names), std::move(table));
}

GroupSpec GroupSpec::klein()
{
	return from_table({"e", "a", "b", "c"},
	                  {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

int GroupSpec::index_of(const std::string& name) const
{
	for (int i = 0; i < size(); ++i)
		if (elements_[i] == name)
			return i;
	return -1;
}

} // namespace diffalg
