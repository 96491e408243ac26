#pragma once

#include <string>
#include <vector>

#include "diffalg/errors.hpp"

namespace diffalg {

/// A finite group given extensionally: an ordered element list (identity
/// first) and the full Cayley table. table[i][j] is the index of
/// elements[i] * elements[j]. Construction validates identity, closure,
/// associativity and inverses, so a GroupSpec in hand is always a group.
class GroupSpec {
public:
	static GroupSpec trivial();
	static GroupSpec cyclic(int k);
	static GroupSpec symmetric(int k);
	static GroupSpec klein();

	// Validates the table; throws value_error with a description otherwise.
	static GroupSpec from_table(std::vector<std::string> elements,
	                            std::vector<std::vector<int>> table);

	int size() const { return static_cast<int>(elements_.size()); }
	const std::vector<std::string>& elements() const { return elements_; }
	const std::string& name_of(int i) const { return elements_.at(i); }

	// -1 when the name is unknown.
	int index_of(const std::string& name) const;

	int compose(int a, int b) const { return table_[a][b]; }
	int inverse_of(int a) const { return inverse_[a]; }
	bool is_trivial() const { return size() == 1; }

	bool operator==(const GroupSpec& o) const
	{
		return elements_ == o.elements_ && table_ == o.table_;
	}

private:
	GroupSpec() = default;
	std::vector<std::string> elements_;
	std::vector<std::vector<int>> table_;
	std::vector<int> inverse_;
};

} // namespace diffalg
