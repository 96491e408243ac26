#pragma once

#include <memory>

#include "diffalg/errors.hpp"
#include "diffalg/group.hpp"

namespace diffalg {

/// The ambient ring data every value is stamped with: m commuting
/// derivations, n base variables per block, and the acting group (one
/// block of variables per group element; the trivial group gives one
/// block). Shared by pointer across all values of a session.
struct Ambient {
	int m;
	int n;
	GroupSpec group;

	int blocks() const { return group.size(); }

	bool operator==(const Ambient& o) const
	{
		return m == o.m && n == o.n && group == o.group;
	}
};

using AmbientPtr = std::shared_ptr<const Ambient>;

inline AmbientPtr make_ambient(int m, int n, GroupSpec group = GroupSpec::trivial())
{
	if (m < 0)
		throw value_error("ambient: derivation count m must be >= 0");
	if (n < 1)
		throw value_error("ambient: variable count n must be >= 1");
	return std::make_shared<const Ambient>(Ambient{m, n, std::move(group)});
}

inline bool same_ambient(const AmbientPtr& a, const AmbientPtr& b)
{
	return a == b || (a && b && *a == *b);
}

inline void require_same_ambient(const AmbientPtr& a, const AmbientPtr& b, const char* what)
{
	if (!same_ambient(a, b))
		throw ambient_error(std::string("ambient mismatch in ") + what);
}

} // namespace diffalg
