#include "diffalg/indet.hpp"

namespace diffalg {

void validate_indet(const Ambient& ambient, const Indeterminate& u)
{
	if (u.block < 0 || u.block >= ambient.blocks())
		throw ambient_error("indeterminate block out of range for ambient group");
	if (u.index < 0 || u.index >= ambient.n)
		throw ambient_error("indeterminate index out of range for ambient n");
	if (u.op.m() != ambient.m)
		throw ambient_error("derivative operator length differs from ambient m");
	for (int e : u.op.exponents)
		if (e < 0)
			throw value_error("negative derivative exponent");
}

Ordering compare_indets(const AmbientPtr& ambient, const Indeterminate& u, const Indeterminate& v)
{
	if (!ambient)
		throw ambient_error("compare_indets: null ambient");
	validate_indet(*ambient, u);
	validate_indet(*ambient, v);
	return compare_indets(u, v);
}

} // namespace diffalg
