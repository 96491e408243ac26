#pragma once

#include <gmpxx.h>
#include <string>

namespace diffalg {

// Exact rational coefficients. No floating point anywhere in the library.
using Rational = mpq_class;

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat(long num, long den = 1)
{
	Rational q(num, den);
	q.canonicalize();
	return q;
}

} // namespace diffalg
