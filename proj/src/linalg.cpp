#include "diffalg/detail/linalg.hpp"

namespace diffalg::detail {

namespace {

// Reduced row echelon form in place; returns pivot column per row used.
std::vector<size_t> rref(RatMatrix& M, size_t ncols)
{
	std::vector<size_t> pivots;
	size_t row = 0;
	for (size_t col = 0; col < ncols && row < M.size(); ++col) {
		size_t sel = row;
		while (sel < M.size() && M[sel][col] == 0)
			++sel;
		if (sel == M.size())
			continue;
		std::swap(M[row], M[sel]);
		const Rational inv = Rational(1) / M[row][col];
		for (size_t k = col; k < M[row].size(); ++k)
			M[row][k] *= inv;
		for (size_t r = 0; r < M.size(); ++r) {
			if (r == row || M[r][col] == 0)
				continue;
			const Rational factor = M[r][col];
			for (size_t k = col; k < M[r].size(); ++k)
				M[r][k] -= factor * M[row][k];
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

} // namespace

std::vector<std::vector<Rational>> nullspace(RatMatrix M, size_t ncols)
{
	for (auto& r : M)
		r.resize(ncols, Rational(0));
	std::vector<size_t> pivots = rref(M, ncols);
	std::vector<bool> is_pivot(ncols, false);
	for (size_t c : pivots)
		is_pivot[c] = true;
	std::vector<std::vector<Rational>> basis;
	for (size_t free = 0; free < ncols; ++free) {
		if (is_pivot[free])
			continue;
		std::vector<Rational> v(ncols, Rational(0));
		v[free] = 1;
		for (size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -M[r][free];
		basis.push_back(std::move(v));
	}
	return basis;
}

bool solve(RatMatrix M, std::vector<Rational> rhs, std::vector<Rational>& x)
{
	const size_t ncols = M.empty() ? 0 : M[0].size();
	for (size_t r = 0; r < M.size(); ++r)
		M[r].push_back(rhs[r]);
	std::vector<size_t> pivots = rref(M, ncols); // eliminate on the left block only
	x.assign(ncols, Rational(0));
	for (size_t r = 0; r < M.size(); ++r) {
		bool all_zero = true;
		for (size_t c = 0; c < ncols; ++c)
			if (M[r][c] != 0) {
				all_zero = false;
				break;
			}
		if (all_zero && M[r][ncols] != 0)
			return false;
	}
	for (size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = M[r][ncols];
	return true;
}

} // namespace diffalg::detail
