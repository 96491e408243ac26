#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffalg/diffpoly.hpp"
#include "diffalg/reduction.hpp"

namespace diffalg {

/// Expression grammar:
///   poly     := term (('+'|'-') term)*
///   term     := [rational '*'] factor ('*' factor)*
///   factor   := indet ['^' nat] | '(' poly ')' | rational
///   indet    := deriv* 'x[' (element ',')? nat ']'
///   deriv    := 'd' nat ['^' nat]
///   rational := int ['/' nat]
/// Whitespace separates derivs. A unary sign before the first term is
/// also accepted. Derivation and variable indices are 1-based; the
/// element name is omitted exactly when the group is trivial.
DiffPoly parse_poly(const AmbientPtr& ambient, std::string_view text, int line = 1);

// One polynomial per line; '#' starts a comment; blank lines skipped.
std::vector<DiffPoly> parse_poly_lines(const AmbientPtr& ambient, std::string_view text);
std::vector<DiffPoly> load_poly_file(const AmbientPtr& ambient, const std::string& path);

std::string print_indet(const Indeterminate& u, const Ambient& ambient);
// Canonical rendering; parse_poly(print_poly(f)) == f.
std::string print_poly(const DiffPoly& f);
std::string print_rank(const Rank& r, const Ambient& ambient);

/// Group file: a header line "elements: e g ..." followed by one line per
/// element holding the full Cayley-table row (products g_i * g_j, written
/// as element names). '#' comments allowed.
GroupSpec parse_group_text(std::string_view text);
// Builtin specs "trivial", "cyclic:k", "sym:k", "klein", else a file path.
GroupSpec load_group(const std::string& spec);

} // namespace diffalg
