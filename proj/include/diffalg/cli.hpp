#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diffalg/group.hpp"

namespace diffalg {

/// Session-wide settings shared by every subcommand.
struct SessionConfig {
	int m = 1;
	int n = 1;
	GroupSpec group = GroupSpec::trivial();
	int degree_cap = 3;
	int order_cap = 3;
	bool machine = false;
};

/// Dispatches one CLI invocation (args exclude the program name).
/// Exit status contract: 0 = property holds / computation done,
/// 1 = property refuted (witness printed), 2 = inconclusive at the caps,
/// 64 = usage error, 65 = parse/data error, 70 = internal error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diffalg
