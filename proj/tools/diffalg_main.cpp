#include <iostream>
#include <vector>

#include "diffalg/cli.hpp"

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return diffalg::run_command(args, std::cout, std::cerr);
}
