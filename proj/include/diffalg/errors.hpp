#pragma once

#include <stdexcept>
#include <string>

namespace diffalg {

struct error : std::runtime_error {
	explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values from different ambients (m, n, group) were mixed.
struct ambient_error : error {
	explicit ambient_error(const std::string& msg) : error(msg) {}
};

// An operation that needs a nonconstant polynomial got a constant.
struct constant_error : error {
	explicit constant_error(const std::string& msg) : error(msg) {}
};

struct value_error : error {
	explicit value_error(const std::string& msg) : error(msg) {}
};

// Syntax error with source position, thrown by the text front end.
struct parse_error : error {
	int line;
	int column;
	parse_error(const std::string& msg, int line_, int col_)
	    : error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
	      line(line_), column(col_)
	{
	}
};

} // namespace diffalg
