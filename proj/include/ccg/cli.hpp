#pragma once
#include <iosfwd>
namespace ccg::cli { int run(int argc, char** argv, std::ostream& out, std::ostream& err); }
