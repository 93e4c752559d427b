#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpk {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_usage = 2;

// args excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
