#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace dsplit {

// Exit code 0 when every requested check passes, 1 on a failed check (the
// report then carries a failure record), 2 on invalid flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err = std::cerr);

// "2..4" -> {2,3,4}; "3,5" -> {3,5}; items may mix both forms.
std::vector<long long> parse_range(const std::string& text);

}  // namespace dsplit
