#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expokit {

// The expo-kit command driver; returns the process exit code.
// 0 property holds / output produced, 1 property fails (witness
// printed), 2 invalid input, 3 inconclusive at cap.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace expokit
