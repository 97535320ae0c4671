#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hertzwave::cli {

enum ExitCode : int { ok = 0, usage = 2, inadmissible = 3, numerical = 4 };

inline constexpr const char* kSchema = "hertzwave/1";

// 17 significant digits, scientific, '.' decimal point regardless of locale;
// parse_double(format_double(x)) == x bit for bit.
std::string format_double(double x);
double parse_double(std::string_view s);

// Entire command line (without argv[0]); returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hertzwave::cli
