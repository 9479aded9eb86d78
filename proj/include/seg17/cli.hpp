#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seg17::cli
{

enum class exit_status : int
{
  success = 0,
  domain_error = 1,
  usage_error = 2,
  data_error = 3
};

/// Runs one command line. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics and usage text to `err`.
exit_status run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace seg17::cli
