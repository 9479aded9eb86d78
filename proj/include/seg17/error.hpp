#pragma once

#include <stdexcept>
#include <string>

namespace seg17
{

enum class error_kind
{
  unknown_name,          ///< token is not one of the 17 segment names
  out_of_range,          ///< word or index outside its domain
  unknown_script,        ///< no table key or language alias matches
  unsupported_value,     ///< digit value not present in the script table
  unmappable_character,  ///< text character is not a digit of the script
  parse,                 ///< malformed SEGTAB/1 input
  validation,            ///< structurally invalid glyph tables
  config,                ///< invalid display driver configuration
  empty_input            ///< operation requires at least one element
};

/// Single exception type for every domain failure; `kind()` lets callers
/// (the CLI in particular) classify without string matching.
class error : public std::runtime_error
{
public:
  error( error_kind kind, std::string const& message )
      : std::runtime_error( message ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

} // namespace seg17
