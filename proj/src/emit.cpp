#include <seg17/logic_synth.hpp>

#include <fmt/format.h>

namespace seg17
{

namespace
{

bool is_constant_one( cover const& c )
{
  auto const all = ( 1u << c.num_inputs ) - 1u;
  for ( auto const& imp : c.implicants )
  {
    if ( imp.mask == all )
      return true;
  }
  return false;
}

template<typename Literal>
std::string product( implicant const& imp, std::vector<std::string> const& names, std::string_view sep, Literal literal )
{
  std::string out;
  auto const n = static_cast<int>( names.size() );
  for ( int pos = 0; pos < n; ++pos )
  {
    auto const bit = 1u << ( n - 1 - pos );
    if ( imp.mask & bit )
      continue;
    if ( !out.empty() )
      out += sep;
    out += literal( names[static_cast<std::size_t>( pos )], ( imp.value & bit ) != 0u );
  }
  return out;
}

} // namespace

std::string emit_sop( std::span<cover const> covers )
{
  std::string out;
  for ( auto const& c : covers )
  {
    auto const name = segment_name( segment_from_index( c.output ) );
    if ( c.implicants.empty() )
    {
      out += fmt::format( "{} = 0\n", name );
      continue;
    }
    if ( is_constant_one( c ) )
    {
      out += fmt::format( "{} = 1\n", name );
      continue;
    }

    auto const names = decoder_input_names( c.num_inputs );
    std::string terms;
    for ( auto const& imp : c.implicants )
    {
      if ( !terms.empty() )
        terms += " + ";
      terms += product( imp, names, " ", []( std::string const& var, bool positive ) {
        return positive ? var : var + "'";
      } );
    }
    out += fmt::format( "{} = {}\n", name, terms );
  }
  return out;
}

std::string emit_hdl( std::span<cover const> covers, std::string_view module_name )
{
  auto const num_inputs = covers.empty() ? decoder_inputs : covers.front().num_inputs;
  auto const names = decoder_input_names( num_inputs );

  std::string out;
  out += "// 17-segment numeral decoder: two-level sum of products per segment.\n";
  out += fmt::format( "module {} (\n", module_name );
  std::vector<std::string> ports;
  for ( auto const& var : names )
    ports.push_back( fmt::format( "  input  wire {}", var ) );
  for ( auto const& c : covers )
    ports.push_back( fmt::format( "  output wire {}", segment_name( segment_from_index( c.output ) ) ) );
  for ( std::size_t k = 0; k < ports.size(); ++k )
    out += ports[k] + ( k + 1 == ports.size() ? "\n" : ",\n" );
  out += ");\n\n";

  for ( auto const& c : covers )
  {
    auto const name = segment_name( segment_from_index( c.output ) );
    if ( c.implicants.empty() )
    {
      out += fmt::format( "  assign {} = 1'b0;\n", name );
      continue;
    }
    if ( is_constant_one( c ) )
    {
      out += fmt::format( "  assign {} = 1'b1;\n", name );
      continue;
    }

    std::string terms;
    for ( auto const& imp : c.implicants )
    {
      if ( !terms.empty() )
        terms += " | ";
      auto const body = product( imp, names, " & ", []( std::string const& var, bool positive ) {
        return positive ? var : "~" + var;
      } );
      terms += c.implicants.size() == 1 ? body : "(" + body + ")";
    }
    out += fmt::format( "  assign {} = {};\n", name, terms );
  }
  out += "\nendmodule\n";
  return out;
}

} // namespace seg17
