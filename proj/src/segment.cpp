#include <seg17/error.hpp>
#include <seg17/segment.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace seg17
{

namespace
{

constexpr std::array<std::string_view, segment_count> names = {
    "a1", "a2", "b", "c", "d1", "d2", "e", "f", "g1",
    "g2", "h", "i", "j", "k", "l", "m", "p" };

std::string_view trim( std::string_view text )
{
  auto const is_space = []( char ch ) { return std::isspace( static_cast<unsigned char>( ch ) ) != 0; };
  while ( !text.empty() && is_space( text.front() ) )
    text.remove_prefix( 1 );
  while ( !text.empty() && is_space( text.back() ) )
    text.remove_suffix( 1 );
  return text;
}

} // namespace

segment segment_from_index( std::size_t index )
{
  if ( index >= segment_count )
  {
    throw error( error_kind::out_of_range, fmt::format( "segment index {} out of range 0..16", index ) );
  }
  return all_segments[index];
}

std::string_view segment_name( segment s ) noexcept
{
  return names[segment_index( s )];
}

segment parse_segment_name( std::string_view text )
{
  auto const token = trim( text );
  std::string lowered( token );
  std::transform( lowered.begin(), lowered.end(), lowered.begin(),
                  []( unsigned char ch ) { return static_cast<char>( std::tolower( ch ) ); } );

  for ( std::size_t k = 0; k < segment_count; ++k )
  {
    if ( names[k] == lowered )
    {
      return all_segments[k];
    }
  }
  throw error( error_kind::unknown_name, fmt::format( "unknown segment name '{}'", token ) );
}

segment_set segment_set::from_word( std::uint32_t word )
{
  if ( word >= segment_word_limit )
  {
    throw error( error_kind::out_of_range, fmt::format( "segment word 0x{:X} exceeds 17 bits", word ) );
  }
  segment_set result;
  result.word_ = word;
  return result;
}

segment_set segment_set::parse( std::string_view list )
{
  segment_set result;
  if ( trim( list ).empty() )
  {
    return result;
  }
  while ( true )
  {
    auto const comma = list.find( ',' );
    result.insert( parse_segment_name( list.substr( 0, comma ) ) );
    if ( comma == std::string_view::npos )
      break;
    list.remove_prefix( comma + 1 );
  }
  return result;
}

std::vector<segment> segment_set::segments() const
{
  std::vector<segment> result;
  result.reserve( size() );
  for ( auto s : all_segments )
  {
    if ( contains( s ) )
      result.push_back( s );
  }
  return result;
}

std::string segment_set::to_string() const
{
  std::string out;
  for ( auto s : segments() )
  {
    if ( !out.empty() )
      out += ',';
    out += segment_name( s );
  }
  return out;
}

std::string segment_set::to_hex() const
{
  return fmt::format( "0x{:05X}", word_ );
}

std::string segment_set::to_binary() const
{
  return fmt::format( "{:017b}", word_ );
}

segment_set pack( std::span<segment const> segments ) noexcept
{
  segment_set result;
  for ( auto s : segments )
    result.insert( s );
  return result;
}

std::vector<segment> unpack( std::uint32_t word )
{
  return segment_set::from_word( word ).segments();
}

} // namespace seg17
