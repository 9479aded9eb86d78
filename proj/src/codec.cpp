#include <seg17/codec.hpp>
#include <seg17/error.hpp>
#include <seg17/utf8.hpp>

#include <fmt/format.h>

#include <map>

namespace seg17
{

std::vector<encoded_digit> encode_number( script_table const& script, std::span<std::uint32_t const> digits )
{
  std::vector<encoded_digit> out;
  out.reserve( digits.size() );
  for ( std::size_t pos = 0; pos < digits.size(); ++pos )
  {
    auto const value = digits[pos];
    if ( !script.supports( value ) )
    {
      throw error( error_kind::unsupported_value,
                   fmt::format( "position {}: script '{}' has no glyph for value {}", pos, script.key, value ) );
    }
    out.push_back( { value, glyph( script, value ), script.id } );
  }
  return out;
}

std::vector<encoded_digit> encode_text( script_table const& script, std::string_view text )
{
  auto const codepoints = utf8::decode( text );
  std::vector<std::uint32_t> values;
  values.reserve( codepoints.size() );

  for ( std::size_t idx = 0; idx < codepoints.size(); ++idx )
  {
    auto const cp = codepoints[idx];
    if ( cp >= U'0' && cp <= U'9' )
    {
      values.push_back( static_cast<std::uint32_t>( cp - U'0' ) );
      continue;
    }

    std::optional<std::uint32_t> native;
    for ( auto const& row : script.glyphs )
    {
      if ( script.codepoint_of( row.value ) == cp )
      {
        native = row.value;
        break;
      }
    }
    if ( !native )
    {
      throw error( error_kind::unmappable_character,
                   fmt::format( "character {} (U+{:04X}) is not a digit of script '{}'", idx,
                                static_cast<std::uint32_t>( cp ), script.key ) );
    }
    values.push_back( *native );
  }
  return encode_number( script, values );
}

std::vector<decode_candidate> decode_set( segment_set set, script_table const& script )
{
  std::vector<decode_candidate> out;
  for ( auto const& row : script.glyphs )
  {
    if ( row.set == set )
      out.push_back( { script.id, row.value } );
  }
  return out;
}

std::vector<decode_candidate> decode_set( segment_set set, registry const& r )
{
  std::vector<decode_candidate> out;
  for ( auto const& t : r.tables() )
  {
    auto const part = decode_set( set, t );
    out.insert( out.end(), part.begin(), part.end() );
  }
  return out;
}

std::vector<collision> collision_report( registry const& r )
{
  std::map<std::uint32_t, std::vector<decode_candidate>> groups;
  for ( auto const& t : r.tables() )
  {
    for ( auto const& row : t.glyphs )
      groups[row.set.word()].push_back( { t.id, row.value } );
  }

  std::vector<collision> out;
  for ( auto& [word, candidates] : groups )
  {
    if ( candidates.size() >= 2u )
      out.push_back( { segment_set::from_word( word ), std::move( candidates ) } );
  }
  return out;
}

} // namespace seg17
