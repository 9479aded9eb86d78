#include <seg17/error.hpp>
#include <seg17/logic_synth.hpp>

#include <fmt/format.h>

#include <algorithm>

namespace seg17
{

std::vector<std::string> decoder_input_names( int num_inputs )
{
  if ( num_inputs < 1 || num_inputs > decoder_inputs )
  {
    throw error( error_kind::out_of_range, fmt::format( "decoder input count {} outside 1..9", num_inputs ) );
  }
  std::vector<std::string> names;
  for ( int bit = num_inputs - 1; bit >= 0; --bit )
  {
    names.push_back( bit >= code_bits ? fmt::format( "s{}", bit - code_bits ) : fmt::format( "v{}", bit ) );
  }
  return names;
}

truth_table::truth_table( int num_inputs )
    : num_inputs_( num_inputs )
{
  if ( num_inputs < 1 || num_inputs > decoder_inputs )
  {
    throw error( error_kind::out_of_range, fmt::format( "truth table input count {} outside 1..9", num_inputs ) );
  }
  words_.assign( num_points(), 0u );
  care_.assign( num_points(), false );
}

phase truth_table::at( std::size_t output, std::uint32_t point ) const
{
  if ( output >= segment_count || point >= num_points() )
  {
    throw error( error_kind::out_of_range, fmt::format( "truth table access ({}, {}) out of range", output, point ) );
  }
  if ( !care_[point] )
    return dc_as_off_ ? phase::off : phase::dont_care;
  return ( ( words_[point] >> output ) & 1u ) ? phase::on : phase::off;
}

void truth_table::set_care( std::uint32_t point, segment_set word )
{
  if ( point >= num_points() )
  {
    throw error( error_kind::out_of_range, fmt::format( "truth table point {} out of range", point ) );
  }
  words_[point] = word.word();
  care_[point] = true;
}

bool truth_table::is_care( std::uint32_t point ) const
{
  return point < num_points() && care_[point];
}

std::size_t truth_table::care_count() const noexcept
{
  return static_cast<std::size_t>( std::count( care_.begin(), care_.end(), true ) );
}

std::vector<std::uint32_t> truth_table::points( std::size_t output, phase ph ) const
{
  std::vector<std::uint32_t> out;
  for ( std::uint32_t pt = 0; pt < num_points(); ++pt )
  {
    if ( at( output, pt ) == ph )
      out.push_back( pt );
  }
  return out;
}

truth_table truth_table::without_dont_cares() const
{
  auto copy = *this;
  copy.dc_as_off_ = true;
  return copy;
}

truth_table build_truth_table( registry const& r )
{
  truth_table t( decoder_inputs );
  for ( auto const& script : r.tables() )
  {
    for ( auto const& row : script.glyphs )
    {
      // registry validation guarantees a code exists and ids fit 5 bits
      t.set_care( decoder_point( script.id, *digit_code( row.value ) ), row.set );
    }
  }
  return t;
}

truth_table build_truth_table( script_table const& script )
{
  truth_table t( code_bits );
  for ( auto const& row : script.glyphs )
  {
    t.set_care( *digit_code( row.value ), row.set );
  }
  return t;
}

namespace
{

void put_entry( std::vector<std::uint8_t>& image, std::uint32_t index, segment_set set )
{
  auto const offset = index * lut_entry_bytes;
  auto const word = set.word();
  image[offset] = static_cast<std::uint8_t>( word & 0xFFu );
  image[offset + 1] = static_cast<std::uint8_t>( ( word >> 8 ) & 0xFFu );
  image[offset + 2] = static_cast<std::uint8_t>( ( word >> 16 ) & 0xFFu );
}

} // namespace

std::vector<std::uint8_t> emit_lut( registry const& r )
{
  std::vector<std::uint8_t> image( ( 1u << decoder_inputs ) * lut_entry_bytes, 0u );
  for ( auto const& script : r.tables() )
  {
    for ( auto const& row : script.glyphs )
      put_entry( image, decoder_point( script.id, *digit_code( row.value ) ), row.set );
  }
  return image;
}

std::vector<std::uint8_t> emit_lut( script_table const& script )
{
  std::vector<std::uint8_t> image( ( 1u << code_bits ) * lut_entry_bytes, 0u );
  for ( auto const& row : script.glyphs )
    put_entry( image, *digit_code( row.value ), row.set );
  return image;
}

} // namespace seg17
