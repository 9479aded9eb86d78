#include <seg17/driver_sim.hpp>
#include <seg17/error.hpp>

#include <fmt/format.h>

#include <algorithm>

namespace seg17
{

void display_config::validate() const
{
  if ( positions < 1 || positions > max_positions )
  {
    throw error( error_kind::config, fmt::format( "positions must be in 1..{}, got {}", max_positions, positions ) );
  }
  if ( refresh_hz == 0 )
  {
    throw error( error_kind::config, "refresh rate must be positive" );
  }
  if ( content.size() > static_cast<std::size_t>( positions ) )
  {
    throw error( error_kind::config,
                 fmt::format( "content has {} digits but the display has {} positions", content.size(), positions ) );
  }
}

frame_trace run_simulation( display_config const& cfg, std::uint64_t ticks )
{
  cfg.validate();

  frame_trace trace;
  trace.positions = cfg.positions;
  trace.ticks.reserve( ticks );

  auto const n = static_cast<std::uint64_t>( cfg.positions );
  auto const rate = cfg.tick_rate();
  for ( std::uint64_t t = 0; t < ticks; ++t )
  {
    auto const pos = static_cast<std::size_t>( t % n );
    trace_tick tick;
    tick.tick = t;
    tick.timestamp_us = t * 1'000'000u / rate;
    tick.position = static_cast<int>( pos );
    tick.word = pos < cfg.content.size() ? cfg.content[pos] : segment_set{};
    trace.ticks.push_back( tick );
  }
  return trace;
}

double duty_cycle( frame_trace const& trace, int position )
{
  if ( position < 0 || position >= trace.positions )
  {
    throw error( error_kind::out_of_range,
                 fmt::format( "position {} outside 0..{}", position, trace.positions - 1 ) );
  }
  if ( trace.ticks.empty() )
    return 0.0;
  auto const active = std::count_if( trace.ticks.begin(), trace.ticks.end(),
                                     [position]( auto const& t ) { return t.position == position; } );
  return static_cast<double>( active ) / static_cast<double>( trace.ticks.size() );
}

std::string trace_to_csv( frame_trace const& trace )
{
  std::string out = "tick,us,position,word_hex\n";
  for ( auto const& t : trace.ticks )
  {
    out += fmt::format( "{},{},{},{}\n", t.tick, t.timestamp_us, t.position, t.word.to_hex() );
  }
  return out;
}

} // namespace seg17
