#pragma once

#include <seg17/segment.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace seg17
{

inline constexpr int max_positions = 64;

struct display_config
{
  int positions = 1;               ///< 1..64
  std::uint32_t refresh_hz = 60;   ///< whole frames per second, > 0
  std::vector<segment_set> content; ///< at most `positions` entries

  /// One tick is one position's on-window.
  std::uint64_t tick_rate() const noexcept { return std::uint64_t{ refresh_hz } * static_cast<std::uint64_t>( positions ); }

  /// Throws error_kind::config on any invariant violation.
  void validate() const;
};

struct trace_tick
{
  std::uint64_t tick = 0;
  std::uint64_t timestamp_us = 0;
  int position = 0;
  segment_set word;

  friend bool operator==( trace_tick const&, trace_tick const& ) = default;
};

struct frame_trace
{
  int positions = 1;
  std::vector<trace_tick> ticks;

  friend bool operator==( frame_trace const&, frame_trace const& ) = default;
};

/// Tick t drives position t mod positions with that position's content
/// (blank when unfilled) at floor(t * 10^6 / tick_rate) microseconds.
frame_trace run_simulation( display_config const& cfg, std::uint64_t ticks );

/// Share of ticks in which `position` is active; 0.0 for an empty trace.
double duty_cycle( frame_trace const& trace, int position );

/// `tick,us,position,word_hex` header plus one row per tick.
std::string trace_to_csv( frame_trace const& trace );

} // namespace seg17
