#pragma once

#include <seg17/glyph_tables.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace seg17
{

struct encoded_digit
{
  std::uint32_t value = 0;
  segment_set set;
  int script_id = 0;

  friend bool operator==( encoded_digit const&, encoded_digit const& ) = default;
};

struct decode_candidate
{
  int script_id = 0;
  std::uint32_t value = 0;

  friend bool operator==( decode_candidate const&, decode_candidate const& ) = default;
  friend auto operator<=>( decode_candidate const&, decode_candidate const& ) = default;
};

struct collision
{
  segment_set set;
  std::vector<decode_candidate> candidates;
};

/// Positional mapping of digit values to patterns. Throws unsupported_value
/// naming the first offending position.
std::vector<encoded_digit> encode_number( script_table const& script, std::span<std::uint32_t const> digits );

/// UTF-8 text of ASCII digits and/or native digits of `script`. Throws
/// unmappable_character with the character index and codepoint.
std::vector<encoded_digit> encode_text( script_table const& script, std::string_view text );

/// Exact-match reverse lookup within one script.
std::vector<decode_candidate> decode_set( segment_set set, script_table const& script );

/// Exact-match reverse lookup over the whole registry, ordered by
/// (script_id, value).
std::vector<decode_candidate> decode_set( segment_set set, registry const& r );

/// Every pattern shared by two or more glyphs, ascending by packed word.
std::vector<collision> collision_report( registry const& r );

} // namespace seg17
