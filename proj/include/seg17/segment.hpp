#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seg17
{

/// The 17 display elements. Enumerator order is the canonical bit order:
/// the classic 16-segment names followed by the extra lower segment `p`.
enum class segment : std::uint8_t
{
  a1, a2, b, c, d1, d2, e, f, g1, g2, h, i, j, k, l, m, p
};

inline constexpr std::size_t segment_count = 17;
inline constexpr std::uint32_t segment_word_limit = 1u << segment_count;
inline constexpr std::uint32_t full_word = segment_word_limit - 1u;

inline constexpr std::array<segment, segment_count> all_segments = {
    segment::a1, segment::a2, segment::b, segment::c, segment::d1, segment::d2,
    segment::e, segment::f, segment::g1, segment::g2, segment::h, segment::i,
    segment::j, segment::k, segment::l, segment::m, segment::p };

constexpr std::size_t segment_index( segment s ) noexcept
{
  return static_cast<std::size_t>( s );
}

/// Inverse of segment_index; throws out_of_range for index >= 17.
segment segment_from_index( std::size_t index );

/// Lowercase canonical name, e.g. "g2".
std::string_view segment_name( segment s ) noexcept;

/// Case-insensitive, surrounding whitespace ignored.
segment parse_segment_name( std::string_view text );

/// A set of lit segments packed into a 17-bit word (bit k <=> index k).
class segment_set
{
public:
  constexpr segment_set() noexcept = default;
  constexpr segment_set( std::initializer_list<segment> segments ) noexcept
  {
    for ( auto s : segments )
    {
      insert( s );
    }
  }

  /// Throws out_of_range when `word` has bits above bit 16.
  static segment_set from_word( std::uint32_t word );

  /// Parses a comma separated name list such as "a1,a2,b". Tokens may be
  /// surrounded by whitespace; an empty string is the empty set.
  static segment_set parse( std::string_view list );

  constexpr std::uint32_t word() const noexcept { return word_; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>( std::popcount( word_ ) ); }
  constexpr bool empty() const noexcept { return word_ == 0u; }

  constexpr bool contains( segment s ) const noexcept
  {
    return ( word_ >> segment_index( s ) ) & 1u;
  }

  constexpr void insert( segment s ) noexcept { word_ |= 1u << segment_index( s ); }
  constexpr void erase( segment s ) noexcept { word_ &= ~( 1u << segment_index( s ) ); }

  /// Members in canonical order.
  std::vector<segment> segments() const;

  /// Canonical comma-joined names, e.g. "b,c"; empty set gives "".
  std::string to_string() const;

  /// `0x` followed by 5 uppercase hex digits.
  std::string to_hex() const;

  /// 17 binary digits, most significant (p) first.
  std::string to_binary() const;

  friend constexpr bool operator==( segment_set, segment_set ) noexcept = default;
  friend constexpr auto operator<=>( segment_set a, segment_set b ) noexcept
  {
    return a.word_ <=> b.word_;
  }

private:
  std::uint32_t word_ = 0u;
};

segment_set pack( std::span<segment const> segments ) noexcept;

/// Throws out_of_range for word >= 2^17.
std::vector<segment> unpack( std::uint32_t word );

} // namespace seg17
