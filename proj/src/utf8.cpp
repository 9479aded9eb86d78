#include <seg17/error.hpp>
#include <seg17/utf8.hpp>

#include <fmt/format.h>

namespace seg17::utf8
{

std::vector<char32_t> decode( std::string_view text )
{
  std::vector<char32_t> out;
  std::size_t pos = 0;
  auto const fail = [&]( std::size_t at ) {
    throw error( error_kind::unmappable_character,
                 fmt::format( "invalid UTF-8 at character index {} (byte offset {})", out.size(), at ) );
  };

  while ( pos < text.size() )
  {
    auto const lead = static_cast<unsigned char>( text[pos] );
    std::size_t len = 0;
    char32_t cp = 0;
    if ( lead < 0x80u )
    {
      len = 1;
      cp = lead;
    }
    else if ( ( lead & 0xE0u ) == 0xC0u )
    {
      len = 2;
      cp = lead & 0x1Fu;
    }
    else if ( ( lead & 0xF0u ) == 0xE0u )
    {
      len = 3;
      cp = lead & 0x0Fu;
    }
    else if ( ( lead & 0xF8u ) == 0xF0u )
    {
      len = 4;
      cp = lead & 0x07u;
    }
    else
    {
      fail( pos );
    }

    if ( pos + len > text.size() )
      fail( pos );
    for ( std::size_t k = 1; k < len; ++k )
    {
      auto const cont = static_cast<unsigned char>( text[pos + k] );
      if ( ( cont & 0xC0u ) != 0x80u )
        fail( pos );
      cp = ( cp << 6 ) | ( cont & 0x3Fu );
    }

    static constexpr char32_t min_for_length[] = { 0, 0, 0x80, 0x800, 0x10000 };
    if ( cp < min_for_length[len] || cp > 0x10FFFF || ( cp >= 0xD800 && cp <= 0xDFFF ) )
      fail( pos );

    out.push_back( cp );
    pos += len;
  }
  return out;
}

std::string encode( char32_t cp )
{
  std::string out;
  if ( cp < 0x80 )
  {
    out += static_cast<char>( cp );
  }
  else if ( cp < 0x800 )
  {
    out += static_cast<char>( 0xC0 | ( cp >> 6 ) );
    out += static_cast<char>( 0x80 | ( cp & 0x3F ) );
  }
  else if ( cp < 0x10000 )
  {
    out += static_cast<char>( 0xE0 | ( cp >> 12 ) );
    out += static_cast<char>( 0x80 | ( ( cp >> 6 ) & 0x3F ) );
    out += static_cast<char>( 0x80 | ( cp & 0x3F ) );
  }
  else
  {
    out += static_cast<char>( 0xF0 | ( cp >> 18 ) );
    out += static_cast<char>( 0x80 | ( ( cp >> 12 ) & 0x3F ) );
    out += static_cast<char>( 0x80 | ( ( cp >> 6 ) & 0x3F ) );
    out += static_cast<char>( 0x80 | ( cp & 0x3F ) );
  }
  return out;
}

} // namespace seg17::utf8
