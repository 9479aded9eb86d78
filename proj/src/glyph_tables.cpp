#include <seg17/error.hpp>
#include <seg17/glyph_tables.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace seg17
{

namespace
{

std::string lowercase( std::string_view text )
{
  std::string out( text );
  std::transform( out.begin(), out.end(), out.begin(),
                  []( unsigned char ch ) { return static_cast<char>( std::tolower( ch ) ); } );
  return out;
}

std::string_view trim( std::string_view text )
{
  auto const is_space = []( char ch ) { return std::isspace( static_cast<unsigned char>( ch ) ) != 0; };
  while ( !text.empty() && is_space( text.front() ) )
    text.remove_prefix( 1 );
  while ( !text.empty() && is_space( text.back() ) )
    text.remove_suffix( 1 );
  return text;
}

std::string describe( script_table const& t )
{
  return fmt::format( "table {} ({})", t.id, t.key );
}

std::string join( std::vector<std::string> const& items, std::string_view sep )
{
  std::string out;
  for ( auto const& item : items )
  {
    if ( !out.empty() )
      out += sep;
    out += item;
  }
  return out;
}

} // namespace

std::optional<std::uint32_t> digit_code( std::uint32_t value ) noexcept
{
  if ( value <= 9u )
    return value;
  for ( std::uint32_t k = 0; k < extension_values.size(); ++k )
  {
    if ( extension_values[k] == value )
      return 10u + k;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> value_from_code( std::uint32_t code ) noexcept
{
  if ( code <= 9u )
    return code;
  if ( code < 10u + extension_values.size() )
    return extension_values[code - 10u];
  return std::nullopt;
}

bool script_table::supports( std::uint32_t value ) const noexcept
{
  return std::any_of( glyphs.begin(), glyphs.end(), [value]( auto const& row ) { return row.value == value; } );
}

bool script_table::has_extension_values() const noexcept
{
  return std::any_of( glyphs.begin(), glyphs.end(), []( auto const& row ) { return row.value > 9u; } );
}

std::optional<char32_t> script_table::codepoint_of( std::uint32_t value ) const noexcept
{
  auto const code = digit_code( value );
  if ( !codepoint_base || !code || !supports( value ) )
    return std::nullopt;
  return static_cast<char32_t>( *codepoint_base + *code );
}

validation_report validate( std::span<script_table const> tables )
{
  validation_report report;
  auto& errors = report.errors;

  if ( tables.empty() )
  {
    errors.push_back( "registry contains no tables" );
  }
  if ( tables.size() > 32u )
  {
    errors.push_back( fmt::format( "{} tables exceed the 5-bit script id space", tables.size() ) );
  }

  std::map<std::string, std::string> names; // lowercase name -> owning table key
  auto const claim = [&]( std::string const& name, script_table const& t ) {
    auto const lowered = lowercase( name );
    auto [it, inserted] = names.emplace( lowered, t.key );
    if ( !inserted && it->second != t.key )
    {
      errors.push_back( fmt::format( "{}: name '{}' already used by table '{}'", describe( t ), name, it->second ) );
    }
  };

  for ( std::size_t idx = 0; idx < tables.size(); ++idx )
  {
    auto const& t = tables[idx];
    if ( t.id != static_cast<int>( idx ) )
    {
      errors.push_back( fmt::format( "{}: expected id {}", describe( t ), idx ) );
    }
    if ( t.key.empty() )
    {
      errors.push_back( fmt::format( "table {}: empty key", t.id ) );
    }
    claim( t.key, t );
    for ( auto const& lang : t.languages )
    {
      if ( lang.empty() || lang.find_first_of( " \t,\"" ) != std::string::npos )
      {
        errors.push_back( fmt::format( "{}: invalid language name '{}'", describe( t ), lang ) );
      }
      claim( lang, t );
    }

    std::set<std::uint32_t> seen;
    for ( auto const& row : t.glyphs )
    {
      if ( !digit_code( row.value ) )
      {
        errors.push_back( fmt::format( "{}: unsupported digit value {}", describe( t ), row.value ) );
      }
      if ( !seen.insert( row.value ).second )
      {
        errors.push_back( fmt::format( "{}: duplicate row for digit {}", describe( t ), row.value ) );
      }
      if ( row.set.empty() )
      {
        errors.push_back( fmt::format( "{}: empty pattern for digit {}", describe( t ), row.value ) );
      }
      if ( row.set.word() >= segment_word_limit )
      {
        errors.push_back( fmt::format( "{}: digit {} has bits beyond segment p", describe( t ), row.value ) );
      }
    }

    for ( std::uint32_t v = 0; v <= 9u; ++v )
    {
      if ( !seen.contains( v ) )
      {
        errors.push_back( fmt::format( "{}: incomplete digit coverage, missing {}", describe( t ), v ) );
      }
    }
    auto const extensions = std::count_if( extension_values.begin(), extension_values.end(),
                                           [&]( auto v ) { return seen.contains( v ); } );
    if ( extensions != 0 && extensions != static_cast<std::ptrdiff_t>( extension_values.size() ) )
    {
      errors.push_back( fmt::format( "{}: incomplete digit coverage, extension values 10/100/1000 must appear together",
                                     describe( t ) ) );
    }
  }

  // within-table duplicates, by table then digit pair
  for ( auto const& t : tables )
  {
    for ( std::size_t x = 0; x < t.glyphs.size(); ++x )
    {
      for ( std::size_t y = x + 1; y < t.glyphs.size(); ++y )
      {
        if ( t.glyphs[x].set == t.glyphs[y].set )
        {
          report.warnings.push_back( fmt::format( "{}: digits {} and {} share pattern {{{}}}", describe( t ),
                                                  t.glyphs[x].value, t.glyphs[y].value,
                                                  t.glyphs[x].set.to_string() ) );
        }
      }
    }
  }

  // cross-table collisions, by packed word
  std::map<std::uint32_t, std::vector<std::pair<script_table const*, std::uint32_t>>> users;
  for ( auto const& t : tables )
  {
    for ( auto const& row : t.glyphs )
    {
      users[row.set.word()].emplace_back( &t, row.value );
    }
  }
  for ( auto const& [word, list] : users )
  {
    auto const first = list.front().first;
    bool const cross = std::any_of( list.begin(), list.end(), [&]( auto const& u ) { return u.first != first; } );
    if ( !cross )
      continue;
    std::vector<std::string> who;
    for ( auto const& [t, value] : list )
    {
      who.push_back( fmt::format( "{} {}", t->key, value ) );
    }
    report.warnings.push_back( fmt::format( "cross-table collision {{{}}} ({}): {}",
                                            segment_set::from_word( word ).to_string(),
                                            segment_set::from_word( word ).to_hex(), join( who, ", " ) ) );
  }

  return report;
}

validation_report validate( registry const& r )
{
  return validate( r.tables() );
}

registry registry::from_tables( std::vector<script_table> tables )
{
  for ( auto& t : tables )
  {
    std::sort( t.glyphs.begin(), t.glyphs.end(), []( auto const& a, auto const& b ) { return a.value < b.value; } );
  }
  auto report = validate( tables );
  if ( !report.ok() )
  {
    throw error( error_kind::validation, join( report.errors, "\n" ) );
  }

  registry r;
  r.tables_ = std::move( tables );
  for ( auto const& t : r.tables_ )
  {
    for ( auto const& lang : t.languages )
    {
      r.aliases_.emplace( lowercase( lang ), t.id );
    }
  }
  return r;
}

script_table const& registry::table( int id ) const
{
  if ( id < 0 || static_cast<std::size_t>( id ) >= tables_.size() )
  {
    throw error( error_kind::unknown_script, fmt::format( "no script table with id {}", id ) );
  }
  return tables_[static_cast<std::size_t>( id )];
}

script_table const& registry::lookup( std::string_view name ) const
{
  auto const wanted = lowercase( trim( name ) );
  for ( auto const& t : tables_ )
  {
    if ( lowercase( t.key ) == wanted )
      return t;
  }
  if ( auto it = aliases_.find( wanted ); it != aliases_.end() )
  {
    return tables_[static_cast<std::size_t>( it->second )];
  }

  std::vector<std::string> valid;
  for ( auto const& t : tables_ )
  {
    valid.push_back( t.key );
  }
  for ( auto const& [alias, id] : aliases_ )
  {
    if ( std::find( valid.begin(), valid.end(), alias ) == valid.end() )
      valid.push_back( alias );
  }
  throw error( error_kind::unknown_script,
               fmt::format( "unknown script '{}'; valid names: {}", trim( name ), join( valid, ", " ) ) );
}

std::size_t registry::glyph_count() const noexcept
{
  std::size_t n = 0;
  for ( auto const& t : tables_ )
    n += t.glyphs.size();
  return n;
}

segment_set glyph( script_table const& script, std::uint32_t value )
{
  for ( auto const& row : script.glyphs )
  {
    if ( row.value == value )
      return row.set;
  }
  throw error( error_kind::unsupported_value,
               fmt::format( "script '{}' has no glyph for value {}", script.key, value ) );
}

namespace
{

class line_parser
{
public:
  line_parser( std::string_view line, std::size_t number ) : rest_( line ), number_( number ) {}

  [[noreturn]] void fail( std::string const& what ) const
  {
    throw error( error_kind::parse, fmt::format( "line {}: {}", number_, what ) );
  }

  std::string_view word()
  {
    skip_space();
    auto const end = std::min( rest_.find_first_of( " \t" ), rest_.size() );
    auto const token = rest_.substr( 0, end );
    rest_.remove_prefix( end );
    if ( token.empty() )
      fail( "unexpected end of line" );
    return token;
  }

  std::uint32_t number()
  {
    auto const token = word();
    std::uint32_t value = 0;
    auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
    if ( ec != std::errc{} || ptr != token.data() + token.size() )
      fail( fmt::format( "expected a decimal number, got '{}'", token ) );
    return value;
  }

  std::string quoted()
  {
    skip_space();
    if ( rest_.empty() || rest_.front() != '"' )
      fail( "expected a quoted display name" );
    auto const close = rest_.find( '"', 1 );
    if ( close == std::string_view::npos )
      fail( "unterminated display name" );
    std::string text( rest_.substr( 1, close - 1 ) );
    rest_.remove_prefix( close + 1 );
    return text;
  }

  std::string_view tagged( std::string_view tag )
  {
    auto const token = word();
    if ( !token.starts_with( tag ) )
      fail( fmt::format( "expected '{}', got '{}'", tag, token ) );
    return token.substr( tag.size() );
  }

  std::string_view remainder()
  {
    auto const text = trim( rest_ );
    rest_ = {};
    return text;
  }

  void expect_end()
  {
    if ( !trim( rest_ ).empty() )
      fail( fmt::format( "unexpected trailing text '{}'", trim( rest_ ) ) );
  }

  std::size_t line_number() const noexcept { return number_; }

private:
  void skip_space()
  {
    while ( !rest_.empty() && ( rest_.front() == ' ' || rest_.front() == '\t' ) )
      rest_.remove_prefix( 1 );
  }

  std::string_view rest_;
  std::size_t number_;
};

std::optional<char32_t> parse_codepoint( line_parser& p, std::string_view text )
{
  if ( text == "none" )
    return std::nullopt;
  if ( !text.starts_with( "U+" ) || text.size() < 6 || text.size() > 8 )
    p.fail( fmt::format( "expected zero=U+XXXX or zero=none, got '{}'", text ) );
  std::uint32_t cp = 0;
  auto const digits = text.substr( 2 );
  auto const [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), cp, 16 );
  if ( ec != std::errc{} || ptr != digits.data() + digits.size() || cp > 0x10FFFFu )
    p.fail( fmt::format( "invalid codepoint '{}'", text ) );
  return static_cast<char32_t>( cp );
}

} // namespace

registry load_tables( std::string_view source )
{
  std::vector<script_table> tables;
  std::size_t line_no = 0;
  bool seen_magic = false;

  while ( !source.empty() || !seen_magic )
  {
    auto const eol = source.find( '\n' );
    auto line = source.substr( 0, eol );
    source.remove_prefix( eol == std::string_view::npos ? source.size() : eol + 1 );
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
      line.remove_suffix( 1 );

    if ( !seen_magic )
    {
      if ( trim( line ) != "SEGTAB/1" )
        throw error( error_kind::parse, fmt::format( "line {}: expected 'SEGTAB/1' header", line_no ) );
      seen_magic = true;
      continue;
    }

    auto const content = trim( line );
    if ( content.empty() || content.front() == '#' )
      continue;

    line_parser p( content, line_no );
    auto const directive = p.word();
    if ( directive == "script" )
    {
      script_table t;
      t.id = static_cast<int>( p.number() );
      t.key = std::string( p.word() );
      t.display_name = p.quoted();
      auto const langs = p.tagged( "langs=" );
      std::size_t start = 0;
      while ( start <= langs.size() )
      {
        auto const comma = std::min( langs.find( ',', start ), langs.size() );
        auto const name = langs.substr( start, comma - start );
        if ( name.empty() )
          p.fail( "empty language name in langs=" );
        t.languages.emplace_back( name );
        start = comma + 1;
      }
      t.codepoint_base = parse_codepoint( p, p.tagged( "zero=" ) );
      p.expect_end();
      tables.push_back( std::move( t ) );
    }
    else if ( directive == "glyph" )
    {
      if ( tables.empty() )
        p.fail( "glyph row before any script header" );
      glyph_row row;
      row.value = p.number();
      auto const list = p.remainder();
      if ( list.empty() )
        p.fail( "missing segment list" );
      try
      {
        row.set = segment_set::parse( list );
      }
      catch ( error const& e )
      {
        p.fail( e.what() );
      }
      tables.back().glyphs.push_back( row );
    }
    else
    {
      p.fail( fmt::format( "unknown directive '{}'", directive ) );
    }
  }

  return registry::from_tables( std::move( tables ) );
}

std::string emit_tables( registry const& r )
{
  std::string out = "SEGTAB/1\n";
  for ( auto const& t : r.tables() )
  {
    out += fmt::format( "\nscript {} {} \"{}\" langs={} zero={}\n", t.id, t.key, t.display_name, join( t.languages, "," ),
                        t.codepoint_base ? fmt::format( "U+{:04X}", static_cast<std::uint32_t>( *t.codepoint_base ) )
                                         : std::string( "none" ) );
    for ( auto const& row : t.glyphs )
    {
      out += fmt::format( "glyph {} {}\n", row.value, row.set.to_string() );
    }
  }
  return out;
}

} // namespace seg17
