#include <seg17/error.hpp>
#include <seg17/glyph_tables.hpp>
#include <seg17/renderer.hpp>

#include <doctest.h>

#include <random>
#include <set>

using namespace seg17;

namespace
{

std::size_t count_of( std::string const& text, std::string const& needle )
{
  std::size_t n = 0;
  for ( auto at = text.find( needle ); at != std::string::npos; at = text.find( needle, at + 1 ) )
    ++n;
  return n;
}

std::size_t on_shapes( std::string const& svg )
{
  return count_of( svg, "class=\"on\"" );
}

std::size_t off_shapes( std::string const& svg )
{
  return count_of( svg, "class=\"off\"" );
}

} // namespace

TEST_CASE( "geometry" )
{
  auto const& geo = geometry();
  CHECK( geo.shapes.size() == 17 );
  CHECK( geo.shape( segment::i ) == std::vector<point>{ { 0.5, 0.0 }, { 0.5, 1.0 } } );
  CHECK( geo.shape( segment::p ) == std::vector<point>{ { 0.0, 1.5 }, { 0.5, 1.5 } } );
  CHECK( geo.stroke_width == doctest::Approx( 0.08 ) );
  CHECK( geo.digit_gap == doctest::Approx( 0.25 ) );

  for ( std::size_t x = 0; x < segment_count; ++x )
  {
    CHECK( geo.shapes[x].size() >= 2 );
    for ( auto const& pt : geo.shapes[x] )
    {
      CHECK( pt.x >= 0.0 );
      CHECK( pt.x <= 1.0 );
      CHECK( pt.y >= 0.0 );
      CHECK( pt.y <= 2.0 );
    }
    for ( std::size_t y = x + 1; y < segment_count; ++y )
      CHECK( geo.shapes[x] != geo.shapes[y] );
  }
}

TEST_CASE( "render_svg shape counts" )
{
  auto const& r = canonical_registry();
  std::vector<segment_set> const one{ glyph( r.lookup( "english" ), 1 ) };
  auto const svg = render_svg( one );
  CHECK( svg.starts_with( "<?xml" ) );
  CHECK( svg.find( "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"" ) != std::string::npos );
  CHECK( svg.ends_with( "</svg>\n" ) );
  CHECK( on_shapes( svg ) == 2 );
  CHECK( off_shapes( svg ) == 0 );

  render_style ghost;
  ghost.show_off_segments = true;
  std::vector<segment_set> const blank{ segment_set{} };
  auto const empty = render_svg( blank, ghost );
  CHECK( on_shapes( empty ) == 0 );
  CHECK( off_shapes( empty ) == 17 );

  std::vector<segment_set> const thousand{ glyph( r.lookup( "tamil" ), 1000 ) };
  CHECK( on_shapes( render_svg( thousand ) ) == 11 );
}

TEST_CASE( "render_svg errors" )
{
  CHECK_THROWS_AS( render_svg( {} ), error );
  render_style bad;
  bad.scale = 0.0;
  std::vector<segment_set> const one{ segment_set{ segment::b } };
  CHECK_THROWS_AS( render_svg( one, bad ), error );
}

TEST_CASE( "render_svg is deterministic and counts match popcounts" )
{
  std::mt19937 rng( 3 );
  std::uniform_int_distribution<std::uint32_t> word( 0, full_word );
  std::uniform_int_distribution<int> length( 1, 6 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    std::vector<segment_set> sets;
    std::size_t lit = 0;
    for ( int k = length( rng ); k > 0; --k )
    {
      sets.push_back( segment_set::from_word( word( rng ) ) );
      lit += sets.back().size();
    }
    auto const svg = render_svg( sets );
    CHECK( on_shapes( svg ) == lit );
    CHECK( render_svg( sets ) == svg );
    CHECK( count_of( svg, "<g id=\"digit" ) == sets.size() );
  }
}

TEST_CASE( "single segments render distinctly" )
{
  std::set<std::string> svgs;
  std::set<std::string> grids;
  for ( auto seg : all_segments )
  {
    std::vector<segment_set> const one{ segment_set{ seg } };
    svgs.insert( render_svg( one ) );
    grids.insert( render_terminal( one ) );
  }
  CHECK( svgs.size() == segment_count );
  CHECK( grids.size() == segment_count );
}

TEST_CASE( "render_terminal" )
{
  CHECK( render_terminal( {} ).empty() );

  auto const& r = canonical_registry();
  std::vector<segment_set> const one{ glyph( r.lookup( "english" ), 1 ) };
  auto const grid = render_terminal( one );
  std::vector<std::string> rows;
  for ( std::size_t start = 0; start < grid.size(); )
  {
    auto const eol = grid.find( '\n', start );
    rows.push_back( grid.substr( start, eol - start ) );
    start = eol + 1;
  }
  REQUIRE( rows.size() == terminal_cell_height );
  for ( auto const& row : rows )
  {
    REQUIRE( row.size() == terminal_cell_width );
    for ( std::size_t col = 0; col + 1 < row.size(); ++col )
      CHECK( row[col] == ' ' );
  }

  std::vector<segment_set> const full{ segment_set::from_word( full_word ) };
  auto const all = render_terminal( full );
  for ( char ch : { '_', '|', '/', '\\', '-' } )
    CHECK( all.find( ch ) != std::string::npos );

  std::vector<segment_set> const three( 3, segment_set::from_word( full_word ) );
  auto const wide = render_terminal( three );
  CHECK( wide.find( '\n' ) == 3 * terminal_cell_width + 2 );
  CHECK( render_terminal( three ) == wide );
}
