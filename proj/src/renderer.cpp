#include <seg17/error.hpp>
#include <seg17/renderer.hpp>

#include <fmt/format.h>

namespace seg17
{

namespace
{

geometry_spec make_geometry()
{
  using s = segment;
  geometry_spec g;
  auto set = [&]( segment seg, std::vector<point> pts ) { g.shapes[segment_index( seg )] = std::move( pts ); };

  set( s::a1, { { 0.0, 0.0 }, { 0.5, 0.0 } } );
  set( s::a2, { { 0.5, 0.0 }, { 1.0, 0.0 } } );
  set( s::b, { { 1.0, 0.0 }, { 1.0, 1.0 } } );
  set( s::c, { { 1.0, 1.0 }, { 1.0, 2.0 } } );
  set( s::d1, { { 0.0, 2.0 }, { 0.5, 2.0 } } );
  set( s::d2, { { 0.5, 2.0 }, { 1.0, 2.0 } } );
  set( s::e, { { 0.0, 1.0 }, { 0.0, 2.0 } } );
  set( s::f, { { 0.0, 0.0 }, { 0.0, 1.0 } } );
  set( s::g1, { { 0.0, 1.0 }, { 0.5, 1.0 } } );
  set( s::g2, { { 0.5, 1.0 }, { 1.0, 1.0 } } );
  set( s::h, { { 0.0, 0.0 }, { 0.5, 1.0 } } );
  set( s::i, { { 0.5, 0.0 }, { 0.5, 1.0 } } );
  set( s::j, { { 1.0, 0.0 }, { 0.5, 1.0 } } );
  set( s::k, { { 0.5, 1.0 }, { 0.0, 2.0 } } );
  set( s::l, { { 0.5, 1.0 }, { 0.5, 2.0 } } );
  set( s::m, { { 0.5, 1.0 }, { 1.0, 2.0 } } );
  set( s::p, { { 0.0, 1.5 }, { 0.5, 1.5 } } );
  return g;
}

struct stroke
{
  int row;
  int col;
  char glyph;
};

// Character placement of each segment inside the 9x9 terminal cell.
std::vector<stroke> terminal_strokes( segment seg )
{
  auto hline = []( int row, int from, char ch ) {
    return std::vector<stroke>{ { row, from, ch }, { row, from + 1, ch }, { row, from + 2, ch } };
  };
  auto vline = []( int from, int col ) {
    return std::vector<stroke>{ { from, col, '|' }, { from + 1, col, '|' }, { from + 2, col, '|' } };
  };

  switch ( seg )
  {
  case segment::a1: return hline( 0, 1, '_' );
  case segment::a2: return hline( 0, 5, '_' );
  case segment::b: return vline( 1, 8 );
  case segment::c: return vline( 5, 8 );
  case segment::d1: return hline( 8, 1, '_' );
  case segment::d2: return hline( 8, 5, '_' );
  case segment::e: return vline( 5, 0 );
  case segment::f: return vline( 1, 0 );
  case segment::g1: return hline( 4, 1, '-' );
  case segment::g2: return hline( 4, 5, '-' );
  case segment::h: return { { 1, 1, '\\' }, { 2, 2, '\\' }, { 3, 3, '\\' } };
  case segment::i: return vline( 1, 4 );
  case segment::j: return { { 1, 7, '/' }, { 2, 6, '/' }, { 3, 5, '/' } };
  case segment::k: return { { 5, 3, '/' }, { 6, 2, '/' }, { 7, 1, '/' } };
  case segment::l: return vline( 5, 4 );
  case segment::m: return { { 5, 5, '\\' }, { 6, 6, '\\' }, { 7, 7, '\\' } };
  case segment::p: return hline( 6, 1, '-' );
  }
  return {};
}

} // namespace

geometry_spec const& geometry()
{
  static geometry_spec const spec = make_geometry();
  return spec;
}

std::string render_svg( std::span<segment_set const> sets, render_style const& style )
{
  if ( sets.empty() )
  {
    throw error( error_kind::empty_input, "render_svg needs at least one digit" );
  }
  if ( !( style.scale > 0.0 ) )
  {
    throw error( error_kind::config, fmt::format( "render scale must be positive, got {}", style.scale ) );
  }

  auto const& geo = geometry();
  double const margin = 0.25;
  auto const n = static_cast<double>( sets.size() );
  double const width = style.scale * ( 2.0 * margin + n + ( n - 1.0 ) * geo.digit_gap );
  double const height = style.scale * ( 2.0 * margin + 2.0 );

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format( "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.2f}\" height=\"{1:.2f}\" "
                      "viewBox=\"0 0 {0:.2f} {1:.2f}\">\n",
                      width, height );
  out += fmt::format( "<rect x=\"0\" y=\"0\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", width, height,
                      style.background );
  out += fmt::format( "<g fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\" stroke-width=\"{:.2f}\">\n",
                      geo.stroke_width * style.scale );

  for ( std::size_t pos = 0; pos < sets.size(); ++pos )
  {
    double const ox = margin + static_cast<double>( pos ) * ( 1.0 + geo.digit_gap );
    double const oy = margin;
    out += fmt::format( "<g id=\"digit{}\">\n", pos );
    for ( auto seg : all_segments )
    {
      bool const lit = sets[pos].contains( seg );
      if ( !lit && !style.show_off_segments )
        continue;

      std::string pts;
      for ( auto const& pt : geo.shape( seg ) )
      {
        if ( !pts.empty() )
          pts += ' ';
        pts += fmt::format( "{:.2f},{:.2f}", ( ox + pt.x ) * style.scale, ( oy + pt.y ) * style.scale );
      }
      out += fmt::format( "<polyline class=\"{}\" data-seg=\"{}\" stroke=\"{}\" points=\"{}\"/>\n",
                          lit ? "on" : "off", segment_name( seg ), lit ? style.on_color : style.off_color, pts );
    }
    out += "</g>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_terminal( std::span<segment_set const> sets )
{
  if ( sets.empty() )
    return {};

  auto const width = static_cast<int>( sets.size() ) * ( terminal_cell_width + 1 ) - 1;
  std::vector<std::string> grid( terminal_cell_height, std::string( static_cast<std::size_t>( width ), ' ' ) );

  for ( std::size_t pos = 0; pos < sets.size(); ++pos )
  {
    int const origin = static_cast<int>( pos ) * ( terminal_cell_width + 1 );
    // p first so a lit k diagonal stays visible where they cross
    for ( auto seg : { segment::p, segment::a1, segment::a2, segment::b, segment::c, segment::d1, segment::d2,
                       segment::e, segment::f, segment::g1, segment::g2, segment::h, segment::i, segment::j,
                       segment::k, segment::l, segment::m } )
    {
      if ( !sets[pos].contains( seg ) )
        continue;
      for ( auto const& st : terminal_strokes( seg ) )
      {
        grid[static_cast<std::size_t>( st.row )][static_cast<std::size_t>( origin + st.col )] = st.glyph;
      }
    }
  }

  std::string out;
  for ( auto const& row : grid )
  {
    out += row;
    out += '\n';
  }
  return out;
}

} // namespace seg17
