#include <seg17/cli.hpp>
#include <seg17/codec.hpp>
#include <seg17/driver_sim.hpp>
#include <seg17/error.hpp>
#include <seg17/glyph_tables.hpp>
#include <seg17/logic_synth.hpp>
#include <seg17/renderer.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace seg17::cli
{

namespace
{

/// Raised for flag combinations CLI11 cannot express on its own.
struct usage_error
{
  CLI::App const* command;
  std::string message;
};

/// Failures reading or writing files named on the command line.
struct io_error
{
  std::string message;
  bool data_file;
};

struct options
{
  std::string data_file;

  bool aliases = false;

  std::string script;
  std::vector<std::string> digits;
  std::string text;
  std::string format = "names";

  std::string word;
  std::string segments;
  std::string scope = "all";

  std::string svg_file;
  bool terminal = false;
  double scale = 40.0;
  bool show_off = false;

  std::string emit;
  std::string out_file;

  int positions = 0;
  std::uint32_t refresh_hz = 0;
  std::uint64_t ticks = 0;
};

registry load_registry( options const& opt )
{
  if ( opt.data_file.empty() )
    return canonical_registry();

  std::ifstream in( opt.data_file, std::ios::binary );
  if ( !in )
    throw io_error{ fmt::format( "cannot read data file '{}'", opt.data_file ), true };
  std::string const text( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  return load_tables( text );
}

void write_file( std::string const& path, std::string_view bytes )
{
  std::ofstream file( path, std::ios::binary | std::ios::trunc );
  file.write( bytes.data(), static_cast<std::streamsize>( bytes.size() ) );
  if ( !file )
    throw io_error{ fmt::format( "cannot write '{}'", path ), false };
}

std::uint32_t parse_unsigned( std::string_view token, int base, std::string_view what )
{
  std::uint32_t value = 0;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value, base );
  if ( token.empty() || ec != std::errc{} || ptr != token.data() + token.size() )
    throw error( error_kind::out_of_range, fmt::format( "invalid {} '{}'", what, token ) );
  return value;
}

std::vector<encoded_digit> encode_input( registry const& r, options const& opt, CLI::App const* cmd )
{
  auto const& script = r.lookup( opt.script );
  if ( !opt.digits.empty() )
  {
    std::vector<std::uint32_t> values;
    for ( auto const& arg : opt.digits )
    {
      std::string_view rest = arg;
      while ( true )
      {
        auto const comma = rest.find( ',' );
        values.push_back( parse_unsigned( rest.substr( 0, comma ), 10, "digit value" ) );
        if ( comma == std::string_view::npos )
          break;
        rest.remove_prefix( comma + 1 );
      }
    }
    return encode_number( script, values );
  }
  if ( cmd->count( "--text" ) == 0 )
    throw usage_error{ cmd, "one of --digits or --text is required" };
  return encode_text( script, opt.text );
}

std::vector<segment_set> sets_of( std::vector<encoded_digit> const& digits )
{
  std::vector<segment_set> sets;
  sets.reserve( digits.size() );
  for ( auto const& d : digits )
    sets.push_back( d.set );
  return sets;
}

void cmd_list( registry const& r, options const& opt, std::ostream& out )
{
  for ( auto const& t : r.tables() )
  {
    std::string langs;
    for ( auto const& lang : t.languages )
      langs += ( langs.empty() ? "" : ", " ) + lang;
    out << fmt::format( "{:>2}  {:<12} {}\n", t.id, t.key, langs );
  }
  if ( opt.aliases )
  {
    out << "\n";
    for ( auto const& [alias, id] : r.alias_index() )
      out << fmt::format( "{:<12} -> {}\n", alias, r.table( id ).key );
  }
}

void cmd_encode( registry const& r, options const& opt, CLI::App const* cmd, std::ostream& out )
{
  for ( auto const& d : encode_input( r, opt, cmd ) )
  {
    if ( opt.format == "hex" )
      out << d.set.to_hex() << '\n';
    else if ( opt.format == "bin" )
      out << d.set.to_binary() << '\n';
    else
      out << d.set.to_string() << '\n';
  }
}

void cmd_decode( registry const& r, options const& opt, CLI::App const* cmd, std::ostream& out, std::ostream& err )
{
  segment_set set;
  if ( cmd->count( "--word" ) )
  {
    std::string_view token = opt.word;
    if ( token.starts_with( "0x" ) || token.starts_with( "0X" ) )
      token.remove_prefix( 2 );
    set = segment_set::from_word( parse_unsigned( token, 16, "segment word" ) );
  }
  else if ( cmd->count( "--segments" ) )
  {
    set = segment_set::parse( opt.segments );
  }
  else
  {
    throw usage_error{ cmd, "one of --word or --segments is required" };
  }

  auto const candidates = opt.scope == "all" ? decode_set( set, r ) : decode_set( set, r.lookup( opt.scope ) );
  for ( auto const& c : candidates )
    out << r.table( c.script_id ).key << ' ' << c.value << '\n';
  if ( candidates.empty() )
    err << "no glyph matches " << set.to_hex() << '\n';
}

void cmd_render( registry const& r, options const& opt, CLI::App const* cmd, std::ostream& out )
{
  if ( opt.svg_file.empty() == !opt.terminal )
    throw usage_error{ cmd, "exactly one of --svg FILE or --terminal is required" };

  auto const sets = sets_of( encode_text( r.lookup( opt.script ), opt.text ) );
  if ( opt.terminal )
  {
    out << render_terminal( sets );
    return;
  }
  render_style style;
  style.scale = opt.scale;
  style.show_off_segments = opt.show_off;
  write_file( opt.svg_file, render_svg( sets, style ) );
}

void cmd_synth( registry const& r, options const& opt, CLI::App const* cmd )
{
  std::optional<script_table> single;
  if ( cmd->count( "--script" ) )
    single = r.lookup( opt.script );

  if ( opt.emit == "lut" )
  {
    auto const image = single ? emit_lut( *single ) : emit_lut( r );
    write_file( opt.out_file, std::string_view( reinterpret_cast<char const*>( image.data() ), image.size() ) );
    return;
  }

  auto const table = single ? build_truth_table( *single ) : build_truth_table( r );
  auto const covers = minimize_all( table );
  for ( auto const& c : covers )
  {
    auto const report = verify_cover( c, table );
    if ( !report.equivalent )
      throw error( error_kind::validation, "internal: minimized cover failed verification: " + report.message );
  }
  write_file( opt.out_file, opt.emit == "sop" ? emit_sop( covers ) : emit_hdl( covers ) );
}

void cmd_simulate( registry const& r, options const& opt )
{
  display_config cfg;
  cfg.positions = opt.positions;
  cfg.refresh_hz = opt.refresh_hz;
  cfg.content = sets_of( encode_text( r.lookup( opt.script ), opt.text ) );
  write_file( opt.out_file, trace_to_csv( run_simulation( cfg, opt.ticks ) ) );
}

void cmd_validate( registry const& r, std::ostream& out )
{
  auto const report = validate( r );
  out << fmt::format( "ok: {} tables, {} aliases, {} glyphs, {} warnings\n", r.tables().size(), r.alias_index().size(),
                      r.glyph_count(), report.warnings.size() );
  for ( auto const& w : report.warnings )
    out << "warning: " << w << '\n';
}

exit_status classify( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::parse:
  case error_kind::validation:
    return exit_status::data_error;
  default:
    return exit_status::domain_error;
  }
}

} // namespace

exit_status run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  options opt;
  CLI::App app{ "17-segment numeral display toolkit", "seg17" };
  app.require_subcommand( 1 );
  app.fallthrough();
  app.add_option( "--data", opt.data_file, "SEGTAB/1 file replacing the embedded tables" );

  auto* list = app.add_subcommand( "list", "List script tables and their languages" );
  list->add_flag( "--aliases", opt.aliases, "Also print the language alias index" );

  auto* encode = app.add_subcommand( "encode", "Encode digits into segment patterns" );
  encode->add_option( "--script", opt.script, "Table key or language name" )->required();
  auto* digits_opt = encode->add_option( "--digits", opt.digits, "Digit values (space or comma separated)" );
  auto* text_opt = encode->add_option( "--text", opt.text, "ASCII or native-script digits" );
  digits_opt->excludes( text_opt );
  encode->add_option( "--format", opt.format, "Output format" )->check( CLI::IsMember( { "names", "hex", "bin" } ) );

  auto* decode = app.add_subcommand( "decode", "Find digits that light exactly the given segments" );
  auto* word_opt = decode->add_option( "--word", opt.word, "Packed 17-bit word, e.g. 0x0000C" );
  auto* seg_opt = decode->add_option( "--segments", opt.segments, "Comma separated segment names" );
  word_opt->excludes( seg_opt );
  decode->add_option( "--scope", opt.scope, "Script name or 'all'" );

  auto* render = app.add_subcommand( "render", "Draw digits as SVG or terminal art" );
  render->add_option( "--script", opt.script, "Table key or language name" )->required();
  render->add_option( "--text", opt.text, "ASCII or native-script digits" )->required();
  auto* svg_opt = render->add_option( "--svg", opt.svg_file, "Write an SVG document" );
  auto* term_opt = render->add_flag( "--terminal", opt.terminal, "Print character art" );
  svg_opt->excludes( term_opt );
  render->add_option( "--scale", opt.scale, "Pixels per cell width" )->check( CLI::PositiveNumber );
  render->add_flag( "--show-off", opt.show_off, "Draw unlit segments dimmed" );

  auto* synth = app.add_subcommand( "synth", "Synthesize decoder logic" );
  synth->add_option( "--emit", opt.emit, "Output kind" )->required()->check( CLI::IsMember( { "sop", "hdl", "lut" } ) );
  synth->add_option( "--out", opt.out_file, "Output file" )->required();
  synth->add_option( "--script", opt.script, "Single-script decoder without script-select inputs" );

  auto* simulate = app.add_subcommand( "simulate", "Trace a multiplexed display driver" );
  simulate->add_option( "--script", opt.script, "Table key or language name" )->required();
  simulate->add_option( "--text", opt.text, "ASCII or native-script digits" )->required();
  simulate->add_option( "--positions", opt.positions, "Digit positions" )->required();
  simulate->add_option( "--refresh-hz", opt.refresh_hz, "Frames per second" )->required();
  simulate->add_option( "--ticks", opt.ticks, "Number of ticks to simulate" )->required();
  simulate->add_option( "--out", opt.out_file, "CSV trace file" )->required();

  auto* validate_cmd = app.add_subcommand( "validate", "Check glyph tables" );

  CLI::App const* active = &app;
  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
    for ( auto* sub : app.get_subcommands() )
      active = sub;

    auto const r = load_registry( opt );
    if ( list->parsed() )
      cmd_list( r, opt, out );
    else if ( encode->parsed() )
      cmd_encode( r, opt, encode, out );
    else if ( decode->parsed() )
      cmd_decode( r, opt, decode, out, err );
    else if ( render->parsed() )
      cmd_render( r, opt, render, out );
    else if ( synth->parsed() )
      cmd_synth( r, opt, synth );
    else if ( simulate->parsed() )
      cmd_simulate( r, opt );
    else if ( validate_cmd->parsed() )
      cmd_validate( r, out );
    return exit_status::success;
  }
  catch ( CLI::CallForHelp const& )
  {
    out << active->help();
    return exit_status::success;
  }
  catch ( CLI::ParseError const& e )
  {
    for ( auto* sub : app.get_subcommands() )
      active = sub;
    err << "error: " << e.what() << "\n\n" << active->help();
    return exit_status::usage_error;
  }
  catch ( usage_error const& e )
  {
    err << "error: " << e.message << "\n\n" << e.command->help();
    return exit_status::usage_error;
  }
  catch ( io_error const& e )
  {
    err << "error: " << e.message << '\n';
    return e.data_file ? exit_status::data_error : exit_status::domain_error;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << '\n';
    return classify( e.kind() );
  }
}

} // namespace seg17::cli
