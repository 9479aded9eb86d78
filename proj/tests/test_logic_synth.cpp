#include "oracles.hpp"

#include <seg17/error.hpp>
#include <seg17/logic_synth.hpp>

#include <doctest.h>

#include <random>

using namespace seg17;

namespace
{

registry const& reg()
{
  return canonical_registry();
}

/// Random single-output function stored in output 0 of a table.
truth_table random_function( int num_inputs, std::mt19937& rng, double care_share )
{
  truth_table t( num_inputs );
  std::bernoulli_distribution care( care_share );
  std::bernoulli_distribution on( 0.5 );
  for ( std::uint32_t pt = 0; pt < t.num_points(); ++pt )
  {
    if ( care( rng ) )
      t.set_care( pt, on( rng ) ? segment_set{ segment::a1 } : segment_set{} );
  }
  return t;
}

/// Every maximal cube inside onset ∪ dc that touches the onset, found by
/// enumerating all 3^n cubes.
std::vector<implicant> brute_force_primes( truth_table const& t, std::size_t output )
{
  auto const n = t.num_inputs();
  auto const all = t.num_points() - 1u;
  auto const inside = [&]( implicant const& c ) {
    for ( std::uint32_t pt = 0; pt <= all; ++pt )
      if ( c.covers( pt ) && t.at( output, pt ) == phase::off )
        return false;
    return true;
  };
  std::vector<implicant> out;
  for ( std::uint32_t mask = 0; mask <= all; ++mask )
  {
    for ( std::uint32_t value = 0; value <= all; ++value )
    {
      implicant const c{ value, mask };
      if ( ( value & mask ) || !inside( c ) )
        continue;
      bool touches = false;
      for ( std::uint32_t pt = 0; pt <= all; ++pt )
        touches = touches || ( c.covers( pt ) && t.at( output, pt ) == phase::on );
      if ( !touches )
        continue;
      bool maximal = true;
      for ( int bit = 0; bit < n && maximal; ++bit )
      {
        auto const b = 1u << bit;
        if ( !( mask & b ) && inside( { value & ~b, mask | b } ) )
          maximal = false;
      }
      if ( maximal )
        out.push_back( c );
    }
  }
  std::sort( out.begin(), out.end() );
  return out;
}

} // namespace

TEST_CASE( "build_truth_table over the full decoder" )
{
  auto const t = build_truth_table( reg() );
  CHECK( t.num_inputs() == 9 );
  CHECK( t.num_points() == 512 );
  CHECK( t.care_count() == 173 );

  auto const english = reg().lookup( "english" ).id;
  CHECK( t.at( segment_index( segment::b ), decoder_point( english, 1 ) ) == phase::on );
  CHECK( t.at( segment_index( segment::a1 ), decoder_point( english, 1 ) ) == phase::off );
  for ( std::uint32_t code = 0; code < 16; ++code )
    for ( std::size_t k = 0; k < segment_count; ++k )
      CHECK( t.at( k, decoder_point( 25, code ) ) == phase::dont_care );

  auto const tamil = reg().lookup( "tamil" ).id;
  for ( int id = 0; id < 32; ++id )
    for ( std::uint32_t code = 10; code < 16; ++code )
      CHECK( t.is_care( decoder_point( id, code ) ) == ( id == tamil && code <= 12 ) );

  for ( std::size_t k = 0; k < segment_count; ++k )
  {
    auto const on = t.points( k, phase::on ).size();
    auto const off = t.points( k, phase::off ).size();
    auto const dc = t.points( k, phase::dont_care ).size();
    CHECK( on + off == 173 );
    CHECK( on + off + dc == 512 );
  }
  CHECK_THROWS_AS( t.at( 17, 0 ), error );
  CHECK_THROWS_AS( t.at( 0, 512 ), error );
}

TEST_CASE( "single-script truth table" )
{
  auto const t = build_truth_table( reg().lookup( "english" ) );
  CHECK( t.num_inputs() == 4 );
  CHECK( t.care_count() == 10 );
  CHECK( build_truth_table( reg().lookup( "tamil" ) ).care_count() == 13 );

  auto const without = t.without_dont_cares();
  CHECK( without.points( 0, phase::dont_care ).empty() );
  CHECK( without.points( 2, phase::on ) == t.points( 2, phase::on ) );
}

TEST_CASE( "English-only synthesis" )
{
  auto const t = build_truth_table( reg().lookup( "english" ) );

  auto const a1 = minimize( t, segment_index( segment::a1 ) );
  CHECK( a1.implicants.empty() );
  CHECK( verify_cover( a1, t ).equivalent );
  for ( std::uint32_t pt = 0; pt < 16; ++pt )
    CHECK_FALSE( a1.evaluate( pt ) );

  auto const b = minimize( t, segment_index( segment::b ) );
  CHECK( verify_cover( b, t ).equivalent );
  std::vector<std::uint32_t> lit;
  for ( std::uint32_t digit = 0; digit <= 9; ++digit )
    if ( b.evaluate( digit ) )
      lit.push_back( digit );
  CHECK( lit == std::vector<std::uint32_t>{ 0, 1, 2, 3, 4, 7, 8, 9 } );

  // exact minimum from exhaustive cube search
  auto const want = test::minimum_cube_count( 4, t.points( segment_index( segment::b ), phase::on ),
                                              t.points( segment_index( segment::b ), phase::off ) );
  CHECK( static_cast<int>( b.implicants.size() ) == want );
}

TEST_CASE( "single onset point without don't-cares" )
{
  truth_table t( 4 );
  for ( std::uint32_t pt = 0; pt < 16; ++pt )
    t.set_care( pt, pt == 5 ? segment_set{ segment::c } : segment_set{} );
  auto const c = minimize( t, segment_index( segment::c ) );
  REQUIRE( c.implicants.size() == 1 );
  CHECK( c.implicants[0] == implicant{ 5, 0 } );
  CHECK( c.literal_count == 4 );
}

TEST_CASE( "verify_cover finds counterexamples" )
{
  auto const t = build_truth_table( reg().lookup( "english" ) );
  auto const k = segment_index( segment::b );

  cover too_wide = minimize( t, k );
  too_wide.implicants.push_back( { 0, 0xF } ); // constant 1 covers digit 5
  auto const wide_report = verify_cover( too_wide, t );
  CHECK_FALSE( wide_report.equivalent );
  REQUIRE( wide_report.counterexample );
  CHECK( t.at( k, *wide_report.counterexample ) == phase::off );

  cover empty;
  empty.output = k;
  empty.num_inputs = 4;
  auto const empty_report = verify_cover( empty, t );
  CHECK_FALSE( empty_report.equivalent );
  CHECK( empty_report.counterexample == t.points( k, phase::on ).front() );

  cover wrong_width = minimize( t, k );
  wrong_width.num_inputs = 9;
  CHECK_FALSE( verify_cover( wrong_width, t ).equivalent );
}

TEST_CASE( "full decoder covers are correct, prime and no larger than the onset" )
{
  auto const t = build_truth_table( reg() );
  auto const covers = minimize_all( t );
  REQUIRE( covers.size() == segment_count );

  for ( std::size_t k = 0; k < segment_count; ++k )
  {
    auto const& c = covers[k];
    CAPTURE( k );
    CHECK( c.output == k );
    CHECK( verify_cover( c, t ).equivalent );
    CHECK( c.implicants.size() <= t.points( k, phase::on ).size() );
    CHECK( std::is_sorted( c.implicants.begin(), c.implicants.end() ) );

    int literals = 0;
    for ( auto const& imp : c.implicants )
    {
      CHECK( ( imp.value & imp.mask ) == 0u );
      literals += imp.literal_count( 9 );
      // widening any literal must reach an offset point
      for ( int bit = 0; bit < 9; ++bit )
      {
        auto const b = 1u << bit;
        if ( imp.mask & b )
          continue;
        implicant const wider{ imp.value & ~b, imp.mask | b };
        bool hits_off = false;
        for ( std::uint32_t pt = 0; pt < 512 && !hits_off; ++pt )
          hits_off = wider.covers( pt ) && t.at( k, pt ) == phase::off;
        CHECK( hits_off );
      }
    }
    CHECK( c.literal_count == literals );
  }
}

TEST_CASE( "parallel minimization matches sequential" )
{
  auto const t = build_truth_table( reg() );
  auto const parallel = minimize_all( t );
  for ( std::size_t k = 0; k < segment_count; ++k )
  {
    auto const seq = minimize( t, k );
    CHECK( seq.implicants == parallel[k].implicants );
    CHECK( seq.method == parallel[k].method );
  }
}

TEST_CASE( "don't-cares never increase the literal count" )
{
  std::vector<truth_table> tables{ build_truth_table( reg() ) };
  for ( auto const& script : reg().tables() )
    tables.push_back( build_truth_table( script ) );

  for ( auto const& t : tables )
  {
    auto const strict = t.without_dont_cares();
    for ( std::size_t k = 0; k < segment_count; ++k )
    {
      CAPTURE( t.num_inputs() );
      CAPTURE( k );
      auto const relaxed = minimize( t, k );
      auto const exact_off = minimize( strict, k );
      CHECK( verify_cover( exact_off, strict ).equivalent );
      CHECK( relaxed.literal_count <= exact_off.literal_count );
    }
  }
}

TEST_CASE( "single-script covers are exact minima" )
{
  for ( auto const& script : reg().tables() )
  {
    auto const t = build_truth_table( script );
    for ( std::size_t k = 0; k < segment_count; ++k )
    {
      CAPTURE( script.key );
      CAPTURE( k );
      auto const c = minimize( t, k );
      CHECK( verify_cover( c, t ).equivalent );
      REQUIRE( c.method != selection_method::greedy );
      CHECK( static_cast<int>( c.implicants.size() ) ==
             test::minimum_cube_count( 4, t.points( k, phase::on ), t.points( k, phase::off ) ) );
    }
  }
}

TEST_CASE( "random functions: primes and exact covers" )
{
  std::mt19937 rng( 2024 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    int const n = 3 + trial % 3;
    auto const t = random_function( n, rng, trial % 2 ? 0.6 : 1.0 );
    CAPTURE( trial );

    auto const onset = t.points( 0, phase::on );
    auto const dc = t.points( 0, phase::dont_care );
    CHECK( prime_implicants( n, onset, dc ) == brute_force_primes( t, 0 ) );

    auto const c = minimize( t, 0 );
    CHECK( verify_cover( c, t ).equivalent );
    if ( c.method != selection_method::greedy )
    {
      CHECK( static_cast<int>( c.implicants.size() ) ==
             test::minimum_cube_count( n, onset, t.points( 0, phase::off ) ) );
    }
  }
}

TEST_CASE( "greedy fallback stays correct" )
{
  std::mt19937 rng( 99 );
  minimize_options tiny;
  tiny.petrick_max_primes = 0;
  for ( int trial = 0; trial < 20; ++trial )
  {
    auto const t = random_function( 6, rng, 0.7 );
    auto const c = minimize( t, 0, tiny );
    CHECK( verify_cover( c, t ).equivalent );
    CHECK( c.method != selection_method::petrick );
  }
}

TEST_CASE( "emit_sop" )
{
  auto const t = build_truth_table( reg().lookup( "english" ) );
  auto const covers = minimize_all( t );
  auto const sop = emit_sop( covers );
  CHECK( sop.starts_with( "a1 = 0\n" ) );
  CHECK( std::count( sop.begin(), sop.end(), '\n' ) == 17 );
  CHECK( emit_sop( minimize_all( t ) ) == sop );

  cover one;
  one.output = segment_index( segment::c );
  one.implicants = { { 0, 0x1FF } };
  CHECK( emit_sop( std::vector<cover>{ one } ) == "c = 1\n" );

  cover v0;
  v0.output = segment_index( segment::p );
  v0.implicants = { { 0b000000001, 0b111111110 } };
  CHECK( emit_sop( std::vector<cover>{ v0 } ) == "p = v0\n" );

  cover mixed;
  mixed.output = segment_index( segment::g2 );
  mixed.implicants = { { 0b100000000, 0b011111110 }, { 0b000000110, 0b111110000 } };
  CHECK( emit_sop( std::vector<cover>{ mixed } ) == "g2 = s4 v0' + v3' v2 v1 v0'\n" );
}

TEST_CASE( "emitted SOP and HDL evaluate like the covers" )
{
  auto const t = build_truth_table( reg() );
  auto const covers = minimize_all( t );
  auto const sop = test::parse_sop( emit_sop( covers ) );
  auto const hdl = test::parse_hdl( emit_hdl( covers ) );
  REQUIRE( sop.size() == segment_count );
  REQUIRE( hdl.size() == segment_count );

  for ( auto const& c : covers )
  {
    std::string const name( segment_name( segment_from_index( c.output ) ) );
    for ( std::uint32_t pt = 0; pt < 512; ++pt )
    {
      CHECK( test::evaluate( sop.at( name ), pt ) == c.evaluate( pt ) );
      CHECK( test::evaluate( hdl.at( name ), pt ) == c.evaluate( pt ) );
    }
  }
}

TEST_CASE( "emit_hdl" )
{
  auto const full = minimize_all( build_truth_table( reg() ) );
  auto const hdl = emit_hdl( full );
  CHECK( hdl.find( "module seg17_decoder (" ) != std::string::npos );
  CHECK( hdl.find( "input  wire s4," ) != std::string::npos );
  CHECK( hdl.find( "input  wire v0," ) != std::string::npos );
  CHECK( hdl.find( "output wire p\n" ) != std::string::npos );
  CHECK( hdl.ends_with( "endmodule\n" ) );

  std::size_t assigns = 0;
  for ( auto at = hdl.find( "  assign " ); at != std::string::npos; at = hdl.find( "  assign ", at + 1 ) )
    ++assigns;
  CHECK( assigns == 17 );
  CHECK( emit_hdl( minimize_all( build_truth_table( reg() ) ) ) == hdl );

  auto const english = emit_hdl( minimize_all( build_truth_table( reg().lookup( "english" ) ) ) );
  CHECK( english.find( "assign a1 = 1'b0;" ) != std::string::npos );
  CHECK( english.find( "s4" ) == std::string::npos );

  cover one;
  one.output = 0;
  one.implicants = { { 0, 0x1FF } };
  CHECK( emit_hdl( std::vector<cover>{ one } ).find( "assign a1 = 1'b1;" ) != std::string::npos );
}

TEST_CASE( "emit_lut" )
{
  auto const image = emit_lut( reg() );
  CHECK( image.size() == 1536 );

  auto const english = reg().lookup( "english" ).id;
  auto const at = decoder_point( english, 1 ) * lut_entry_bytes;
  CHECK( image[at] == 0x0C );
  CHECK( image[at + 1] == 0x00 );
  CHECK( image[at + 2] == 0x00 );

  auto const unused = decoder_point( 31, 0 ) * lut_entry_bytes;
  CHECK( image[unused] == 0 );
  CHECK( image[unused + 1] == 0 );
  CHECK( image[unused + 2] == 0 );

  for ( std::size_t entry = 0; entry < 512; ++entry )
    CHECK( ( image[entry * 3 + 2] & 0xFEu ) == 0u );

  // 1000 in Tamil sets p, the only segment in the third byte
  auto const tamil = reg().lookup( "tamil" ).id;
  CHECK( image[decoder_point( tamil, 12 ) * 3 + 2] == 0x01 );

  CHECK( emit_lut( reg().lookup( "english" ) ).size() == 48 );
}

TEST_CASE( "LUT and SOP agree on every care point" )
{
  auto const t = build_truth_table( reg() );
  auto const image = emit_lut( reg() );
  auto const sop = test::parse_sop( emit_sop( minimize_all( t ) ) );
  for ( std::uint32_t pt = 0; pt < 512; ++pt )
  {
    if ( !t.is_care( pt ) )
      continue;
    std::uint32_t const lut_word = image[pt * 3] | ( image[pt * 3 + 1] << 8 ) | ( image[pt * 3 + 2] << 16 );
    std::uint32_t sop_word = 0;
    for ( auto seg : all_segments )
      if ( test::evaluate( sop.at( std::string( segment_name( seg ) ) ), pt ) )
        sop_word |= 1u << segment_index( seg );
    CHECK( lut_word == sop_word );
  }
}
