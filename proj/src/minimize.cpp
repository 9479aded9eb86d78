#include <seg17/error.hpp>
#include <seg17/logic_synth.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <set>
#include <unordered_set>

namespace seg17
{

int implicant::literal_count( int num_inputs ) const noexcept
{
  return num_inputs - std::popcount( mask );
}

bool cover::evaluate( std::uint32_t point ) const noexcept
{
  return std::any_of( implicants.begin(), implicants.end(), [point]( auto const& imp ) { return imp.covers( point ); } );
}

std::vector<implicant> prime_implicants( int num_inputs, std::span<std::uint32_t const> onset,
                                         std::span<std::uint32_t const> dont_cares )
{
  auto const key = []( implicant const& imp ) { return ( std::uint64_t{ imp.mask } << 32 ) | imp.value; };

  std::set<implicant> level;
  for ( auto pt : onset )
    level.insert( { pt, 0u } );
  for ( auto pt : dont_cares )
    level.insert( { pt, 0u } );

  std::vector<implicant> primes;
  while ( !level.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    for ( auto const& imp : level )
      present.insert( key( imp ) );

    std::unordered_set<std::uint64_t> merged;
    std::set<implicant> next;
    for ( auto const& imp : level )
    {
      for ( int bit = 0; bit < num_inputs; ++bit )
      {
        auto const b = 1u << bit;
        if ( ( imp.mask & b ) || ( imp.value & b ) )
          continue;
        implicant const partner{ imp.value | b, imp.mask };
        if ( !present.contains( key( partner ) ) )
          continue;
        next.insert( { imp.value, imp.mask | b } );
        merged.insert( key( imp ) );
        merged.insert( key( partner ) );
      }
    }
    for ( auto const& imp : level )
    {
      if ( !merged.contains( key( imp ) ) )
        primes.push_back( imp );
    }
    level = std::move( next );
  }

  std::erase_if( primes, [&]( implicant const& imp ) {
    return std::none_of( onset.begin(), onset.end(), [&]( auto pt ) { return imp.covers( pt ); } );
  } );
  std::sort( primes.begin(), primes.end() );
  return primes;
}

namespace
{

using selection = std::vector<std::size_t>; // indices into a prime list

int total_literals( std::vector<implicant> const& primes, selection const& pick, int num_inputs )
{
  int sum = 0;
  for ( auto idx : pick )
    sum += primes[idx].literal_count( num_inputs );
  return sum;
}

/// Fewer implicants, then fewer literals, then lexicographic implicant list.
bool better( std::vector<implicant> const& primes, selection const& a, selection const& b, int num_inputs )
{
  if ( a.size() != b.size() )
    return a.size() < b.size();
  auto const la = total_literals( primes, a, num_inputs );
  auto const lb = total_literals( primes, b, num_inputs );
  if ( la != lb )
    return la < lb;
  // prime lists are sorted, so index order is implicant order
  return a < b;
}

selection petrick( std::vector<implicant> const& primes, std::vector<std::size_t> const& core,
                   std::vector<std::uint32_t> const& uncovered, int num_inputs )
{
  // Product of sums over the uncovered minterms, each sum a bitmask of core
  // primes, multiplied out with absorption.
  std::vector<std::uint32_t> products{ 0u };
  for ( auto pt : uncovered )
  {
    std::uint32_t clause = 0;
    for ( std::size_t c = 0; c < core.size(); ++c )
    {
      if ( primes[core[c]].covers( pt ) )
        clause |= 1u << c;
    }

    std::set<std::uint32_t> expanded;
    for ( auto term : products )
    {
      if ( term & clause )
      {
        expanded.insert( term );
        continue;
      }
      for ( auto rest = clause; rest != 0u; rest &= rest - 1u )
        expanded.insert( term | ( rest & ( ~rest + 1u ) ) );
    }

    std::vector<std::uint32_t> by_size( expanded.begin(), expanded.end() );
    std::stable_sort( by_size.begin(), by_size.end(),
                      []( auto x, auto y ) { return std::popcount( x ) < std::popcount( y ); } );
    products.clear();
    for ( auto term : by_size )
    {
      bool const absorbed = std::any_of( products.begin(), products.end(),
                                         [term]( auto kept ) { return ( kept & term ) == kept; } );
      if ( !absorbed )
        products.push_back( term );
    }
  }

  std::optional<selection> best;
  for ( auto term : products )
  {
    selection pick;
    for ( std::size_t c = 0; c < core.size(); ++c )
    {
      if ( term & ( 1u << c ) )
        pick.push_back( core[c] );
    }
    if ( !best || better( primes, pick, *best, num_inputs ) )
      best = std::move( pick );
  }
  return best.value_or( selection{} );
}

selection greedy( std::vector<implicant> const& primes, std::vector<std::size_t> const& core,
                  std::vector<std::uint32_t> uncovered, int num_inputs )
{
  selection pick;
  while ( !uncovered.empty() )
  {
    std::size_t best = core.front();
    std::size_t best_gain = 0;
    for ( auto idx : core )
    {
      auto const gain = static_cast<std::size_t>(
          std::count_if( uncovered.begin(), uncovered.end(), [&]( auto pt ) { return primes[idx].covers( pt ); } ) );
      if ( gain > best_gain ||
           ( gain == best_gain && gain > 0 &&
             primes[idx].literal_count( num_inputs ) < primes[best].literal_count( num_inputs ) ) )
      {
        // core is ascending, so the first of equal candidates wins
        best = idx;
        best_gain = gain;
      }
    }
    pick.push_back( best );
    std::erase_if( uncovered, [&]( auto pt ) { return primes[best].covers( pt ); } );
  }
  return pick;
}

} // namespace

cover minimize( truth_table const& t, std::size_t output, minimize_options const& options )
{
  if ( output >= segment_count )
  {
    throw error( error_kind::out_of_range, fmt::format( "output index {} out of range 0..16", output ) );
  }

  auto const n = t.num_inputs();
  auto const onset = t.points( output, phase::on );
  auto const dcset = t.points( output, phase::dont_care );
  auto const primes = prime_implicants( n, onset, dcset );

  std::vector<bool> chosen( primes.size(), false );
  std::vector<std::uint32_t> uncovered;

  // essential primes: sole cover of some onset point
  for ( auto pt : onset )
  {
    std::size_t hits = 0;
    std::size_t last = 0;
    for ( std::size_t idx = 0; idx < primes.size(); ++idx )
    {
      if ( primes[idx].covers( pt ) )
      {
        ++hits;
        last = idx;
      }
    }
    if ( hits == 1 )
      chosen[last] = true;
  }
  for ( auto pt : onset )
  {
    bool covered = false;
    for ( std::size_t idx = 0; idx < primes.size() && !covered; ++idx )
      covered = chosen[idx] && primes[idx].covers( pt );
    if ( !covered )
      uncovered.push_back( pt );
  }

  auto method = selection_method::essential_only;
  if ( !uncovered.empty() )
  {
    std::vector<std::size_t> core;
    for ( std::size_t idx = 0; idx < primes.size(); ++idx )
    {
      if ( !chosen[idx] &&
           std::any_of( uncovered.begin(), uncovered.end(), [&]( auto pt ) { return primes[idx].covers( pt ); } ) )
        core.push_back( idx );
    }

    // clause bitmasks are 32 bits wide
    bool const exact = core.size() <= options.petrick_max_primes && core.size() <= 32u &&
                       uncovered.size() <= options.petrick_max_minterms;
    method = exact ? selection_method::petrick : selection_method::greedy;
    auto const pick = exact ? petrick( primes, core, uncovered, n ) : greedy( primes, core, uncovered, n );
    for ( auto idx : pick )
      chosen[idx] = true;
  }

  cover result;
  result.output = output;
  result.num_inputs = n;
  result.method = method;
  for ( std::size_t idx = 0; idx < primes.size(); ++idx )
  {
    if ( chosen[idx] )
    {
      result.implicants.push_back( primes[idx] );
      result.literal_count += primes[idx].literal_count( n );
    }
  }
  return result;
}

std::vector<cover> minimize_all( truth_table const& t, minimize_options const& options )
{
  std::vector<std::future<cover>> jobs;
  jobs.reserve( segment_count );
  for ( std::size_t k = 0; k < segment_count; ++k )
  {
    jobs.push_back( std::async( std::launch::async, [&t, &options, k] { return minimize( t, k, options ); } ) );
  }

  std::vector<cover> covers;
  covers.reserve( segment_count );
  for ( auto& job : jobs )
    covers.push_back( job.get() );
  return covers;
}

equivalence_report verify_cover( cover const& c, truth_table const& t )
{
  equivalence_report report;
  if ( c.num_inputs != t.num_inputs() )
  {
    report.equivalent = false;
    report.message = fmt::format( "cover has {} inputs, table has {}", c.num_inputs, t.num_inputs() );
    return report;
  }

  for ( std::uint32_t pt = 0; pt < t.num_points(); ++pt )
  {
    auto const expected = t.at( c.output, pt );
    if ( expected == phase::dont_care )
      continue;
    bool const actual = c.evaluate( pt );
    if ( actual != ( expected == phase::on ) )
    {
      report.equivalent = false;
      report.counterexample = pt;
      report.message = fmt::format( "output {} at input {:0{}b}: expected {}, cover gives {}",
                                    segment_name( segment_from_index( c.output ) ), pt, t.num_inputs(),
                                    expected == phase::on ? 1 : 0, actual ? 1 : 0 );
      return report;
    }
  }
  report.message = "equivalent";
  return report;
}

} // namespace seg17
