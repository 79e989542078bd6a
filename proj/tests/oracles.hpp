#pragma once

/* Brute-force reference implementations, deliberately naive and sharing no
   search code with the library. Only for tiny functions. */

#include <essgap/boolean_function.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle
{

using essgap::cube;
using essgap::partial_function;
using essgap::truth_table;

inline uint32_t mask( uint32_t n ) { return ( 1u << n ) - 1; }

/* every cube (fixed, values) of {0,1}^n */
template<typename Fn>
void for_each_cube( uint32_t n, Fn&& fn )
{
  for ( uint32_t fixed = 0; fixed <= mask( n ); ++fixed )
    for ( uint32_t values = 0; values <= mask( n ); ++values )
      if ( ( values & ~fixed ) == 0 )
        fn( cube( n, fixed, values ) );
}

inline bool cube_has_one( const cube& c, const partial_function& f )
{
  for ( uint32_t x = 0; x < f.num_points(); ++x )
    if ( ( x & c.fixed ) == c.values && f.value( x ) == essgap::fvalue::one )
      return true;
  return false;
}

inline bool cube_has_zero( const cube& c, const partial_function& f )
{
  for ( uint32_t x = 0; x < f.num_points(); ++x )
    if ( ( x & c.fixed ) == c.values && f.value( x ) == essgap::fvalue::zero )
      return true;
  return false;
}

inline std::vector<cube> implicates( const partial_function& f )
{
  std::vector<cube> out;
  for_each_cube( f.num_vars(), [&]( const cube& c ) {
    if ( !cube_has_one( c, f ) )
      out.push_back( c );
  } );
  return out;
}

/* implicates covering a 0-point from which no literal can be dropped */
inline std::vector<cube> prime_implicates( const partial_function& f )
{
  std::vector<cube> out;
  for ( const auto& c : implicates( f ) )
  {
    if ( !cube_has_zero( c, f ) )
      continue;
    bool prime = true;
    for ( uint32_t b = c.fixed; b && prime; b &= b - 1 )
    {
      const uint32_t bit = b & ( ~b + 1 );
      if ( !cube_has_one( cube( c.n, c.fixed & ~bit, c.values & ~bit ), f ) )
        prime = false;
    }
    if ( prime )
      out.push_back( c );
  }
  std::sort( out.begin(), out.end(), essgap::canonical_less );
  return out;
}

/* smallest number of columns covering all rows; rows <= 64 */
inline std::size_t min_cover( std::size_t rows, const std::vector<uint64_t>& cols )
{
  const uint64_t goal = rows == 64 ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << rows ) - 1 );
  if ( goal == 0 )
    return 0;
  std::function<bool( uint64_t, std::size_t )> feasible = [&]( uint64_t covered, std::size_t picks ) {
    if ( covered == goal )
      return true;
    if ( picks == 0 )
      return false;
    const int row = std::countr_zero( ~covered & goal );
    for ( auto c : cols )
      if ( ( c >> row ) & 1 )
        if ( feasible( covered | c, picks - 1 ) )
          return true;
    return false;
  };
  for ( std::size_t k = 1; k <= rows; ++k )
    if ( feasible( 0, k ) )
      return k;
  return SIZE_MAX;
}

/* cs over all implicates (not only primes); n <= 5 */
inline std::size_t cs( const partial_function& f )
{
  const auto zeros = f.zero_points();
  std::vector<uint64_t> cols;
  for ( const auto& c : implicates( f ) )
  {
    uint64_t col = 0;
    for ( std::size_t i = 0; i < zeros.size(); ++i )
      if ( c.contains( zeros[i] ) )
        col |= uint64_t{ 1 } << i;
    if ( col )
      cols.push_back( col );
  }
  if ( zeros.empty() )
    return 0;
  return min_cover( zeros.size(), cols );
}

inline std::size_t ds( const partial_function& f ) { return cs( essgap::complement( f ) ); }

inline bool k_set_independent( const partial_function& f, const std::vector<uint32_t>& pts )
{
  uint32_t fixed = mask( f.num_vars() );
  for ( auto p : pts )
    fixed &= ~( p ^ pts[0] );
  return cube_has_one( cube( f.num_vars(), fixed, pts[0] & fixed ), f );
}

/* largest set of 0-points whose k-subsets all span a 1-point; plain backtracking */
inline std::size_t ess_k( const partial_function& f, uint32_t k )
{
  const auto zeros = f.zero_points();
  std::size_t best = 0;
  std::vector<uint32_t> cur;
  std::function<void( std::size_t )> go = [&]( std::size_t next ) {
    best = std::max( best, cur.size() );
    if ( cur.size() + ( zeros.size() - next ) <= best )
      return;
    for ( std::size_t i = next; i < zeros.size(); ++i )
    {
      cur.push_back( zeros[i] );
      bool ok = true;
      if ( cur.size() >= k )
      {
        /* every k-subset containing the new point */
        std::vector<uint32_t> pick;
        std::function<void( std::size_t )> sub = [&]( std::size_t from ) {
          if ( !ok )
            return;
          if ( pick.size() == k - 1 )
          {
            auto s = pick;
            s.push_back( cur.back() );
            if ( !k_set_independent( f, s ) )
              ok = false;
            return;
          }
          for ( std::size_t j = from; j + 1 < cur.size(); ++j )
          {
            pick.push_back( cur[j] );
            sub( j + 1 );
            pick.pop_back();
          }
        };
        sub( 0 );
      }
      if ( ok )
        go( i + 1 );
      cur.pop_back();
    }
  };
  go( 0 );
  return best;
}

inline truth_table random_table( uint32_t n, std::mt19937_64& rng )
{
  std::bernoulli_distribution coin( 0.5 );
  return truth_table::from_predicate( n, [&]( uint32_t ) { return coin( rng ); } );
}

inline partial_function random_partial( uint32_t n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<int> die( 0, 2 );
  essgap::bit_vector ones( 1u << n ), stars( 1u << n );
  for ( uint32_t x = 0; x < ( 1u << n ); ++x )
  {
    const int v = die( rng );
    if ( v == 1 )
      ones.set( x );
    else if ( v == 2 )
      stars.set( x );
  }
  return partial_function( n, ones, stars );
}

/* upward closure of random seeds */
inline truth_table random_monotone( uint32_t n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<uint32_t> pt( 0, mask( n ) );
  std::uniform_int_distribution<int> count( 1, 4 );
  std::vector<uint32_t> seeds;
  for ( int i = count( rng ); i > 0; --i )
    seeds.push_back( pt( rng ) );
  return truth_table::from_predicate( n, [&]( uint32_t x ) {
    return std::any_of( seeds.begin(), seeds.end(), [x]( uint32_t s ) { return ( x & s ) == s; } );
  } );
}

} // namespace oracle
