#include <doctest.h>

#include "oracles.hpp"

#include <essgap/boolean_function.hpp>
#include <essgap/errors.hpp>
#include <essgap/exact_cover.hpp>
#include <essgap/function_io.hpp>

#include <random>
#include <sstream>

using namespace essgap;

namespace
{
const uint32_t and2[] = { 3 };
}

TEST_CASE( "eval follows the bit-order convention" )
{
  const auto f = truth_table::from_ones( 2, and2 );
  CHECK( f.eval( { 2, 3 } ) );
  CHECK_FALSE( f.eval( { 2, 1 } ) );
  const auto parity = truth_table::from_predicate( 3, []( uint32_t x ) { return parity_chi( x ); } );
  CHECK_FALSE( parity.eval( { 3, 0b011 } ) );
  CHECK( parity.eval( { 3, 0b001 } ) );
  CHECK_THROWS_AS( f.eval( { 3, 3 } ), dimension_error );
  CHECK_THROWS_AS( f.eval( { 2, 4 } ), dimension_error );
}

TEST_CASE( "complement" )
{
  const truth_table zero( 2 );
  const auto one = complement( zero );
  CHECK( one.ones().size() == 4 );

  std::mt19937_64 rng( 11 );
  for ( int i = 0; i < 50; ++i )
  {
    const auto f = oracle::random_table( 4, rng );
    CHECK( complement( complement( f ) ) == f );
  }
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    const auto f = oracle::random_table( n, rng );
    CHECK( complement( complement( f ) ) == f );
  }

  const partial_function p( truth_table::from_ones( 2, and2 ) );
  CHECK( min_dnf( p ).size == 1 );
  CHECK( min_cnf( complement( p ) ).size == 1 );
}

TEST_CASE( "partial complement keeps stars" )
{
  std::mt19937_64 rng( 5 );
  const auto f = oracle::random_partial( 4, rng );
  const auto g = complement( f );
  CHECK( g.stars() == f.stars() );
  CHECK( g.ones() == f.zeros() );
  CHECK( complement( g ) == f );
}

TEST_CASE( "partial function rejects overlapping ones and stars" )
{
  const uint32_t ones[] = { 1 };
  CHECK_THROWS_AS( partial_function::from_lists( 2, ones, ones ), input_error );
}

TEST_CASE( "spanning subcube" )
{
  const uint32_t same[] = { 0b0101, 0b0101 };
  const auto a = spanning_subcube( 4, same );
  CHECK( a.fixed == 0b1111 );
  CHECK( a.values == 0b0101 );

  const uint32_t opposite[] = { 0b01, 0b10 };
  const auto b = spanning_subcube( 2, opposite );
  CHECK( b.fixed == 0 );
  CHECK( b.size() == 4 );

  const uint32_t pair[] = { 0b000, 0b011 };
  const auto c = spanning_subcube( 3, pair );
  CHECK( c.fixed == 0b100 );
  CHECK( c.values == 0 );
  CHECK( c.members() == std::vector<uint32_t>{ 0, 1, 2, 3 } );

  CHECK_THROWS_AS( spanning_subcube( 3, std::span<const uint32_t>{} ), input_error );
  const assignment mixed[] = { { 2, 1 }, { 3, 1 } };
  CHECK_THROWS_AS( spanning_subcube( mixed ), dimension_error );
}

TEST_CASE( "spanning subcube is monotone in the point set" )
{
  std::mt19937_64 rng( 3 );
  std::uniform_int_distribution<uint32_t> pt( 0, 255 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    std::vector<uint32_t> pts{ pt( rng ) };
    auto prev = spanning_subcube( 8, pts );
    for ( int i = 0; i < 5; ++i )
    {
      pts.push_back( pt( rng ) );
      const auto cur = spanning_subcube( 8, pts );
      CHECK( ( cur.fixed & ~prev.fixed ) == 0 );
      CHECK( cur.contains( prev ) );
      for ( auto p : pts )
        CHECK( cur.contains( p ) );
      prev = cur;
    }
  }
}

TEST_CASE( "parity" )
{
  CHECK( parity_chi( 0b0000u ) == 0 );
  CHECK( parity_chi( 0b011u ) == 0 );
  CHECK( parity_chi( 0b001u ) == 1 );
}

TEST_CASE( "cube member count" )
{
  for ( uint32_t n = 1; n <= 8; ++n )
    oracle::for_each_cube( std::min( n, 5u ), [&]( const cube& c ) {
      std::size_t count = 0;
      for ( uint32_t x = 0; x < ( 1u << c.n ); ++x )
        count += c.contains( x );
      CHECK( count == c.size() );
      CHECK( c.members().size() == c.size() );
    } );
  const cube big( 8, 0b10010001, 0b00010001 );
  CHECK( big.members().size() == 32 );
  CHECK_THROWS_AS( cube( 3, 0b001, 0b010 ), dimension_error );
}

TEST_CASE( "variable cap" )
{
  CHECK_THROWS_AS( truth_table( 25 ), cap_error );
  CHECK_NOTHROW( truth_table( 20 ) );
  CHECK_THROWS_AS( truth_table( 31, 31 ), cap_error );
}

TEST_CASE( "function JSON round trip" )
{
  std::mt19937_64 rng( 9 );
  const auto f = oracle::random_partial( 5, rng );
  std::stringstream ss;
  write_function( ss, f );
  CHECK( read_function( ss ) == f );

  const auto total = partial_function( oracle::random_table( 4, rng ) );
  const auto j = to_json( total );
  CHECK_FALSE( j.contains( "stars" ) );
  CHECK( function_from_json( j ) == total );

  std::istringstream bad( R"({"n": 2, "ones": [4]})" );
  CHECK_THROWS_AS( read_function( bad ), input_error );
  std::istringstream garbage( "not json" );
  CHECK_THROWS_AS( read_function( garbage ), input_error );
  std::istringstream big( R"({"n": 26, "ones": []})" );
  CHECK_THROWS_AS( read_function( big ), cap_error );
}
