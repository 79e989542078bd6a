#include "essgap/implicants.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace essgap
{

std::string to_string( cube_view v ) { return v == cube_view::falsify ? "falsify" : "satisfy"; }

cube_view parse_view( const std::string& s )
{
  if ( s == "falsify" || s == "false" || s == "cnf" )
    return cube_view::falsify;
  if ( s == "satisfy" || s == "true" || s == "dnf" )
    return cube_view::satisfy;
  throw input_error( "unknown view '" + s + "' (expected falsify|satisfy)" );
}

bool covers( const cube& c, assignment a, cube_view )
{
  if ( a.n != c.n )
    throw dimension_error( "cube and assignment have different variable counts" );
  return c.contains( a.index );
}

namespace
{

bool cube_meets( const cube& c, const bit_vector& points )
{
  if ( c.n != 0 && c.dimension() * 2 >= c.n )
  {
    bool hit = false;
    c.for_each_member( [&]( uint32_t p ) { hit = hit || points.test( p ); } );
    return hit;
  }
  bool hit = false;
  points.for_each_set( [&]( std::size_t p ) { hit = hit || c.contains( static_cast<uint32_t>( p ) ); } );
  return hit;
}

void check_same_n( const cube& c, const partial_function& f )
{
  if ( c.n != f.num_vars() )
    throw dimension_error( "cube and function have different variable counts" );
}

clause_set primes_ternary( const cube_index& index )
{
  const uint32_t n = index.num_vars();
  clause_set out{ n, cube_view::falsify, {} };

  std::vector<uint64_t> pow3( n + 1, 1 );
  for ( uint32_t i = 1; i <= n; ++i )
    pow3[i] = pow3[i - 1] * 3;

  std::vector<uint8_t> digit( n, 0 );
  uint32_t fixed = n >= 32 ? ~0u : ( ( 1u << n ) - 1 ), values = 0;
  for ( uint64_t t = 0; t < index.num_cubes(); ++t )
  {
    const uint8_t fl = index.flags_at( t );
    if ( !( fl & cube_index::has_one ) && ( fl & cube_index::has_zero ) )
    {
      bool prime = true;
      for ( uint32_t i = 0; i < n && prime; ++i )
      {
        if ( digit[i] == 2 )
          continue;
        const uint64_t parent = t + ( 2 - digit[i] ) * pow3[i];
        prime = ( index.flags_at( parent ) & cube_index::has_one ) != 0;
      }
      if ( prime )
        out.cubes.emplace_back( n, fixed, values );
    }
    /* odometer step */
    for ( uint32_t i = 0; i < n; ++i )
    {
      const uint32_t bit = 1u << i;
      if ( digit[i] == 0 )
      {
        digit[i] = 1;
        values |= bit;
        break;
      }
      if ( digit[i] == 1 )
      {
        digit[i] = 2;
        values &= ~bit;
        fixed &= ~bit;
        break;
      }
      digit[i] = 0;
      fixed |= bit;
    }
  }
  std::sort( out.cubes.begin(), out.cubes.end(), canonical_less );
  return out;
}

/* Quine-McCluskey: merge implicate cubes that differ in exactly one fixed position, level by level */
clause_set primes_merge( const partial_function& f )
{
  const uint32_t n = f.num_vars();
  const uint32_t all = n >= 32 ? ~0u : ( ( 1u << n ) - 1 );
  clause_set out{ n, cube_view::falsify, {} };

  auto key = []( uint32_t fixed, uint32_t values ) { return ( uint64_t{ fixed } << 32 ) | values; };

  /* value: bit0 = covers a 0-point, bit1 = merged into a larger cube */
  std::unordered_map<uint64_t, uint8_t> level;
  for ( uint32_t x = 0; x < f.num_points(); ++x )
  {
    const auto v = f.value( x );
    if ( v != fvalue::one )
      level.emplace( key( all, x ), v == fvalue::zero ? 1 : 0 );
  }

  while ( !level.empty() )
  {
    std::unordered_map<uint64_t, uint8_t> next;
    for ( auto& [k, info] : level )
    {
      const uint32_t fixed = static_cast<uint32_t>( k >> 32 );
      const uint32_t values = static_cast<uint32_t>( k );
      for ( uint32_t rest = fixed; rest; rest &= rest - 1 )
      {
        const uint32_t bit = rest & ( ~rest + 1 );
        auto partner = level.find( key( fixed, values ^ bit ) );
        if ( partner == level.end() )
          continue;
        info |= 2;
        partner->second |= 2;
        const uint8_t zero = ( info | partner->second ) & 1;
        next[key( fixed & ~bit, values & ~bit )] |= zero;
      }
    }
    for ( auto& [k, info] : level )
      if ( info == 1 )
        out.cubes.emplace_back( n, static_cast<uint32_t>( k >> 32 ), static_cast<uint32_t>( k ) );
    level = std::move( next );
  }
  std::sort( out.cubes.begin(), out.cubes.end(), canonical_less );
  return out;
}

} // namespace

bool is_implicate( const cube& c, const partial_function& f )
{
  check_same_n( c, f );
  return !cube_meets( c, f.ones() );
}

bool is_implicant( const cube& c, const partial_function& f )
{
  check_same_n( c, f );
  return !cube_meets( c, f.zeros() );
}

clause_set prime_implicates( const cube_index& index )
{
  if ( index.is_ternary() )
    return primes_ternary( index );
  return primes_merge( index.function() );
}

clause_set prime_implicates( const partial_function& f, prime_algorithm algo )
{
  switch ( algo )
  {
  case prime_algorithm::ternary:
    return primes_ternary( cube_index( f, absolute_max_vars ) );
  case prime_algorithm::merge:
    return primes_merge( f );
  case prime_algorithm::automatic:
  default:
    if ( f.num_vars() <= cube_index::ternary_limit )
      return primes_ternary( cube_index( f ) );
    return primes_merge( f );
  }
}

clause_set prime_implicants( const partial_function& f, prime_algorithm algo )
{
  auto s = prime_implicates( complement( f ), algo );
  s.view = cube_view::satisfy;
  return s;
}

truth_table evaluate( const clause_set& s )
{
  bit_vector covered( std::size_t{ 1 } << s.n );
  for ( const auto& c : s.cubes )
    c.for_each_member( [&]( uint32_t p ) { covered.set( p ); } );
  if ( s.view == cube_view::falsify )
    covered.flip();
  return truth_table( s.n, std::move( covered ) );
}

bool is_consistent( const clause_set& s, const partial_function& f )
{
  if ( s.n != f.num_vars() )
    return false;
  const auto g = evaluate( s );
  auto ones_ok = f.ones();
  ones_ok.subtract( g.bits() );
  auto zeros_bad = f.zeros() & g.bits();
  return ones_ok.none() && zeros_bad.none();
}

void write_dimacs( std::ostream& os, const clause_set& s )
{
  os << "c essgap n=" << s.n << " view=" << to_string( s.view ) << "\n";
  os << "p cnf " << s.n << " " << s.cubes.size() << "\n";
  for ( const auto& c : s.cubes )
  {
    for ( uint32_t i = 0; i < s.n; ++i )
    {
      if ( !( ( c.fixed >> i ) & 1 ) )
        continue;
      const bool v = ( c.values >> i ) & 1;
      /* falsify view: x_i=0 falsifies literal x_i; satisfy view: x_i=1 satisfies literal x_i */
      const bool positive = s.view == cube_view::falsify ? !v : v;
      os << ( positive ? "" : "-" ) << ( i + 1 ) << " ";
    }
    os << "0\n";
  }
}

clause_set read_dimacs( std::istream& is )
{
  clause_set s;
  bool have_header = false;
  std::size_t expected = 0;
  std::string line;
  while ( std::getline( is, line ) )
  {
    std::istringstream ls( line );
    std::string tok;
    if ( !( ls >> tok ) )
      continue;
    if ( tok == "c" )
    {
      std::string word;
      while ( ls >> word )
      {
        if ( word.rfind( "view=", 0 ) == 0 )
          s.view = parse_view( word.substr( 5 ) );
      }
      continue;
    }
    if ( tok == "p" )
    {
      std::string fmt;
      ls >> fmt >> s.n >> expected;
      if ( fmt != "cnf" || !ls )
        throw input_error( "bad DIMACS header: " + line );
      have_header = true;
      continue;
    }
    if ( !have_header )
      throw input_error( "DIMACS clause before header" );
    uint32_t fixed = 0, values = 0;
    std::istringstream cs( line );
    long lit;
    bool terminated = false;
    while ( cs >> lit )
    {
      if ( lit == 0 )
      {
        terminated = true;
        break;
      }
      const uint32_t var = static_cast<uint32_t>( lit < 0 ? -lit : lit );
      if ( var == 0 || var > s.n )
        throw input_error( "DIMACS literal out of range: " + std::to_string( lit ) );
      const uint32_t bit = 1u << ( var - 1 );
      const bool positive = lit > 0;
      const bool v = s.view == cube_view::falsify ? !positive : positive;
      if ( ( fixed & bit ) && ( ( values & bit ) != 0 ) != v )
        throw input_error( "complementary literals in one DIMACS clause" );
      fixed |= bit;
      if ( v )
        values |= bit;
    }
    if ( !terminated )
      throw input_error( "DIMACS clause not terminated by 0" );
    s.cubes.emplace_back( s.n, fixed, values );
  }
  if ( !have_header )
    throw input_error( "missing DIMACS header" );
  if ( s.cubes.size() != expected )
    throw input_error( "DIMACS header announces " + std::to_string( expected ) + " clauses, found " +
                       std::to_string( s.cubes.size() ) );
  return s;
}

} // namespace essgap
