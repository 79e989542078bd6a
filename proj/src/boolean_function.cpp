#include "essgap/boolean_function.hpp"

#include <string>

namespace essgap
{

void check_var_cap( uint32_t n, uint32_t max_vars, std::string_view what )
{
  const uint32_t cap = max_vars < absolute_max_vars ? max_vars : absolute_max_vars;
  if ( n > cap )
  {
    throw cap_error( std::string( what ) + " needs " + std::to_string( n ) + " variables (truth table of 2^" +
                     std::to_string( n ) + " bits); cap is " + std::to_string( cap ) +
                     ( cap < absolute_max_vars ? ", pass --force to raise it" : "" ) );
  }
}

truth_table::truth_table( uint32_t n, uint32_t max_vars ) : n_( n )
{
  check_var_cap( n, max_vars, "truth table" );
  bits_ = bit_vector( std::size_t{ 1 } << n );
}

truth_table::truth_table( uint32_t n, bit_vector bits ) : n_( n ), bits_( std::move( bits ) )
{
  check_var_cap( n, absolute_max_vars, "truth table" );
  if ( bits_.size() != ( std::size_t{ 1 } << n ) )
    throw dimension_error( "truth table length must be 2^n" );
}

truth_table truth_table::from_ones( uint32_t n, std::span<const uint32_t> ones )
{
  truth_table tt( n, absolute_max_vars );
  for ( auto x : ones )
  {
    if ( x >= tt.num_points() )
      throw dimension_error( "assignment index " + std::to_string( x ) + " out of range for n=" + std::to_string( n ) );
    tt.bits_.set( x );
  }
  return tt;
}

bool truth_table::eval( assignment a ) const
{
  if ( a.n != n_ )
    throw dimension_error( "assignment over " + std::to_string( a.n ) + " variables evaluated on a function of " +
                           std::to_string( n_ ) );
  if ( a.index >= num_points() )
    throw dimension_error( "assignment index out of range" );
  return bits_.test( a.index );
}

truth_table complement( const truth_table& f ) { return truth_table( f.num_vars(), ~f.bits() ); }

partial_function::partial_function( uint32_t n, bit_vector ones, bit_vector stars )
    : n_( n ), ones_( std::move( ones ) ), stars_( std::move( stars ) )
{
  check_var_cap( n, absolute_max_vars, "partial function" );
  if ( ones_.size() != ( std::size_t{ 1 } << n ) || stars_.size() != ones_.size() )
    throw dimension_error( "partial function tables must have length 2^n" );
  if ( ones_.intersects( stars_ ) )
    throw input_error( "a point cannot be both a 1-point and a *-point" );
}

partial_function::partial_function( const truth_table& f )
    : n_( f.num_vars() ), ones_( f.bits() ), stars_( f.bits().size() )
{
}

partial_function partial_function::from_lists( uint32_t n, std::span<const uint32_t> ones,
                                               std::span<const uint32_t> stars, uint32_t max_vars )
{
  check_var_cap( n, max_vars, "partial function" );
  const std::size_t size = std::size_t{ 1 } << n;
  bit_vector o( size ), s( size );
  for ( auto x : ones )
  {
    if ( x >= size )
      throw dimension_error( "1-point index " + std::to_string( x ) + " out of range for n=" + std::to_string( n ) );
    o.set( x );
  }
  for ( auto x : stars )
  {
    if ( x >= size )
      throw dimension_error( "*-point index " + std::to_string( x ) + " out of range for n=" + std::to_string( n ) );
    s.set( x );
  }
  return partial_function( n, std::move( o ), std::move( s ) );
}

bit_vector partial_function::zeros() const
{
  auto z = ~ones_;
  z.subtract( stars_ );
  return z;
}

truth_table partial_function::to_total() const
{
  if ( !is_total() )
    throw dimension_error( "partial function has *-points; it is not total" );
  return truth_table( n_, ones_ );
}

partial_function complement( const partial_function& f ) { return partial_function( f.num_vars(), f.zeros(), f.stars() ); }

cube::cube( uint32_t n_, uint32_t fixed_, uint32_t values_ ) : n( n_ ), fixed( fixed_ ), values( values_ )
{
  const uint32_t all = n_ >= 32 ? ~0u : ( ( 1u << n_ ) - 1 );
  if ( ( fixed & ~all ) || ( values & ~fixed ) )
    throw dimension_error( "cube masks out of range (values must be a subset of fixed, both within n bits)" );
}

cube cube::minterm( uint32_t n, uint32_t point )
{
  const uint32_t all = n >= 32 ? ~0u : ( ( 1u << n ) - 1 );
  return cube( n, all, point );
}

std::vector<uint32_t> cube::members() const
{
  std::vector<uint32_t> out;
  out.reserve( size() );
  for_each_member( [&]( uint32_t p ) { out.push_back( p ); } );
  return out;
}

cube spanning_subcube( uint32_t n, std::span<const uint32_t> points )
{
  if ( points.empty() )
    throw input_error( "spanning subcube of an empty point set" );
  const uint32_t all = n >= 32 ? ~0u : ( ( 1u << n ) - 1 );
  uint32_t differ = 0;
  for ( auto p : points )
  {
    if ( p & ~all )
      throw dimension_error( "point outside {0,1}^n" );
    differ |= p ^ points[0];
  }
  const uint32_t fixed = all & ~differ;
  return cube( n, fixed, points[0] & fixed );
}

cube spanning_subcube( std::span<const assignment> points )
{
  if ( points.empty() )
    throw input_error( "spanning subcube of an empty point set" );
  std::vector<uint32_t> idx;
  idx.reserve( points.size() );
  for ( auto a : points )
  {
    if ( a.n != points[0].n )
      throw dimension_error( "points of different dimension" );
    idx.push_back( a.index );
  }
  return spanning_subcube( points[0].n, idx );
}

} // namespace essgap
