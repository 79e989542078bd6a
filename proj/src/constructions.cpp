#include "essgap/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

namespace essgap
{

set_cover_instance all_k_subsets_instance( uint32_t m, uint32_t r )
{
  if ( r < 1 || r > m || m > 30 )
    throw input_error( "all-k-subsets needs 1 <= r <= m <= 30, got m=" + std::to_string( m ) +
                       " r=" + std::to_string( r ) );
  set_cover_instance inst;
  inst.m = m;
  inst.r = r;
  std::vector<uint32_t> cur;
  auto rec = [&]( auto&& self, uint32_t next ) -> void {
    if ( cur.size() == r )
    {
      inst.subsets.push_back( cur );
      return;
    }
    for ( uint32_t e = next; e <= m; ++e )
    {
      cur.push_back( e );
      self( self, e + 1 );
      cur.pop_back();
    }
  };
  rec( rec, 1 );
  return inst;
}

set_cover_instance random_instance( uint32_t m, uint32_t p, std::mt19937_64& rng )
{
  if ( m < 1 || m > 30 || p < 1 )
    throw input_error( "random instance needs 1 <= m <= 30 and p >= 1" );
  std::uniform_int_distribution<uint32_t> dist( 1, ( 1u << m ) - 1 );
  while ( true )
  {
    set_cover_instance inst;
    inst.m = m;
    for ( uint32_t j = 0; j < p; ++j )
    {
      const uint32_t mask = dist( rng );
      std::vector<uint32_t> s;
      for ( uint32_t e = 0; e < m; ++e )
        if ( ( mask >> e ) & 1 )
          s.push_back( e + 1 );
      inst.subsets.push_back( std::move( s ) );
    }
    if ( !inst.has_uncoverable_element() )
      return inst;
  }
}

std::size_t max_independent_elements( const set_cover_instance& inst )
{
  if ( inst.m > 20 )
    throw cap_error( "exhaustive element independence is limited to m <= 20" );
  std::vector<uint32_t> masks;
  for ( const auto& s : inst.subsets )
  {
    uint32_t mask = 0;
    for ( auto e : s )
      mask |= 1u << ( e - 1 );
    masks.push_back( mask );
  }
  std::size_t best = 0;
  for ( uint32_t sel = 0; sel < ( 1u << inst.m ); ++sel )
  {
    const auto size = static_cast<std::size_t>( std::popcount( sel ) );
    if ( size <= best )
      continue;
    bool ok = true;
    for ( auto mask : masks )
      ok = ok && std::popcount( mask & sel ) <= 1;
    if ( ok )
      best = size;
  }
  return best;
}

uint32_t subset_point( uint32_t m, const std::vector<uint32_t>& subset )
{
  uint32_t x = m >= 32 ? ~0u : ( ( 1u << m ) - 1 );
  for ( auto e : subset )
    x &= ~( 1u << ( e - 1 ) );
  return x;
}

partial_function gimpel_partial( const set_cover_instance& inst, uint32_t max_vars )
{
  inst.validate();
  const uint32_t m = inst.m;
  check_var_cap( m, max_vars, "Gimpel reduction" );
  const std::size_t size = std::size_t{ 1 } << m;
  bit_vector ones( size ), stars( size );
  std::vector<uint32_t> xs;
  for ( const auto& s : inst.subsets )
    xs.push_back( subset_point( m, s ) );
  for ( uint32_t x = 0; x < size; ++x )
  {
    if ( std::popcount( x ) + 1 == static_cast<int>( m ) )
      ones.set( x );
    else if ( std::any_of( xs.begin(), xs.end(), [x]( uint32_t xs_ ) { return ( x & xs_ ) == xs_; } ) )
      stars.set( x );
  }
  return partial_function( m, std::move( ones ), std::move( stars ) );
}

bool vw_property_holds( const vw_pair& vw, const set_cover_instance& inst )
{
  if ( vw.V.size() != inst.m || vw.W.size() != inst.subsets.size() )
    return false;
  for ( std::size_t j = 0; j < inst.subsets.size(); ++j )
  {
    for ( uint32_t i = 1; i <= inst.m; ++i )
    {
      const bool in = std::find( inst.subsets[j].begin(), inst.subsets[j].end(), i ) != inst.subsets[j].end();
      const bool above = ( vw.V[i - 1] & vw.W[j] ) == vw.W[j];
      if ( in != above )
        return false;
    }
  }
  return true;
}

bool vw_forward_holds( const vw_pair& vw, const set_cover_instance& inst )
{
  for ( std::size_t j = 0; j < inst.subsets.size(); ++j )
    for ( auto e : inst.subsets[j] )
      if ( ( vw.V[e - 1] & vw.W[j] ) != vw.W[j] )
        return false;
  return true;
}

uint32_t random_vw_length( uint32_t r, std::size_t p, uint32_t m )
{
  return static_cast<uint32_t>( std::ceil( 3.0 * r * ( 1.0 + std::log( static_cast<double>( p ) * m ) ) ) );
}

vw_pair draw_vw( const set_cover_instance& inst, uint32_t t, std::mt19937_64& rng )
{
  if ( !inst.r )
    throw input_error( "random V/W vectors need an r-uniform instance" );
  if ( t < 1 || t > 64 )
    throw cap_error( "V/W vector length must be in [1,64], got " + std::to_string( t ) );
  vw_pair vw;
  vw.t = t;
  std::bernoulli_distribution zero( 1.0 / *inst.r );
  for ( uint32_t i = 0; i < inst.m; ++i )
  {
    uint64_t v = 0;
    for ( uint32_t b = 0; b < t; ++b )
      if ( !zero( rng ) )
        v |= uint64_t{ 1 } << b;
    vw.V.push_back( v );
  }
  const uint64_t all = t == 64 ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << t ) - 1 );
  for ( const auto& s : inst.subsets )
  {
    uint64_t w = all;
    for ( auto e : s )
      w &= vw.V[e - 1];
    vw.W.push_back( w );
  }
  return vw;
}

vw_pair random_vw( const set_cover_instance& inst, uint64_t seed, std::optional<uint32_t> t, uint32_t max_retries )
{
  inst.validate();
  if ( !inst.r )
    throw input_error( "random V/W vectors need an r-uniform instance" );
  const uint32_t len = t.value_or( random_vw_length( *inst.r, inst.subsets.size(), inst.m ) );
  std::mt19937_64 rng( seed );
  for ( uint32_t attempt = 0; attempt <= max_retries; ++attempt )
  {
    auto vw = draw_vw( inst, len, rng );
    vw.seed = seed;
    vw.retries = attempt;
    if ( vw_property_holds( vw, inst ) )
    {
      vw.certified = true;
      return vw;
    }
  }
  throw work_limit_error( "no certified V/W pair after " + std::to_string( max_retries ) + " retries (t=" +
                          std::to_string( len ) + ")" );
}

vw_pair classic_vw( const set_cover_instance& inst )
{
  inst.validate();
  if ( inst.m > 64 )
    throw cap_error( "classic embedding needs m <= 64" );
  vw_pair vw;
  vw.t = inst.m;
  const uint64_t all = inst.m == 64 ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << inst.m ) - 1 );
  for ( uint32_t i = 0; i < inst.m; ++i )
    vw.V.push_back( all & ~( uint64_t{ 1 } << i ) );
  for ( const auto& s : inst.subsets )
  {
    uint64_t w = all;
    for ( auto e : s )
      w &= ~( uint64_t{ 1 } << ( e - 1 ) );
    vw.W.push_back( w );
  }
  return certify( std::move( vw ), inst );
}

vw_pair certify( vw_pair vw, const set_cover_instance& inst )
{
  vw.certified = vw_property_holds( vw, inst );
  return vw;
}

partial_function generalized_gimpel( const vw_pair& vw, uint32_t max_vars )
{
  if ( !vw.certified )
    throw input_error( "V/W pair is not certified against its instance" );
  check_var_cap( vw.t, max_vars, "generalized Gimpel reduction" );
  const std::size_t size = std::size_t{ 1 } << vw.t;
  bit_vector ones( size ), stars( size );
  for ( auto v : vw.V )
    ones.set( v );
  for ( uint32_t x = 0; x < size; ++x )
  {
    if ( ones.test( x ) )
      continue;
    for ( auto w : vw.W )
      if ( ( x & w ) == w )
      {
        stars.set( x );
        break;
      }
  }
  return partial_function( vw.t, std::move( ones ), std::move( stars ) );
}

nlohmann::json to_json( const vw_pair& vw )
{
  return { { "t", vw.t },         { "V", vw.V },       { "W", vw.W },
           { "seed", vw.seed },   { "retries", vw.retries }, { "certified", vw.certified } };
}

vw_pair vw_from_json( const nlohmann::json& j )
{
  vw_pair vw;
  try
  {
    vw.t = j.at( "t" ).get<uint32_t>();
    vw.V = j.at( "V" ).get<std::vector<uint64_t>>();
    vw.W = j.at( "W" ).get<std::vector<uint64_t>>();
    vw.seed = j.value( "seed", uint64_t{ 0 } );
    vw.retries = j.value( "retries", 0u );
  }
  catch ( const nlohmann::json::exception& e )
  {
    throw input_error( std::string( "bad V/W JSON: " ) + e.what() );
  }
  /* `certified` is never trusted from a file */
  return vw;
}

lift_params default_lift_params( const partial_function& f )
{
  const auto s = static_cast<uint64_t>( f.num_stars() );
  lift_params p;
  p.t = f.num_vars() + 1;
  if ( s > ( uint64_t{ 1 } << ( p.t - 1 ) ) )
    p.t = static_cast<uint32_t>( std::bit_width( s - 1 ) ) + 1;
  for ( uint32_t z = 0; p.odd_vectors.size() < s; ++z )
    if ( parity_chi( z ) )
      p.odd_vectors.push_back( z );
  return p;
}

truth_table allender_lift( const partial_function& f, const lift_params& params, uint32_t max_vars )
{
  const uint32_t nx = f.num_vars();
  const uint32_t n = nx + 2 + params.t;
  check_var_cap( n, max_vars, "lifted total function" );
  if ( params.odd_vectors.size() != f.num_stars() )
    throw input_error( "lift needs exactly one odd vector per *-point (s=" + std::to_string( f.num_stars() ) + ")" );
  bit_vector in_s( std::size_t{ 1 } << params.t );
  for ( auto z : params.odd_vectors )
  {
    if ( z >= in_s.size() || !parity_chi( z ) || in_s.test( z ) )
      throw input_error( "lift vectors must be distinct odd-weight vectors of length t" );
    in_s.set( z );
  }

  const uint32_t xmask = ( 1u << nx ) - 1;
  return truth_table::from_predicate(
      n,
      [&]( uint32_t p ) {
        const uint32_t x = p & xmask;
        const bool y1 = ( p >> nx ) & 1;
        const bool y2 = ( p >> ( nx + 1 ) ) & 1;
        const uint32_t z = p >> ( nx + 2 );
        switch ( f.value( x ) )
        {
        case fvalue::one:
          return y1 && y2 && in_s.test( z );
        case fvalue::star:
          return ( y1 && y2 ) || ( y1 == parity_chi( x ) && y2 != parity_chi( x ) );
        default:
          return false;
        }
      },
      max_vars );
}

truth_table allender_lift( const partial_function& f, uint32_t max_vars )
{
  return allender_lift( f, default_lift_params( f ), max_vars );
}

std::vector<std::vector<uint32_t>> lift_truepoint_blocks( const partial_function& f, const truth_table& lifted )
{
  const uint32_t nx = f.num_vars();
  if ( lifted.num_vars() < nx + 3 )
    throw dimension_error( "lifted function has too few variables" );
  std::map<std::pair<int, uint32_t>, std::vector<uint32_t>> blocks;
  for ( auto p : lifted.ones() )
  {
    const uint32_t x = p & ( ( 1u << nx ) - 1 );
    switch ( f.value( x ) )
    {
    case fvalue::star:
      blocks[{ 0, x }].push_back( p );
      break;
    case fvalue::one:
      blocks[{ 1, p >> ( nx + 2 ) }].push_back( p );
      break;
    default:
      throw input_error( "lifted truepoint above a 0-point of f" );
    }
  }
  std::vector<std::vector<uint32_t>> out;
  for ( auto& [key, pts] : blocks )
    out.push_back( std::move( pts ) );
  return out;
}

horn_gap_family horn_gap( const horn_gap_params& params, bool materialize, uint32_t max_vars )
{
  if ( params.k < 2 || params.t < 1 )
    throw input_error( "Horn gap family needs k >= 2 and t >= 1" );
  const uint32_t k = params.k;
  const uint32_t pairs = k * ( k - 1 ) / 2;
  horn_gap_family fam;
  fam.params = params;
  fam.n = k + pairs + params.t;
  if ( fam.n > absolute_max_vars )
    throw cap_error( "Horn gap family on " + std::to_string( fam.n ) + " variables exceeds the 30-variable mask width" );
  fam.cnf = clause_set{ fam.n, cube_view::falsify, {} };

  std::vector<std::pair<uint32_t, uint32_t>> pair_list;
  for ( uint32_t a = 0; a < k; ++a )
    for ( uint32_t b = a + 1; b < k; ++b )
      pair_list.emplace_back( a, b );

  auto implication = [&]( uint32_t antecedent, uint32_t consequent_var ) {
    const uint32_t bit = 1u << consequent_var;
    fam.cnf.cubes.emplace_back( fam.n, antecedent | bit, antecedent );
  };

  for ( uint32_t j = 0; j < pairs; ++j )
  {
    const uint32_t s = 1u << fam.set_var( j );
    implication( s, fam.element_var( pair_list[j].first ) );
    implication( s, fam.element_var( pair_list[j].second ) );
  }
  fam.witness_clauses = fam.cnf.cubes.size();

  const uint32_t all_x = ( 1u << k ) - 1;
  for ( uint32_t j = 0; j < pairs; ++j )
    implication( all_x, fam.set_var( j ) );
  fam.feedback_clauses = fam.cnf.cubes.size() - fam.witness_clauses;

  for ( uint32_t h = 0; h < params.t; ++h )
    for ( uint32_t j = 0; j < pairs; ++j )
      implication( 1u << fam.amp_var( h ), fam.set_var( j ) );
  fam.amplification_clauses = fam.cnf.cubes.size() - fam.witness_clauses - fam.feedback_clauses;

  if ( materialize )
  {
    check_var_cap( fam.n, max_vars, "Horn gap family table" );
    fam.table = evaluate( fam.cnf );
  }
  return fam;
}

} // namespace essgap
