#include "essgap/horn.hpp"

#include "essgap/essence.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace essgap
{

namespace
{

uint32_t all_mask( uint32_t n ) { return n >= 32 ? ~0u : ( ( 1u << n ) - 1 ); }

} // namespace

bool is_horn( const truth_table& f )
{
  const auto ones = f.ones();
  for ( std::size_t i = 0; i < ones.size(); ++i )
    for ( std::size_t j = i + 1; j < ones.size(); ++j )
      if ( !f[ones[i] & ones[j]] )
        return false;
  return true;
}

bool is_definite_horn( const truth_table& f ) { return f[all_mask( f.num_vars() )] && is_horn( f ); }

uint32_t horn_closure( std::span<const meta_clause> basis, uint32_t point )
{
  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( const auto& mc : basis )
    {
      if ( !mc.is_definite() )
        throw input_error( "forward chaining needs definite meta-clauses" );
      if ( ( point & mc.antecedent ) == mc.antecedent && ( point & mc.consequent ) != mc.consequent )
      {
        point |= mc.consequent;
        changed = true;
      }
    }
  }
  return point;
}

truth_table evaluate( uint32_t n, std::span<const meta_clause> basis )
{
  return truth_table::from_predicate(
      n,
      [&]( uint32_t p ) { return std::none_of( basis.begin(), basis.end(), [p]( auto& mc ) { return mc.violated_by( p ); } ); },
      absolute_max_vars );
}

horn_basis afp_learn( const truth_table& target )
{
  if ( !is_definite_horn( target ) )
    throw input_error( "AFP learner needs a definite Horn target" );
  const uint32_t n = target.num_vars();
  const uint32_t all = all_mask( n );

  horn_basis out;
  out.n = n;
  std::vector<uint32_t>& negs = out.negatives;
  std::vector<uint32_t>& pos = out.positives;

  auto member = [&]( uint32_t x ) {
    ++out.membership_queries;
    return target[x];
  };
  auto hypothesis = [&]() {
    std::vector<meta_clause> h;
    for ( auto s : negs )
    {
      uint32_t cons = all & ~s;
      for ( auto p : pos )
        if ( ( p & s ) == s )
          cons &= p;
      h.push_back( { s, cons } );
    }
    return h;
  };

  while ( true )
  {
    const auto h = hypothesis();
    ++out.equivalence_queries;
    const auto hyp = evaluate( n, h );
    auto diff = hyp.bits();
    diff ^= target.bits();
    const auto cx = diff.find_first();
    if ( cx == diff.size() )
    {
      out.meta_clauses = h;
      return out;
    }
    const auto x = static_cast<uint32_t>( cx );
    if ( target[x] )
    {
      pos.push_back( x );
      continue;
    }
    bool refined = false;
    for ( auto& s : negs )
    {
      const uint32_t meet = s & x;
      if ( meet != s && !member( meet ) )
      {
        s = meet;
        refined = true;
        break;
      }
    }
    if ( !refined )
      negs.push_back( x );
  }
}

std::size_t mi_bruteforce( const truth_table& target )
{
  if ( !is_horn( target ) )
    throw input_error( "minimum implication size is defined for Horn functions" );
  const uint32_t n = target.num_vars();
  if ( n > 6 )
    throw cap_error( "brute-force implication search is limited to n <= 6" );
  const auto zeros = target.zeros();
  if ( zeros.empty() )
    return 0;
  const auto ones = target.ones();
  const uint32_t all = all_mask( n );

  /* candidate A -> cl(A) \ A for every falsepoint A; column = falsepoints it rejects */
  std::vector<uint64_t> cols;
  for ( auto a : zeros )
  {
    uint32_t cl = all;
    bool any = false;
    for ( auto t : ones )
      if ( ( t & a ) == a )
      {
        cl &= t;
        any = true;
      }
    const meta_clause mc{ a, any ? cl & ~a : 0u };
    uint64_t col = 0;
    for ( std::size_t i = 0; i < zeros.size(); ++i )
      if ( mc.violated_by( zeros[i] ) )
        col |= uint64_t{ 1 } << i;
    cols.push_back( col );
  }
  const uint64_t goal = zeros.size() == 64 ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << zeros.size() ) - 1 );

  /* every uncovered falsepoint must be rejected by one of the remaining picks */
  auto feasible = [&]( auto&& self, uint64_t covered, std::size_t picks ) -> bool {
    if ( covered == goal )
      return true;
    if ( picks == 0 )
      return false;
    const int row = std::countr_zero( ~covered & goal );
    for ( auto col : cols )
      if ( ( col >> row ) & 1 )
        if ( self( self, covered | col, picks - 1 ) )
          return true;
    return false;
  };
  for ( std::size_t size = 1;; ++size )
    if ( feasible( feasible, 0, size ) )
      return size;
}

min_formula min_horn_cnf( const truth_table& f, const cover_options& opts )
{
  const partial_function pf( f );
  min_formula out;
  out.formula = clause_set{ f.num_vars(), cube_view::falsify, {} };
  const auto zeros = f.zeros();
  if ( zeros.empty() )
  {
    out.certified = true;
    return out;
  }
  std::vector<cube> horn_primes;
  for ( const auto& c : prime_implicates( pf ).cubes )
    if ( std::popcount( c.fixed & ~c.values ) <= 1 )
      horn_primes.push_back( c );
  std::vector<bit_vector> cols;
  for ( const auto& c : horn_primes )
  {
    bit_vector col( zeros.size() );
    for ( std::size_t i = 0; i < zeros.size(); ++i )
      if ( c.contains( zeros[i] ) )
        col.set( i );
    cols.push_back( std::move( col ) );
  }
  const auto res = solve_unate_cover( zeros.size(), cols, opts );
  out.size = res.size;
  for ( auto j : res.witness )
    out.formula.cubes.push_back( horn_primes[j] );
  out.certified = res.optimal;
  return out;
}

negatives_independence check_negatives_independent( const horn_basis& basis, const truth_table& target )
{
  negatives_independence out;
  const partial_function f( target );
  auto dep = dependency_matrix( f, basis.negatives );
  for ( std::size_t i = 0; i < dep.size(); ++i )
    for ( std::size_t j = 0; j < dep.size(); ++j )
      if ( i != j && dep[i][j] )
        out.independent = false;
  if ( !out.independent )
    out.dependent = std::move( dep );
  return out;
}

clause_set expand_meta_clauses( uint32_t n, std::span<const meta_clause> basis )
{
  clause_set out{ n, cube_view::falsify, {} };
  for ( const auto& mc : basis )
  {
    if ( !mc.is_definite() )
    {
      out.cubes.emplace_back( n, mc.antecedent, mc.antecedent );
      continue;
    }
    for ( uint32_t rest = mc.consequent & ~mc.antecedent; rest; rest &= rest - 1 )
    {
      const uint32_t bit = rest & ( ~rest + 1 );
      out.cubes.emplace_back( n, mc.antecedent | bit, mc.antecedent );
    }
  }
  return out;
}

std::vector<meta_clause> meta_clauses_from_cnf( const clause_set& cnf )
{
  if ( cnf.view != cube_view::falsify )
    throw input_error( "meta-clauses come from a CNF (falsify view)" );
  std::map<uint32_t, uint32_t> grouped;
  std::vector<uint32_t> order;
  for ( const auto& c : cnf.cubes )
  {
    /* falsified on the cube: negative literals are fixed to 1, the positive literal to 0 */
    const uint32_t positive = c.fixed & ~c.values;
    if ( std::popcount( positive ) > 1 )
      throw input_error( "clause with more than one positive literal is not Horn" );
    const uint32_t ante = c.values;
    if ( !grouped.count( ante ) )
      order.push_back( ante );
    grouped[ante] |= positive;
  }
  std::vector<meta_clause> out;
  for ( auto a : order )
    out.push_back( { a, grouped[a] } );
  return out;
}

truth_table random_horn( uint32_t n, std::mt19937_64& rng, bool definite )
{
  check_var_cap( n, default_max_vars, "random Horn function" );
  const uint32_t size = 1u << n;
  std::uniform_int_distribution<uint32_t> count_dist( 1, std::max( 2u, 2 * n ) );
  std::uniform_int_distribution<uint32_t> point_dist( 0, size - 1 );
  bit_vector ones( size );
  std::vector<uint32_t> pts;
  const uint32_t samples = count_dist( rng );
  for ( uint32_t i = 0; i < samples; ++i )
    pts.push_back( point_dist( rng ) );
  if ( definite )
    pts.push_back( size - 1 );
  for ( auto p : pts )
    ones.set( p );
  /* close under AND */
  bool changed = true;
  while ( changed )
  {
    changed = false;
    const auto cur = ones.to_indices();
    for ( std::size_t i = 0; i < cur.size(); ++i )
      for ( std::size_t j = i + 1; j < cur.size(); ++j )
      {
        const uint32_t m = cur[i] & cur[j];
        if ( !ones.test( m ) )
        {
          ones.set( m );
          changed = true;
        }
      }
  }
  return truth_table( n, std::move( ones ) );
}

void write_meta_clauses( std::ostream& os, std::span<const meta_clause> basis )
{
  auto vars = [&]( uint32_t mask ) {
    std::string s;
    for ( uint32_t i = 0; mask >> i; ++i )
      if ( ( mask >> i ) & 1 )
        s += ( s.empty() ? "" : " " ) + std::to_string( i + 1 );
    return s;
  };
  for ( const auto& mc : basis )
  {
    const auto a = vars( mc.antecedent );
    const auto c = vars( mc.consequent );
    os << a << ( a.empty() ? "" : " " ) << "->" << ( c.empty() ? "" : " " ) << c << "\n";
  }
}

std::vector<meta_clause> read_meta_clauses( std::istream& is, uint32_t n )
{
  std::vector<meta_clause> out;
  std::string line;
  while ( std::getline( is, line ) )
  {
    if ( line.find_first_not_of( " \t\r" ) == std::string::npos || line[0] == '#' )
      continue;
    const auto arrow = line.find( "->" );
    if ( arrow == std::string::npos )
      throw input_error( "meta-clause line without `->`: " + line );
    auto parse = [&]( const std::string& part ) {
      std::istringstream ss( part );
      uint32_t mask = 0;
      long v;
      while ( ss >> v )
      {
        if ( v < 1 || static_cast<uint32_t>( v ) > n )
          throw input_error( "meta-clause variable out of range: " + std::to_string( v ) );
        mask |= 1u << ( v - 1 );
      }
      if ( !ss.eof() )
        throw input_error( "bad token in meta-clause line: " + line );
      return mask;
    };
    meta_clause mc{ parse( line.substr( 0, arrow ) ), parse( line.substr( arrow + 2 ) ) };
    mc.consequent &= ~mc.antecedent;
    out.push_back( mc );
  }
  return out;
}

} // namespace essgap
