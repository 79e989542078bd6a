#include "essgap/exact_cover.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace essgap
{

void set_cover_instance::validate() const
{
  for ( std::size_t j = 0; j < subsets.size(); ++j )
  {
    for ( auto e : subsets[j] )
      if ( e < 1 || e > m )
        throw input_error( "subset " + std::to_string( j ) + " has element " + std::to_string( e ) +
                           " outside [1," + std::to_string( m ) + "]" );
    if ( r && subsets[j].size() != *r )
      throw input_error( "subset " + std::to_string( j ) + " violates uniformity r=" + std::to_string( *r ) );
  }
}

bool set_cover_instance::has_uncoverable_element() const
{
  std::vector<bool> seen( m + 1, false );
  for ( const auto& s : subsets )
    for ( auto e : s )
      if ( e >= 1 && e <= m )
        seen[e] = true;
  for ( uint32_t e = 1; e <= m; ++e )
    if ( !seen[e] )
      return true;
  return false;
}

set_cover_instance read_set_cover( std::istream& is )
{
  set_cover_instance inst;
  std::string line;
  std::size_t p = 0;
  while ( std::getline( is, line ) )
  {
    std::istringstream ls( line );
    if ( ls >> inst.m >> p )
      break;
    if ( line.find_first_not_of( " \t\r" ) != std::string::npos )
      throw input_error( "set cover header must be `m p`" );
  }
  if ( !is && inst.m == 0 && p == 0 )
    throw input_error( "empty set cover file" );
  for ( std::size_t j = 0; j < p; ++j )
  {
    if ( !std::getline( is, line ) )
      throw input_error( "set cover file announces " + std::to_string( p ) + " subsets, found " + std::to_string( j ) );
    std::istringstream ls( line );
    std::vector<uint32_t> s;
    long e;
    while ( ls >> e )
    {
      if ( e < 1 )
        throw input_error( "element indices are 1-based" );
      s.push_back( static_cast<uint32_t>( e ) );
    }
    std::sort( s.begin(), s.end() );
    s.erase( std::unique( s.begin(), s.end() ), s.end() );
    inst.subsets.push_back( std::move( s ) );
  }
  if ( !inst.subsets.empty() )
  {
    const auto r0 = inst.subsets.front().size();
    if ( std::all_of( inst.subsets.begin(), inst.subsets.end(), [&]( auto& s ) { return s.size() == r0; } ) )
      inst.r = static_cast<uint32_t>( r0 );
  }
  inst.validate();
  return inst;
}

void write_set_cover( std::ostream& os, const set_cover_instance& inst )
{
  os << inst.m << " " << inst.subsets.size() << "\n";
  for ( const auto& s : inst.subsets )
  {
    for ( std::size_t i = 0; i < s.size(); ++i )
      os << ( i ? " " : "" ) << s[i];
    os << "\n";
  }
}

namespace
{

/* one independent block of the covering matrix, reindexed locally */
struct block
{
  std::vector<uint32_t> global_cols; /* ascending */
  std::vector<bit_vector> col_rows;  /* local col -> local rows */
  std::vector<bit_vector> row_cols;  /* local row -> local cols */
};

class block_solver
{
public:
  block_solver( const block& b, const cover_options& opts, uint64_t& nodes )
      : b_( b ), opts_( opts ), nodes_( nodes ), nr_( b.row_cols.size() ), nc_( b.col_rows.size() )
  {
  }

  /* minimum cover of rows U using columns A; gives up once something <= target is found */
  std::size_t minimum( const bit_vector& rows, const bit_vector& cols, std::size_t upper, std::size_t target = 0 )
  {
    best_ = upper;
    target_ = target;
    search( rows, cols, 0 );
    return best_;
  }

  std::size_t greedy( bit_vector rows, const bit_vector& cols ) const
  {
    std::size_t used = 0;
    while ( rows.any() )
    {
      std::size_t best_gain = 0, best_col = nc_;
      cols.for_each_set( [&]( std::size_t j ) {
        const auto g = b_.col_rows[j].intersection_count( rows );
        if ( g > best_gain )
        {
          best_gain = g;
          best_col = j;
        }
      } );
      if ( best_col == nc_ )
        return SIZE_MAX;
      rows.subtract( b_.col_rows[best_col] );
      ++used;
    }
    return used;
  }

private:
  void search( bit_vector rows, bit_vector cols, std::size_t depth )
  {
    if ( best_ <= target_ )
      return;
    if ( ++nodes_ > opts_.node_limit )
      throw work_limit_error( "set cover search exceeded " + std::to_string( opts_.node_limit ) + " nodes" );

    /* reductions to a fixpoint */
    bool changed = true;
    while ( changed )
    {
      changed = false;
      if ( rows.none() )
        break;
      /* essential columns */
      bool dead = false;
      rows.for_each_set( [&]( std::size_t r ) {
        if ( dead || !rows.test( r ) )
          return;
        const auto avail = b_.row_cols[r] & cols;
        const auto cnt = avail.count();
        if ( cnt == 0 )
        {
          dead = true;
          return;
        }
        if ( cnt == 1 )
        {
          const auto j = avail.find_first();
          rows.subtract( b_.col_rows[j] );
          cols.reset( j );
          ++depth;
          changed = true;
        }
      } );
      if ( dead || depth >= best_ )
        return;
      if ( rows.none() )
        break;

      /* column dominance: drop j when another column covers a superset of j's remaining rows */
      std::vector<std::size_t> cl;
      std::vector<bit_vector> cr;
      cols.for_each_set( [&]( std::size_t j ) {
        auto s = b_.col_rows[j] & rows;
        if ( s.none() )
        {
          cols.reset( j );
          return;
        }
        cl.push_back( j );
        cr.push_back( std::move( s ) );
      } );
      for ( std::size_t a = 0; a < cl.size(); ++a )
      {
        if ( !cols.test( cl[a] ) )
          continue;
        for ( std::size_t b = 0; b < cl.size(); ++b )
        {
          if ( a == b || !cols.test( cl[b] ) )
            continue;
          if ( cr[a].is_subset_of( cr[b] ) && ( cr[a] != cr[b] || cl[a] > cl[b] ) )
          {
            cols.reset( cl[a] );
            changed = true;
            break;
          }
        }
      }

      /* row dominance: drop r when another row's options are a subset of r's */
      std::vector<std::size_t> rl;
      std::vector<bit_vector> rc;
      rows.for_each_set( [&]( std::size_t r ) {
        rl.push_back( r );
        rc.push_back( b_.row_cols[r] & cols );
      } );
      for ( std::size_t a = 0; a < rl.size(); ++a )
      {
        if ( !rows.test( rl[a] ) )
          continue;
        for ( std::size_t b = 0; b < rl.size(); ++b )
        {
          if ( a == b || !rows.test( rl[b] ) )
            continue;
          if ( rc[b].is_subset_of( rc[a] ) && ( rc[a] != rc[b] || rl[a] > rl[b] ) )
          {
            rows.reset( rl[a] );
            changed = true;
            break;
          }
        }
      }
    }

    if ( rows.none() )
    {
      best_ = std::min( best_, depth );
      return;
    }

    /* lower bound: rows no single column can cover two of */
    std::vector<std::pair<std::size_t, std::size_t>> order;
    rows.for_each_set( [&]( std::size_t r ) { order.emplace_back( b_.row_cols[r].intersection_count( cols ), r ); } );
    std::sort( order.begin(), order.end() );
    bit_vector used( nc_ );
    std::size_t lb = 0;
    for ( auto [cnt, r] : order )
    {
      auto avail = b_.row_cols[r] & cols;
      if ( !avail.intersects( used ) )
      {
        used |= avail;
        ++lb;
      }
    }
    if ( depth + lb >= best_ )
      return;

    /* branch on the row with fewest options, widest columns first */
    const std::size_t r = order.front().second;
    std::vector<std::pair<std::size_t, std::size_t>> branch;
    ( b_.row_cols[r] & cols ).for_each_set( [&]( std::size_t j ) {
      branch.emplace_back( nr_ - b_.col_rows[j].intersection_count( rows ), j );
    } );
    std::sort( branch.begin(), branch.end() );
    for ( auto [_, j] : branch )
    {
      auto next_rows = rows;
      next_rows.subtract( b_.col_rows[j] );
      cols.reset( j );
      search( std::move( next_rows ), cols, depth + 1 );
      if ( best_ <= target_ || depth + 1 >= best_ )
        return;
    }
  }

  const block& b_;
  const cover_options& opts_;
  uint64_t& nodes_;
  std::size_t nr_, nc_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
};

std::vector<uint32_t> solve_block( const block& b, std::size_t& size, const cover_options& opts, uint64_t& nodes )
{
  block_solver solver( b, opts, nodes );
  const std::size_t nr = b.row_cols.size(), nc = b.col_rows.size();
  bit_vector all_rows( nr, true ), all_cols( nc, true );

  const auto ub = solver.greedy( all_rows, all_cols );
  const auto opt = std::min( ub, solver.minimum( all_rows, all_cols, ub ) );
  size = opt;

  /* lexicographically least cover of size opt: fix the smallest feasible column, repeat */
  std::vector<uint32_t> chosen;
  bit_vector rows = all_rows;
  std::size_t remaining = opt;
  for ( std::size_t j = 0; j < nc && remaining > 0; ++j )
  {
    if ( !b.col_rows[j].intersects( rows ) )
      continue;
    auto next_rows = rows;
    next_rows.subtract( b.col_rows[j] );
    bool ok;
    if ( next_rows.none() )
      ok = true;
    else if ( remaining == 1 )
      ok = false;
    else
    {
      bit_vector later( nc );
      for ( std::size_t k = j + 1; k < nc; ++k )
        later.set( k );
      bool coverable = true;
      next_rows.for_each_set( [&]( std::size_t r ) { coverable = coverable && b.row_cols[r].intersects( later ); } );
      ok = coverable && solver.minimum( next_rows, later, remaining, remaining - 1 ) <= remaining - 1;
    }
    if ( ok )
    {
      chosen.push_back( b.global_cols[j] );
      rows = std::move( next_rows );
      --remaining;
    }
  }
  return chosen;
}

} // namespace

min_cover_result solve_unate_cover( std::size_t num_rows, const std::vector<bit_vector>& columns,
                                    const cover_options& opts )
{
  min_cover_result result;
  const std::size_t nc = columns.size();

  std::vector<std::vector<uint32_t>> row_cols( num_rows );
  for ( std::size_t j = 0; j < nc; ++j )
  {
    if ( columns[j].size() != num_rows )
      throw dimension_error( "column bitset length differs from the row count" );
    columns[j].for_each_set( [&]( std::size_t r ) { row_cols[r].push_back( static_cast<uint32_t>( j ) ); } );
  }
  for ( std::size_t r = 0; r < num_rows; ++r )
    if ( row_cols[r].empty() )
      throw infeasible_error( "row " + std::to_string( r ) + " is covered by no column" );

  /* essential columns belong to every cover */
  bit_vector uncovered( num_rows, true );
  std::vector<uint32_t> witness;
  for ( std::size_t r = 0; r < num_rows; ++r )
  {
    if ( row_cols[r].size() == 1 && uncovered.test( r ) )
    {
      const auto j = row_cols[r][0];
      witness.push_back( j );
      uncovered.subtract( columns[j] );
    }
  }
  std::sort( witness.begin(), witness.end() );
  witness.erase( std::unique( witness.begin(), witness.end() ), witness.end() );

  /* connected blocks of the remaining rows (rows linked by a shared column) */
  std::vector<uint32_t> parent( num_rows );
  std::iota( parent.begin(), parent.end(), 0u );
  auto find = [&]( uint32_t x ) {
    while ( parent[x] != x )
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for ( std::size_t j = 0; j < nc; ++j )
  {
    uint32_t first = UINT32_MAX;
    ( columns[j] & uncovered ).for_each_set( [&]( std::size_t r ) {
      if ( first == UINT32_MAX )
        first = static_cast<uint32_t>( r );
      else
        parent[find( static_cast<uint32_t>( r ) )] = find( first );
    } );
  }

  std::vector<std::vector<uint32_t>> block_rows( num_rows );
  uncovered.for_each_set( [&]( std::size_t r ) { block_rows[find( static_cast<uint32_t>( r ) )].push_back( static_cast<uint32_t>( r ) ); } );

  uint64_t nodes = 0;
  result.size = witness.size();
  for ( auto& rows : block_rows )
  {
    if ( rows.empty() )
      continue;
    block b;
    std::vector<uint32_t> local_row( num_rows, UINT32_MAX );
    for ( std::size_t i = 0; i < rows.size(); ++i )
      local_row[rows[i]] = static_cast<uint32_t>( i );
    for ( auto r : rows )
      for ( auto j : row_cols[r] )
        b.global_cols.push_back( j );
    std::sort( b.global_cols.begin(), b.global_cols.end() );
    b.global_cols.erase( std::unique( b.global_cols.begin(), b.global_cols.end() ), b.global_cols.end() );

    b.col_rows.assign( b.global_cols.size(), bit_vector( rows.size() ) );
    b.row_cols.assign( rows.size(), bit_vector( b.global_cols.size() ) );
    for ( std::size_t lj = 0; lj < b.global_cols.size(); ++lj )
    {
      ( columns[b.global_cols[lj]] & uncovered ).for_each_set( [&]( std::size_t r ) {
        const auto lr = local_row[r];
        b.col_rows[lj].set( lr );
        b.row_cols[lr].set( lj );
      } );
    }
    std::size_t size = 0;
    auto chosen = solve_block( b, size, opts, nodes );
    result.size += size;
    witness.insert( witness.end(), chosen.begin(), chosen.end() );
  }
  std::sort( witness.begin(), witness.end() );
  result.witness = std::move( witness );
  result.optimal = true;
  return result;
}

min_cover_result min_set_cover( const set_cover_instance& inst, const cover_options& opts )
{
  inst.validate();
  if ( inst.has_uncoverable_element() )
    throw infeasible_error( "some element lies in no subset; no cover exists" );
  std::vector<bit_vector> cols;
  cols.reserve( inst.subsets.size() );
  for ( const auto& s : inst.subsets )
  {
    bit_vector c( inst.m );
    for ( auto e : s )
      c.set( e - 1 );
    cols.push_back( std::move( c ) );
  }
  return solve_unate_cover( inst.m, cols, opts );
}

min_formula min_cnf( const cube_index& index, const cover_options& opts )
{
  const auto& f = index.function();
  min_formula out;
  out.formula = clause_set{ f.num_vars(), cube_view::falsify, {} };
  const auto zeros = f.zero_points();
  if ( zeros.empty() )
  {
    out.certified = true;
    return out;
  }
  const auto primes = prime_implicates( index );

  std::vector<uint32_t> row_of( f.num_points(), UINT32_MAX );
  for ( std::size_t i = 0; i < zeros.size(); ++i )
    row_of[zeros[i]] = static_cast<uint32_t>( i );

  std::vector<bit_vector> cols;
  cols.reserve( primes.cubes.size() );
  for ( const auto& c : primes.cubes )
  {
    bit_vector col( zeros.size() );
    if ( c.size() <= zeros.size() )
    {
      c.for_each_member( [&]( uint32_t p ) {
        if ( row_of[p] != UINT32_MAX )
          col.set( row_of[p] );
      } );
    }
    else
    {
      for ( std::size_t i = 0; i < zeros.size(); ++i )
        if ( c.contains( zeros[i] ) )
          col.set( i );
    }
    cols.push_back( std::move( col ) );
  }
  const auto res = solve_unate_cover( zeros.size(), cols, opts );
  out.size = res.size;
  for ( auto j : res.witness )
    out.formula.cubes.push_back( primes.cubes[j] );
  out.certified = res.optimal;
  return out;
}

min_formula min_cnf( const partial_function& f, const cover_options& opts ) { return min_cnf( cube_index( f ), opts ); }

min_formula min_dnf( const partial_function& f, const cover_options& opts )
{
  auto out = min_cnf( complement( f ), opts );
  out.formula.view = cube_view::satisfy;
  return out;
}

} // namespace essgap
