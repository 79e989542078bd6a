#include "essgap/essence.hpp"
#include "essgap/implicants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace essgap
{

std::string to_string( point_view v ) { return v == point_view::falsepoints ? "false" : "true"; }

point_view parse_point_view( const std::string& s )
{
  if ( s == "false" || s == "falsepoints" || s == "0" )
    return point_view::falsepoints;
  if ( s == "true" || s == "truepoints" || s == "1" )
    return point_view::truepoints;
  throw input_error( "unknown view '" + s + "' (expected false|true)" );
}

partial_function oriented( const partial_function& f, point_view view )
{
  return view == point_view::falsepoints ? f : complement( f );
}

namespace
{

uint32_t all_mask( uint32_t n ) { return n >= 32 ? ~0u : ( ( 1u << n ) - 1 ); }

/* Max clique in the independence graph (bitset coloring bound). */
class independent_set_search
{
public:
  independent_set_search( std::vector<bit_vector> adj, uint64_t node_limit )
      : adj_( std::move( adj ) ), limit_( node_limit )
  {
  }

  std::vector<uint32_t> run()
  {
    const std::size_t n = adj_.size();
    bit_vector p( n, true );
    /* greedy start */
    bit_vector cand = p;
    while ( cand.any() )
    {
      const auto v = cand.find_first();
      best_.push_back( static_cast<uint32_t>( v ) );
      cand &= adj_[v];
    }
    expand( std::move( p ) );
    return best_;
  }

private:
  void expand( bit_vector p )
  {
    if ( ++nodes_ > limit_ )
      throw work_limit_error( "independent set search exceeded " + std::to_string( limit_ ) + " nodes" );

    std::vector<std::pair<uint32_t, uint32_t>> order; /* (vertex, color) by increasing color */
    bit_vector uncolored = p;
    uint32_t color = 0;
    while ( uncolored.any() )
    {
      ++color;
      bit_vector q = uncolored;
      while ( q.any() )
      {
        const auto v = q.find_first();
        uncolored.reset( v );
        q.reset( v );
        q.subtract( adj_[v] );
        order.emplace_back( static_cast<uint32_t>( v ), color );
      }
    }
    for ( auto it = order.rbegin(); it != order.rend(); ++it )
    {
      const auto [v, col] = *it;
      if ( current_.size() + col <= best_.size() )
        return;
      current_.push_back( v );
      auto next = p & adj_[v];
      if ( next.none() )
      {
        if ( current_.size() > best_.size() )
          best_ = current_;
      }
      else
        expand( std::move( next ) );
      current_.pop_back();
      p.reset( v );
    }
  }

  std::vector<bit_vector> adj_;
  uint64_t limit_;
  uint64_t nodes_ = 0;
  std::vector<uint32_t> current_, best_;
};

/*! Largest point set meeting every prime implicate of the oriented function
 * in at most k-1 points (k points share an implicate iff some prime holds
 * all of them).
 *
 * Branch and bound over include/exclude decisions. Points whose constraints
 * can no longer be violated are taken at once. Nodes are pruned by a
 * partition of the candidates into primes and by a Lagrangian relaxation of
 * the capacity constraints, warm-started from the parent multipliers.
 */
class capacity_packing
{
public:
  capacity_packing( std::size_t num_points, std::vector<bit_vector> constraints, uint32_t capacity, uint64_t node_limit )
      : n_( num_points ), cons_( std::move( constraints ) ), of_( num_points ), limit_( node_limit )
  {
    r_.assign( cons_.size(), static_cast<int>( capacity ) );
    for ( std::size_t j = 0; j < cons_.size(); ++j )
      cons_[j].for_each_set( [&]( std::size_t v ) { of_[v].push_back( static_cast<uint32_t>( j ) ); } );
  }

  /* false when the node limit stopped the search; best() is then only a lower bound */
  bool run()
  {
    try
    {
      search( bit_vector( n_, true ), std::vector<double>( cons_.size(), 0.0 ), 0 );
    }
    catch ( const work_limit_error& )
    {
      return false;
    }
    return true;
  }

  const std::vector<uint32_t>& best() const noexcept { return best_; }

private:
  long overload( std::size_t j, const bit_vector& cand ) const
  {
    return static_cast<long>( cons_[j].intersection_count( cand ) ) - r_[j];
  }

  /* candidates grouped inside primes: each group adds at most its residual capacity */
  std::size_t partition_bound( const bit_vector& cand ) const
  {
    bit_vector rem = cand;
    std::size_t bound = 0;
    while ( true )
    {
      long most = 0;
      std::size_t pick = cons_.size();
      for ( std::size_t j = 0; j < cons_.size(); ++j )
        if ( const long ov = overload( j, rem ); ov > most )
        {
          most = ov;
          pick = j;
        }
      if ( pick == cons_.size() )
        break;
      bound += static_cast<std::size_t>( r_[pick] );
      rem.subtract( cons_[pick] );
    }
    return bound + rem.count();
  }

  /* min over subgradient steps of sum_P lam_P r_P + sum_v max(0, 1 - sum_{P ni v} lam_P) */
  double lagrangian_bound( const bit_vector& cand, std::vector<double>& lam, int iterations, double target ) const
  {
    std::vector<std::size_t> active;
    for ( std::size_t j = 0; j < cons_.size(); ++j )
      if ( r_[j] > 0 && overload( j, cand ) > 0 )
        active.push_back( j );
      else
        lam[j] = 0.0;
    const auto verts = cand.to_indices();
    std::vector<double> rc( n_, 0.0 ), grad( active.size() );
    double best = std::numeric_limits<double>::infinity(), theta = 1.0;
    int stall = 0;
    for ( int it = 0; it < iterations; ++it )
    {
      double value = 0.0;
      for ( auto j : active )
        value += lam[j] * r_[j];
      for ( auto v : verts )
      {
        double s = 1.0;
        for ( auto j : of_[v] )
          s -= lam[j];
        rc[v] = s;
        if ( s > 0 )
          value += s;
      }
      if ( value < best - 1e-9 )
      {
        best = value;
        stall = 0;
      }
      else if ( ++stall >= 4 )
      {
        theta *= 0.5;
        stall = 0;
      }
      if ( best <= target )
        break;
      double norm = 0.0;
      for ( std::size_t a = 0; a < active.size(); ++a )
      {
        double g = r_[active[a]];
        cons_[active[a]].for_each_set( [&]( std::size_t v ) {
          if ( cand.test( v ) && rc[v] > 0 )
            g -= 1.0;
        } );
        grad[a] = g;
        norm += g * g;
      }
      if ( norm < 1e-12 )
        break;
      const double step = theta * ( value - target ) / norm;
      for ( std::size_t a = 0; a < active.size(); ++a )
        lam[active[a]] = std::max( 0.0, lam[active[a]] - step * grad[a] );
    }
    return best;
  }

  /* add candidates by decreasing reduced cost while capacities allow */
  void greedy( const bit_vector& cand, const std::vector<double>& lam )
  {
    auto verts = cand.to_indices();
    std::vector<double> rc( n_, 0.0 );
    for ( auto v : verts )
    {
      double s = 1.0;
      for ( auto j : of_[v] )
        s -= lam[j];
      rc[v] = s;
    }
    std::stable_sort( verts.begin(), verts.end(), [&]( uint32_t a, uint32_t b ) { return rc[a] > rc[b]; } );
    auto left = r_;
    auto chosen = current_;
    for ( auto v : verts )
      if ( std::all_of( of_[v].begin(), of_[v].end(), [&]( uint32_t j ) { return left[j] > 0; } ) )
      {
        for ( auto j : of_[v] )
          --left[j];
        chosen.push_back( v );
      }
    if ( chosen.size() > best_.size() )
      best_ = std::move( chosen );
  }

  void search( bit_vector cand, std::vector<double> lam, int depth )
  {
    if ( ++nodes_ > limit_ )
      throw work_limit_error( "k-independent set search exceeded " + std::to_string( limit_ ) + " nodes" );

    std::vector<uint32_t> taken_caps;
    std::size_t taken = 0;
    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( auto v = cand.find_first(); v < n_; v = cand.find_next( v + 1 ) )
        if ( std::none_of( of_[v].begin(), of_[v].end(), [&]( uint32_t j ) { return overload( j, cand ) > 0; } ) )
        {
          cand.reset( v );
          current_.push_back( static_cast<uint32_t>( v ) );
          ++taken;
          for ( auto j : of_[v] )
          {
            --r_[j];
            taken_caps.push_back( j );
          }
          changed = true;
        }
    }
    if ( current_.size() > best_.size() )
      best_ = current_;

    if ( cand.any() && current_.size() + partition_bound( cand ) > best_.size() )
    {
      const double room = static_cast<double>( best_.size() ) - static_cast<double>( current_.size() );
      const double bound = lagrangian_bound( cand, lam, depth == 0 ? 500 : 40, room + 0.5 );
      if ( depth == 0 || nodes_ % 16 == 0 )
        greedy( cand, lam );
      if ( current_.size() + static_cast<std::size_t>( std::floor( bound + 1e-7 ) ) > best_.size() )
      {
        /* branch on the binding candidate with the largest reduced cost, taking it first */
        std::size_t v = n_;
        double top = -std::numeric_limits<double>::infinity();
        for ( auto u = cand.find_first(); u < n_; u = cand.find_next( u + 1 ) )
        {
          double s = 1.0;
          bool binding = false;
          for ( auto j : of_[u] )
          {
            s -= lam[j];
            binding = binding || overload( j, cand ) > 0;
          }
          if ( binding && s > top )
          {
            top = s;
            v = u;
          }
        }
        bit_vector without = cand;
        without.reset( v );
        {
          bit_vector with = without;
          for ( auto j : of_[v] )
            if ( --r_[j] == 0 )
              with.subtract( cons_[j] );
          current_.push_back( static_cast<uint32_t>( v ) );
          search( std::move( with ), lam, depth + 1 );
          current_.pop_back();
          for ( auto j : of_[v] )
            ++r_[j];
        }
        search( std::move( without ), std::move( lam ), depth + 1 );
      }
    }

    for ( auto j : taken_caps )
      ++r_[j];
    current_.resize( current_.size() - taken );
  }

  std::size_t n_;
  std::vector<bit_vector> cons_;
  std::vector<std::vector<uint32_t>> of_;
  std::vector<int> r_;
  uint64_t limit_;
  uint64_t nodes_ = 0;
  std::vector<uint32_t> current_, best_;
};

/* least genuine 1-point of the oriented function inside the cube, or none */
bool find_separator( const partial_function& g, const cube& c, uint32_t& out )
{
  const uint32_t free = ~c.fixed & all_mask( c.n );
  uint32_t sub = 0;
  do
  {
    if ( g.ones().test( c.values | sub ) )
    {
      out = c.values | sub;
      return true;
    }
    sub = ( sub - free ) & free;
  } while ( sub != 0 );
  return false;
}

template<typename Fn>
void for_each_k_subset( const std::vector<uint32_t>& pts, uint32_t k, Fn&& fn )
{
  if ( pts.size() < k )
    return;
  std::vector<std::size_t> idx( k );
  std::iota( idx.begin(), idx.end(), 0 );
  std::vector<uint32_t> sub( k );
  while ( true )
  {
    for ( uint32_t i = 0; i < k; ++i )
      sub[i] = pts[idx[i]];
    if ( !fn( sub ) )
      return;
    int i = static_cast<int>( k ) - 1;
    while ( i >= 0 && idx[i] == pts.size() - k + i )
      --i;
    if ( i < 0 )
      return;
    ++idx[i];
    for ( uint32_t j = i + 1; j < k; ++j )
      idx[j] = idx[j - 1] + 1;
  }
}

independence_certificate make_certificate( const partial_function& g, std::vector<uint32_t> points, uint32_t k,
                                           point_view view, bool keep )
{
  independence_certificate cert;
  cert.n = g.num_vars();
  cert.k = k;
  cert.view = view;
  std::sort( points.begin(), points.end() );
  cert.points = std::move( points );
  if ( keep )
  {
    for_each_k_subset( cert.points, k, [&]( const std::vector<uint32_t>& sub ) {
      uint32_t sep = 0;
      find_separator( g, spanning_subcube( g.num_vars(), sub ), sep );
      cert.witnesses.push_back( { sub, sep } );
      return true;
    } );
  }
  return cert;
}

ess_result finish( const partial_function& f, const partial_function& g, std::vector<uint32_t> pts, uint32_t k,
                   point_view view, const ess_options& opts )
{
  ess_result res;
  res.view = view;
  res.value = pts.size();
  res.certificate = make_certificate( g, std::move( pts ), k, view, opts.keep_witnesses );
  if ( auto err = validate_certificate( res.certificate, f ); !err.empty() )
    throw error( "internal", "independence certificate failed revalidation: " + err );
  return res;
}

} // namespace

bool are_independent( assignment x, assignment y, const partial_function& f, point_view view )
{
  if ( x.n != f.num_vars() || y.n != f.num_vars() )
    throw dimension_error( "assignment dimension differs from the function" );
  const auto g = oriented( f, view );
  if ( x.index >= g.num_points() || y.index >= g.num_points() || g.value( x.index ) != fvalue::zero ||
       g.value( y.index ) != fvalue::zero )
    throw input_error( std::string( "independence is defined for " ) +
                       ( view == point_view::falsepoints ? "0-points" : "1-points" ) + " only" );
  const uint32_t pts[2] = { x.index, y.index };
  uint32_t sep;
  return find_separator( g, spanning_subcube( f.num_vars(), pts ), sep );
}

std::vector<std::vector<bool>> dependency_matrix( const partial_function& f, const std::vector<uint32_t>& points,
                                                  point_view view )
{
  cube_index index( oriented( f, view ) );
  std::vector<std::vector<bool>> m( points.size(), std::vector<bool>( points.size(), false ) );
  for ( std::size_t i = 0; i < points.size(); ++i )
    for ( std::size_t j = 0; j < points.size(); ++j )
      m[i][j] = !( index.span_flags( points[i], points[j] ) & cube_index::has_one );
  return m;
}

ess_result ess( const partial_function& f, point_view view, const ess_options& opts )
{
  const auto g = oriented( f, view );
  cube_index index( g );
  const auto zeros = g.zero_points();
  const std::size_t n = zeros.size();

  /* independence graph, vertices renumbered by decreasing degree (ties by index) */
  std::vector<bit_vector> adj0( n, bit_vector( n ) );
  for ( std::size_t i = 0; i < n; ++i )
    for ( std::size_t j = i + 1; j < n; ++j )
      if ( index.span_flags( zeros[i], zeros[j] ) & cube_index::has_one )
      {
        adj0[i].set( j );
        adj0[j].set( i );
      }
  std::vector<uint32_t> order( n );
  std::iota( order.begin(), order.end(), 0u );
  std::vector<std::size_t> deg( n );
  for ( std::size_t i = 0; i < n; ++i )
    deg[i] = adj0[i].count();
  std::stable_sort( order.begin(), order.end(), [&]( uint32_t a, uint32_t b ) { return deg[a] > deg[b]; } );
  std::vector<uint32_t> pos( n );
  for ( std::size_t i = 0; i < n; ++i )
    pos[order[i]] = static_cast<uint32_t>( i );
  std::vector<bit_vector> adj( n, bit_vector( n ) );
  for ( std::size_t i = 0; i < n; ++i )
    adj0[order[i]].for_each_set( [&]( std::size_t j ) { adj[i].set( pos[j] ); } );

  std::vector<uint32_t> pts;
  if ( n > 0 )
  {
    independent_set_search search( std::move( adj ), opts.node_limit );
    for ( auto v : search.run() )
      pts.push_back( zeros[order[v]] );
  }
  return finish( f, g, std::move( pts ), 2, view, opts );
}

ess_result ess_k_within( const partial_function& f, uint32_t k, point_view view, const std::vector<uint32_t>& points,
                         const ess_options& opts )
{
  if ( k < 2 )
    throw input_error( "ess_k needs k >= 2" );
  const auto g = oriented( f, view );
  for ( auto p : points )
    if ( p >= g.num_points() || g.value( p ) != fvalue::zero )
      throw input_error( "candidate point " + std::to_string( p ) + " does not have the polarity of the view" );
  std::vector<uint32_t> cands = points;
  std::sort( cands.begin(), cands.end() );
  cands.erase( std::unique( cands.begin(), cands.end() ), cands.end() );

  /* one capacity constraint per distinct prime holding at least k candidates */
  std::vector<bit_vector> cons;
  for ( const auto& c : prime_implicates( cube_index( g ) ).cubes )
  {
    bit_vector members( cands.size() );
    for ( std::size_t i = 0; i < cands.size(); ++i )
      if ( c.contains( cands[i] ) )
        members.set( i );
    if ( members.count() >= k )
      cons.push_back( std::move( members ) );
  }
  std::sort( cons.begin(), cons.end(), []( const bit_vector& a, const bit_vector& b ) {
    return std::lexicographical_compare( a.data(), a.data() + a.num_words(), b.data(), b.data() + b.num_words() );
  } );
  cons.erase( std::unique( cons.begin(), cons.end() ), cons.end() );

  capacity_packing search( cands.size(), std::move( cons ), k - 1, opts.node_limit );
  const bool complete = search.run();
  if ( !complete && !opts.allow_partial )
    throw work_limit_error( "k-independent set search exceeded " + std::to_string( opts.node_limit ) + " nodes" );
  std::vector<uint32_t> pts;
  for ( auto i : search.best() )
    pts.push_back( cands[i] );
  auto res = finish( f, g, std::move( pts ), k, view, opts );
  res.exact = complete;
  return res;
}

ess_result ess_k( const partial_function& f, uint32_t k, point_view view, const ess_options& opts )
{
  if ( k < 2 )
    throw input_error( "ess_k needs k >= 2" );
  return ess_k_within( f, k, view, oriented( f, view ).zero_points(), opts );
}

partition_bound ess_k_partition_bound( const partial_function& f, uint32_t k, point_view view,
                                       const std::vector<std::vector<uint32_t>>& blocks, const ess_options& opts )
{
  const auto g = oriented( f, view );
  bit_vector seen( g.num_points() );
  for ( const auto& b : blocks )
    for ( auto p : b )
    {
      if ( p >= g.num_points() || g.value( p ) != fvalue::zero )
        throw input_error( "partition contains a point of the wrong polarity" );
      if ( seen.test( p ) )
        throw input_error( "partition blocks overlap" );
      seen.set( p );
    }
  if ( seen != g.zeros() )
    throw input_error( "partition does not cover every point of the view" );

  partition_bound out;
  auto block_opts = opts;
  block_opts.keep_witnesses = false;
  for ( const auto& b : blocks )
  {
    const auto v = ess_k_within( f, k, view, b, block_opts ).value;
    out.block_values.push_back( v );
    out.bound += v;
  }
  return out;
}

ratio cnf_lower_bound( const partial_function& f, uint32_t k, const ess_options& opts )
{
  auto o = opts;
  o.keep_witnesses = false;
  const auto e = ess_k( f, k, point_view::falsepoints, o ).value;
  ratio r{ e, k - 1 };
  const auto g = std::gcd( r.num, r.den );
  if ( g > 1 )
  {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string validate_certificate( const independence_certificate& cert, const partial_function& f )
{
  if ( cert.n != f.num_vars() )
    return "certificate dimension differs from the function";
  const auto g = oriented( f, cert.view );
  for ( std::size_t i = 0; i < cert.points.size(); ++i )
  {
    const auto p = cert.points[i];
    if ( p >= g.num_points() || g.value( p ) != fvalue::zero )
      return "point " + std::to_string( p ) + " has the wrong polarity";
    if ( i > 0 && cert.points[i - 1] >= p )
      return "points are not strictly ascending";
  }
  for ( const auto& w : cert.witnesses )
  {
    if ( w.subset.size() != cert.k )
      return "witness subset of wrong size";
    const auto c = spanning_subcube( cert.n, w.subset );
    if ( !c.contains( w.separator ) || g.value( w.separator ) != fvalue::one )
      return "listed separator " + std::to_string( w.separator ) + " does not separate its subset";
  }
  std::string err;
  for_each_k_subset( cert.points, cert.k, [&]( const std::vector<uint32_t>& sub ) {
    uint32_t sep;
    if ( !find_separator( g, spanning_subcube( cert.n, sub ), sep ) )
    {
      err = "a " + std::to_string( cert.k ) + "-subset shares an implicate";
      return false;
    }
    return true;
  } );
  return err;
}

} // namespace essgap
