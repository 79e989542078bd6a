#include "essgap/report.hpp"

#include "essgap/constructions.hpp"
#include "essgap/errors.hpp"
#include "essgap/essence.hpp"
#include "essgap/exact_cover.hpp"
#include "essgap/horn.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace essgap
{

gap_row& gap_row::param( std::string key, std::string value )
{
  params.emplace_back( std::move( key ), std::move( value ) );
  return *this;
}

gap_row& gap_row::check( bool ok, const std::string& what )
{
  if ( !ok )
  {
    pass = false;
    failures.push_back( what );
  }
  return *this;
}

std::optional<double> gap_row::ratio_cs_ess() const
{
  if ( !cs || !ess || *ess == 0 )
    return std::nullopt;
  return static_cast<double>( *cs ) / static_cast<double>( *ess );
}

std::optional<double> gap_row::ratio_ds_essdual() const
{
  if ( !ds || !ess_dual || *ess_dual == 0 )
    return std::nullopt;
  return static_cast<double>( *ds ) / static_cast<double>( *ess_dual );
}

bool gap_report::pass() const
{
  return std::all_of( rows.begin(), rows.end(), []( const gap_row& r ) { return r.pass; } ) &&
         ( !summary.is_object() || summary.value( "pass", true ) );
}

const char* const csv_header =
    "family,params,n,cs,ds,ess,ess_dual,k,ess_k,mi,ratio_cs_ess,ratio_ds_essdual,status";

namespace
{

template<typename T>
std::string cell( const std::optional<T>& v )
{
  return v ? std::to_string( *v ) : std::string{};
}

std::string ratio_cell( const std::optional<double>& r )
{
  if ( !r )
    return {};
  std::ostringstream ss;
  ss << std::fixed << std::setprecision( 6 ) << *r;
  return ss.str();
}

template<typename T>
nlohmann::ordered_json opt_json( const std::optional<T>& v )
{
  return v ? nlohmann::ordered_json( *v ) : nlohmann::ordered_json( nullptr );
}

/* params as `a=1;b=2`, quoted when a separator would break the row */
std::string params_cell( const gap_row& r )
{
  std::string s;
  for ( const auto& [k, v] : r.params )
    s += ( s.empty() ? "" : ";" ) + k + "=" + v;
  if ( s.find_first_of( ",\"" ) != std::string::npos )
  {
    std::string q = "\"";
    for ( char c : s )
      q += c == '"' ? std::string( "\"\"" ) : std::string( 1, c );
    return q + "\"";
  }
  return s;
}

} // namespace

void write_csv( std::ostream& os, const gap_report& report )
{
  os << csv_header << "\n";
  for ( const auto& r : report.rows )
    os << r.family << "," << params_cell( r ) << "," << r.n << "," << cell( r.cs ) << "," << cell( r.ds ) << ","
       << cell( r.ess ) << "," << cell( r.ess_dual ) << "," << cell( r.k ) << "," << cell( r.ess_k ) << ","
       << cell( r.mi ) << "," << ratio_cell( r.ratio_cs_ess() ) << "," << ratio_cell( r.ratio_ds_essdual() ) << ","
       << ( r.pass ? "PASS" : "FAIL" ) << "\n";
}

nlohmann::ordered_json to_json( const gap_row& r )
{
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for ( const auto& [k, v] : r.params )
    params[k] = v;
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["params"] = params;
  j["n"] = r.n;
  j["cs"] = opt_json( r.cs );
  j["ds"] = opt_json( r.ds );
  j["ess"] = opt_json( r.ess );
  j["ess_dual"] = opt_json( r.ess_dual );
  j["k"] = opt_json( r.k );
  j["ess_k"] = opt_json( r.ess_k );
  j["mi"] = opt_json( r.mi );
  j["ratio_cs_ess"] = opt_json( r.ratio_cs_ess() );
  j["ratio_ds_essdual"] = opt_json( r.ratio_ds_essdual() );
  j["seed"] = r.seed;
  j["status"] = r.pass ? "PASS" : "FAIL";
  if ( !r.failures.empty() )
    j["failures"] = r.failures;
  return j;
}

nlohmann::ordered_json to_json( const gap_report& report )
{
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["claim"] = report.claim;
  j["status"] = report.pass() ? "PASS" : "FAIL";
  j["summary"] = report.summary;
  j["rows"] = nlohmann::ordered_json::array();
  for ( const auto& r : report.rows )
    j["rows"].push_back( to_json( r ) );
  return j;
}

/* ---- suites ---------------------------------------------------------------- */

namespace
{

std::size_t choose2( std::size_t k ) { return k * ( k - 1 ) / 2; }

std::string subsets_name( uint32_t r ) { return r == 2 ? "all-pairs" : r == 3 ? "all-triples" : "all-k-subsets"; }

gap_report suite_cover_reduction( const suite_options& o )
{
  gap_report rep{ "lemma1", "ds of the reduced partial function equals the minimum set cover size", {}, {} };
  std::vector<uint32_t> ms;
  if ( o.m )
    ms.push_back( *o.m );
  else
    ms = { 2, 3, 4 };
  auto add = [&]( const std::string& family, const set_cover_instance& inst, gap_row row ) {
    const auto f = gimpel_partial( inst, o.max_vars );
    const auto cover = min_set_cover( inst );
    row.family = family;
    row.n = f.num_vars();
    row.seed = o.seed;
    row.ds = min_dnf( f ).size;
    row.param( "min_cover", cover.size );
    row.check( *row.ds == cover.size, "ds differs from the minimum cover" );
    rep.rows.push_back( std::move( row ) );
  };
  for ( auto m : ms )
    for ( uint32_t r : { 2u, 3u } )
      if ( r <= m )
      {
        const auto inst = all_k_subsets_instance( m, r );
        add( subsets_name( r ), inst, gap_row{}.param( "m", m ).param( "r", r ) );
      }
  std::mt19937_64 rng( o.seed );
  const std::size_t count = o.count.value_or( 100 );
  for ( std::size_t i = 0; i < count; ++i )
  {
    const uint32_t m = o.m ? *o.m : std::uniform_int_distribution<uint32_t>( 1, 4 )( rng );
    const uint32_t p = std::uniform_int_distribution<uint32_t>( 1, 5 )( rng );
    const auto inst = random_instance( m, p, rng );
    add( "random", inst, gap_row{}.param( "m", m ).param( "p", p ).param( "index", i ) );
  }
  return rep;
}

gap_report suite_random_vectors( const suite_options& o )
{
  gap_report rep{ "lemma2", "a random V/W draw satisfies the iff-property with probability above 1/2", {}, {} };
  const uint32_t m = o.m.value_or( 3 );
  const uint32_t r = o.k.value_or( 2 );
  const auto inst = all_k_subsets_instance( m, r );
  const uint32_t t = o.t.value_or( random_vw_length( r, inst.num_subsets(), m ) );
  const std::size_t trials = o.trials.value_or( 200 );
  std::mt19937_64 rng( o.seed );
  std::size_t successes = 0, forward_failures = 0;
  for ( std::size_t i = 0; i < trials; ++i )
  {
    const auto vw = draw_vw( inst, t, rng );
    successes += vw_property_holds( vw, inst );
    forward_failures += !vw_forward_holds( vw, inst );
  }
  const double rate = trials ? static_cast<double>( successes ) / static_cast<double>( trials ) : 0.0;
  gap_row row;
  row.family = subsets_name( r );
  row.n = t;
  row.seed = o.seed;
  row.param( "m", m ).param( "r", r ).param( "t", t ).param( "trials", trials ).param( "successes", successes );
  std::ostringstream ss;
  ss << std::fixed << std::setprecision( 4 ) << rate;
  row.param( "rate", ss.str() ).param( "forward_failures", forward_failures );
  row.check( rate > 0.5, "success rate not above 1/2" );
  row.check( forward_failures == 0, "forward implication failed on some draw" );
  rep.summary["trials"] = trials;
  rep.summary["successes"] = successes;
  rep.summary["rate"] = rate;
  rep.summary["forward_failures"] = forward_failures;
  rep.rows.push_back( std::move( row ) );
  return rep;
}

gap_report suite_pairs_lift( const suite_options& o )
{
  gap_report rep{ "thm1", "lifted all-pairs reduction: ds = s(ceil(m/2)+1), ess_dual <= 2s, ds/ess_dual >= (n+1)/8",
                  {}, {} };
  std::vector<uint32_t> ms;
  if ( o.m )
    ms.push_back( *o.m );
  else
    ms = { 3, 4 };
  for ( auto m : ms )
  {
    const auto fhat = gimpel_partial( all_k_subsets_instance( m, 2 ), o.max_vars );
    const auto s = fhat.num_stars();
    const auto g = partial_function( allender_lift( fhat, o.max_vars ) );
    gap_row row;
    row.family = "lift";
    row.n = g.num_vars();
    row.seed = o.seed;
    row.ds = min_dnf( g ).size;
    row.ess_dual = ess( g, point_view::truepoints ).value;
    const std::size_t expect_ds = s * ( ( m + 1 ) / 2 + 1 );
    row.param( "base", "gimpel-all-pairs" ).param( "m", m ).param( "s", s ).param( "two_s", 2 * s );
    row.param( "ess_dual_vs_2s", *row.ess_dual == 2 * s ? "equal" : ( *row.ess_dual < 2 * s ? "below" : "above" ) );
    row.check( *row.ds == expect_ds, "ds differs from s(ceil(m/2)+1)" );
    row.check( *row.ess_dual <= 2 * s, "ess_dual exceeds 2s" );
    row.check( *row.ds * 8 >= ( row.n + 1 ) * *row.ess_dual, "ds/ess_dual below (n+1)/8" );
    rep.rows.push_back( std::move( row ) );
  }
  return rep;
}

gap_report suite_uniform_lift( const suite_options& o )
{
  gap_report rep{ "thm3", "k-uniform embedding: ds = ceil(m/k), ess_k_dual = k-1; lifted ess_k_dual <= 2s(k-1), "
                          "ds = s(ds+1)",
                  {}, {} };
  const uint32_t m = o.m.value_or( 5 );
  const uint32_t k = o.k.value_or( 3 );
  const auto inst = all_k_subsets_instance( m, k );
  const auto ftilde = generalized_gimpel( classic_vw( inst ), o.max_vars );
  const auto s = ftilde.num_stars();

  gap_row base;
  base.family = "gimpel-general";
  base.n = ftilde.num_vars();
  base.seed = o.seed;
  base.k = k;
  base.ds = min_dnf( ftilde ).size;
  base.ess_k = ess_k( ftilde, k, point_view::truepoints ).value;
  base.param( "m", m ).param( "r", k ).param( "embedding", "classic" ).param( "s", s );
  base.check( *base.ds == ( m + k - 1 ) / k, "ds differs from ceil(m/k)" );
  base.check( *base.ess_k == k - 1, "ess_k_dual differs from k-1" );
  const auto ds_base = *base.ds;
  rep.rows.push_back( std::move( base ) );

  const auto lifted = allender_lift( ftilde, o.max_vars );
  const auto g = partial_function( lifted );
  gap_row row;
  row.family = "lift";
  row.n = g.num_vars();
  row.seed = o.seed;
  row.k = k;
  row.ds = min_dnf( g ).size;
  ess_options opts;
  opts.keep_witnesses = false;
  const auto upper = ess_k_partition_bound( g, k, point_view::truepoints, lift_truepoint_blocks( ftilde, lifted ), opts );
  opts.node_limit = 500;
  opts.allow_partial = true;
  const auto lower = ess_k( g, k, point_view::truepoints, opts );
  row.ess_k = upper.bound;
  row.param( "base", "gimpel-general" ).param( "m", m ).param( "s", s );
  row.param( "ess_k_lower", lower.value ).param( "ess_k_upper", upper.bound );
  row.param( "ess_k_exact", lower.exact || lower.value == upper.bound ? "true" : "false" );
  row.param( "bound", 2 * s * ( k - 1 ) );
  row.check( upper.bound <= 2 * s * ( k - 1 ), "ess_k_dual exceeds 2s(k-1)" );
  row.check( *row.ds == s * ( ds_base + 1 ), "ds differs from s(ds+1)" );
  rep.rows.push_back( std::move( row ) );
  return rep;
}

gap_report suite_horn_gap( const suite_options& o )
{
  gap_report rep{ "horn-gap", "Horn family: cs = 3C(k,2) + t ceil(k/2), ess <= 3C(k,2) + t, mi <= ess, cs <= n mi", {},
                  {} };
  std::vector<horn_gap_params> cases;
  if ( o.k || o.t )
    cases.push_back( { o.k.value_or( 3 ), o.t.value_or( 1 ) } );
  else
    cases = { { 3, 1 }, { 3, 2 }, { 4, 2 } };
  for ( const auto& hp : cases )
  {
    const auto fam = horn_gap( hp, true, o.max_vars );
    const auto& table = *fam.table;
    const partial_function f( table );
    gap_row row;
    row.family = "horn-gap";
    row.n = fam.n;
    row.seed = o.seed;
    row.param( "k", hp.k ).param( "t", hp.t ).param( "clauses", fam.cnf.cubes.size() );
    row.cs = min_cnf( f ).size;
    ess_options opts;
    opts.keep_witnesses = false;
    row.ess = ess( f, point_view::falsepoints, opts ).value;
    const auto basis = afp_learn( table );
    row.mi = basis.meta_clauses.size();
    const auto horn_cnf = min_horn_cnf( table ).size;
    row.param( "min_horn_cnf", horn_cnf ).param( "horn_cnf_equals_cs", horn_cnf == *row.cs ? "true" : "false" );
    const bool horn = is_horn( table );
    row.param( "is_horn", horn ? "true" : "false" );
    row.param( "negatives_independent", check_negatives_independent( basis, table ).independent ? "true" : "false" );
    const std::size_t c2 = choose2( hp.k );
    row.check( horn, "function is not Horn" );
    row.check( *row.cs == 3 * c2 + hp.t * ( ( hp.k + 1 ) / 2 ), "cs differs from 3C(k,2) + t ceil(k/2)" );
    row.check( *row.ess <= 3 * c2 + hp.t, "ess exceeds 3C(k,2) + t" );
    row.check( *row.ess >= *row.mi, "ess below the meta-clause count" );
    row.check( *row.cs <= row.n * *row.mi, "cs exceeds n times the meta-clause count" );
    rep.rows.push_back( std::move( row ) );
  }
  return rep;
}

gap_report suite_bounds_corpus( const suite_options& o )
{
  gap_report rep{ "bounds-corpus",
                  "ess <= cs, ess_2 = ess, ess_k/(k-1) <= cs, ess_dual = ess(not f), cs <= 2^(n-1)", {}, {} };
  std::mt19937_64 rng( o.seed );
  const std::size_t count = o.count.value_or( 1000 );
  std::bernoulli_distribution coin( 0.5 );
  ess_options opts;
  opts.keep_witnesses = false;
  for ( std::size_t i = 0; i < count; ++i )
  {
    const uint32_t n = o.n ? *o.n : std::uniform_int_distribution<uint32_t>( 1, 8 )( rng );
    check_var_cap( n, std::min<uint32_t>( o.max_vars, 10 ), "bounds corpus function" );
    const auto table = truth_table::from_predicate( n, [&]( uint32_t ) { return coin( rng ); } );
    const partial_function f( table );
    gap_row row;
    row.family = "random";
    row.n = n;
    row.seed = o.seed;
    row.param( "index", i );
    row.cs = min_cnf( f ).size;
    row.ds = min_dnf( f ).size;
    row.ess = ess( f, point_view::falsepoints, opts ).value;
    row.ess_dual = ess( f, point_view::truepoints, opts ).value;
    const auto zeros = f.zeros().count();
    const auto e2 = ess_k( f, 2, point_view::falsepoints, opts ).value;
    const auto e3 = ess_k( f, 3, point_view::falsepoints, opts ).value;
    row.k = 3;
    row.ess_k = e3;
    row.check( *row.ess <= *row.cs, "ess exceeds cs" );
    row.check( e2 == *row.ess, "ess_2 differs from ess" );
    row.check( e3 <= 2 * *row.cs, "ess_3/2 exceeds cs" );
    if ( zeros <= 300 )
    {
      const auto e4 = ess_k( f, 4, point_view::falsepoints, opts ).value;
      row.param( "ess_4", e4 );
      row.check( e4 <= 3 * *row.cs, "ess_4/3 exceeds cs" );
    }
    row.check( *row.ess_dual == ess( complement( f ), point_view::falsepoints, opts ).value,
               "ess_dual differs from ess of the complement" );
    row.check( n == 0 || *row.cs <= ( std::size_t{ 1 } << ( n - 1 ) ), "cs exceeds 2^(n-1)" );
    rep.rows.push_back( std::move( row ) );
  }
  return rep;
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{ "lemma1", "lemma2", "thm1", "thm3", "horn-gap", "bounds-corpus" };
  return names;
}

gap_report run_suite( const std::string& name, const suite_options& opts )
{
  if ( name == "lemma1" )
    return suite_cover_reduction( opts );
  if ( name == "lemma2" )
    return suite_random_vectors( opts );
  if ( name == "thm1" )
    return suite_pairs_lift( opts );
  if ( name == "thm3" )
    return suite_uniform_lift( opts );
  if ( name == "horn-gap" )
    return suite_horn_gap( opts );
  if ( name == "bounds-corpus" )
    return suite_bounds_corpus( opts );
  throw input_error( "unknown suite: " + name );
}

} // namespace essgap
