#include <essgap/constructions.hpp>
#include <essgap/essence.hpp>
#include <essgap/exact_cover.hpp>
#include <essgap/function_io.hpp>
#include <essgap/horn.hpp>
#include <essgap/implicants.hpp>
#include <essgap/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#ifndef ESSGAP_VERSION
#define ESSGAP_VERSION "dev"
#endif

namespace fs = std::filesystem;
using namespace essgap;
using json = nlohmann::ordered_json;

namespace
{

enum exit_code
{
  exit_ok = 0,
  exit_failed = 1,
  exit_usage = 2
};

struct options
{
  uint64_t seed = 0;
  std::string format = "json";
  bool force = false;
  std::string out = ".";
  std::string in;
  std::string from;
  std::string view = "false";
  std::optional<uint32_t> m, k, t, n;
  std::optional<std::size_t> trials, count;
  bool pairs = false;
  bool classic = false;

  uint32_t max_vars() const { return force ? absolute_max_vars : default_max_vars; }
};

void print_error( const std::string& kind, const std::string& message )
{
  std::cout << json{ { "error", kind }, { "message", message } }.dump() << "\n";
}

std::ofstream open_out( const fs::path& path )
{
  if ( !path.parent_path().empty() )
    fs::create_directories( path.parent_path() );
  std::ofstream os( path );
  if ( !os )
    throw input_error( "cannot write " + path.string() );
  return os;
}

void write_json( const fs::path& path, const json& j ) { open_out( path ) << j.dump( 2 ) << "\n"; }

template<typename T>
T required( const std::optional<T>& v, const char* flag )
{
  if ( !v )
    throw input_error( std::string( "missing " ) + flag );
  return *v;
}

/* ---- gen ------------------------------------------------------------------- */

int cmd_gen( const std::string& family, const options& o )
{
  json params = json::object();
  json files = json::array();
  const fs::path dir( o.out );

  auto emit_function = [&]( const partial_function& f ) {
    const auto path = dir / ( family + ".json" );
    write_json( path, json( to_json( f ) ) );
    files.push_back( path.string() );
  };
  auto emit_instance = [&]( const set_cover_instance& inst ) {
    const auto path = dir / ( family + ".txt" );
    auto os = open_out( path );
    write_set_cover( os, inst );
    files.push_back( path.string() );
  };

  if ( family == "all-pairs" || family == "all-k-subsets" )
  {
    const uint32_t m = required( o.m, "--m" );
    const uint32_t r = family == "all-pairs" ? 2 : required( o.k, "--k" );
    params = { { "m", m }, { "r", r } };
    emit_instance( all_k_subsets_instance( m, r ) );
  }
  else if ( family == "gimpel" )
  {
    set_cover_instance inst;
    if ( !o.in.empty() )
    {
      std::ifstream is( o.in );
      if ( !is )
        throw input_error( "cannot read " + o.in );
      inst = read_set_cover( is );
      params = { { "in", o.in } };
    }
    else
    {
      const uint32_t m = required( o.m, "--m" );
      const uint32_t r = o.pairs || !o.k ? 2 : *o.k;
      inst = all_k_subsets_instance( m, r );
      params = { { "m", m }, { "r", r } };
    }
    emit_function( gimpel_partial( inst, o.max_vars() ) );
  }
  else if ( family == "gimpel-general" )
  {
    const uint32_t m = required( o.m, "--m" );
    const uint32_t r = o.k.value_or( 2 );
    const auto inst = all_k_subsets_instance( m, r );
    const auto vw = o.classic ? classic_vw( inst ) : random_vw( inst, o.seed, o.t );
    params = { { "m", m }, { "r", r }, { "t", vw.t }, { "embedding", o.classic ? "classic" : "random" } };
    emit_function( generalized_gimpel( vw, o.max_vars() ) );
    const auto path = dir / ( family + ".vw.json" );
    write_json( path, json( to_json( vw ) ) );
    files.push_back( path.string() );
  }
  else if ( family == "lift" )
  {
    if ( o.from.empty() )
      throw input_error( "missing --from" );
    const auto f = read_function_file( o.from, o.max_vars() );
    const auto lp = default_lift_params( f );
    params = { { "from", o.from }, { "t", lp.t }, { "s", f.num_stars() } };
    emit_function( partial_function( allender_lift( f, lp, o.max_vars() ) ) );
  }
  else if ( family == "horn-gap" )
  {
    const horn_gap_params hp{ required( o.k, "--k" ), o.t.value_or( 1 ) };
    const auto fam = horn_gap( hp, true, o.max_vars() );
    params = { { "k", hp.k }, { "t", hp.t } };
    emit_function( partial_function( *fam.table ) );
    const auto cnf_path = dir / ( family + ".cnf" );
    auto os = open_out( cnf_path );
    write_dimacs( os, fam.cnf );
    files.push_back( cnf_path.string() );
  }
  else
    throw input_error( "unknown family: " + family );

  const auto prov = dir / ( family + ".provenance.json" );
  write_json( prov, json{ { "family", family }, { "params", params }, { "seed", o.seed }, { "version", ESSGAP_VERSION } } );
  files.push_back( prov.string() );
  std::cout << json{ { "files", files } }.dump() << "\n";
  return exit_ok;
}

/* ---- compute --------------------------------------------------------------- */

json certificate_json( const ess_result& r )
{
  json witnesses = json::array();
  for ( const auto& w : r.certificate.witnesses )
    witnesses.push_back( { { "subset", w.subset }, { "separator", w.separator } } );
  return { { "value", r.value },
           { "k", r.certificate.k },
           { "view", to_string( r.view ) },
           { "exact", r.exact },
           { "certificate", r.certificate.points },
           { "witnesses", witnesses } };
}

int cmd_compute( const std::string& quantity, const options& o )
{
  if ( o.in.empty() )
    throw input_error( "missing --in" );
  const fs::path dir( o.out );
  const std::string stem = fs::path( o.in ).stem().string() + "." + quantity;

  if ( quantity == "min-cover" )
  {
    std::ifstream is( o.in );
    if ( !is )
      throw input_error( "cannot read " + o.in );
    const auto res = min_set_cover( read_set_cover( is ) );
    write_json( dir / ( stem + ".json" ), { { "size", res.size }, { "witness", res.witness }, { "certified", res.optimal } } );
    std::cout << res.size << "\n";
    return exit_ok;
  }

  const auto f = read_function_file( o.in, o.max_vars() );
  if ( quantity == "cs" || quantity == "ds" )
  {
    const auto res = quantity == "cs" ? min_cnf( f ) : min_dnf( f );
    auto os = open_out( dir / ( stem + ".cnf" ) );
    write_dimacs( os, res.formula );
    write_json( dir / ( stem + ".json" ), { { "size", res.size }, { "certified", res.certified } } );
    std::cout << res.size << "\n";
  }
  else if ( quantity == "ess" || quantity == "ess-dual" || quantity == "ess-k" )
  {
    /* ess takes --k and --view as well; ess-dual fixes the view, ess-k requires --k */
    const auto view = quantity == "ess-dual" ? point_view::truepoints : parse_point_view( o.view );
    const uint32_t k = quantity == "ess-k" ? required( o.k, "--k" ) : o.k.value_or( 2 );
    const auto res = k == 2 ? ess( f, view ) : ess_k( f, k, view );
    write_json( dir / ( stem + ".json" ), certificate_json( res ) );
    std::cout << res.value << "\n";
  }
  else if ( quantity == "primes" )
  {
    const auto view = parse_point_view( o.view );
    const auto primes = view == point_view::falsepoints ? prime_implicates( f ) : prime_implicants( f );
    auto os = open_out( dir / ( stem + ".cnf" ) );
    write_dimacs( os, primes );
    std::cout << primes.size() << "\n";
  }
  else if ( quantity == "mi" )
  {
    const auto basis = afp_learn( f.to_total() );
    auto os = open_out( dir / ( stem + ".txt" ) );
    write_meta_clauses( os, basis.meta_clauses );
    std::cout << basis.meta_clauses.size() << "\n";
  }
  else
    throw input_error( "unknown quantity: " + quantity );
  return exit_ok;
}

/* ---- verify ---------------------------------------------------------------- */

int cmd_verify( const std::string& suite, const options& o )
{
  suite_options so;
  so.seed = o.seed;
  so.m = o.m;
  so.k = o.k;
  so.t = o.t;
  so.n = o.n;
  so.trials = o.trials;
  so.count = o.count;
  so.max_vars = o.max_vars();
  const auto report = run_suite( suite, so );

  std::ostringstream text;
  if ( o.format == "csv" )
    write_csv( text, report );
  else
    text << to_json( report ).dump( 2 ) << "\n";
  std::cout << text.str();
  if ( o.out != "." )
    open_out( fs::path( o.out ) / ( suite + "." + o.format ) ) << text.str();
  std::cerr << suite << ": " << report.rows.size() << " rows, " << ( report.pass() ? "PASS" : "FAIL" ) << "\n";
  return report.pass() ? exit_ok : exit_failed;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Clause-count lower bounds from independent points: generators, exact solvers and checks", "essgap" };
  app.set_version_flag( "--version", ESSGAP_VERSION );
  app.require_subcommand( 1 );

  options o;
  std::string target;

  auto common = [&]( CLI::App* sub ) {
    sub->add_option( "--seed", o.seed, "random seed" )->capture_default_str();
    sub->add_flag( "--force", o.force, "raise the variable cap to the absolute maximum" );
    sub->add_option( "--out", o.out, "output directory" )->capture_default_str();
  };

  auto* gen = app.add_subcommand( "gen", "generate a function or instance family" );
  gen->add_option( "family", target, "all-pairs | all-k-subsets | gimpel | gimpel-general | lift | horn-gap" )
      ->required();
  common( gen );
  gen->add_option( "--m", o.m, "ground set size" );
  gen->add_option( "--k", o.k, "subset size, or element count for horn-gap" );
  gen->add_option( "--t", o.t, "vector length, or amplification variables for horn-gap" );
  gen->add_flag( "--pairs", o.pairs, "gimpel: all pairs of {1..m}" );
  gen->add_flag( "--classic", o.classic, "gimpel-general: t = m embedding" );
  gen->add_option( "--in", o.in, "gimpel: set cover instance file" );
  gen->add_option( "--from", o.from, "lift: partial function JSON" );

  auto* compute = app.add_subcommand( "compute", "compute a quantity with certificates" );
  compute->add_option( "quantity", target, "cs | ds | ess | ess-dual | ess-k | mi | primes | min-cover" )->required();
  common( compute );
  compute->add_option( "--in", o.in, "function JSON, or set cover text for min-cover" )->required();
  compute->add_option( "--k", o.k, "ess, ess-k: independence order" );
  compute->add_option( "--view", o.view, "false | true (falsepoints or truepoints)" )->capture_default_str();

  auto* verify = app.add_subcommand( "verify", "run a check suite and print its report" );
  verify->add_option( "suite", target, "lemma1 | lemma2 | thm1 | thm3 | horn-gap | bounds-corpus" )->required();
  common( verify );
  verify->add_option( "--format", o.format, "json | csv" )
      ->check( CLI::IsMember( { "json", "csv" } ) )
      ->capture_default_str();
  verify->add_option( "--m", o.m );
  verify->add_option( "--k", o.k );
  verify->add_option( "--t", o.t );
  verify->add_option( "--n", o.n );
  verify->add_option( "--trials", o.trials );
  verify->add_option( "--count", o.count );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::CallForVersion& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    print_error( "usage", e.what() );
    return exit_usage;
  }

  try
  {
    if ( *gen )
      return cmd_gen( target, o );
    if ( *compute )
      return cmd_compute( target, o );
    return cmd_verify( target, o );
  }
  catch ( const error& e )
  {
    print_error( e.kind(), e.what() );
  }
  catch ( const std::exception& e )
  {
    print_error( "io", e.what() );
  }
  return exit_usage;
}
