#include <doctest.h>

#include <essgap/errors.hpp>
#include <essgap/report.hpp>

#include <sstream>

using namespace essgap;

TEST_CASE( "ratios are recomputed from the stored integers" )
{
  gap_row r;
  CHECK_FALSE( r.ratio_cs_ess() );
  r.cs = 12;
  r.ess = 8;
  CHECK( *r.ratio_cs_ess() == doctest::Approx( 1.5 ) );
  r.ess = 0;
  CHECK_FALSE( r.ratio_cs_ess() );
  r.ds = 21;
  r.ess_dual = 14;
  CHECK( *r.ratio_ds_essdual() == doctest::Approx( 1.5 ) );
}

TEST_CASE( "csv rows follow the fixed header" )
{
  gap_report rep;
  gap_row r;
  r.family = "lift";
  r.n = 9;
  r.ds = 12;
  r.ess_dual = 8;
  r.param( "m", 3 ).param( "note", "a,b" );
  rep.rows.push_back( r );
  std::ostringstream os;
  write_csv( os, rep );
  CHECK( os.str() == std::string( csv_header ) + "\nlift,\"m=3;note=a,b\",9,,12,,8,,,,,1.500000,PASS\n" );
}

TEST_CASE( "failed checks mark row and report" )
{
  gap_report rep;
  gap_row r;
  r.check( true, "fine" ).check( false, "broken" );
  CHECK_FALSE( r.pass );
  CHECK( r.failures == std::vector<std::string>{ "broken" } );
  rep.rows.push_back( r );
  CHECK_FALSE( rep.pass() );
  const auto j = to_json( rep );
  CHECK( j["status"] == "FAIL" );
  CHECK( j["rows"][0]["failures"][0] == "broken" );
  CHECK( j["rows"][0]["cs"].is_null() );
}

TEST_CASE( "small suites pass and are deterministic" )
{
  suite_options o;
  o.seed = 3;
  o.count = 20;
  o.n = 4;
  const auto a = run_suite( "bounds-corpus", o );
  CHECK( a.rows.size() == 20 );
  CHECK( a.pass() );
  CHECK( to_json( a ) == to_json( run_suite( "bounds-corpus", o ) ) );

  suite_options l;
  l.m = 3;
  l.count = 10;
  const auto cover = run_suite( "lemma1", l );
  CHECK( cover.pass() );
  CHECK( cover.rows.size() == 12 );

  suite_options v;
  v.trials = 50;
  v.seed = 7;
  const auto vw = run_suite( "lemma2", v );
  CHECK( vw.pass() );
  CHECK( vw.summary["trials"] == 50 );

  CHECK_THROWS_AS( run_suite( "nope", o ), input_error );
}
