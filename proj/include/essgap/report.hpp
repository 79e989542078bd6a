#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace essgap
{

/* one measured function; absent quantities print as empty CSV cells / JSON null */
struct gap_row
{
  std::string family;
  std::vector<std::pair<std::string, std::string>> params; /* insertion order is kept */
  uint32_t n = 0;
  std::optional<std::size_t> cs, ds, ess, ess_dual;
  std::optional<uint32_t> k;
  std::optional<std::size_t> ess_k;
  std::optional<std::size_t> mi;
  uint64_t seed = 0;
  bool pass = true;
  std::vector<std::string> failures;

  gap_row& param( std::string key, std::string value );
  gap_row& param( std::string key, std::size_t value ) { return param( std::move( key ), std::to_string( value ) ); }
  /* records `what` as a failure when `ok` is false */
  gap_row& check( bool ok, const std::string& what );

  /* recomputed from the stored integers on every call */
  std::optional<double> ratio_cs_ess() const;
  std::optional<double> ratio_ds_essdual() const;
};

struct gap_report
{
  std::string suite;
  std::string claim; /* what the suite checks, one line */
  std::vector<gap_row> rows;
  /* suite-level facts that are not per-row (rates, counts) */
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  bool pass() const;
};

extern const char* const csv_header;

void write_csv( std::ostream& os, const gap_report& report );
nlohmann::ordered_json to_json( const gap_row& row );
nlohmann::ordered_json to_json( const gap_report& report );

/* ---- verification suites ------------------------------------------------- */

struct suite_options
{
  uint64_t seed = 0;
  std::optional<uint32_t> m, k, t, n;
  std::optional<std::size_t> trials, count;
  uint32_t max_vars = 24;
};

/* names accepted by run_suite */
const std::vector<std::string>& suite_names();

/* throws input_error for an unknown suite */
gap_report run_suite( const std::string& name, const suite_options& opts );

} // namespace essgap
