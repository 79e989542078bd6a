#include "essgap/function_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace essgap
{

nlohmann::json to_json( const partial_function& f )
{
  nlohmann::json j;
  j["n"] = f.num_vars();
  j["ones"] = f.one_points();
  if ( !f.is_total() )
    j["stars"] = f.stars().to_indices();
  return j;
}

partial_function function_from_json( const nlohmann::json& j, uint32_t max_vars )
{
  try
  {
    if ( !j.is_object() || !j.contains( "n" ) || !j.contains( "ones" ) )
      throw input_error( "function JSON needs \"n\" and \"ones\"" );
    const auto n = j.at( "n" ).get<int64_t>();
    if ( n < 0 || n > static_cast<int64_t>( absolute_max_vars ) )
      throw dimension_error( "function JSON: n out of range" );
    check_var_cap( static_cast<uint32_t>( n ), max_vars, "function file" );
    const auto size = int64_t{ 1 } << n;
    auto indices = [&]( const char* key ) {
      std::vector<uint32_t> out;
      if ( !j.contains( key ) )
        return out;
      for ( const auto& v : j.at( key ) )
      {
        const auto x = v.get<int64_t>();
        if ( x < 0 || x >= size )
          throw input_error( std::string( "function JSON: index out of range in \"" ) + key + "\"" );
        out.push_back( static_cast<uint32_t>( x ) );
      }
      return out;
    };
    const auto ones = indices( "ones" );
    const auto stars = indices( "stars" );
    return partial_function::from_lists( static_cast<uint32_t>( n ), ones, stars, max_vars );
  }
  catch ( const nlohmann::json::exception& e )
  {
    throw input_error( std::string( "function JSON: " ) + e.what() );
  }
}

partial_function read_function( std::istream& is, uint32_t max_vars )
{
  nlohmann::json j;
  try
  {
    is >> j;
  }
  catch ( const nlohmann::json::exception& e )
  {
    throw input_error( std::string( "function JSON: " ) + e.what() );
  }
  return function_from_json( j, max_vars );
}

partial_function read_function_file( const std::string& path, uint32_t max_vars )
{
  std::ifstream in( path );
  if ( !in )
    throw input_error( "cannot open " + path );
  return read_function( in, max_vars );
}

void write_function( std::ostream& os, const partial_function& f ) { os << to_json( f ).dump() << "\n"; }

} // namespace essgap
