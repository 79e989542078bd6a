#pragma once

#include "boolean_function.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace essgap
{

/* {"n": <int>, "ones": [...], "stars": [...]}; `stars` is omitted for total functions */
nlohmann::json to_json( const partial_function& f );
inline nlohmann::json to_json( const truth_table& f ) { return to_json( partial_function( f ) ); }

/* absent `stars` reads as a total function */
partial_function function_from_json( const nlohmann::json& j, uint32_t max_vars = default_max_vars );

partial_function read_function( std::istream& is, uint32_t max_vars = default_max_vars );
partial_function read_function_file( const std::string& path, uint32_t max_vars = default_max_vars );
void write_function( std::ostream& os, const partial_function& f );

} // namespace essgap
