#pragma once

#include "boolean_function.hpp"
#include "cube_index.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace essgap
{

/* falsify: cubes are clauses (falsified exactly on the cube), the set is a CNF.
   satisfy: cubes are terms (satisfied exactly on the cube), the set is a DNF. */
enum class cube_view
{
  falsify,
  satisfy
};

std::string to_string( cube_view v );
cube_view parse_view( const std::string& s );

struct clause_set
{
  uint32_t n = 0;
  cube_view view = cube_view::falsify;
  std::vector<cube> cubes;

  std::size_t size() const noexcept { return cubes.size(); }
  bool operator==( const clause_set& ) const = default;
};

/* a clause covers the points falsifying it, a term the points satisfying it; both are cube membership */
bool covers( const cube& c, assignment a, cube_view view );

/* no 1-point inside the clause's cube (*-points allowed) */
bool is_implicate( const cube& c, const partial_function& f );
/* no 0-point inside the term's cube */
bool is_implicant( const cube& c, const partial_function& f );

enum class prime_algorithm
{
  automatic, /* ternary table when n <= cube_index::ternary_limit, pairwise merging above */
  ternary,
  merge
};

/*! \brief All prime implicates of f that cover at least one 0-point.
 *
 * A prime consisting only of *-points can never be needed by a consistent
 * CNF and is left out. Output is sorted by `canonical_less`.
 */
clause_set prime_implicates( const partial_function& f, prime_algorithm algo = prime_algorithm::automatic );
clause_set prime_implicates( const cube_index& index );

/* prime implicants (satisfy view), the dual of prime_implicates via complement */
clause_set prime_implicants( const partial_function& f, prime_algorithm algo = prime_algorithm::automatic );

/* the function computed by the CNF (falsify view) or DNF (satisfy view) */
truth_table evaluate( const clause_set& s );

/* no 1-point falsified by the CNF and every 0-point falsified (dually for DNF); *-points are free */
bool is_consistent( const clause_set& s, const partial_function& f );

/* DIMACS CNF: `c essgap n=<n> view=<view>`, `p cnf <n> <m>`, one zero-terminated line per cube */
void write_dimacs( std::ostream& os, const clause_set& s );
clause_set read_dimacs( std::istream& is );

} // namespace essgap
