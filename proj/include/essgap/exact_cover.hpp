#pragma once

#include "bit_vector.hpp"
#include "boolean_function.hpp"
#include "implicants.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace essgap
{

/* Ground set {1..m}; subsets hold 1-based element indices. */
struct set_cover_instance
{
  uint32_t m = 0;
  std::vector<std::vector<uint32_t>> subsets;
  std::optional<uint32_t> r; /* uniformity, when every subset has the same size */

  std::size_t num_subsets() const noexcept { return subsets.size(); }
  /* element range, and subset sizes when r is set */
  void validate() const;
  /* some element lies in no subset */
  bool has_uncoverable_element() const;
};

set_cover_instance read_set_cover( std::istream& is );
void write_set_cover( std::ostream& os, const set_cover_instance& inst );

struct min_cover_result
{
  std::size_t size = 0;
  std::vector<uint32_t> witness; /* 0-based subset indices, ascending */
  bool optimal = false;
};

struct cover_options
{
  uint64_t node_limit = 200'000'000;
};

/*! \brief Exact unate covering.
 *
 * `columns[j]` is the set of rows column j covers. Returns the minimum
 * number of columns covering all `num_rows` rows together with the
 * lexicographically least minimum cover (as a sorted index list).
 *
 * Essential columns are taken first, the remaining matrix is split into
 * independent blocks, and every block is solved by branch and bound with
 * row/column dominance, a greedy upper bound and a lower bound from
 * pairwise column-disjoint rows. The witness of each block is then
 * rebuilt canonically by fixing columns in increasing index order.
 */
min_cover_result solve_unate_cover( std::size_t num_rows, const std::vector<bit_vector>& columns,
                                    const cover_options& opts = {} );

/* throws infeasible_error if some element is in no subset */
min_cover_result min_set_cover( const set_cover_instance& inst, const cover_options& opts = {} );

struct min_formula
{
  std::size_t size = 0;
  clause_set formula;
  bool certified = false;
};

/* cs(f): fewest clauses in a CNF consistent with f (cs of constant 1 is 0, of constant 0 is 1) */
min_formula min_cnf( const partial_function& f, const cover_options& opts = {} );
min_formula min_cnf( const cube_index& index, const cover_options& opts = {} );
/* ds(f), through min_cnf of the complement */
min_formula min_dnf( const partial_function& f, const cover_options& opts = {} );

} // namespace essgap
