#pragma once

#include "boolean_function.hpp"
#include "exact_cover.hpp"
#include "implicants.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace essgap
{

/* antecedent -> consequent over variable bitmasks; an empty consequent stands for bottom (a negative clause) */
struct meta_clause
{
  uint32_t antecedent = 0;
  uint32_t consequent = 0;

  bool is_definite() const noexcept { return consequent != 0; }
  bool violated_by( uint32_t point ) const noexcept
  {
    return ( point & antecedent ) == antecedent && ( consequent == 0 || ( point & consequent ) != consequent );
  }
  bool operator==( const meta_clause& ) const = default;
};

struct horn_basis
{
  uint32_t n = 0;
  std::vector<meta_clause> meta_clauses;
  std::vector<uint32_t> negatives; /* one per meta-clause, same order */
  std::vector<uint32_t> positives;
  std::size_t equivalence_queries = 0;
  std::size_t membership_queries = 0;
};

/* truepoints closed under componentwise AND */
bool is_horn( const truth_table& f );
/* Horn and the all-ones point is a truepoint */
bool is_definite_horn( const truth_table& f );

/* least fixed point above `point` under definite meta-clauses */
uint32_t horn_closure( std::span<const meta_clause> basis, uint32_t point );

truth_table evaluate( uint32_t n, std::span<const meta_clause> basis );

/*! \brief AFP query learner for definite Horn targets.
 *
 * Membership queries are table lookups; the equivalence oracle answers
 * with the least-index point where hypothesis and target differ. Each
 * stored negative example s yields the meta-clause
 * true(s) -> (variables off in s, minus those refuted by a stored positive).
 *
 * Throws input_error unless the target is a definite Horn function.
 */
horn_basis afp_learn( const truth_table& target );

/*! \brief Minimum number of meta-clauses for a Horn function, by exhaustive
 * search of increasing size over the candidates A -> closure(A) \ A.
 *
 * Works for general (not only definite) Horn targets; n <= 6.
 */
std::size_t mi_bruteforce( const truth_table& target );

/*! \brief Fewest clauses in a CNF of f whose clauses all have at most one
 * positive literal.
 *
 * Every Horn clause implicate contains a prime implicate that is again Horn,
 * so the cover runs over the Horn prime implicates only. Throws
 * infeasible_error when f is not Horn.
 */
min_formula min_horn_cnf( const truth_table& f, const cover_options& opts = {} );

struct negatives_independence
{
  bool independent = true;
  std::vector<std::vector<bool>> dependent; /* filled when some pair shares an implicate */
};

negatives_independence check_negatives_independent( const horn_basis& basis, const truth_table& target );

/* one clause per consequent variable (a negative clause for bottom) */
clause_set expand_meta_clauses( uint32_t n, std::span<const meta_clause> basis );
inline clause_set expand_meta_clauses( const horn_basis& b ) { return expand_meta_clauses( b.n, b.meta_clauses ); }

/* group a Horn CNF (falsify view) by antecedent; throws if a clause has two positive literals */
std::vector<meta_clause> meta_clauses_from_cnf( const clause_set& cnf );

/* AND-closure of random sample points; `definite` adds the all-ones point */
truth_table random_horn( uint32_t n, std::mt19937_64& rng, bool definite );

/* text format: one meta-clause per line, `a1 a2 -> b1 b2`, 1-based variables */
void write_meta_clauses( std::ostream& os, std::span<const meta_clause> basis );
std::vector<meta_clause> read_meta_clauses( std::istream& is, uint32_t n );

} // namespace essgap
