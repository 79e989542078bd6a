#pragma once

#include "boolean_function.hpp"
#include "exact_cover.hpp"
#include "implicants.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace essgap
{

/* ---- set cover families ------------------------------------------------ */

/* all C(m,r) subsets of size r, in lexicographic order */
set_cover_instance all_k_subsets_instance( uint32_t m, uint32_t r );

/* p random nonempty subsets of {1..m}, redrawn until every element is covered */
set_cover_instance random_instance( uint32_t m, uint32_t p, std::mt19937_64& rng );

/* elements that pairwise share no subset, largest such set (exhaustive, m <= 20) */
std::size_t max_independent_elements( const set_cover_instance& inst );

/* ---- Gimpel reduction -------------------------------------------------- */

/* the point with x_i = 0 exactly for e_i in S */
uint32_t subset_point( uint32_t m, const std::vector<uint32_t>& subset );

/*! \brief Classic reduction of set cover to DNF minimization.
 *
 * On m variables: 1 on points with exactly m-1 ones, * on the remaining
 * points above some x_S, 0 elsewhere. ds of the result is the minimum cover
 * size.
 */
partial_function gimpel_partial( const set_cover_instance& inst, uint32_t max_vars = default_max_vars );

/* ---- V/W vector families ----------------------------------------------- */

/* vectors are t-bit masks, bit i-1 is coordinate i */
struct vw_pair
{
  uint32_t t = 0;
  std::vector<uint64_t> V; /* one per element */
  std::vector<uint64_t> W; /* one per subset */
  uint64_t seed = 0;
  uint32_t retries = 0;
  bool certified = false;
};

/* e_i in S_j  <=>  v^i >= w^j for every (i, j), checked exhaustively */
bool vw_property_holds( const vw_pair& vw, const set_cover_instance& inst );
/* only the implication e_i in S_j => v^i >= w^j */
bool vw_forward_holds( const vw_pair& vw, const set_cover_instance& inst );

/* ceil(3 r (1 + ln(p m))) */
uint32_t random_vw_length( uint32_t r, std::size_t p, uint32_t m );

/* one draw: each bit of v^i is 0 with probability 1/r, w^j = AND of v^i over e_i in S_j; not certified */
vw_pair draw_vw( const set_cover_instance& inst, uint32_t t, std::mt19937_64& rng );

/*! \brief Certified random V/W pair for an r-uniform instance.
 *
 * Redraws until the iff-property holds; throws work_limit_error after
 * `max_retries` failed draws. `t` defaults to `random_vw_length`.
 */
vw_pair random_vw( const set_cover_instance& inst, uint64_t seed, std::optional<uint32_t> t = std::nullopt,
                   uint32_t max_retries = 64 );

/* t = m, V = points of weight m-1, W = { x_S }; certified */
vw_pair classic_vw( const set_cover_instance& inst );

/* checks the property and sets `certified` */
vw_pair certify( vw_pair vw, const set_cover_instance& inst );

/* 1 on V, * on points above some w that are not in V, 0 elsewhere; rejects uncertified pairs */
partial_function generalized_gimpel( const vw_pair& vw, uint32_t max_vars = default_max_vars );

nlohmann::json to_json( const vw_pair& vw );
vw_pair vw_from_json( const nlohmann::json& j );

/* ---- total lift -------------------------------------------------------- */

struct lift_params
{
  uint32_t t = 0;
  std::vector<uint32_t> odd_vectors; /* the s smallest odd-weight vectors of {0,1}^t */
};

/* t = vars(f)+1, raised to ceil(log2 s)+1 when s > 2^(t-1) */
lift_params default_lift_params( const partial_function& f );

/*! \brief Total function g(x, y1, y2, z) on vars(f) + 2 + t variables.
 *
 * Variables are x (bits 0..nx-1), y1, y2, then z_1..z_t. g is 1 when
 * f(x)=1, y1=y2=1 and z is one of the odd vectors; when f(x)=* and
 * y1=y2=1; and when f(x)=*, y1=parity(x), y2=1-parity(x). 0 otherwise.
 */
truth_table allender_lift( const partial_function& f, const lift_params& params, uint32_t max_vars = default_max_vars );
truth_table allender_lift( const partial_function& f, uint32_t max_vars = default_max_vars );

/* truepoints of the lift grouped by x when f(x)=*, by z when f(x)=1; blocks ordered by key */
std::vector<std::vector<uint32_t>> lift_truepoint_blocks( const partial_function& f, const truth_table& lifted );

/* ---- Horn gap family --------------------------------------------------- */

struct horn_gap_params
{
  uint32_t k = 2; /* elements */
  uint32_t t = 1; /* amplification variables */
};

struct horn_gap_family
{
  horn_gap_params params;
  uint32_t n = 0;
  clause_set cnf; /* witness, then feedback, then amplification clauses */
  std::size_t witness_clauses = 0;
  std::size_t feedback_clauses = 0;
  std::size_t amplification_clauses = 0;
  std::optional<truth_table> table;

  /* variable indices (0-based bit positions) */
  uint32_t element_var( uint32_t i ) const { return i; }
  uint32_t set_var( uint32_t j ) const { return params.k + j; }
  uint32_t amp_var( uint32_t h ) const { return params.k + params.k * ( params.k - 1 ) / 2 + h; }
};

/*! \brief Definite Horn CNF over element, pair-set and amplification variables.
 *
 * Pair sets are numbered in lexicographic order of (a, b), a < b. The truth
 * table is materialized only when `materialize` is set, subject to the cap.
 */
horn_gap_family horn_gap( const horn_gap_params& params, bool materialize = true,
                          uint32_t max_vars = default_max_vars );

} // namespace essgap
