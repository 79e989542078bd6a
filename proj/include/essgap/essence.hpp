#pragma once

#include "boolean_function.hpp"
#include "cube_index.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace essgap
{

/* falsepoints: ess / ess_k (witnesses are 1-points)
   truepoints:  ess^d / ess_k^d (witnesses are 0-points) */
enum class point_view
{
  falsepoints,
  truepoints
};

std::string to_string( point_view v );
point_view parse_point_view( const std::string& s );

/* the function whose 0-points are the points of interest under `view` */
partial_function oriented( const partial_function& f, point_view view );

struct subset_witness
{
  std::vector<uint32_t> subset; /* k points, ascending */
  uint32_t separator = 0;       /* opposite-polarity point inside their spanning subcube */
};

struct independence_certificate
{
  uint32_t n = 0;
  uint32_t k = 2;
  point_view view = point_view::falsepoints;
  std::vector<uint32_t> points; /* ascending */
  std::vector<subset_witness> witnesses;
};

struct ess_result
{
  std::size_t value = 0;
  independence_certificate certificate;
  point_view view = point_view::falsepoints;
  /* false when a node limit cut the search short; value is then a certified lower bound */
  bool exact = true;
};

struct ess_options
{
  uint64_t node_limit = 100'000'000;
  /* skip listing per-subset witnesses (they are still checked) */
  bool keep_witnesses = true;
  /* ess_k: on hitting the node limit return the best set found instead of throwing */
  bool allow_partial = false;
};

/*! \brief x and y are independent iff their spanning
 * subcube holds a genuine point of the opposite value. *-points neither
 * separate nor block.
 *
 * Throws input_error when a point does not have the polarity the view asks for.
 */
bool are_independent( assignment x, assignment y, const partial_function& f,
                      point_view view = point_view::falsepoints );

/* size of the largest pairwise independent point set */
ess_result ess( const partial_function& f, point_view view = point_view::falsepoints, const ess_options& opts = {} );

/* size of the largest set no k of which lie in a common implicate (implicant) */
ess_result ess_k( const partial_function& f, uint32_t k, point_view view = point_view::falsepoints,
                  const ess_options& opts = {} );

/* ess_k restricted to candidate points drawn from `points` (all of the view's polarity) */
ess_result ess_k_within( const partial_function& f, uint32_t k, point_view view, const std::vector<uint32_t>& points,
                         const ess_options& opts = {} );

struct partition_bound
{
  std::size_t bound = 0;
  std::vector<std::size_t> block_values;
};

/*! \brief Upper bound on ess_k from a partition of the view's points:
 * a k-independent set meets every block in a k-independent subset, so the
 * exact per-block maxima add up to a bound on the whole.
 *
 * Throws input_error unless the blocks partition exactly the points of the view.
 */
partition_bound ess_k_partition_bound( const partial_function& f, uint32_t k, point_view view,
                                       const std::vector<std::vector<uint32_t>>& blocks, const ess_options& opts = {} );

struct ratio
{
  uint64_t num = 0;
  uint64_t den = 1;
  double value() const noexcept { return den ? static_cast<double>( num ) / static_cast<double>( den ) : 0.0; }
  bool operator==( const ratio& o ) const noexcept { return num * o.den == o.num * den; }
};

/* ess_k(f)/(k-1), a lower bound on cs(f) */
ratio cnf_lower_bound( const partial_function& f, uint32_t k, const ess_options& opts = {} );

/* recheck a certificate with fresh subcube scans; empty string when valid */
std::string validate_certificate( const independence_certificate& cert, const partial_function& f );

/* the dependency structure used by ess: true where two points can share an implicate */
std::vector<std::vector<bool>> dependency_matrix( const partial_function& f, const std::vector<uint32_t>& points,
                                                  point_view view = point_view::falsepoints );

} // namespace essgap
