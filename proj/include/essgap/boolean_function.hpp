#pragma once

#include "bit_vector.hpp"
#include "errors.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace essgap
{

/* Variable x_i (1-based) is bit i-1 of an assignment index. */
inline constexpr uint32_t default_max_vars = 24;
/* ceiling for `--force`; cube masks are 32 bit */
inline constexpr uint32_t absolute_max_vars = 30;

void check_var_cap( uint32_t n, uint32_t max_vars, std::string_view what );

struct assignment
{
  uint32_t n = 0;
  uint32_t index = 0;
};

/* popcount parity: 0 for even weight, 1 for odd */
inline bool parity_chi( uint32_t index ) noexcept { return std::popcount( index ) & 1u; }
inline bool parity_chi( assignment a ) noexcept { return parity_chi( a.index ); }

/*! \brief Total Boolean function stored as a dense truth table. */
class truth_table
{
public:
  truth_table() = default;
  explicit truth_table( uint32_t n, uint32_t max_vars = default_max_vars );
  truth_table( uint32_t n, bit_vector bits );

  static truth_table from_ones( uint32_t n, std::span<const uint32_t> ones );

  template<typename Pred>
  static truth_table from_predicate( uint32_t n, Pred&& pred, uint32_t max_vars = default_max_vars )
  {
    truth_table tt( n, max_vars );
    for ( uint32_t x = 0; x < tt.num_points(); ++x )
      if ( pred( x ) )
        tt.bits_.set( x );
    return tt;
  }

  uint32_t num_vars() const noexcept { return n_; }
  uint32_t num_points() const noexcept { return uint32_t{ 1 } << n_; }

  bool operator[]( uint32_t index ) const noexcept { return bits_.test( index ); }
  bool eval( assignment a ) const;

  const bit_vector& bits() const noexcept { return bits_; }
  std::vector<uint32_t> ones() const { return bits_.to_indices(); }
  std::vector<uint32_t> zeros() const { return ( ~bits_ ).to_indices(); }

  bool operator==( const truth_table& ) const = default;

private:
  uint32_t n_ = 0;
  bit_vector bits_;
};

truth_table complement( const truth_table& f );

enum class fvalue : uint8_t
{
  zero,
  one,
  star
};

/*! \brief Partial function over {0,1}^n with values in {0,1,*}.
 *
 * Stores the 1-points and the *-points; everything else is a 0-point.
 */
class partial_function
{
public:
  partial_function() = default;
  partial_function( uint32_t n, bit_vector ones, bit_vector stars );
  /* total function viewed as partial (no stars) */
  explicit partial_function( const truth_table& f );

  static partial_function from_lists( uint32_t n, std::span<const uint32_t> ones, std::span<const uint32_t> stars,
                                      uint32_t max_vars = default_max_vars );

  uint32_t num_vars() const noexcept { return n_; }
  uint32_t num_points() const noexcept { return uint32_t{ 1 } << n_; }

  fvalue value( uint32_t index ) const noexcept
  {
    return ones_.test( index ) ? fvalue::one : ( stars_.test( index ) ? fvalue::star : fvalue::zero );
  }

  const bit_vector& ones() const noexcept { return ones_; }
  const bit_vector& stars() const noexcept { return stars_; }
  bit_vector zeros() const;
  std::vector<uint32_t> zero_points() const { return zeros().to_indices(); }
  std::vector<uint32_t> one_points() const { return ones_.to_indices(); }

  bool is_total() const noexcept { return stars_.none(); }
  std::size_t num_stars() const noexcept { return stars_.count(); }

  /* throws dimension_error if stars are present */
  truth_table to_total() const;

  bool operator==( const partial_function& ) const = default;

private:
  uint32_t n_ = 0;
  bit_vector ones_;
  bit_vector stars_;
};

/* swaps 1- and 0-points; *-points stay */
partial_function complement( const partial_function& f );

/*! \brief Subcube of {0,1}^n: the points `a` with `(a & fixed) == values`.
 *
 * A clause is identified with the cube of assignments falsifying it, a term
 * with the cube of assignments satisfying it.
 */
struct cube
{
  uint32_t n = 0;
  uint32_t fixed = 0;
  uint32_t values = 0;

  cube() = default;
  cube( uint32_t n_, uint32_t fixed_, uint32_t values_ );

  static cube full( uint32_t n ) { return cube( n, 0, 0 ); }
  static cube minterm( uint32_t n, uint32_t point );

  bool contains( uint32_t point ) const noexcept { return ( point & fixed ) == values; }
  /* other is a subcube of this */
  bool contains( const cube& other ) const noexcept
  {
    return ( fixed & ~other.fixed ) == 0 && ( other.values & fixed ) == values;
  }
  uint32_t num_literals() const noexcept { return std::popcount( fixed ); }
  uint32_t dimension() const noexcept { return n - num_literals(); }
  uint64_t size() const noexcept { return uint64_t{ 1 } << dimension(); }

  template<typename Fn>
  void for_each_member( Fn&& fn ) const
  {
    const uint32_t free = ~fixed & ( n >= 32 ? ~0u : ( ( 1u << n ) - 1 ) );
    uint32_t sub = 0;
    do
    {
      fn( values | sub );
      sub = ( sub - free ) & free;
    } while ( sub != 0 );
  }

  std::vector<uint32_t> members() const;

  bool operator==( const cube& ) const = default;
};

/* canonical order: fewer literals first, then fixed mask, then values */
inline std::strong_ordering canonical_order( const cube& a, const cube& b ) noexcept
{
  if ( auto c = a.num_literals() <=> b.num_literals(); c != 0 )
    return c;
  if ( auto c = a.fixed <=> b.fixed; c != 0 )
    return c;
  return a.values <=> b.values;
}
inline bool canonical_less( const cube& a, const cube& b ) noexcept { return canonical_order( a, b ) < 0; }

/* smallest cube containing all points: fixed where all points agree */
cube spanning_subcube( uint32_t n, std::span<const uint32_t> points );
cube spanning_subcube( std::span<const assignment> points );

} // namespace essgap
