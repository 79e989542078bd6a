#pragma once

#include "boolean_function.hpp"

#include <cstdint>
#include <vector>

namespace essgap
{

/*! \brief Answers "which values does f take inside this subcube?" in O(1).
 *
 * For n up to `ternary_limit` the answer for every one of the 3^n subcubes
 * is tabulated once: a cube with a free position is the union of its two
 * halves. Larger functions fall back to scanning the cube's members.
 */
class cube_index
{
public:
  static constexpr uint8_t has_zero = 1;
  static constexpr uint8_t has_one = 2;
  static constexpr uint8_t has_star = 4;
  static constexpr uint32_t ternary_limit = 16;

  explicit cube_index( partial_function f, uint32_t max_ternary_vars = ternary_limit );

  const partial_function& function() const noexcept { return f_; }
  uint32_t num_vars() const noexcept { return f_.num_vars(); }
  bool is_ternary() const noexcept { return !table_.empty(); }

  uint8_t flags( uint32_t fixed, uint32_t values ) const noexcept
  {
    return is_ternary() ? table_[ternary_index( fixed, values )] : scan( fixed, values );
  }
  uint8_t flags( const cube& c ) const noexcept { return flags( c.fixed, c.values ); }

  /* flags of the spanning subcube of the given points */
  uint8_t span_flags( uint32_t a, uint32_t b ) const noexcept
  {
    const uint32_t fixed = all_ & ~( a ^ b );
    return flags( fixed, a & fixed );
  }

  /* number of cubes, 3^n; only valid in ternary mode */
  uint64_t num_cubes() const noexcept { return table_.size(); }
  uint8_t flags_at( uint64_t ternary ) const noexcept { return table_[ternary]; }

  uint64_t ternary_index( uint32_t fixed, uint32_t values ) const noexcept
  {
    uint64_t t = 0;
    uint64_t scale = 1;
    for ( uint32_t shift = 0; shift < f_.num_vars(); shift += 8 )
    {
      const uint32_t fb = ( fixed >> shift ) & 0xff;
      const uint32_t vb = ( values >> shift ) & 0xff;
      t += scale * byte_ternary_[( fb << 8 ) | vb];
      scale *= 6561;
    }
    return t - pad_;
  }

private:
  uint8_t scan( uint32_t fixed, uint32_t values ) const noexcept;
  void build( uint32_t pos, uint64_t t, uint32_t point, int two_pos );

  partial_function f_;
  uint32_t all_ = 0;
  std::vector<uint8_t> table_;
  std::vector<uint64_t> pow3_;
  uint64_t pad_ = 0; /* digits of the unused high positions of the last byte (always free) */
  std::vector<uint32_t> byte_ternary_;
};

} // namespace essgap
