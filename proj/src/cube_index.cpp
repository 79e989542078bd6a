#include "essgap/cube_index.hpp"

namespace essgap
{

cube_index::cube_index( partial_function f, uint32_t max_ternary_vars ) : f_( std::move( f ) )
{
  const uint32_t n = f_.num_vars();
  all_ = n >= 32 ? ~0u : ( ( 1u << n ) - 1 );

  byte_ternary_.resize( 1u << 16 );
  for ( uint32_t fb = 0; fb < 256; ++fb )
  {
    for ( uint32_t vb = 0; vb < 256; ++vb )
    {
      uint32_t t = 0, scale = 1;
      for ( uint32_t i = 0; i < 8; ++i, scale *= 3 )
        t += scale * ( ( fb >> i ) & 1 ? ( ( vb >> i ) & 1 ) : 2 );
      byte_ternary_[( fb << 8 ) | vb] = t;
    }
  }

  uint64_t scale = 1;
  for ( uint32_t i = 0; i < ( n + 7 ) / 8 * 8; ++i, scale *= 3 )
    if ( i >= n )
      pad_ += 2 * scale;

  if ( n > max_ternary_vars )
    return;

  pow3_.resize( n + 1 );
  pow3_[0] = 1;
  for ( uint32_t i = 1; i <= n; ++i )
    pow3_[i] = pow3_[i - 1] * 3;
  table_.assign( pow3_[n], 0 );
  if ( n == 0 )
  {
    table_[0] = static_cast<uint8_t>( f_.value( 0 ) == fvalue::one ? has_one
                                      : f_.value( 0 ) == fvalue::star ? has_star
                                                                      : has_zero );
    return;
  }
  build( n, 0, 0, -1 );
}

/* visits ternary indices in increasing order, so both halves of a cube are final before it */
void cube_index::build( uint32_t pos, uint64_t t, uint32_t point, int two_pos )
{
  if ( pos == 0 )
  {
    if ( two_pos < 0 )
    {
      const auto v = f_.value( point );
      table_[t] = v == fvalue::one ? has_one : ( v == fvalue::star ? has_star : has_zero );
    }
    else
    {
      const uint64_t p = pow3_[two_pos];
      table_[t] = table_[t - 2 * p] | table_[t - p];
    }
    return;
  }
  const uint32_t i = pos - 1;
  build( i, t, point, two_pos );
  build( i, t + pow3_[i], point | ( 1u << i ), two_pos );
  build( i, t + 2 * pow3_[i], point, static_cast<int>( i ) );
}

uint8_t cube_index::scan( uint32_t fixed, uint32_t values ) const noexcept
{
  uint8_t out = 0;
  const uint32_t free = ~fixed & all_;
  uint32_t sub = 0;
  do
  {
    const auto v = f_.value( values | sub );
    out |= v == fvalue::one ? has_one : ( v == fvalue::star ? has_star : has_zero );
    if ( out == ( has_zero | has_one | has_star ) )
      break;
    sub = ( sub - free ) & free;
  } while ( sub != 0 );
  return out;
}

} // namespace essgap
