#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace essgap
{

/*! \brief Fixed-length dynamic bitset backed by 64-bit words.
 *
 * Bits past `size()` in the last word are always zero, so `count()` and
 * comparisons never see garbage.
 */
class bit_vector
{
public:
  bit_vector() = default;
  explicit bit_vector( std::size_t size, bool value = false )
      : size_( size ), words_( ( size + 63 ) / 64, value ? ~uint64_t{ 0 } : 0 )
  {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  const uint64_t* data() const noexcept { return words_.data(); }
  uint64_t* data() noexcept { return words_.data(); }

  bool test( std::size_t i ) const noexcept { return ( words_[i >> 6] >> ( i & 63 ) ) & 1u; }
  void set( std::size_t i ) noexcept { words_[i >> 6] |= uint64_t{ 1 } << ( i & 63 ); }
  void reset( std::size_t i ) noexcept { words_[i >> 6] &= ~( uint64_t{ 1 } << ( i & 63 ) ); }
  void assign( std::size_t i, bool v ) noexcept { v ? set( i ) : reset( i ); }

  void clear() noexcept
  {
    for ( auto& w : words_ )
      w = 0;
  }

  std::size_t count() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += std::popcount( w );
    return c;
  }

  bool any() const noexcept
  {
    for ( auto w : words_ )
      if ( w )
        return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /* first set bit at position >= from, or size() */
  std::size_t find_next( std::size_t from ) const noexcept
  {
    if ( from >= size_ )
      return size_;
    std::size_t wi = from >> 6;
    uint64_t w = words_[wi] & ( ~uint64_t{ 0 } << ( from & 63 ) );
    while ( true )
    {
      if ( w )
        return ( wi << 6 ) + std::countr_zero( w );
      if ( ++wi == words_.size() )
        return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next( 0 ); }

  template<typename Fn>
  void for_each_set( Fn&& fn ) const
  {
    for ( std::size_t wi = 0; wi < words_.size(); ++wi )
    {
      uint64_t w = words_[wi];
      while ( w )
      {
        fn( ( wi << 6 ) + std::countr_zero( w ) );
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_indices() const
  {
    std::vector<uint32_t> out;
    out.reserve( count() );
    for_each_set( [&]( std::size_t i ) { out.push_back( static_cast<uint32_t>( i ) ); } );
    return out;
  }

  bit_vector& operator&=( const bit_vector& o ) noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] &= o.words_[i];
    return *this;
  }
  bit_vector& operator|=( const bit_vector& o ) noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] |= o.words_[i];
    return *this;
  }
  bit_vector& operator^=( const bit_vector& o ) noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] ^= o.words_[i];
    return *this;
  }
  /* this &= ~o */
  bit_vector& subtract( const bit_vector& o ) noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] &= ~o.words_[i];
    return *this;
  }
  void flip() noexcept
  {
    for ( auto& w : words_ )
      w = ~w;
    trim();
  }

  bool intersects( const bit_vector& o ) const noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & o.words_[i] )
        return true;
    return false;
  }
  std::size_t intersection_count( const bit_vector& o ) const noexcept
  {
    std::size_t c = 0;
    for ( std::size_t i = 0; i < words_.size(); ++i )
      c += std::popcount( words_[i] & o.words_[i] );
    return c;
  }
  bool is_subset_of( const bit_vector& o ) const noexcept
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~o.words_[i] )
        return false;
    return true;
  }

  friend bit_vector operator&( bit_vector a, const bit_vector& b ) { return a &= b; }
  friend bit_vector operator|( bit_vector a, const bit_vector& b ) { return a |= b; }
  friend bit_vector operator~( bit_vector a )
  {
    a.flip();
    return a;
  }

  bool operator==( const bit_vector& o ) const = default;

private:
  void trim() noexcept
  {
    if ( size_ & 63 )
      words_.back() &= ( uint64_t{ 1 } << ( size_ & 63 ) ) - 1;
  }

  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

} // namespace essgap
