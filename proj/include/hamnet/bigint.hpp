/* hamnet: C++ toolkit for Hamiltonian dynamics of Boolean networks
 * Copyright (C) 2026  the hamnet authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file bigint.hpp
  \brief Arbitrary-precision unsigned integer, just large enough for
         periods.

  The period of a network is the least common multiple of its cycle
  lengths; near twenty variables that value does not fit any machine
  word.  Accumulating an lcm only needs multiplication, division and
  remainder by a word-sized operand, so that is all this type provides.
*/

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace hamnet
{

class big_uint
{
public:
  big_uint() : limbs_{ 0 } {}

  big_uint( uint64_t value )
  {
    limbs_.push_back( static_cast<uint32_t>( value & 0xffffffffull ) );
    if ( value >> 32 )
    {
      limbs_.push_back( static_cast<uint32_t>( value >> 32 ) );
    }
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  bool fits_u64() const { return limbs_.size() <= 2; }

  uint64_t to_u64() const
  {
    uint64_t v = limbs_[0];
    if ( limbs_.size() > 1 )
    {
      v |= uint64_t( limbs_[1] ) << 32;
    }
    return v;
  }

  big_uint& operator*=( uint64_t m )
  {
    if ( m == 0 || is_zero() )
    {
      *this = big_uint();
      return *this;
    }
    uint64_t const lo = m & 0xffffffffull, hi = m >> 32;
    std::vector<uint32_t> out( limbs_.size() + 3, 0u );
    auto add_at = [&]( size_t pos, uint64_t v ) {
      while ( v )
      {
        uint64_t s = uint64_t( out[pos] ) + ( v & 0xffffffffull );
        out[pos] = static_cast<uint32_t>( s & 0xffffffffull );
        v = ( v >> 32 ) + ( s >> 32 );
        ++pos;
      }
    };
    for ( size_t i = 0; i < limbs_.size(); ++i )
    {
      add_at( i, uint64_t( limbs_[i] ) * lo );
      if ( hi )
      {
        add_at( i + 1, uint64_t( limbs_[i] ) * hi );
      }
    }
    limbs_ = std::move( out );
    trim();
    return *this;
  }

  /*! \brief Divides in place by a non-zero word, returning the remainder. */
  uint64_t div_mod( uint64_t d )
  {
    if ( d <= 0xffffffffull )
    {
      uint64_t rem = 0;
      for ( size_t i = limbs_.size(); i-- > 0; )
      {
        uint64_t cur = ( rem << 32 ) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>( cur / d );
        rem = cur % d;
      }
      trim();
      return rem;
    }
    /* two-limb divisor: long division over 32-bit digits with a 128-bit
     * running remainder */
    unsigned __int128 rem = 0;
    for ( size_t i = limbs_.size(); i-- > 0; )
    {
      rem = ( rem << 32 ) | limbs_[i];
      limbs_[i] = static_cast<uint32_t>( static_cast<uint64_t>( rem / d ) );
      rem = rem % d;
    }
    trim();
    return static_cast<uint64_t>( rem );
  }

  uint64_t mod( uint64_t d ) const
  {
    big_uint copy = *this;
    return copy.div_mod( d );
  }

  /*! \brief lcm accumulation with a word-sized cycle length. */
  void lcm_with( uint64_t value )
  {
    if ( value == 0 )
    {
      return;
    }
    if ( is_zero() )
    {
      *this = big_uint( value );
      return;
    }
    uint64_t g = std::gcd( mod( value ), value );
    div_mod( g );
    *this *= value;
  }

  std::string to_string() const
  {
    if ( is_zero() )
    {
      return "0";
    }
    big_uint copy = *this;
    std::string out;
    while ( !copy.is_zero() )
    {
      uint64_t chunk = copy.div_mod( 1000000000ull );
      std::string part = std::to_string( chunk );
      if ( copy.is_zero() )
      {
        out = part + out;
      }
      else
      {
        out = std::string( 9 - part.size(), '0' ) + part + out;
      }
    }
    return out;
  }

  bool operator==( big_uint const& other ) const = default;

private:
  void trim()
  {
    while ( limbs_.size() > 1 && limbs_.back() == 0 )
    {
      limbs_.pop_back();
    }
  }

  std::vector<uint32_t> limbs_;
};

} // namespace hamnet
