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
  \file rng.hpp
  \brief Seeded generator with platform-independent output.

  Standard-library distributions are not bit-reproducible across
  implementations, so every randomized suite draws from this splitmix64
  stream instead.
*/

#pragma once

#include <cstdint>
#include <vector>

namespace hamnet
{

class rng
{
public:
  explicit rng( uint64_t seed ) : state_( seed ) {}

  uint64_t next()
  {
    uint64_t z = ( state_ += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

  /*! \brief Uniform value in [0, bound), bound >= 1. */
  uint64_t below( uint64_t bound )
  {
    uint64_t const limit = ~uint64_t( 0 ) - ~uint64_t( 0 ) % bound;
    uint64_t v;
    do
    {
      v = next();
    } while ( v >= limit );
    return v % bound;
  }

  bool flip() { return next() & 1u; }

  template<typename T>
  void shuffle( std::vector<T>& v )
  {
    for ( size_t i = v.size(); i > 1; --i )
    {
      std::swap( v[i - 1], v[below( i )] );
    }
  }

private:
  uint64_t state_;
};

} // namespace hamnet
