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
  \file core.hpp
  \brief Configurations, truth tables, network evaluation, point-set
         counting and subnetwork extraction.

  Conventions used throughout the library:
  - variables are 1-based, `x_1` up to `x_n`;
  - a configuration is packed into a machine word with `x_1` as the
    least significant bit, so the truth-table index of a configuration
    is exactly its word;
  - a truth table of a local function stores one bit per configuration
    word, `2^n` bits in total.
*/

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamnet
{

/*! \brief Default cap on the number of variables.

  One truth table at this size occupies 2^20 bits (128 KiB), which keeps
  every exhaustive operation desk-scale.  The cap is a runtime parameter
  of the validating constructors, not a compile-time limit.
*/
inline constexpr uint32_t default_max_variables = 20u;

inline uint64_t num_configurations( uint32_t num_vars )
{
  return uint64_t( 1 ) << num_vars;
}

inline void check_num_vars( uint32_t num_vars, uint32_t cap = default_max_variables )
{
  if ( num_vars < 1u || num_vars > cap )
  {
    throw std::invalid_argument( "variable count " + std::to_string( num_vars ) +
                                 " outside [1, " + std::to_string( cap ) + "]" );
  }
}

/*! \brief An n-bit state of a network, one bit per variable.

  Bit position `i - 1` stores variable `x_i`.  The printable form lists
  `x_1 x_2 ... x_n` left to right, matching the vertex labels used in
  state-transition diagrams.
*/
class configuration
{
public:
  configuration() = default;

  configuration( uint32_t num_vars, uint32_t word )
      : n_( num_vars ), word_( word )
  {
    check_num_vars( num_vars );
    assert( ( word >> num_vars ) == 0u );
  }

  static configuration all_zero( uint32_t num_vars )
  {
    return configuration( num_vars, 0u );
  }

  static configuration all_one( uint32_t num_vars )
  {
    return configuration( num_vars, uint32_t( ( uint64_t( 1 ) << num_vars ) - 1 ) );
  }

  /*! \brief The unit configuration e_i: all zeros except variable i. */
  static configuration unit( uint32_t num_vars, uint32_t i )
  {
    configuration c = all_zero( num_vars );
    return c.flipped( i );
  }

  /*! \brief Parses the printable form `x_1 x_2 ... x_n`, e.g. "010". */
  static configuration from_string( std::string const& s )
  {
    if ( s.empty() || s.size() > default_max_variables )
    {
      throw std::invalid_argument( "configuration string has unsupported length" );
    }
    uint32_t word = 0;
    for ( uint32_t i = 0; i < s.size(); ++i )
    {
      if ( s[i] == '1' )
      {
        word |= uint32_t( 1 ) << i;
      }
      else if ( s[i] != '0' )
      {
        throw std::invalid_argument( "configuration string must consist of 0s and 1s" );
      }
    }
    return configuration( static_cast<uint32_t>( s.size() ), word );
  }

  uint32_t num_vars() const { return n_; }
  uint32_t word() const { return word_; }

  /*! \brief Value of variable x_i (1-based). */
  bool get( uint32_t i ) const
  {
    assert( i >= 1 && i <= n_ );
    return ( word_ >> ( i - 1 ) ) & 1u;
  }

  /*! \brief Copy with variable x_i flipped. */
  configuration flipped( uint32_t i ) const
  {
    assert( i >= 1 && i <= n_ );
    return configuration( n_, word_ ^ ( uint32_t( 1 ) << ( i - 1 ) ) );
  }

  std::string to_string() const
  {
    std::string s( n_, '0' );
    for ( uint32_t i = 0; i < n_; ++i )
    {
      if ( ( word_ >> i ) & 1u )
      {
        s[i] = '1';
      }
    }
    return s;
  }

  bool operator==( configuration const& other ) const = default;

private:
  uint32_t n_{ 1 };
  uint32_t word_{ 0 };
};

/*! \brief A subset of the variable indices [n] = {1, ..., n}. */
class index_set
{
public:
  index_set() = default;

  index_set( uint32_t num_vars, uint32_t mask )
      : n_( num_vars ), mask_( mask )
  {
    check_num_vars( num_vars );
    assert( ( mask >> num_vars ) == 0u );
  }

  static index_set full( uint32_t num_vars )
  {
    return index_set( num_vars, uint32_t( ( uint64_t( 1 ) << num_vars ) - 1 ) );
  }

  static index_set empty( uint32_t num_vars )
  {
    return index_set( num_vars, 0u );
  }

  static index_set of( uint32_t num_vars, std::vector<uint32_t> const& members )
  {
    uint32_t mask = 0;
    for ( auto i : members )
    {
      if ( i < 1 || i > num_vars )
      {
        throw std::invalid_argument( "index " + std::to_string( i ) + " outside [1, n]" );
      }
      mask |= uint32_t( 1 ) << ( i - 1 );
    }
    return index_set( num_vars, mask );
  }

  uint32_t num_vars() const { return n_; }
  uint32_t mask() const { return mask_; }
  uint32_t size() const { return std::popcount( mask_ ); }
  bool contains( uint32_t i ) const { return ( mask_ >> ( i - 1 ) ) & 1u; }
  bool is_empty() const { return mask_ == 0u; }
  bool is_full() const { return size() == n_; }

  std::vector<uint32_t> members() const
  {
    std::vector<uint32_t> v;
    for ( uint32_t i = 1; i <= n_; ++i )
    {
      if ( contains( i ) )
      {
        v.push_back( i );
      }
    }
    return v;
  }

  bool operator==( index_set const& other ) const = default;

private:
  uint32_t n_{ 1 };
  uint32_t mask_{ 0 };
};

/*! \brief Negation of x on the components indexed by I.

  An involution: negate_on( negate_on( x, I ), I ) == x.
*/
inline configuration negate_on( configuration const& x, index_set const& is )
{
  assert( x.num_vars() == is.num_vars() );
  return configuration( x.num_vars(), x.word() ^ is.mask() );
}

/*! \brief Full value table of one local activation function.

  Entry at index k is the function value on the configuration whose
  word equals k.
*/
class truth_table
{
public:
  truth_table() : n_( 1 ), bits_( 1, 0u ) {}

  explicit truth_table( uint32_t num_vars )
      : n_( num_vars ), bits_( word_count( num_vars ), 0u )
  {
    check_num_vars( num_vars );
  }

  template<typename Fn>
  static truth_table from_function( uint32_t num_vars, Fn&& fn )
  {
    truth_table t( num_vars );
    for ( uint64_t w = 0; w < num_configurations( num_vars ); ++w )
    {
      if ( fn( configuration( num_vars, static_cast<uint32_t>( w ) ) ) )
      {
        t.set_bit( w );
      }
    }
    return t;
  }

  /*! \brief Table whose low 2^n bits are taken from \p word (n <= 6). */
  static truth_table from_word( uint32_t num_vars, uint64_t word )
  {
    assert( num_vars <= 6 );
    truth_table t( num_vars );
    uint64_t m = num_vars == 6 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( uint64_t( 1 ) << num_vars ) ) - 1 );
    t.bits_[0] = word & m;
    return t;
  }

  uint32_t num_vars() const { return n_; }
  uint64_t num_bits() const { return num_configurations( n_ ); }

  bool get_bit( uint64_t index ) const
  {
    assert( index < num_bits() );
    return ( bits_[index >> 6] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( uint64_t index, bool value = true )
  {
    assert( index < num_bits() );
    uint64_t mask = uint64_t( 1 ) << ( index & 63u );
    if ( value )
    {
      bits_[index >> 6] |= mask;
    }
    else
    {
      bits_[index >> 6] &= ~mask;
    }
  }

  bool operator()( configuration const& x ) const
  {
    assert( x.num_vars() == n_ );
    return get_bit( x.word() );
  }

  /*! \brief Number of true points |T|.  |T| + |F| = 2^n. */
  uint64_t count_ones() const
  {
    uint64_t c = 0;
    for ( auto w : padded_words() )
    {
      c += std::popcount( w );
    }
    return c;
  }

  /*! \brief True iff some configuration witnesses f(x) != f(x ^ e_i). */
  bool depends_on( uint32_t i ) const
  {
    assert( i >= 1 && i <= n_ );
    uint64_t step = uint64_t( 1 ) << ( i - 1 );
    for ( uint64_t x = 0; x < num_bits(); ++x )
    {
      if ( ( x & step ) == 0 && get_bit( x ) != get_bit( x | step ) )
      {
        return true;
      }
    }
    return false;
  }

  std::vector<uint64_t> const& words() const { return bits_; }
  std::vector<uint64_t>& words() { return bits_; }

  bool operator==( truth_table const& other ) const = default;

private:
  static uint64_t word_count( uint32_t num_vars )
  {
    check_num_vars( num_vars );
    return ( num_configurations( num_vars ) + 63u ) >> 6;
  }

  /* for n < 6 only the low 2^n bits of the single word are meaningful */
  std::vector<uint64_t> padded_words() const
  {
    if ( n_ >= 6 )
    {
      return bits_;
    }
    uint64_t m = ( uint64_t( 1 ) << num_bits() ) - 1;
    return { bits_[0] & m };
  }

  uint32_t n_;
  std::vector<uint64_t> bits_;
};

/*! \brief A Boolean network: n variables and one truth table per variable. */
class boolean_network
{
public:
  boolean_network() : n_( 1 ), locals_( 1, truth_table( 1 ) ) {}

  explicit boolean_network( std::vector<truth_table> locals )
      : n_( static_cast<uint32_t>( locals.size() ) ), locals_( std::move( locals ) )
  {
    check_num_vars( n_ );
    for ( auto const& t : locals_ )
    {
      if ( t.num_vars() != n_ )
      {
        throw std::invalid_argument( "every local function must read all n variables" );
      }
    }
  }

  uint32_t num_vars() const { return n_; }

  /*! \brief Local activation function f_j (1-based). */
  truth_table const& local( uint32_t j ) const
  {
    assert( j >= 1 && j <= n_ );
    return locals_[j - 1];
  }

  truth_table& local( uint32_t j )
  {
    assert( j >= 1 && j <= n_ );
    return locals_[j - 1];
  }

  bool operator==( boolean_network const& other ) const = default;

private:
  uint32_t n_;
  std::vector<truth_table> locals_;
};

/*! \brief Synchronous update: result bit j is f_j(x). */
inline configuration evaluate( boolean_network const& f, configuration const& x )
{
  if ( x.num_vars() != f.num_vars() )
  {
    throw std::invalid_argument( "configuration dimension does not match network" );
  }
  uint32_t word = 0;
  for ( uint32_t j = 1; j <= f.num_vars(); ++j )
  {
    word |= uint32_t( f.local( j ).get_bit( x.word() ) ) << ( j - 1 );
  }
  return configuration( f.num_vars(), word );
}

/*! \brief Value of the single local function f_j on x. */
inline bool evaluate_local( boolean_network const& f, uint32_t j, configuration const& x )
{
  if ( j < 1 || j > f.num_vars() )
  {
    throw std::invalid_argument( "local function index out of range" );
  }
  if ( x.num_vars() != f.num_vars() )
  {
    throw std::invalid_argument( "configuration dimension does not match network" );
  }
  return f.local( j ).get_bit( x.word() );
}

/*! \brief k-th iterate f^k(x). */
inline configuration iterate( boolean_network const& f, configuration x, uint64_t k )
{
  for ( uint64_t s = 0; s < k; ++s )
  {
    x = evaluate( f, x );
  }
  return x;
}

/*! \brief Optional restriction x_i = a used by conditional point counts. */
struct point_condition
{
  uint32_t variable;
  bool value;
};

/*! \brief |T(f_j)|, or |T(f_j, x_i = a)| when a condition is given.

  The two conditional counts of a variable always sum to the plain one.
*/
inline uint64_t point_counts( boolean_network const& f, uint32_t j,
                              std::optional<point_condition> condition = std::nullopt )
{
  if ( j < 1 || j > f.num_vars() )
  {
    throw std::invalid_argument( "local function index out of range" );
  }
  auto const& t = f.local( j );
  if ( !condition )
  {
    return t.count_ones();
  }
  if ( condition->variable < 1 || condition->variable > f.num_vars() )
  {
    throw std::invalid_argument( "condition variable index out of range" );
  }
  uint64_t const step = uint64_t( 1 ) << ( condition->variable - 1 );
  uint64_t count = 0;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    if ( ( ( x & step ) != 0 ) == condition->value && t.get_bit( x ) )
    {
      ++count;
    }
  }
  return count;
}

/*! \brief Raised when an index set does not induce a subnetwork.

  Carries the local function inside the set and the variable outside
  the set that it depends on.
*/
class projection_error : public std::runtime_error
{
public:
  projection_error( uint32_t function_index, uint32_t outside_variable )
      : std::runtime_error( "f_" + std::to_string( function_index ) +
                            " depends on variable x_" + std::to_string( outside_variable ) +
                            " outside the index set" ),
        function_index( function_index ), outside_variable( outside_variable )
  {
  }

  uint32_t function_index;
  uint32_t outside_variable;
};

/*! \brief Projection of a configuration onto the members of I, packed in
           ascending index order. */
inline configuration project( configuration const& x, index_set const& is )
{
  assert( x.num_vars() == is.num_vars() );
  assert( !is.is_empty() );
  uint32_t word = 0;
  uint32_t out = 0;
  for ( uint32_t i = 1; i <= x.num_vars(); ++i )
  {
    if ( is.contains( i ) )
    {
      word |= uint32_t( x.get( i ) ) << out;
      ++out;
    }
  }
  return configuration( is.size(), word );
}

/*! \brief The subnetwork f_I induced by a non-empty proper subset I.

  Well-definedness is checked exhaustively: every f_i with i in I must
  be independent of every variable outside I.  On violation a
  projection_error carrying the offending index pair is thrown.
*/
inline boolean_network subnetwork( boolean_network const& f, index_set const& is )
{
  if ( is.num_vars() != f.num_vars() )
  {
    throw std::invalid_argument( "index set dimension does not match network" );
  }
  if ( is.is_empty() || is.is_full() )
  {
    throw std::invalid_argument( "subnetwork requires a non-empty proper subset of [n]" );
  }
  for ( uint32_t i = 1; i <= f.num_vars(); ++i )
  {
    if ( !is.contains( i ) )
    {
      continue;
    }
    for ( uint32_t k = 1; k <= f.num_vars(); ++k )
    {
      if ( !is.contains( k ) && f.local( i ).depends_on( k ) )
      {
        throw projection_error( i, k );
      }
    }
  }

  auto const members = is.members();
  uint32_t const m = is.size();
  std::vector<truth_table> locals;
  locals.reserve( m );
  for ( uint32_t out = 0; out < m; ++out )
  {
    auto const& t = f.local( members[out] );
    locals.push_back( truth_table::from_function( m, [&]( configuration const& y ) {
      uint32_t word = 0;
      for ( uint32_t in = 0; in < m; ++in )
      {
        word |= uint32_t( y.get( in + 1 ) ) << ( members[in] - 1 );
      }
      return t.get_bit( word );
    } ) );
  }
  return boolean_network( std::move( locals ) );
}

} // namespace hamnet
