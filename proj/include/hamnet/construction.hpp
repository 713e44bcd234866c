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
  \file construction.hpp
  \brief The recursive family of unate Hamiltonian-cycle networks, its
         auxiliary and patched variants, realizations of arbitrary
         Hamiltonian and 2-Hamiltonian dynamics, and the bundled
         reference networks.

  The family is built on truth tables: materialize the previous member,
  lift it by one identity variable, then patch the two rows of the
  alternating anchor z and its complement.  Only those two rows differ
  from the lift, which is exactly what the clause formula

      f_i(x) = (h_i(x) and d_zbar(x)) or c_z(x)

  prescribes when the clauses test all variables.
*/

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "dynamics.hpp"
#include "formats.hpp"

namespace hamnet
{

/*! \brief Alternating configuration t_k: t_1 = first_bit, then flips. */
inline configuration oscillating( uint32_t k, bool first_bit )
{
  check_num_vars( k );
  uint32_t word = 0;
  bool bit = first_bit;
  for ( uint32_t i = 0; i < k; ++i )
  {
    word |= uint32_t( bit ) << i;
    bit = !bit;
  }
  return configuration( k, word );
}

/*! \brief The anchor z of the size-n family member.

  z alternates and ends in zero: bit i is one iff n - i is odd.  The
  base case is z = (1, 0) at n = 2; each step prepends the complement
  of the previous anchor and appends a zero.
*/
inline configuration z_config( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::invalid_argument( "the anchor is defined from two variables up" );
  }
  check_num_vars( n );
  return oscillating( n, n % 2 == 0 );
}

/*! \brief Longest alternating prefix length of x; at least one. */
inline uint32_t k_of( configuration const& x )
{
  uint32_t k = 1;
  while ( k < x.num_vars() && x.get( k + 1 ) != x.get( k ) )
  {
    ++k;
  }
  return k;
}

/*! \brief Conjunctive or disjunctive clause anchored at a configuration.

  A conjunctive clause is one exactly when x agrees with the anchor on
  variables 1..width; a disjunctive clause is zero exactly there.
*/
struct clause
{
  enum class form : uint8_t
  {
    conjunctive,
    disjunctive
  };

  form kind;
  configuration anchor;
  uint32_t width;

  bool evaluate( configuration const& x ) const
  {
    assert( width >= 1 && width <= x.num_vars() && width <= anchor.num_vars() );
    uint32_t const mask = uint32_t( ( uint64_t( 1 ) << width ) - 1 );
    bool const agrees = ( ( x.word() ^ anchor.word() ) & mask ) == 0;
    return kind == form::conjunctive ? agrees : !agrees;
  }
};

enum class family_variant : uint8_t
{
  f,       /* the Hamiltonian-cycle member */
  h,       /* auxiliary lift (previous member, identity last variable) */
  h_or_c,  /* lift with the anchor row forced to all ones */
  h_and_d  /* lift with the complement row forced to all zeros */
};

inline char const* to_string( family_variant v )
{
  switch ( v )
  {
  case family_variant::f: return "f";
  case family_variant::h: return "h";
  case family_variant::h_or_c: return "h-or-c";
  default: return "h-and-d";
  }
}

struct family_member
{
  uint32_t n;
  boolean_network network;
  configuration anchor_z;
  family_variant variant;
};

namespace detail
{

/*! \brief (f, x_{n+1}): previous member on the low variables, identity top. */
inline boolean_network lift_by_identity( boolean_network const& f )
{
  uint32_t const n = f.num_vars() + 1;
  uint64_t const half = num_configurations( n - 1 );
  std::vector<truth_table> locals;
  for ( uint32_t j = 1; j < n; ++j )
  {
    truth_table t( n );
    for ( uint64_t w = 0; w < num_configurations( n ); ++w )
    {
      t.set_bit( w, f.local( j ).get_bit( w & ( half - 1 ) ) );
    }
    locals.push_back( std::move( t ) );
  }
  truth_table top( n );
  for ( uint64_t w = half; w < num_configurations( n ); ++w )
  {
    top.set_bit( w );
  }
  locals.push_back( std::move( top ) );
  return boolean_network( std::move( locals ) );
}

/*! \brief Redirects one row of the state map: f(row) := image. */
inline void patch_row( boolean_network& f, uint32_t row, uint32_t image_word )
{
  for ( uint32_t j = 1; j <= f.num_vars(); ++j )
  {
    f.local( j ).set_bit( row, ( image_word >> ( j - 1 ) ) & 1u );
  }
}

} // namespace detail

/*! \brief Builds the size-n family member of the requested variant. */
inline family_member build_family( uint32_t n, family_variant variant )
{
  check_num_vars( n );
  if ( variant != family_variant::f && n < 2 )
  {
    throw std::invalid_argument( "auxiliary variants start at two variables" );
  }

  /* base member: single-variable negation */
  boolean_network member( { truth_table::from_word( 1, 0b01 ) } );
  configuration anchor( 1, 0 );

  for ( uint32_t k = 2; k <= n; ++k )
  {
    boolean_network lifted = detail::lift_by_identity( member );
    anchor = z_config( k );
    uint32_t const zbar = anchor.word() ^ uint32_t( num_configurations( k ) - 1 );
    bool const last = k == n;
    if ( !last || variant == family_variant::f )
    {
      detail::patch_row( lifted, anchor.word(), uint32_t( num_configurations( k ) - 1 ) );
      detail::patch_row( lifted, zbar, 0 );
    }
    else if ( variant == family_variant::h_or_c )
    {
      detail::patch_row( lifted, anchor.word(), uint32_t( num_configurations( k ) - 1 ) );
    }
    else if ( variant == family_variant::h_and_d )
    {
      detail::patch_row( lifted, zbar, 0 );
    }
    member = std::move( lifted );
  }
  return { n, std::move( member ), anchor, variant };
}

/*! \brief Unate network with a unique attractor of length p and height
           2^n - p.

  Redirects the anchor of the Hamiltonian-cycle member to the state
  reached from the all-ones configuration after 2^n - p steps; p = 2^n
  returns the member unchanged, p = 1 the maximum-height network.
*/
inline boolean_network realize_hamiltonian( uint32_t n, uint64_t period )
{
  check_num_vars( n );
  if ( period < 1 || period > num_configurations( n ) )
  {
    throw std::invalid_argument( "period outside [1, 2^n]" );
  }
  auto fam = build_family( n, family_variant::f );
  auto u = iterate( fam.network, configuration::all_one( n ), num_configurations( n ) - period );
  detail::patch_row( fam.network, fam.anchor_z.word(), u.word() );
  return std::move( fam.network );
}

/*! \brief Raised when no anchor-pair redirection reaches the target. */
class unrealizable_error : public std::runtime_error
{
public:
  unrealizable_error()
      : std::runtime_error( "no redirection of the anchor pair realizes the target dynamics" )
  {
  }
};

/*! \brief Unate network whose dynamics is isomorphic to a 2-Hamiltonian
           target.

  Candidate images (u, v) for the anchor and its complement are scanned
  in lexicographic order; the first pair whose patched dynamics is
  isomorphic to the target wins.  Rejects targets without a
  2-Hamiltonian witness; reports targets no pair realizes.
*/
inline boolean_network realize_two_hamiltonian( functional_graph const& target )
{
  uint32_t const n = target.num_vars();
  if ( !two_hamiltonian_witness( target ).has_value() )
  {
    throw std::invalid_argument( "target dynamics is not 2-Hamiltonian" );
  }
  auto fam = build_family( n, family_variant::f );
  auto const base = transition_graph( fam.network );
  uint32_t const z = fam.anchor_z.word();
  uint32_t const zbar = z ^ uint32_t( num_configurations( n ) - 1 );
  std::string const wanted = canonical_form( target );

  std::vector<uint32_t> succ = base.successors();
  for ( uint32_t u = 0; u < num_configurations( n ); ++u )
  {
    for ( uint32_t v = 0; v < num_configurations( n ); ++v )
    {
      succ[z] = u;
      succ[zbar] = v;
      if ( canonical_form( functional_graph( n, succ ) ) == wanted )
      {
        detail::patch_row( fam.network, z, u );
        detail::patch_row( fam.network, zbar, v );
        return std::move( fam.network );
      }
    }
  }
  throw unrealizable_error();
}

/*! \brief Cell of the anchor-dependency table.

  The table predicts, by parities of n and of the indices, whether
  f_j differs at the anchor when variable i is flipped: for i > j and
  i = j the parity of i decides, for i < j the parity of j, crossed
  with the parity of n.
*/
inline bool table1_predicate( uint32_t n, uint32_t i, uint32_t j )
{
  if ( n < 3 || i < 1 || i > n || j < 1 || j > n )
  {
    throw std::invalid_argument( "table cell indices outside range (n >= 3, i, j in [n])" );
  }
  bool const n_even = n % 2 == 0;
  if ( i > j )
  {
    bool const i_even = i % 2 == 0;
    return n_even == i_even;
  }
  if ( i == j )
  {
    bool const i_even = i % 2 == 0;
    return n_even != i_even;
  }
  bool const j_even = j % 2 == 0;
  return n_even == j_even;
}

namespace detail
{

struct fixture_entry
{
  char const* id;
  char const* source;
};

/* bundled reference networks: ex1 has two gardens, two fixed points and
 * a 2-cycle; ex2/ex3/ex4 are maximum-height, intermediate and full-cycle
 * three-variable networks; quasi3 pairs a fixed point with a 7-cycle;
 * bridoux5 is a 32-cycle whose in-degrees all stay at four; f2/f3 are
 * the small family members in formula form */
inline constexpr fixture_entry fixture_table[] = {
  { "ex1",
    "n=3\n"
    "f1 = (x1 & !x2 & !x3) | (x1 & x2 & x3)\n"
    "f2 = (x1 & x2) | (!x2 & x3) | (x1 & !x2)\n"
    "f3 = x3\n" },
  { "ex2",
    "n=3\n"
    "f1 = x3\n"
    "f2 = !x1 | (x1 & x2 & !x3)\n"
    "f3 = (x2 & x3) | (!x2 & !x3)\n" },
  { "ex3",
    "n=3\n"
    "f1 = !x1\n"
    "f2 = (!x2 & x3) | (!x1 & x3) | (x1 & x2)\n"
    "f3 = !x2\n" },
  { "ex4",
    "n=3\n"
    "f1 = !x1\n"
    "f2 = (!x2 & x3) | (!x1 & x3) | (x1 & x2 & !x3)\n"
    "f3 = !x2\n" },
  { "quasi3",
    "n=3\n"
    "f1 = (x2 & !x3) | (!x2 & x3)\n"
    "f2 = x3\n"
    "f3 = x1\n" },
  { "bridoux5",
    "n=5\n"
    "f1 = (!x2 & !x3) | (!x4 & x5) | (!x3 & x4 & !x5)\n"
    "f2 = (!x1 & !x3) | (x1 & x3 & x4) | (!x1 & !x4 & x5) | (!x1 & x4 & !x5) | (x3 & x4 & !x5)\n"
    "f3 = (!x1 & !x2 & x4) | (x1 & x2 & x5) | (!x1 & !x2 & x5) | (x1 & !x2 & !x5) | (!x2 & x4 & !x5) | (!x1 & x2 & !x4 & !x5)\n"
    "f4 = (!x1 & x2 & x3) | (x1 & !x2 & x3) | (!x1 & x2 & !x5) | (x1 & !x2 & !x5) | (x1 & !x3 & !x5) | (x2 & !x3 & !x5) | (!x1 & !x2 & !x3 & x5)\n"
    "f5 = (x2 & x3) | (x1 & x2 & x4) | (!x1 & x2 & !x4) | (x1 & !x3 & x4) | (!x2 & !x3 & x4)\n" },
  { "f2",
    "n=2\n"
    "f1 = !x2\n"
    "f2 = x1\n" },
  { "f3",
    "n=3\n"
    "f1 = (!x1 & !x2) | (!x2 & !x3) | (!x1 & !x3)\n"
    "f2 = (x1 & x2) | (x1 & !x3) | (x2 & !x3)\n"
    "f3 = (!x1 & x3) | (x2 & x3) | (!x1 & x2)\n" },
};

} // namespace detail

inline std::vector<std::string> fixture_ids()
{
  std::vector<std::string> ids;
  for ( auto const& e : detail::fixture_table )
  {
    ids.emplace_back( e.id );
  }
  return ids;
}

/*! \brief `.bn` source text of a bundled reference network. */
inline std::string fixture_source( std::string_view id )
{
  for ( auto const& e : detail::fixture_table )
  {
    if ( id == e.id )
    {
      return e.source;
    }
  }
  throw std::invalid_argument( "unknown fixture '" + std::string( id ) + "'" );
}

/*! \brief A bundled reference network, parsed. */
inline boolean_network paper_fixture( std::string_view id )
{
  return read_network( fixture_source( id ) );
}

} // namespace hamnet
