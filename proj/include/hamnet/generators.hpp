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
  \file generators.hpp
  \brief Seeded ensembles for the verification suites.

  The checked claims quantify over every network with a given dynamics,
  so these generators sample at the state-map level: any successor map
  is a Boolean network through its truth tables, and uniform state-level
  sampling explores that space without interaction-graph bias.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "dynamics.hpp"
#include "rng.hpp"

namespace hamnet
{

inline functional_graph random_functional_graph( rng& gen, uint32_t n )
{
  std::vector<uint32_t> succ( num_configurations( n ) );
  for ( auto& s : succ )
  {
    s = static_cast<uint32_t>( gen.below( succ.size() ) );
  }
  return functional_graph( n, std::move( succ ) );
}

inline boolean_network random_network( rng& gen, uint32_t n )
{
  return network_from_graph( random_functional_graph( gen, n ) );
}

/*! \brief Truth tables drawn independently per local function. */
inline boolean_network random_local_tables( rng& gen, uint32_t n )
{
  std::vector<truth_table> locals;
  for ( uint32_t j = 0; j < n; ++j )
  {
    locals.push_back(
        truth_table::from_function( n, [&]( configuration const& ) { return gen.flip(); } ) );
  }
  return boolean_network( std::move( locals ) );
}

inline std::vector<uint32_t> random_state_order( rng& gen, uint32_t n )
{
  std::vector<uint32_t> order( num_configurations( n ) );
  for ( uint32_t v = 0; v < order.size(); ++v )
  {
    order[v] = v;
  }
  gen.shuffle( order );
  return order;
}

/*! \brief Uniform Hamiltonian cycle: one cycle through all states. */
inline functional_graph random_cyclic_permutation_graph( rng& gen, uint32_t n )
{
  auto order = random_state_order( gen, n );
  std::vector<uint32_t> succ( order.size() );
  for ( size_t k = 0; k < order.size(); ++k )
  {
    succ[order[k]] = order[( k + 1 ) % order.size()];
  }
  return functional_graph( n, std::move( succ ) );
}

/*! \brief Hamiltonian rho shape: path of 2^n - p states into a p-cycle. */
inline functional_graph random_rho_graph( rng& gen, uint32_t n, uint64_t period )
{
  auto order = random_state_order( gen, n );
  std::vector<uint32_t> succ( order.size() );
  uint64_t const size = order.size();
  for ( uint64_t k = 0; k + 1 < size; ++k )
  {
    succ[order[k]] = order[k + 1];
  }
  succ[order[size - 1]] = order[size - period];
  return functional_graph( n, std::move( succ ) );
}

/*! \brief Quasi-Hamiltonian shape: one fixed point plus a (2^n - 1)-cycle. */
inline functional_graph random_quasi_hamiltonian_graph( rng& gen, uint32_t n )
{
  auto order = random_state_order( gen, n );
  std::vector<uint32_t> succ( order.size() );
  uint64_t const size = order.size();
  succ[order[0]] = order[0];
  for ( uint64_t k = 1; k < size; ++k )
  {
    succ[order[k]] = order[k + 1 == size ? 1 : k + 1];
  }
  return functional_graph( n, std::move( succ ) );
}

/*! \brief A map with exactly one in-degree-zero state.

  One component carries a single tail that enters a cycle; every other
  component is a pure cycle, so the in-degree profile is one zero, one
  two and ones elsewhere.
*/
inline functional_graph random_unique_garden_graph( rng& gen, uint32_t n )
{
  auto order = random_state_order( gen, n );
  uint64_t const size = order.size();
  uint64_t const tail = 1 + gen.below( size - 1 );
  std::vector<uint32_t> succ( size );
  for ( uint64_t k = 0; k + 1 < tail; ++k )
  {
    succ[order[k]] = order[k + 1];
  }
  /* the remaining states form random cycles */
  uint64_t pos = tail;
  while ( pos < size )
  {
    uint64_t const len = 1 + gen.below( size - pos );
    for ( uint64_t k = 0; k < len; ++k )
    {
      succ[order[pos + k]] = order[pos + ( k + 1 ) % len];
    }
    pos += len;
  }
  /* attach the tail to a uniformly chosen cycle state */
  succ[order[tail - 1]] = order[tail + gen.below( size - tail )];
  return functional_graph( n, std::move( succ ) );
}

/*! \brief Random network self-dual in I: images on one representative per
           {x, negate_on(x, I)} pair are free, the partner is forced. */
inline boolean_network random_self_dual_network( rng& gen, uint32_t n, index_set const& is )
{
  assert( !is.is_empty() );
  uint64_t const size = num_configurations( n );
  uint32_t const flip = is.mask();
  std::vector<uint32_t> succ( size );
  std::vector<uint8_t> fixed( size, 0 );
  for ( uint64_t w = 0; w < size; ++w )
  {
    if ( fixed[w] )
    {
      continue;
    }
    uint32_t const image = static_cast<uint32_t>( gen.below( size ) );
    succ[w] = image;
    fixed[w] = 1;
    succ[w ^ flip] = image ^ flip;
    fixed[w ^ flip] = 1;
  }
  return network_from_graph( functional_graph( n, std::move( succ ) ) );
}

/*! \brief Random Hamiltonian cycle self-dual in I.

  Builds a half cycle through one representative of every
  {x, negate_on(x, I)} pair and closes it through the mirrored half, so
  iterating half the cycle length lands on the I-negation.
*/
inline boolean_network random_self_dual_hamiltonian_cycle( rng& gen, uint32_t n,
                                                           index_set const& is )
{
  assert( !is.is_empty() );
  uint64_t const size = num_configurations( n );
  uint32_t const flip = is.mask();

  std::vector<uint32_t> reps;
  std::vector<uint8_t> taken( size, 0 );
  for ( uint32_t w = 0; w < size; ++w )
  {
    if ( !taken[w] )
    {
      taken[w] = taken[w ^ flip] = 1;
      reps.push_back( w );
    }
  }
  gen.shuffle( reps );
  for ( auto& w : reps )
  {
    if ( gen.flip() )
    {
      w ^= flip;
    }
  }

  std::vector<uint32_t> succ( size );
  for ( size_t k = 0; k + 1 < reps.size(); ++k )
  {
    succ[reps[k]] = reps[k + 1];
    succ[reps[k] ^ flip] = reps[k + 1] ^ flip;
  }
  succ[reps.back()] = reps.front() ^ flip;
  succ[reps.back() ^ flip] = reps.front();
  return network_from_graph( functional_graph( n, std::move( succ ) ) );
}

} // namespace hamnet
