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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hamnet/dynamics.hpp>
#include <hamnet/interaction.hpp>
#include <hamnet/rng.hpp>

#include <set>

#include "test_util.hpp"

using namespace hamnet;
using hamnet::test::cfg;
using hamnet::test::make_network;

namespace
{

boolean_network example_one()
{
  return make_network( 3, {
    []( configuration const& x ) {
      return ( x.get( 1 ) && !x.get( 2 ) && !x.get( 3 ) ) || ( x.get( 1 ) && x.get( 2 ) && x.get( 3 ) );
    },
    []( configuration const& x ) {
      return ( x.get( 1 ) && x.get( 2 ) ) || ( !x.get( 2 ) && x.get( 3 ) ) || ( x.get( 1 ) && !x.get( 2 ) );
    },
    []( configuration const& x ) { return x.get( 3 ); } } );
}

boolean_network random_network( rng& gen, uint32_t n )
{
  std::vector<truth_table> locals;
  for ( uint32_t j = 0; j < n; ++j )
  {
    locals.push_back(
        truth_table::from_function( n, [&]( configuration const& ) { return gen.flip(); } ) );
  }
  return boolean_network( std::move( locals ) );
}

std::set<std::pair<uint32_t, uint32_t>> arc_set( signed_digraph const& g )
{
  std::set<std::pair<uint32_t, uint32_t>> out;
  for ( auto [i, j, s] : g.arcs() )
  {
    out.emplace( i, j );
  }
  return out;
}

} // namespace

TEST_CASE( "interaction graph of the garden-of-eden example" )
{
  auto g = interaction_graph( example_one() );
  std::set<std::pair<uint32_t, uint32_t>> expected{
      { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 }, { 3, 1 }, { 3, 2 }, { 3, 3 } };
  CHECK( arc_set( g ) == expected );
  CHECK( g.in_degree( 1 ) == 3 );
  CHECK( g.in_degree( 2 ) == 3 );
  CHECK( g.in_degree( 3 ) == 1 );

  auto constant = make_network( 2, { []( configuration const& ) { return true; },
                                     []( configuration const& ) { return false; } } );
  CHECK( interaction_graph( constant ).num_arcs() == 0 );
}

TEST_CASE( "interaction graph signs" )
{
  /* f = (x1 & x2, !x1 | x2, x1 ^ x2) mixes all three kinds */
  auto f = make_network( 3, { []( configuration const& x ) { return x.get( 1 ) && x.get( 2 ); },
                              []( configuration const& x ) { return !x.get( 1 ) || x.get( 2 ); },
                              []( configuration const& x ) { return x.get( 1 ) ^ x.get( 2 ); } } );
  auto g = interaction_graph( f );
  CHECK( g.sign( 1, 1 ) == arc_sign::positive );
  CHECK( g.sign( 2, 1 ) == arc_sign::positive );
  CHECK( g.sign( 1, 2 ) == arc_sign::negative );
  CHECK( g.sign( 2, 2 ) == arc_sign::positive );
  CHECK( g.sign( 1, 3 ) == arc_sign::mixed );
  CHECK( g.sign( 2, 3 ) == arc_sign::mixed );
  CHECK( !g.has_arc( 3, 1 ) );
  CHECK( !g.has_arc( 3, 2 ) );
  CHECK( !g.has_arc( 3, 3 ) );
}

TEST_CASE( "local interaction graph at a witness configuration" )
{
  auto f = example_one();
  auto g = local_interaction_graph( f, cfg( "110" ) );
  std::set<std::pair<uint32_t, uint32_t>> expected{ { 1, 2 }, { 2, 1 }, { 3, 1 }, { 3, 3 } };
  CHECK( arc_set( g ) == expected );

  auto constant = make_network( 2, { []( configuration const& ) { return true; },
                                     []( configuration const& ) { return false; } } );
  for ( uint32_t w = 0; w < 4; ++w )
  {
    CHECK( local_interaction_graph( constant, configuration( 2, w ) ).num_arcs() == 0 );
  }
}

TEST_CASE( "dependency soundness: global arc iff some local witness" )
{
  rng gen( 61 );
  for ( int round = 0; round < 40; ++round )
  {
    uint32_t n = 1 + static_cast<uint32_t>( gen.below( 5 ) );
    auto f = random_network( gen, n );
    auto global = interaction_graph( f );

    std::set<std::pair<uint32_t, uint32_t>> witnessed;
    for ( uint64_t w = 0; w < num_configurations( n ); ++w )
    {
      auto local = local_interaction_graph( f, configuration( n, static_cast<uint32_t>( w ) ) );
      auto arcs = arc_set( local );
      witnessed.insert( arcs.begin(), arcs.end() );
    }
    CHECK( witnessed == arc_set( global ) );
  }
}

TEST_CASE( "odd true-point count forces full in-degree" )
{
  rng gen( 67 );
  for ( int round = 0; round < 200; ++round )
  {
    uint32_t n = 1 + static_cast<uint32_t>( gen.below( 5 ) );
    auto f = random_network( gen, n );
    auto g = interaction_graph( f );
    for ( uint32_t j = 1; j <= n; ++j )
    {
      if ( point_counts( f, j ) % 2 == 1 )
      {
        CHECK( g.in_degree( j ) == n );
      }
    }
  }
}

TEST_CASE( "connectivity levels" )
{
  /* intermediate-height example graph: arcs 1->1, 2->2, 1->2, 2->3, 3->2 */
  signed_digraph g3( 3 );
  g3.add_arc( 1, 1, arc_sign::negative );
  g3.add_arc( 2, 2, arc_sign::positive );
  g3.add_arc( 1, 2, arc_sign::negative );
  g3.add_arc( 2, 3, arc_sign::negative );
  g3.add_arc( 3, 2, arc_sign::positive );
  CHECK( connectivity( g3 ) == connectivity_level::unilateral );
  auto cg = component_graph( g3 );
  CHECK( cg.components == std::vector<std::vector<uint32_t>>{ { 1 }, { 2, 3 } } );
  CHECK( cg.arcs == std::vector<std::pair<uint32_t, uint32_t>>{ { 0, 1 } } );
  CHECK( cg.has_hamiltonian_path );
  CHECK( cg.is_transitive_tournament );

  /* complete digraph with loops */
  signed_digraph k3( 3 );
  for ( uint32_t i = 1; i <= 3; ++i )
  {
    for ( uint32_t j = 1; j <= 3; ++j )
    {
      k3.add_arc( i, j, arc_sign::positive );
    }
  }
  CHECK( connectivity( k3 ) == connectivity_level::strong );
  CHECK( component_graph( k3 ).is_transitive_tournament );

  /* two disjoint loops */
  signed_digraph loops( 2 );
  loops.add_arc( 1, 1, arc_sign::positive );
  loops.add_arc( 2, 2, arc_sign::positive );
  CHECK( connectivity( loops ) == connectivity_level::disconnected );

  /* weakly connected only: 1 -> 2 <- 3 */
  signed_digraph weak( 3 );
  weak.add_arc( 1, 2, arc_sign::positive );
  weak.add_arc( 3, 2, arc_sign::positive );
  CHECK( connectivity( weak ) == connectivity_level::connected_only );

  /* single vertex, no arcs */
  CHECK( connectivity( signed_digraph( 1 ) ) == connectivity_level::strong );
}

TEST_CASE( "component graph flags on a path with a missing chord" )
{
  /* components {1}, {2}, {3} along 1->2->3; no 1->3 arc */
  signed_digraph p( 3 );
  p.add_arc( 1, 2, arc_sign::positive );
  p.add_arc( 2, 3, arc_sign::positive );
  auto cg = component_graph( p );
  CHECK( cg.components.size() == 3 );
  CHECK( cg.has_hamiltonian_path );
  CHECK( !cg.is_transitive_tournament );
  CHECK( connectivity( p ) == connectivity_level::unilateral );
}

TEST_CASE( "connectivity against reachability brute force" )
{
  rng gen( 71 );
  for ( int round = 0; round < 300; ++round )
  {
    uint32_t n = 1 + static_cast<uint32_t>( gen.below( 5 ) );
    signed_digraph g( n );
    for ( uint32_t i = 1; i <= n; ++i )
    {
      for ( uint32_t j = 1; j <= n; ++j )
      {
        if ( gen.below( 3 ) == 0 )
        {
          g.add_arc( i, j, arc_sign::positive );
        }
      }
    }

    /* Floyd-Warshall closure as the oracle */
    std::vector<std::vector<bool>> reach( n + 1, std::vector<bool>( n + 1, false ) );
    for ( uint32_t i = 1; i <= n; ++i )
    {
      reach[i][i] = true;
      for ( uint32_t j = 1; j <= n; ++j )
      {
        if ( g.has_arc( i, j ) )
        {
          reach[i][j] = true;
        }
      }
    }
    for ( uint32_t k = 1; k <= n; ++k )
    {
      for ( uint32_t i = 1; i <= n; ++i )
      {
        for ( uint32_t j = 1; j <= n; ++j )
        {
          if ( reach[i][k] && reach[k][j] )
          {
            reach[i][j] = true;
          }
        }
      }
    }
    bool strong = true, unilateral = true;
    for ( uint32_t i = 1; i <= n; ++i )
    {
      for ( uint32_t j = 1; j <= n; ++j )
      {
        strong = strong && reach[i][j];
        unilateral = unilateral && ( reach[i][j] || reach[j][i] );
      }
    }
    /* undirected closure for weak connectivity */
    auto und = reach;
    for ( uint32_t i = 1; i <= n; ++i )
    {
      for ( uint32_t j = 1; j <= n; ++j )
      {
        und[i][j] = und[i][j] || reach[j][i];
      }
    }
    for ( uint32_t k = 1; k <= n; ++k )
    {
      for ( uint32_t i = 1; i <= n; ++i )
      {
        for ( uint32_t j = 1; j <= n; ++j )
        {
          if ( und[i][k] && und[k][j] )
          {
            und[i][j] = true;
          }
        }
      }
    }
    bool weak = true;
    for ( uint32_t i = 1; i <= n; ++i )
    {
      for ( uint32_t j = 1; j <= n; ++j )
      {
        weak = weak && und[i][j];
      }
    }

    auto expected = strong       ? connectivity_level::strong
                    : unilateral ? connectivity_level::unilateral
                    : weak       ? connectivity_level::connected_only
                                 : connectivity_level::disconnected;
    CHECK( connectivity( g ) == expected );
  }
}
