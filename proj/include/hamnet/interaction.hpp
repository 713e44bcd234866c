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
  \file interaction.hpp
  \brief Dependency graphs G(f) and G_z(f) with signs, connectivity
         classification and the component condensation.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace hamnet
{

/*! \brief Sign summary of one dependency arc.

  A unate local function only produces positive or negative arcs; mixed
  marks exactly the pairs witnessing both orientations.
*/
enum class arc_sign : uint8_t
{
  positive,
  negative,
  mixed
};

inline char to_char( arc_sign s )
{
  switch ( s )
  {
  case arc_sign::positive: return '+';
  case arc_sign::negative: return '-';
  default: return '~';
  }
}

/*! \brief Dependency digraph over the n variables, at most one arc per
           ordered pair, each carrying a sign summary. */
class signed_digraph
{
public:
  signed_digraph() : n_( 1 ), cells_( 1, absent ) {}

  explicit signed_digraph( uint32_t num_vertices )
      : n_( num_vertices ), cells_( size_t( num_vertices ) * num_vertices, absent )
  {
    check_num_vars( num_vertices );
  }

  uint32_t num_vertices() const { return n_; }

  bool has_arc( uint32_t i, uint32_t j ) const { return cell( i, j ) != absent; }

  arc_sign sign( uint32_t i, uint32_t j ) const
  {
    assert( has_arc( i, j ) );
    return static_cast<arc_sign>( cell( i, j ) );
  }

  void add_arc( uint32_t i, uint32_t j, arc_sign s )
  {
    cell( i, j ) = static_cast<uint8_t>( s );
  }

  uint32_t in_degree( uint32_t j ) const
  {
    uint32_t d = 0;
    for ( uint32_t i = 1; i <= n_; ++i )
    {
      d += has_arc( i, j );
    }
    return d;
  }

  uint32_t max_in_degree() const
  {
    uint32_t d = 0;
    for ( uint32_t j = 1; j <= n_; ++j )
    {
      d = std::max( d, in_degree( j ) );
    }
    return d;
  }

  uint64_t num_arcs() const
  {
    uint64_t c = 0;
    for ( auto v : cells_ )
    {
      c += v != absent;
    }
    return c;
  }

  /*! \brief Arcs as (i, j, sign) triples in row-major order. */
  std::vector<std::tuple<uint32_t, uint32_t, arc_sign>> arcs() const
  {
    std::vector<std::tuple<uint32_t, uint32_t, arc_sign>> out;
    for ( uint32_t i = 1; i <= n_; ++i )
    {
      for ( uint32_t j = 1; j <= n_; ++j )
      {
        if ( has_arc( i, j ) )
        {
          out.emplace_back( i, j, sign( i, j ) );
        }
      }
    }
    return out;
  }

  bool operator==( signed_digraph const& other ) const = default;

private:
  static constexpr uint8_t absent = 0xff;

  uint8_t& cell( uint32_t i, uint32_t j )
  {
    assert( i >= 1 && i <= n_ && j >= 1 && j <= n_ );
    return cells_[size_t( i - 1 ) * n_ + ( j - 1 )];
  }

  uint8_t cell( uint32_t i, uint32_t j ) const
  {
    assert( i >= 1 && i <= n_ && j >= 1 && j <= n_ );
    return cells_[size_t( i - 1 ) * n_ + ( j - 1 )];
  }

  uint32_t n_;
  std::vector<uint8_t> cells_;
};

/*! \brief The interaction graph G(f).

  Arc (i, j) is present iff some configuration witnesses
  f_j(x) != f_j(x + e_i); the sign aggregates the orientation of all
  witnessing pairs.
*/
inline signed_digraph interaction_graph( boolean_network const& f )
{
  uint32_t const n = f.num_vars();
  signed_digraph g( n );
  for ( uint32_t j = 1; j <= n; ++j )
  {
    auto const& t = f.local( j );
    for ( uint32_t i = 1; i <= n; ++i )
    {
      uint64_t const step = uint64_t( 1 ) << ( i - 1 );
      bool increasing = false, decreasing = false;
      for ( uint64_t x = 0; x < t.num_bits(); ++x )
      {
        if ( x & step )
        {
          continue;
        }
        bool const lo = t.get_bit( x ), hi = t.get_bit( x | step );
        increasing = increasing || ( !lo && hi );
        decreasing = decreasing || ( lo && !hi );
        if ( increasing && decreasing )
        {
          break;
        }
      }
      if ( increasing && decreasing )
      {
        g.add_arc( i, j, arc_sign::mixed );
      }
      else if ( increasing )
      {
        g.add_arc( i, j, arc_sign::positive );
      }
      else if ( decreasing )
      {
        g.add_arc( i, j, arc_sign::negative );
      }
    }
  }
  return g;
}

/*! \brief The local interaction graph G_z(f).

  Arc (i, j) iff f_j(z) != f_j(z + e_i); the sign reads the orientation
  at z: positive iff the configuration of the pair with x_i = 0 has the
  smaller f_j value.
*/
inline signed_digraph local_interaction_graph( boolean_network const& f, configuration const& z )
{
  if ( z.num_vars() != f.num_vars() )
  {
    throw std::invalid_argument( "configuration dimension does not match network" );
  }
  uint32_t const n = f.num_vars();
  signed_digraph g( n );
  for ( uint32_t i = 1; i <= n; ++i )
  {
    auto const low = z.get( i ) ? z.flipped( i ) : z;
    auto const high = low.flipped( i );
    for ( uint32_t j = 1; j <= n; ++j )
    {
      bool const a = f.local( j ).get_bit( low.word() );
      bool const b = f.local( j ).get_bit( high.word() );
      if ( a != b )
      {
        g.add_arc( i, j, !a && b ? arc_sign::positive : arc_sign::negative );
      }
    }
  }
  return g;
}

/*! \brief Connectivity levels, strongest applicable one. */
enum class connectivity_level : uint8_t
{
  disconnected,
  connected_only,
  unilateral,
  strong
};

inline char const* to_string( connectivity_level c )
{
  switch ( c )
  {
  case connectivity_level::strong: return "strong";
  case connectivity_level::unilateral: return "unilateral";
  case connectivity_level::connected_only: return "connected";
  default: return "disconnected";
  }
}

/*! \brief Strongly connected components plus condensation facts. */
struct component_graph_result
{
  /* component id per vertex (1-based vertices); components are numbered
   * by their smallest contained vertex, in increasing order */
  std::vector<uint32_t> component_of;
  std::vector<std::vector<uint32_t>> components;
  std::vector<std::pair<uint32_t, uint32_t>> arcs; /* condensation arcs, sorted */
  bool has_hamiltonian_path{ false };
  bool is_transitive_tournament{ false };
  std::vector<uint32_t> topological_order; /* component ids; meaningful iff ham path */
};

/*! \brief Condensation of a signed digraph.

  The component order is deterministic: components are identified by
  their smallest vertex and numbered in increasing order of it.
*/
inline component_graph_result component_graph( signed_digraph const& g )
{
  uint32_t const n = g.num_vertices();

  /* iterative Tarjan */
  std::vector<uint32_t> low( n + 1, 0 ), disc( n + 1, 0 ), stack;
  std::vector<uint8_t> on_stack( n + 1, 0 );
  std::vector<int32_t> comp( n + 1, -1 );
  uint32_t timer = 0;
  std::vector<std::vector<uint32_t>> raw_components;

  struct frame
  {
    uint32_t v;
    uint32_t next_child;
  };
  for ( uint32_t root = 1; root <= n; ++root )
  {
    if ( disc[root] != 0 )
    {
      continue;
    }
    std::vector<frame> call{ { root, 1 } };
    while ( !call.empty() )
    {
      auto& fr = call.back();
      if ( fr.next_child == 1 && disc[fr.v] == 0 )
      {
        disc[fr.v] = low[fr.v] = ++timer;
        stack.push_back( fr.v );
        on_stack[fr.v] = 1;
      }
      bool descended = false;
      while ( fr.next_child <= n )
      {
        uint32_t w = fr.next_child++;
        if ( !g.has_arc( fr.v, w ) )
        {
          continue;
        }
        if ( disc[w] == 0 )
        {
          call.push_back( { w, 1 } );
          descended = true;
          break;
        }
        if ( on_stack[w] )
        {
          low[fr.v] = std::min( low[fr.v], disc[w] );
        }
      }
      if ( descended )
      {
        continue;
      }
      if ( low[fr.v] == disc[fr.v] )
      {
        std::vector<uint32_t> members;
        uint32_t w;
        do
        {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = static_cast<int32_t>( raw_components.size() );
          members.push_back( w );
        } while ( w != fr.v );
        std::sort( members.begin(), members.end() );
        raw_components.push_back( std::move( members ) );
      }
      uint32_t finished = fr.v;
      call.pop_back();
      if ( !call.empty() )
      {
        low[call.back().v] = std::min( low[call.back().v], low[finished] );
      }
    }
  }

  /* renumber components by smallest contained vertex */
  component_graph_result res;
  std::vector<uint32_t> order( raw_components.size() );
  for ( uint32_t c = 0; c < order.size(); ++c )
  {
    order[c] = c;
  }
  std::sort( order.begin(), order.end(), [&]( uint32_t a, uint32_t b ) {
    return raw_components[a].front() < raw_components[b].front();
  } );
  std::vector<uint32_t> rank( raw_components.size() );
  for ( uint32_t pos = 0; pos < order.size(); ++pos )
  {
    rank[order[pos]] = pos;
    res.components.push_back( raw_components[order[pos]] );
  }
  res.component_of.assign( n + 1, 0 );
  for ( uint32_t v = 1; v <= n; ++v )
  {
    res.component_of[v] = rank[comp[v]];
  }

  uint32_t const k = static_cast<uint32_t>( res.components.size() );
  std::vector<uint8_t> adj( size_t( k ) * k, 0 );
  for ( uint32_t i = 1; i <= n; ++i )
  {
    for ( uint32_t j = 1; j <= n; ++j )
    {
      uint32_t ci = res.component_of[i], cj = res.component_of[j];
      if ( g.has_arc( i, j ) && ci != cj )
      {
        adj[size_t( ci ) * k + cj] = 1;
      }
    }
  }
  for ( uint32_t a = 0; a < k; ++a )
  {
    for ( uint32_t b = 0; b < k; ++b )
    {
      if ( adj[size_t( a ) * k + b] )
      {
        res.arcs.emplace_back( a, b );
      }
    }
  }

  /* Kahn layering: a Hamiltonian path of components exists iff the
   * zero-in-degree choice is forced at every step */
  std::vector<uint32_t> indeg( k, 0 );
  for ( auto [a, b] : res.arcs )
  {
    ++indeg[b];
  }
  std::vector<uint8_t> removed( k, 0 );
  res.has_hamiltonian_path = true;
  for ( uint32_t step = 0; step < k; ++step )
  {
    uint32_t found = k;
    uint32_t candidates = 0;
    for ( uint32_t c = 0; c < k; ++c )
    {
      if ( !removed[c] && indeg[c] == 0 )
      {
        ++candidates;
        if ( found == k )
        {
          found = c;
        }
      }
    }
    if ( candidates != 1 )
    {
      res.has_hamiltonian_path = false;
    }
    res.topological_order.push_back( found );
    removed[found] = 1;
    for ( uint32_t c = 0; c < k; ++c )
    {
      if ( !removed[c] && adj[size_t( found ) * k + c] )
      {
        --indeg[c];
      }
    }
  }
  res.is_transitive_tournament = res.has_hamiltonian_path;
  for ( uint32_t pa = 0; pa < k && res.is_transitive_tournament; ++pa )
  {
    for ( uint32_t pb = pa + 1; pb < k; ++pb )
    {
      if ( !adj[size_t( res.topological_order[pa] ) * k + res.topological_order[pb]] )
      {
        res.is_transitive_tournament = false;
        break;
      }
    }
  }
  return res;
}

/*! \brief Strongest connectivity level of a signed digraph.

  Unilateral connectivity is decided on the condensation: it holds iff
  the topological order of components is unique, i.e. a digraph has no
  independent components.
*/
inline connectivity_level connectivity( signed_digraph const& g )
{
  auto const cg = component_graph( g );
  if ( cg.components.size() == 1 )
  {
    return connectivity_level::strong;
  }
  if ( cg.has_hamiltonian_path )
  {
    return connectivity_level::unilateral;
  }

  /* weak connectivity by union-find over undirected arcs */
  uint32_t const n = g.num_vertices();
  std::vector<uint32_t> parent( n + 1 );
  for ( uint32_t v = 1; v <= n; ++v )
  {
    parent[v] = v;
  }
  auto find = [&]( uint32_t v ) {
    while ( parent[v] != v )
    {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for ( uint32_t i = 1; i <= n; ++i )
  {
    for ( uint32_t j = 1; j <= n; ++j )
    {
      if ( g.has_arc( i, j ) )
      {
        parent[find( i )] = find( j );
      }
    }
  }
  uint32_t classes = 0;
  for ( uint32_t v = 1; v <= n; ++v )
  {
    classes += find( v ) == v;
  }
  return classes == 1 ? connectivity_level::connected_only : connectivity_level::disconnected;
}

} // namespace hamnet
