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
  \file dynamics.hpp
  \brief State-transition graphs: attractors, height, period, the
         Hamiltonian taxonomy, trajectories and isomorphism.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"

namespace hamnet
{

/*! \brief Successor map on all 2^n states; every vertex has out-degree one. */
class functional_graph
{
public:
  functional_graph() : n_( 1 ), succ_( 2, 0u ) {}

  functional_graph( uint32_t num_vars, std::vector<uint32_t> successor )
      : n_( num_vars ), succ_( std::move( successor ) )
  {
    check_num_vars( num_vars );
    if ( succ_.size() != num_configurations( num_vars ) )
    {
      throw std::invalid_argument( "successor map must cover all 2^n states" );
    }
    for ( auto s : succ_ )
    {
      if ( s >= succ_.size() )
      {
        throw std::invalid_argument( "successor state out of range" );
      }
    }
  }

  uint32_t num_vars() const { return n_; }
  uint64_t num_states() const { return succ_.size(); }
  uint32_t successor( uint32_t state ) const { return succ_[state]; }
  std::vector<uint32_t> const& successors() const { return succ_; }

  bool operator==( functional_graph const& other ) const = default;

private:
  uint32_t n_;
  std::vector<uint32_t> succ_;
};

/*! \brief The dynamics Γ(f): arc x → f(x) for every configuration. */
inline functional_graph transition_graph( boolean_network const& f )
{
  uint64_t const size = num_configurations( f.num_vars() );
  std::vector<uint32_t> succ( size );
  for ( uint64_t w = 0; w < size; ++w )
  {
    uint32_t image = 0;
    for ( uint32_t j = 1; j <= f.num_vars(); ++j )
    {
      image |= uint32_t( f.local( j ).get_bit( w ) ) << ( j - 1 );
    }
    succ[w] = image;
  }
  return functional_graph( f.num_vars(), std::move( succ ) );
}

/*! \brief Reads a state map back as a Boolean network.

  Any successor map on 2^n states is the dynamics of exactly one
  network: bit j of the image defines the truth table of f_j.
*/
inline boolean_network network_from_graph( functional_graph const& g )
{
  std::vector<truth_table> locals;
  for ( uint32_t j = 1; j <= g.num_vars(); ++j )
  {
    truth_table t( g.num_vars() );
    for ( uint64_t w = 0; w < g.num_states(); ++w )
    {
      t.set_bit( w, ( g.successor( static_cast<uint32_t>( w ) ) >> ( j - 1 ) ) & 1u );
    }
    locals.push_back( std::move( t ) );
  }
  return boolean_network( std::move( locals ) );
}

/*! \brief Attractors, gardens, height, period and the pre-image profile. */
struct dynamics_summary
{
  std::vector<uint32_t> fixed_points;
  std::vector<std::vector<uint32_t>> limit_cycles; /* length >= 2, smallest state first */
  std::vector<uint32_t> gardens;                   /* in-degree zero */
  uint64_t height{ 0 };
  big_uint period{ 1 };
  std::map<uint32_t, uint64_t> preimage_histogram; /* in-degree -> state count */

  uint64_t attractor_count() const { return fixed_points.size() + limit_cycles.size(); }
};

namespace detail
{

/*! \brief Index of the lexicographically least rotation (Booth). */
template<typename T>
size_t least_rotation( std::vector<T> const& ring )
{
  size_t const len = ring.size();
  auto at = [&]( size_t i ) -> T const& { return ring[i % len]; };
  std::vector<ptrdiff_t> fail( 2 * len, -1 );
  size_t k = 0;
  for ( size_t j = 1; j < 2 * len; ++j )
  {
    T const& sj = at( j );
    ptrdiff_t i = fail[j - k - 1];
    while ( i != -1 && sj != at( k + i + 1 ) )
    {
      if ( sj < at( k + i + 1 ) )
      {
        k = j - i - 1;
      }
      i = fail[i];
    }
    if ( sj != at( k + i + 1 ) )
    {
      if ( sj < at( k ) )
      {
        k = j;
      }
      fail[j - k] = -1;
    }
    else
    {
      fail[j - k] = i + 1;
    }
  }
  return k % len;
}

/*! \brief Marks every state that lies on a cycle. */
inline std::vector<uint8_t> periodic_states( functional_graph const& g )
{
  uint64_t const size = g.num_states();
  std::vector<uint8_t> color( size, 0 ); /* 0 unseen, 1 on stack, 2 done */
  std::vector<uint8_t> on_cycle( size, 0 );
  std::vector<uint32_t> path;
  for ( uint64_t start = 0; start < size; ++start )
  {
    if ( color[start] != 0 )
    {
      continue;
    }
    uint32_t v = static_cast<uint32_t>( start );
    path.clear();
    while ( color[v] == 0 )
    {
      color[v] = 1;
      path.push_back( v );
      v = g.successor( v );
    }
    if ( color[v] == 1 )
    {
      /* new cycle: everything on the path from v onward */
      bool inside = false;
      for ( auto u : path )
      {
        inside = inside || u == v;
        if ( inside )
        {
          on_cycle[u] = 1;
        }
      }
    }
    for ( auto u : path )
    {
      color[u] = 2;
    }
  }
  return on_cycle;
}

} // namespace detail

/*! \brief Exact attractor and transient analysis of a functional graph.

  Height is computed by reverse breadth-first layering from the periodic
  set; the period is the least common multiple of all attractor cycle
  lengths, a fixed point counting as length one.
*/
inline dynamics_summary analyze( functional_graph const& g )
{
  uint64_t const size = g.num_states();
  dynamics_summary s;

  std::vector<uint32_t> indegree( size, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    ++indegree[g.successor( static_cast<uint32_t>( v ) )];
  }
  for ( uint64_t v = 0; v < size; ++v )
  {
    ++s.preimage_histogram[indegree[v]];
    if ( indegree[v] == 0 )
    {
      s.gardens.push_back( static_cast<uint32_t>( v ) );
    }
  }

  auto const on_cycle = detail::periodic_states( g );

  std::vector<uint8_t> visited( size, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( !on_cycle[v] || visited[v] )
    {
      continue;
    }
    /* start each attractor at its smallest state */
    uint32_t smallest = static_cast<uint32_t>( v );
    std::vector<uint32_t> cycle;
    uint32_t u = smallest;
    do
    {
      visited[u] = 1;
      cycle.push_back( u );
      u = g.successor( u );
    } while ( u != smallest );
    if ( cycle.size() == 1 )
    {
      s.fixed_points.push_back( smallest );
    }
    else
    {
      s.limit_cycles.push_back( std::move( cycle ) );
    }
  }

  /* fixed points contribute length one, which leaves the lcm alone */
  s.period = big_uint( 1 );
  for ( auto const& c : s.limit_cycles )
  {
    s.period.lcm_with( c.size() );
  }

  /* reverse BFS: bucket states by successor, then layer outward */
  std::vector<uint32_t> bucket_start( size + 1, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    ++bucket_start[g.successor( static_cast<uint32_t>( v ) ) + 1];
  }
  for ( uint64_t v = 0; v < size; ++v )
  {
    bucket_start[v + 1] += bucket_start[v];
  }
  std::vector<uint32_t> preimages( size );
  {
    std::vector<uint32_t> cursor( bucket_start.begin(), bucket_start.end() - 1 );
    for ( uint64_t v = 0; v < size; ++v )
    {
      preimages[cursor[g.successor( static_cast<uint32_t>( v ) )]++] = static_cast<uint32_t>( v );
    }
  }
  std::vector<uint32_t> frontier, next;
  std::vector<uint8_t> reached( size, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( on_cycle[v] )
    {
      frontier.push_back( static_cast<uint32_t>( v ) );
      reached[v] = 1;
    }
  }
  uint64_t depth = 0;
  while ( !frontier.empty() )
  {
    next.clear();
    for ( auto v : frontier )
    {
      for ( uint32_t k = bucket_start[v]; k < bucket_start[v + 1]; ++k )
      {
        uint32_t u = preimages[k];
        if ( !reached[u] )
        {
          reached[u] = 1;
          next.push_back( u );
        }
      }
    }
    if ( !next.empty() )
    {
      ++depth;
    }
    frontier.swap( next );
  }
  s.height = depth;
  return s;
}

/*! \brief The Hamiltonian taxonomy of a dynamics. */
struct hamiltonian_class
{
  enum class kind : uint8_t
  {
    max_height,
    intermediate,
    hamiltonian_cycle,
    quasi_hamiltonian,
    not_hamiltonian
  };

  kind value{ kind::not_hamiltonian };
  uint64_t cycle_length{ 0 }; /* attractor length for the first three kinds */

  bool is_hamiltonian() const
  {
    return value == kind::max_height || value == kind::intermediate ||
           value == kind::hamiltonian_cycle;
  }

  bool operator==( hamiltonian_class const& other ) const = default;
};

inline char const* to_string( hamiltonian_class::kind k )
{
  switch ( k )
  {
  case hamiltonian_class::kind::max_height: return "max-height";
  case hamiltonian_class::kind::intermediate: return "intermediate";
  case hamiltonian_class::kind::hamiltonian_cycle: return "hamiltonian-cycle";
  case hamiltonian_class::kind::quasi_hamiltonian: return "quasi-hamiltonian";
  default: return "not-hamiltonian";
  }
}

/*! \brief Classifies a dynamics from an existing summary. */
inline hamiltonian_class classify( functional_graph const& g, dynamics_summary const& s )
{
  uint64_t const size = g.num_states();
  if ( s.attractor_count() == 1 )
  {
    uint64_t p = s.fixed_points.empty() ? s.limit_cycles.front().size() : 1;
    if ( p == size )
    {
      return { hamiltonian_class::kind::hamiltonian_cycle, size };
    }
    /* a single trajectory covers everything iff the transients form one
     * path, i.e. the height accounts for every state off the cycle */
    if ( s.height == size - p )
    {
      return { p == 1 ? hamiltonian_class::kind::max_height
                      : hamiltonian_class::kind::intermediate,
               p };
    }
    return { hamiltonian_class::kind::not_hamiltonian, 0 };
  }
  if ( s.fixed_points.size() == 1 && s.limit_cycles.size() == 1 &&
       s.limit_cycles.front().size() == size - 1 )
  {
    return { hamiltonian_class::kind::quasi_hamiltonian, size - 1 };
  }
  return { hamiltonian_class::kind::not_hamiltonian, 0 };
}

inline hamiltonian_class classify( functional_graph const& g )
{
  return classify( g, analyze( g ) );
}

/*! \brief Raised when a forced walk would traverse the same arc twice. */
class arc_repetition_error : public std::runtime_error
{
public:
  arc_repetition_error( uint32_t source, uint32_t target, uint64_t step )
      : std::runtime_error( "arc " + std::to_string( source ) + " -> " +
                            std::to_string( target ) + " repeats at step " +
                            std::to_string( step ) ),
        source( source ), target( target ), step( step )
  {
  }

  uint32_t source;
  uint32_t target;
  uint64_t step;
};

/*! \brief The forced walk of \p len arcs starting at \p start.

  Since every vertex has out-degree one the walk is determined by its
  start; it is a trajectory as long as no arc repeats.  The returned
  sequence holds len + 1 states.
*/
inline std::vector<uint32_t> trajectory( functional_graph const& g, uint32_t start, uint64_t len )
{
  if ( start >= g.num_states() || len > g.num_states() )
  {
    throw std::invalid_argument( "trajectory start or length out of range" );
  }
  std::vector<uint8_t> left( g.num_states(), 0 ); /* outgoing arc already used */
  std::vector<uint32_t> walk{ start };
  uint32_t v = start;
  for ( uint64_t step = 1; step <= len; ++step )
  {
    if ( left[v] )
    {
      throw arc_repetition_error( v, g.successor( v ), step );
    }
    left[v] = 1;
    v = g.successor( v );
    walk.push_back( v );
  }
  return walk;
}

/*! \brief Longest trajectory starting at each state: tail plus cycle length. */
inline std::vector<uint64_t> max_trajectory_lengths( functional_graph const& g )
{
  auto const on_cycle = detail::periodic_states( g );
  uint64_t const size = g.num_states();
  std::vector<uint64_t> result( size, 0 );
  std::vector<uint8_t> done( size, 0 );

  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( on_cycle[v] && !done[v] )
    {
      uint64_t len = 0;
      uint32_t u = static_cast<uint32_t>( v );
      do
      {
        ++len;
        u = g.successor( u );
      } while ( u != v );
      do
      {
        result[u] = len;
        done[u] = 1;
        u = g.successor( u );
      } while ( u != v );
    }
  }
  for ( uint64_t start = 0; start < size; ++start )
  {
    if ( done[start] )
    {
      continue;
    }
    std::vector<uint32_t> path;
    uint32_t v = static_cast<uint32_t>( start );
    while ( !done[v] )
    {
      path.push_back( v );
      done[v] = 1; /* paths cannot merge back into themselves */
      v = g.successor( v );
    }
    for ( auto it = path.rbegin(); it != path.rend(); ++it )
    {
      result[*it] = result[g.successor( *it )] + 1;
    }
  }
  return result;
}

/*! \brief Searches for two starts whose forced half-length trajectories
           cover every arc exactly once.

  A pair (u, v) witnesses the 2-Hamiltonian property: both forced walks
  of length 2^(n-1) exist, are arc-disjoint and jointly cover all 2^n
  arcs.  Starts are scanned in lexicographic order, so the returned
  witness is deterministic.
*/
inline std::optional<std::pair<uint32_t, uint32_t>>
two_hamiltonian_witness( functional_graph const& g )
{
  uint64_t const size = g.num_states();
  uint64_t const half = size / 2;
  if ( size == 1 )
  {
    return std::nullopt;
  }

  auto const reach = max_trajectory_lengths( g );

  /* the arcs of a forced walk are identified by their source states */
  uint64_t const words = ( size + 63 ) / 64;
  std::vector<uint32_t> starts;
  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( reach[v] >= half )
    {
      starts.push_back( static_cast<uint32_t>( v ) );
    }
  }
  std::vector<uint64_t> masks( starts.size() * words, 0 );
  for ( size_t k = 0; k < starts.size(); ++k )
  {
    uint32_t v = starts[k];
    for ( uint64_t step = 0; step < half; ++step )
    {
      masks[k * words + ( v >> 6 )] |= uint64_t( 1 ) << ( v & 63u );
      v = g.successor( v );
    }
  }
  for ( size_t a = 0; a < starts.size(); ++a )
  {
    for ( size_t b = 0; b < starts.size(); ++b )
    {
      if ( a == b )
      {
        continue;
      }
      bool disjoint = true;
      for ( uint64_t w = 0; w < words && disjoint; ++w )
      {
        disjoint = ( masks[a * words + w] & masks[b * words + w] ) == 0;
      }
      if ( disjoint )
      {
        /* two disjoint half-size source sets partition all states */
        return std::make_pair( starts[a], starts[b] );
      }
    }
  }
  return std::nullopt;
}

/*! \brief Canonical byte string: equal iff the graphs are isomorphic.

  Transient trees hanging off each cycle vertex are encoded bottom-up in
  the rooted-tree canonical form; each component is the lexicographically
  minimal rotation of its cycle's tree encodings; components are sorted.
*/
inline std::string canonical_form( functional_graph const& g )
{
  uint64_t const size = g.num_states();
  auto const on_cycle = detail::periodic_states( g );

  /* children lists restricted to transient vertices */
  std::vector<std::vector<uint32_t>> children( size );
  std::vector<uint32_t> indegree( size, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( !on_cycle[v] )
    {
      children[g.successor( static_cast<uint32_t>( v ) )].push_back( static_cast<uint32_t>( v ) );
      ++indegree[g.successor( static_cast<uint32_t>( v ) )];
    }
  }

  /* bottom-up tree encodings: peel transient leaves in waves */
  std::vector<std::string> code( size );
  std::vector<std::vector<std::string>> parts( size );
  {
    std::vector<uint32_t> ready;
    std::vector<uint32_t> pending( size, 0 );
    for ( uint64_t v = 0; v < size; ++v )
    {
      pending[v] = static_cast<uint32_t>( children[v].size() );
      if ( !on_cycle[v] && pending[v] == 0 )
      {
        ready.push_back( static_cast<uint32_t>( v ) );
      }
    }
    auto finish = [&]( uint32_t v ) {
      std::sort( parts[v].begin(), parts[v].end() );
      std::string s = "(";
      for ( auto const& p : parts[v] )
      {
        s += p;
      }
      s += ")";
      parts[v].clear();
      code[v] = std::move( s );
    };
    size_t head = 0;
    while ( head < ready.size() )
    {
      uint32_t v = ready[head++];
      finish( v );
      uint32_t p = g.successor( v );
      parts[p].push_back( code[v] );
      if ( !on_cycle[p] && --pending[p] == 0 )
      {
        ready.push_back( p );
      }
    }
    for ( uint64_t v = 0; v < size; ++v )
    {
      if ( on_cycle[v] )
      {
        finish( static_cast<uint32_t>( v ) );
      }
    }
  }

  /* per component: minimal rotation of the cycle's encodings */
  std::vector<std::string> components;
  std::vector<uint8_t> used( size, 0 );
  for ( uint64_t v = 0; v < size; ++v )
  {
    if ( !on_cycle[v] || used[v] )
    {
      continue;
    }
    std::vector<std::string> ring;
    uint32_t u = static_cast<uint32_t>( v );
    do
    {
      used[u] = 1;
      ring.push_back( code[u] );
      u = g.successor( u );
    } while ( u != v );

    size_t const len = ring.size();
    size_t const best = detail::least_rotation( ring );
    std::string comp = "[";
    for ( size_t k = 0; k < len; ++k )
    {
      comp += ring[( best + k ) % len];
    }
    comp += "]";
    components.push_back( std::move( comp ) );
  }
  std::sort( components.begin(), components.end() );

  std::string out = "n" + std::to_string( g.num_vars() ) + ":";
  for ( auto const& c : components )
  {
    out += c;
  }
  return out;
}

inline bool isomorphic( functional_graph const& g1, functional_graph const& g2 )
{
  return g1.num_vars() == g2.num_vars() && canonical_form( g1 ) == canonical_form( g2 );
}

} // namespace hamnet
