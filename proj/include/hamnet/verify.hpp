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
  \file verify.hpp
  \brief The verification harness: one runnable suite per paper result,
         with deterministic seeded ensembles and machine-readable
         reports.

  Every violation entry is replayable: it is itself a valid `.bn`
  document (a comment line of context followed by the offending network
  in table mode).  Conjecture suites never report `pass`; they either
  refute or stay inconclusive.
*/

#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "construction.hpp"
#include "core.hpp"
#include "dynamics.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "interaction.hpp"
#include "properties.hpp"
#include "rng.hpp"

namespace hamnet
{

struct suite_params
{
  std::optional<uint32_t> n_min;
  std::optional<uint32_t> n_max;
  std::optional<uint64_t> samples; /* per size, for sampled ensembles */
  uint64_t seed{ 1 };
  uint32_t threads{ 0 }; /* 0: pick from hardware */
};

enum class suite_verdict : uint8_t
{
  pass,
  fail,
  refuted_conjecture,
  inconclusive
};

inline char const* to_string( suite_verdict v )
{
  switch ( v )
  {
  case suite_verdict::pass: return "pass";
  case suite_verdict::fail: return "fail";
  case suite_verdict::refuted_conjecture: return "refuted-conjecture";
  default: return "inconclusive";
  }
}

struct suite_report
{
  std::string suite;
  uint32_t n_min{ 0 };
  uint32_t n_max{ 0 };
  uint64_t samples{ 0 };
  uint64_t seed{ 1 };
  uint64_t instances_checked{ 0 };
  uint64_t violations_total{ 0 };
  std::vector<std::string> violations; /* capped; each is a .bn document */
  uint64_t elapsed_ms{ 0 };
  suite_verdict verdict{ suite_verdict::pass };
  std::vector<std::string> notes; /* per-cell agreement lines and similar */
};

inline constexpr size_t max_recorded_violations = 50;

namespace detail
{

inline void record_violation( suite_report& rep, std::string entry )
{
  ++rep.violations_total;
  if ( rep.violations.size() < max_recorded_violations )
  {
    rep.violations.push_back( std::move( entry ) );
  }
}

inline std::string violation_entry( std::string const& context, boolean_network const& f )
{
  return "# " + context + "\n" + serialize_network( f, serialize_mode::table );
}

inline std::string json_escape( std::string const& s )
{
  std::string out;
  for ( char c : s )
  {
    switch ( c )
    {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    case '\r': out += "\\r"; break;
    default:
      if ( static_cast<unsigned char>( c ) < 0x20 )
      {
        char buf[8];
        std::snprintf( buf, sizeof buf, "\\u%04x", c );
        out += buf;
      }
      else
      {
        out += c;
      }
    }
  }
  return out;
}

/* deterministic per-instance stream so that sharding cannot change results */
inline rng instance_rng( uint64_t seed, uint64_t stream, uint64_t instance )
{
  rng mix( seed );
  uint64_t a = mix.next() ^ ( 0x9e3779b97f4a7c15ull * ( stream + 1 ) );
  rng mix2( a );
  return rng( mix2.next() ^ ( 0xbf58476d1ce4e5b9ull * ( instance + 1 ) ) );
}

} // namespace detail

inline std::string to_json( suite_report const& rep )
{
  std::ostringstream out;
  out << "{\"suite\":\"" << detail::json_escape( rep.suite ) << "\","
      << "\"params\":{\"n_min\":" << rep.n_min << ",\"n_max\":" << rep.n_max
      << ",\"samples\":" << rep.samples << "},"
      << "\"seed\":" << rep.seed << ","
      << "\"instances_checked\":" << rep.instances_checked << ","
      << "\"violations_total\":" << rep.violations_total << ","
      << "\"violations\":[";
  for ( size_t i = 0; i < rep.violations.size(); ++i )
  {
    out << ( i ? "," : "" ) << "\"" << detail::json_escape( rep.violations[i] ) << "\"";
  }
  out << "],\"notes\":[";
  for ( size_t i = 0; i < rep.notes.size(); ++i )
  {
    out << ( i ? "," : "" ) << "\"" << detail::json_escape( rep.notes[i] ) << "\"";
  }
  out << "],\"elapsed_ms\":" << rep.elapsed_ms << ","
      << "\"verdict\":\"" << to_string( rep.verdict ) << "\"}";
  return out.str();
}

inline std::string to_text( suite_report const& rep )
{
  std::ostringstream out;
  out << "suite:     " << rep.suite << "\n"
      << "params:    n=" << rep.n_min << ".." << rep.n_max << " samples=" << rep.samples
      << " seed=" << rep.seed << "\n"
      << "instances: " << rep.instances_checked << "\n"
      << "verdict:   " << to_string( rep.verdict ) << "\n";
  if ( rep.violations_total )
  {
    out << "violations: " << rep.violations_total;
    if ( rep.violations_total > rep.violations.size() )
    {
      out << " (showing " << rep.violations.size() << ")";
    }
    out << "\n";
    for ( auto const& v : rep.violations )
    {
      out << "---\n" << v;
    }
  }
  for ( auto const& n : rep.notes )
  {
    out << "note: " << n << "\n";
  }
  out << "elapsed:   " << rep.elapsed_ms << " ms\n";
  return out.str();
}

/* ================================================================== */
/* exhaustive three-variable sweep engine                              */
/* ================================================================== */

namespace detail
{

/*! \brief Everything the suites want to know about one 3-variable network. */
struct net3_facts
{
  uint32_t index;
  std::array<uint8_t, 3> tables;
  std::array<uint8_t, 8> succ;
  std::array<uint8_t, 3> popcounts;
  std::array<uint8_t, 3> dep_masks; /* variables each local function reads */
  uint8_t garden_count;
  uint8_t attractor_count;
  uint8_t fixed_point_count;
  uint8_t max_cycle_length;
  uint8_t single_cycle_length; /* attractor length when unique, else 0 */
  uint8_t height;
  hamiltonian_class::kind kind;
  bool quasi;
  bool unate;
  bool self_dual_full;
  uint16_t graph_mask; /* arc (i,j) at bit (i-1)*3 + (j-1) */
};

struct sweep3_tables
{
  std::array<uint8_t, 256> popcount;
  std::array<uint8_t, 256> dep;   /* bit i-1: depends on variable i */
  std::array<uint8_t, 256> mixed; /* bit i-1: both orientations occur */
  std::array<connectivity_level, 512> connectivity;
  std::array<uint8_t, 512> tournament; /* bit0 ham-path, bit1 transitive tournament */

  sweep3_tables()
  {
    for ( uint32_t t = 0; t < 256; ++t )
    {
      popcount[t] = static_cast<uint8_t>( std::popcount( t ) );
      uint8_t d = 0, m = 0;
      struct
      {
        uint32_t shift;
        uint32_t mask;
      } const vars[3] = { { 1, 0x55 }, { 2, 0x33 }, { 4, 0x0f } };
      for ( uint32_t i = 0; i < 3; ++i )
      {
        uint32_t lo_mask = vars[i].mask;
        bool inc = ( ( ~t >> 0 ) & ( t >> vars[i].shift ) & lo_mask ) != 0;
        bool dec = ( ( t >> 0 ) & ( ~t >> vars[i].shift ) & lo_mask ) != 0;
        if ( inc || dec )
        {
          d |= uint8_t( 1 ) << i;
        }
        if ( inc && dec )
        {
          m |= uint8_t( 1 ) << i;
        }
      }
      dep[t] = d;
      mixed[t] = m;
    }
    for ( uint32_t mask = 0; mask < 512; ++mask )
    {
      signed_digraph g( 3 );
      for ( uint32_t i = 1; i <= 3; ++i )
      {
        for ( uint32_t j = 1; j <= 3; ++j )
        {
          if ( ( mask >> ( ( i - 1 ) * 3 + ( j - 1 ) ) ) & 1 )
          {
            g.add_arc( i, j, arc_sign::positive );
          }
        }
      }
      connectivity[mask] = hamnet::connectivity( g );
      auto cg = component_graph( g );
      tournament[mask] =
          uint8_t( cg.has_hamiltonian_path ) | ( uint8_t( cg.is_transitive_tournament ) << 1 );
    }
  }
};

inline sweep3_tables const& sweep3_luts()
{
  static sweep3_tables const tables;
  return tables;
}

inline void compute_net3( uint32_t idx, sweep3_tables const& lut, net3_facts& f )
{
  f.index = idx;
  f.tables = { uint8_t( idx & 0xff ), uint8_t( ( idx >> 8 ) & 0xff ), uint8_t( idx >> 16 ) };
  for ( uint32_t x = 0; x < 8; ++x )
  {
    f.succ[x] = uint8_t( ( ( f.tables[0] >> x ) & 1 ) | ( ( ( f.tables[1] >> x ) & 1 ) << 1 ) |
                         ( ( ( f.tables[2] >> x ) & 1 ) << 2 ) );
  }

  uint8_t indeg[8] = { 0 };
  for ( uint32_t x = 0; x < 8; ++x )
  {
    ++indeg[f.succ[x]];
  }
  f.garden_count = 0;
  for ( uint32_t x = 0; x < 8; ++x )
  {
    f.garden_count += indeg[x] == 0;
  }

  /* cycle structure */
  uint8_t color[8] = { 0 }; /* 0 unseen, 1 on path, 2 done */
  uint8_t on_cycle = 0;
  f.attractor_count = 0;
  f.fixed_point_count = 0;
  f.max_cycle_length = 0;
  f.single_cycle_length = 0;
  for ( uint32_t start = 0; start < 8; ++start )
  {
    if ( color[start] )
    {
      continue;
    }
    uint8_t path[9];
    uint32_t len = 0;
    uint32_t v = start;
    while ( color[v] == 0 )
    {
      color[v] = 1;
      path[len++] = uint8_t( v );
      v = f.succ[v];
    }
    if ( color[v] == 1 )
    {
      uint32_t cycle_len = 0;
      bool inside = false;
      for ( uint32_t k = 0; k < len; ++k )
      {
        inside = inside || path[k] == v;
        if ( inside )
        {
          on_cycle |= uint8_t( 1 ) << path[k];
          ++cycle_len;
        }
      }
      ++f.attractor_count;
      f.fixed_point_count += cycle_len == 1;
      f.max_cycle_length = std::max<uint8_t>( f.max_cycle_length, uint8_t( cycle_len ) );
      f.single_cycle_length = uint8_t( cycle_len );
    }
    for ( uint32_t k = 0; k < len; ++k )
    {
      color[path[k]] = 2;
    }
  }
  if ( f.attractor_count != 1 )
  {
    f.single_cycle_length = 0;
  }

  /* height: memoized walk to the periodic set */
  int8_t dist[8];
  for ( uint32_t x = 0; x < 8; ++x )
  {
    dist[x] = ( on_cycle >> x ) & 1 ? 0 : -1;
  }
  f.height = 0;
  for ( uint32_t x = 0; x < 8; ++x )
  {
    if ( dist[x] >= 0 )
    {
      continue;
    }
    uint8_t path[8];
    uint32_t len = 0;
    uint32_t v = x;
    while ( dist[v] < 0 )
    {
      path[len++] = uint8_t( v );
      v = f.succ[v];
    }
    int8_t base = dist[v];
    while ( len-- > 0 )
    {
      dist[path[len]] = ++base;
    }
  }
  for ( uint32_t x = 0; x < 8; ++x )
  {
    f.height = std::max<uint8_t>( f.height, uint8_t( dist[x] ) );
  }

  f.quasi = f.attractor_count == 2 && f.fixed_point_count == 1 && f.max_cycle_length == 7;
  if ( f.attractor_count == 1 )
  {
    uint32_t const p = f.single_cycle_length;
    if ( p == 8 )
    {
      f.kind = hamiltonian_class::kind::hamiltonian_cycle;
    }
    else if ( f.height == 8 - p )
    {
      f.kind = p == 1 ? hamiltonian_class::kind::max_height
                      : hamiltonian_class::kind::intermediate;
    }
    else
    {
      f.kind = hamiltonian_class::kind::not_hamiltonian;
    }
  }
  else
  {
    f.kind = f.quasi ? hamiltonian_class::kind::quasi_hamiltonian
                     : hamiltonian_class::kind::not_hamiltonian;
  }

  f.unate = true;
  f.graph_mask = 0;
  for ( uint32_t j = 0; j < 3; ++j )
  {
    uint8_t const t = f.tables[j];
    f.popcounts[j] = lut.popcount[t];
    f.dep_masks[j] = lut.dep[t];
    f.unate = f.unate && lut.mixed[t] == 0;
    for ( uint32_t i = 0; i < 3; ++i )
    {
      if ( ( lut.dep[t] >> i ) & 1 )
      {
        f.graph_mask |= uint16_t( 1 ) << ( i * 3 + j );
      }
    }
  }

  f.self_dual_full = true;
  for ( uint32_t x = 0; x < 8 && f.self_dual_full; ++x )
  {
    f.self_dual_full = f.succ[7 ^ x] == ( 7 ^ f.succ[x] );
  }
}

inline boolean_network net3_network( net3_facts const& f )
{
  std::vector<truth_table> locals;
  for ( uint32_t j = 0; j < 3; ++j )
  {
    locals.push_back( truth_table::from_word( 3, f.tables[j] ) );
  }
  return boolean_network( std::move( locals ) );
}

inline uint32_t pick_thread_count( uint32_t requested )
{
  if ( requested != 0 )
  {
    return std::max( 1u, requested );
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min( hw, 8u );
}

/*! \brief Runs `step` over all 2^24 networks, statically sharded.

  Shard states are merged in index order, so the outcome is identical
  for every thread count.
*/
template<typename State, typename StepFn>
std::vector<State> sweep3( uint32_t threads, StepFn step )
{
  auto const& lut = sweep3_luts();
  threads = pick_thread_count( threads );
  uint32_t const total_hi = 1u << 24;
  std::vector<State> states( threads );
  std::vector<std::thread> pool;
  uint32_t const chunk = total_hi / threads;
  for ( uint32_t w = 0; w < threads; ++w )
  {
    uint32_t const begin = w * chunk;
    uint32_t const end = w + 1 == threads ? total_hi : begin + chunk;
    pool.emplace_back( [&, w, begin, end]() {
      net3_facts facts;
      for ( uint32_t idx = begin; idx < end; ++idx )
      {
        compute_net3( idx, lut, facts );
        step( states[w], facts );
      }
    } );
  }
  for ( auto& th : pool )
  {
    th.join();
  }
  return states;
}

struct sweep3_violations
{
  uint64_t checked{ 0 };
  uint64_t total{ 0 };
  std::vector<std::string> entries;

  void add( net3_facts const& f, std::string const& context )
  {
    ++total;
    if ( entries.size() < max_recorded_violations )
    {
      entries.push_back( violation_entry( context, net3_network( f ) ) );
    }
  }
};

inline void merge_sweep3( suite_report& rep, std::vector<sweep3_violations> const& states )
{
  for ( auto const& s : states )
  {
    rep.instances_checked += s.checked;
    for ( auto const& e : s.entries )
    {
      if ( rep.violations.size() < max_recorded_violations )
      {
        rep.violations.push_back( e );
      }
    }
    rep.violations_total += s.total;
  }
}

struct suite_clock
{
  std::chrono::steady_clock::time_point start{ std::chrono::steady_clock::now() };

  uint64_t elapsed_ms() const
  {
    return static_cast<uint64_t>( std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start )
                                      .count() );
  }
};

inline void finish( suite_report& rep, suite_clock const& clock, bool conjecture = false )
{
  rep.elapsed_ms = clock.elapsed_ms();
  if ( conjecture )
  {
    rep.verdict = rep.violations_total ? suite_verdict::refuted_conjecture
                                       : suite_verdict::inconclusive;
  }
  else
  {
    rep.verdict = rep.violations_total ? suite_verdict::fail : suite_verdict::pass;
  }
}

/* ================================================================== */
/* individual suites                                                   */
/* ================================================================== */

inline suite_report suite_odd_indegree( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "odd-indegree";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 2000 );
  rep.seed = p.seed;

  if ( rep.n_min <= 3 && 3 <= rep.n_max )
  {
    auto states = sweep3<sweep3_violations>( p.threads, []( sweep3_violations& st, net3_facts const& f ) {
      ++st.checked;
      for ( uint32_t j = 0; j < 3; ++j )
      {
        if ( f.popcounts[j] % 2 == 1 && f.dep_masks[j] != 0b111 )
        {
          st.add( f, "odd |T(f_" + std::to_string( j + 1 ) + ")| without full in-degree" );
        }
      }
    } );
    merge_sweep3( rep, states );
  }
  for ( uint32_t n = std::max( rep.n_min, 4u ); n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, n, s );
      auto f = random_local_tables( gen, n );
      auto g = interaction_graph( f );
      ++rep.instances_checked;
      for ( uint32_t j = 1; j <= n; ++j )
      {
        if ( point_counts( f, j ) % 2 == 1 && g.in_degree( j ) != n )
        {
          record_violation( rep, violation_entry( "odd |T(f_" + std::to_string( j ) +
                                                      ")| without full in-degree at n=" +
                                                      std::to_string( n ),
                                                  f ) );
        }
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_unique_garden( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "unique-garden";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 2000 );
  rep.seed = p.seed;

  if ( rep.n_min <= 3 && 3 <= rep.n_max )
  {
    auto states = sweep3<sweep3_violations>( p.threads, []( sweep3_violations& st, net3_facts const& f ) {
      if ( f.garden_count != 1 )
      {
        return;
      }
      ++st.checked;
      if ( f.dep_masks[0] != 7 && f.dep_masks[1] != 7 && f.dep_masks[2] != 7 )
      {
        st.add( f, "unique garden but no variable with full in-degree" );
      }
    } );
    merge_sweep3( rep, states );
  }
  for ( uint32_t n = std::max( rep.n_min, 4u ); n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 100 + n, s );
      auto f = network_from_graph( random_unique_garden_graph( gen, n ) );
      ++rep.instances_checked;
      auto g = interaction_graph( f );
      bool full = false;
      for ( uint32_t j = 1; j <= n && !full; ++j )
      {
        full = g.in_degree( j ) == n;
      }
      if ( !full )
      {
        record_violation( rep, violation_entry(
                                   "unique garden but no variable with full in-degree at n=" +
                                       std::to_string( n ),
                                   f ) );
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_subnetwork_cycle( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "subnetwork-cycle";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 1000 );
  rep.seed = p.seed;

  for ( uint32_t n = std::max( rep.n_min, 2u ); n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 200 + n, s );
      /* a forced source component; inner dynamics cyclic half the time
       * so the hypothesis has mass */
      uint32_t const mask = 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 2 ) );
      index_set is( n, mask );
      uint32_t const m = is.size();
      auto inner = gen.flip() ? random_cyclic_permutation_graph( gen, m )
                              : random_functional_graph( gen, m );
      auto outer = random_local_tables( gen, n );
      std::vector<truth_table> locals;
      auto members = is.members();
      for ( uint32_t j = 1; j <= n; ++j )
      {
        if ( !is.contains( j ) )
        {
          locals.push_back( outer.local( j ) );
          continue;
        }
        uint32_t out = 0;
        while ( members[out] != j )
        {
          ++out;
        }
        locals.push_back( truth_table::from_function( n, [&]( configuration const& x ) {
          uint32_t packed = project( x, is ).word();
          return ( inner.successor( packed ) >> out ) & 1u;
        } ) );
      }
      boolean_network f( std::move( locals ) );

      /* the hypothesis counts vertex-simple paths, one arc less than
       * the forced walk that stops when a state repeats; arc-walks can
       * exceed the bound with a constant projection, simple paths
       * cannot */
      auto lens = max_trajectory_lengths( transition_graph( f ) );
      uint64_t longest_simple = 0;
      for ( auto l : lens )
      {
        longest_simple = std::max( longest_simple, l - 1 );
      }
      uint64_t const bound = num_configurations( n ) - num_configurations( n - m );
      if ( longest_simple <= bound )
      {
        continue; /* hypothesis void */
      }
      ++rep.instances_checked;
      auto sub = subnetwork( f, is );
      if ( classify( transition_graph( sub ) ).value != hamiltonian_class::kind::hamiltonian_cycle )
      {
        record_violation( rep, violation_entry( "long trajectory but projection onto I=" +
                                                    std::to_string( mask ) + " is not a full cycle",
                                                f ) );
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_hamiltonian_connected( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "hamiltonian-connected";
  rep.n_min = p.n_min.value_or( 2 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 500 );
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 300 + n, s );
      functional_graph g = gen.flip()
                               ? random_cyclic_permutation_graph( gen, n )
                               : random_rho_graph( gen, n,
                                                   1 + gen.below( num_configurations( n ) ) );
      auto f = network_from_graph( g );
      ++rep.instances_checked;
      auto level = connectivity( interaction_graph( f ) );
      if ( level == connectivity_level::disconnected )
      {
        record_violation( rep, violation_entry( "Hamiltonian dynamics with disconnected "
                                                "interaction graph",
                                                f ) );
      }
      else if ( level == connectivity_level::connected_only )
      {
        record_violation( rep, violation_entry( "Hamiltonian dynamics without unilateral "
                                                "connectivity",
                                                f ) );
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_strong_connectivity( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "strong-connectivity";
  rep.n_min = p.n_min.value_or( 2 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 500 );
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 400 + n, s );
      functional_graph g( 1, { 0, 0 } );
      char const* kind = "";
      switch ( gen.below( 3 ) )
      {
      case 0:
        g = random_rho_graph( gen, n, 1 );
        kind = "maximum-height";
        break;
      case 1:
        g = random_quasi_hamiltonian_graph( gen, n );
        kind = "quasi-Hamiltonian";
        break;
      default:
      {
        uint64_t const odd_count = ( num_configurations( n ) - 1 ) / 2; /* 3, 5, ... */
        if ( odd_count == 0 )
        {
          g = random_rho_graph( gen, n, 1 );
          kind = "maximum-height";
        }
        else
        {
          uint64_t const period = 3 + 2 * gen.below( odd_count );
          g = random_rho_graph( gen, n, period );
          kind = "odd-period intermediate";
        }
        break;
      }
      }
      auto f = network_from_graph( g );
      ++rep.instances_checked;
      if ( connectivity( interaction_graph( f ) ) != connectivity_level::strong )
      {
        record_violation( rep, violation_entry( std::string( kind ) +
                                                    " dynamics without strong connectivity",
                                                f ) );
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_period_height_sum( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "period-height-sum";
  rep.n_min = p.n_min.value_or( 2 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 500 );
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 500 + n, s );
      uint64_t const period = 1 + gen.below( num_configurations( n ) );
      auto g = period == num_configurations( n ) ? random_cyclic_permutation_graph( gen, n )
                                                 : random_rho_graph( gen, n, period );
      ++rep.instances_checked;
      auto summary = analyze( g );
      if ( !( summary.period == big_uint( period ) ) ||
           summary.height + period != num_configurations( n ) )
      {
        record_violation( rep, violation_entry( "period plus height misses 2^n",
                                                network_from_graph( g ) ) );
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_selfdual_iterates( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "selfdual-iterates";
  rep.n_min = p.n_min.value_or( 2 );
  rep.n_max = p.n_max.value_or( 5 );
  rep.samples = p.samples.value_or( 200 );
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 600 + n, s );
      index_set is( n, 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 1 ) ) );
      ++rep.instances_checked;

      /* iterate symmetry of a random self-dual network */
      auto f = random_self_dual_network( gen, n, is );
      bool ok = true;
      for ( uint64_t w = 0; w < num_configurations( n ) && ok; ++w )
      {
        configuration a( n, static_cast<uint32_t>( w ) );
        configuration b = negate_on( a, is );
        for ( uint64_t k = 1; k <= num_configurations( n ) && ok; ++k )
        {
          a = evaluate( f, a );
          b = evaluate( f, b );
          ok = a == negate_on( b, is );
        }
      }
      if ( !ok )
      {
        record_violation( rep, violation_entry( "iterates break the self-dual symmetry", f ) );
      }

      /* half-cycle law, both directions, with a random control */
      auto half_law = [&]( boolean_network const& g ) {
        for ( uint64_t w = 0; w < num_configurations( n ); ++w )
        {
          configuration x( n, static_cast<uint32_t>( w ) );
          if ( !( iterate( g, x, num_configurations( n ) / 2 ) == negate_on( x, is ) ) )
          {
            return false;
          }
        }
        return true;
      };
      auto sd = random_self_dual_hamiltonian_cycle( gen, n, is );
      auto control = network_from_graph( random_cyclic_permutation_graph( gen, n ) );
      for ( auto const* g : { &sd, &control } )
      {
        if ( half_law( *g ) != is_self_dual( *g, is ) )
        {
          record_violation( rep, violation_entry( "half-cycle law disagrees with self-duality",
                                                  *g ) );
        }
      }

      /* signed local graphs coincide under full complement */
      auto sdf = random_self_dual_network( gen, n, index_set::full( n ) );
      for ( uint64_t w = 0; w < num_configurations( n ); ++w )
      {
        configuration x( n, static_cast<uint32_t>( w ) );
        if ( !( local_interaction_graph( sdf, x ) ==
                local_interaction_graph( sdf, negate_on( x, index_set::full( n ) ) ) ) )
        {
          record_violation( rep, violation_entry( "signed local graphs differ at x and its "
                                                  "complement",
                                                  sdf ) );
          break;
        }
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_selfdual_indegree( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "selfdual-indegree";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = p.samples.value_or( 300 );
  rep.seed = p.seed;

  for ( uint32_t n = std::max( 3u, rep.n_min ); n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 700 + n, s );
      index_set is( n, 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 1 ) ) );
      auto f = random_self_dual_hamiltonian_cycle( gen, n, is );
      ++rep.instances_checked;
      auto g = interaction_graph( f );
      for ( uint32_t j : is.members() )
      {
        if ( g.in_degree( j ) != n )
        {
          record_violation( rep, violation_entry( "self-dual cycle with in-degree below n at x_" +
                                                      std::to_string( j ),
                                                  f ) );
        }
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_n2_signed_cycle( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "n2-signed-cycle";
  rep.n_min = rep.n_max = 2;
  rep.samples = 0;
  rep.seed = p.seed;

  for ( uint32_t bits = 0; bits < 256; ++bits )
  {
    std::vector<truth_table> locals{ truth_table::from_word( 2, bits & 0xf ),
                                     truth_table::from_word( 2, bits >> 4 ) };
    boolean_network f( std::move( locals ) );
    ++rep.instances_checked;
    if ( classify( transition_graph( f ) ).value != hamiltonian_class::kind::hamiltonian_cycle )
    {
      continue;
    }
    if ( unate_analysis( f ).status == unate_report::status_kind::not_unate )
    {
      continue;
    }
    auto g = interaction_graph( f );
    bool const shape = g.num_arcs() == 2 && g.has_arc( 1, 2 ) && g.has_arc( 2, 1 ) &&
                       ( ( g.sign( 1, 2 ) == arc_sign::positive &&
                           g.sign( 2, 1 ) == arc_sign::negative ) ||
                         ( g.sign( 1, 2 ) == arc_sign::negative &&
                           g.sign( 2, 1 ) == arc_sign::positive ) );
    if ( !shape )
    {
      record_violation( rep, violation_entry( "unate two-variable cycle without the +/- "
                                              "two-cycle graph",
                                              f ) );
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_family( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "family";
  rep.n_min = p.n_min.value_or( 1 );
  rep.n_max = p.n_max.value_or( 12 );
  rep.samples = 0;
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    ++rep.instances_checked;
    auto fam = build_family( n, family_variant::f );
    auto const& f = fam.network;
    if ( classify( transition_graph( f ) ).value != hamiltonian_class::kind::hamiltonian_cycle )
    {
      record_violation( rep, violation_entry( "family member is not a full cycle", f ) );
    }
    if ( !is_self_dual( f, index_set::full( n ) ) )
    {
      record_violation( rep, violation_entry( "family member is not self-dual", f ) );
    }
    if ( unate_analysis( f ).status == unate_report::status_kind::not_unate )
    {
      record_violation( rep, violation_entry( "family member is not unate", f ) );
    }
    auto g = interaction_graph( f );
    if ( n == 2 )
    {
      bool const shape = g.num_arcs() == 2 && g.has_arc( 1, 2 ) && g.has_arc( 2, 1 ) &&
                         g.sign( 1, 2 ) == arc_sign::positive &&
                         g.sign( 2, 1 ) == arc_sign::negative;
      if ( !shape )
      {
        record_violation( rep, violation_entry( "two-variable member without the +/- cycle", f ) );
      }
    }
    else if ( g.num_arcs() != uint64_t( n ) * n )
    {
      record_violation( rep, violation_entry( "interaction graph is not complete", f ) );
    }
    if ( n == 3 && serialize_network( f, serialize_mode::table ) !=
                       "n=3\nf1 = table 17\nf2 = table 8e\nf3 = table d4\n" )
    {
      record_violation( rep, violation_entry( "three-variable member differs from its formula "
                                              "fixture",
                                              f ) );
    }
    if ( n >= 2 )
    {
      for ( auto variant : { family_variant::h_or_c, family_variant::h_and_d } )
      {
        auto aux = build_family( n, variant );
        if ( unate_analysis( aux.network ).status == unate_report::status_kind::not_unate )
        {
          record_violation( rep, violation_entry( std::string( "patched auxiliary variant " ) +
                                                      to_string( variant ) + " is not unate",
                                                  aux.network ) );
        }
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_table1( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "table1";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 10 );
  rep.samples = 0;
  rep.seed = p.seed;

  uint64_t mismatched_cells = 0;
  for ( uint32_t n = std::max( 3u, rep.n_min ); n <= rep.n_max; ++n )
  {
    ++rep.instances_checked;
    auto fam = build_family( n, family_variant::f );
    auto const z = fam.anchor_z;
    std::ostringstream mism;
    for ( uint32_t i = 1; i <= n; ++i )
    {
      for ( uint32_t j = 1; j <= n; ++j )
      {
        bool const differs = evaluate_local( fam.network, j, z ) !=
                             evaluate_local( fam.network, j, z.flipped( i ) );
        if ( differs != table1_predicate( n, i, j ) )
        {
          ++mismatched_cells;
          mism << " (i=" << i << ",j=" << j << ",computed=" << ( differs ? "1" : "0" ) << ")";
        }
      }
    }
    if ( mism.str().empty() )
    {
      rep.notes.push_back( "n=" + std::to_string( n ) + ": all cells agree" );
    }
    else
    {
      rep.notes.push_back( "n=" + std::to_string( n ) + ": mismatched cells:" + mism.str() );
      record_violation( rep, violation_entry( "anchor dependency pattern deviates from the "
                                              "parity table at n=" +
                                                  std::to_string( n ) + ":" + mism.str(),
                                              fam.network ) );
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  /* the parity table's quantifier is ambiguous; the suite reports
   * per-cell agreement and never asserts one reading */
  rep.verdict = mismatched_cells == 0 ? suite_verdict::pass : suite_verdict::inconclusive;
  return rep;
}

inline suite_report suite_nonthreshold( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "nonthreshold";
  rep.n_min = p.n_min.value_or( 4 );
  rep.n_max = p.n_max.value_or( 10 );
  rep.samples = 0;
  rep.seed = p.seed;

  for ( uint32_t n = std::max( 4u, rep.n_min ); n <= rep.n_max; ++n )
  {
    ++rep.instances_checked;
    auto fam = build_family( n, family_variant::f );
    auto cert = threshold_feasibility( fam.network.local( n ) );
    if ( cert.feasible )
    {
      std::ostringstream weights;
      for ( uint32_t i = 0; i < n; ++i )
      {
        weights << ( i ? ", " : "" ) << cert.weights[i].to_string();
      }
      record_violation( rep, violation_entry(
                                 "top local function is linearly separable at n=" +
                                     std::to_string( n ) + ": a=(" + weights.str() +
                                     "), b=" + cert.threshold.to_string(),
                                 fam.network ) );
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_realize( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "realize";
  rep.n_min = p.n_min.value_or( 1 );
  rep.n_max = p.n_max.value_or( 6 );
  rep.samples = 0;
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= rep.n_max; ++n )
  {
    for ( uint64_t period = 1; period <= num_configurations( n ); ++period )
    {
      ++rep.instances_checked;
      auto g = realize_hamiltonian( n, period );
      auto summary = analyze( transition_graph( g ) );
      bool const ok = summary.period == big_uint( period ) &&
                      summary.height == num_configurations( n ) - period &&
                      unate_analysis( g ).status != unate_report::status_kind::not_unate;
      if ( !ok )
      {
        record_violation( rep, violation_entry( "realization misses period " +
                                                    std::to_string( period ),
                                                g ) );
      }
    }
  }

  /* anchor-pair redirection onto 2-Hamiltonian targets */
  auto check_target = [&]( functional_graph const& target, std::string const& what ) {
    ++rep.instances_checked;
    auto g = realize_two_hamiltonian( target );
    if ( !isomorphic( transition_graph( g ), target ) ||
         unate_analysis( g ).status == unate_report::status_kind::not_unate )
    {
      record_violation( rep, violation_entry( "2-Hamiltonian realization failed for " + what, g ) );
    }
  };
  for ( uint32_t n = std::max( 2u, rep.n_min ); n <= std::min( rep.n_max, 5u ); ++n )
  {
    check_target( transition_graph( build_family( n, family_variant::f ).network ),
                  "the full cycle at n=" + std::to_string( n ) );
    check_target( transition_graph( build_family( n, family_variant::h ).network ),
                  "the split cycle at n=" + std::to_string( n ) );
  }
  if ( rep.n_min <= 3 && 3 <= rep.n_max )
  {
    check_target( functional_graph( 3, { 1, 3, 2, 5, 2, 4, 4, 6 } ),
                  "the eight-vertex reference digraph" );
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_sperner_bound( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "sperner-bound";
  rep.n_min = rep.n_max = 3;
  rep.samples = 0;
  rep.seed = p.seed;

  /* all monotone tables on three variables, then all networks of them */
  std::vector<uint8_t> monotone;
  for ( uint32_t t = 0; t < 256; ++t )
  {
    bool ok = true;
    for ( uint32_t i = 0; i < 3 && ok; ++i )
    {
      uint32_t const shift = 1u << i;
      uint32_t const lo_mask = i == 0 ? 0x55 : i == 1 ? 0x33 : 0x0f;
      ok = ( ( t >> 0 ) & ( ~t >> shift ) & lo_mask ) == 0;
    }
    if ( ok )
    {
      monotone.push_back( uint8_t( t ) );
    }
  }

  for ( auto t1 : monotone )
  {
    for ( auto t2 : monotone )
    {
      for ( auto t3 : monotone )
      {
        ++rep.instances_checked;
        uint8_t succ[8];
        for ( uint32_t x = 0; x < 8; ++x )
        {
          succ[x] = uint8_t( ( ( t1 >> x ) & 1 ) | ( ( ( t2 >> x ) & 1 ) << 1 ) |
                             ( ( ( t3 >> x ) & 1 ) << 2 ) );
        }
        /* longest limit cycle via walk from every state */
        uint8_t longest = 0;
        uint8_t color[8] = { 0 };
        for ( uint32_t s = 0; s < 8; ++s )
        {
          if ( color[s] )
          {
            continue;
          }
          uint8_t path[9];
          uint32_t len = 0;
          uint32_t v = s;
          while ( color[v] == 0 )
          {
            color[v] = 1;
            path[len++] = uint8_t( v );
            v = succ[v];
          }
          if ( color[v] == 1 )
          {
            uint32_t cl = 0;
            bool inside = false;
            for ( uint32_t k = 0; k < len; ++k )
            {
              inside = inside || path[k] == v;
              cl += inside;
            }
            if ( cl >= 2 )
            {
              longest = std::max<uint8_t>( longest, uint8_t( cl ) );
            }
          }
          for ( uint32_t k = 0; k < len; ++k )
          {
            color[path[k]] = 2;
          }
        }
        if ( longest > 3 )
        {
          std::vector<truth_table> locals{ truth_table::from_word( 3, t1 ),
                                           truth_table::from_word( 3, t2 ),
                                           truth_table::from_word( 3, t3 ) };
          record_violation( rep, violation_entry( "monotone network with a limit cycle beyond "
                                                  "the antichain bound",
                                                  boolean_network( std::move( locals ) ) ) );
        }
      }
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_conj_height_bound( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "conj-height-bound";
  rep.n_min = p.n_min.value_or( 1 );
  rep.n_max = p.n_max.value_or( 4 );
  rep.samples = 0;
  rep.seed = p.seed;

  for ( uint32_t n = rep.n_min; n <= std::min( rep.n_max, 4u ); ++n )
  {
    /* every local function a conjunction over a non-empty variable set */
    uint32_t const choices = uint32_t( num_configurations( n ) ) - 1;
    std::vector<uint32_t> pick( n, 1 );
    uint64_t const bound = 2ull * n * n - 3ull * n + 2;
    while ( true )
    {
      ++rep.instances_checked;
      std::vector<uint32_t> succ( num_configurations( n ) );
      for ( uint64_t x = 0; x < num_configurations( n ); ++x )
      {
        uint32_t image = 0;
        for ( uint32_t j = 0; j < n; ++j )
        {
          image |= uint32_t( ( x & pick[j] ) == pick[j] ) << j;
        }
        succ[x] = image;
      }
      auto summary = analyze( functional_graph( n, std::move( succ ) ) );
      if ( summary.height > bound )
      {
        std::vector<truth_table> locals;
        for ( uint32_t j = 0; j < n; ++j )
        {
          uint32_t const mask = pick[j];
          locals.push_back( truth_table::from_function( n, [&]( configuration const& x ) {
            return ( x.word() & mask ) == mask;
          } ) );
        }
        record_violation( rep, violation_entry( "conjunctive network above the height bound",
                                                boolean_network( std::move( locals ) ) ) );
      }
      uint32_t pos = 0;
      while ( pos < n && pick[pos] == choices )
      {
        pick[pos++] = 1;
      }
      if ( pos == n )
      {
        break;
      }
      ++pick[pos];
    }
  }
  finish( rep, clock );
  return rep;
}

inline suite_report suite_conjecture_tournament( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "conjecture-tournament";
  rep.n_min = p.n_min.value_or( 3 );
  rep.n_max = p.n_max.value_or( 4 );
  rep.samples = p.samples.value_or( 3000 );
  rep.seed = p.seed;

  if ( rep.n_min <= 3 && 3 <= rep.n_max )
  {
    auto const& lut = sweep3_luts();
    auto states = sweep3<sweep3_violations>( p.threads, [&]( sweep3_violations& st, net3_facts const& f ) {
      if ( f.kind != hamiltonian_class::kind::hamiltonian_cycle &&
           f.kind != hamiltonian_class::kind::intermediate )
      {
        return;
      }
      ++st.checked;
      if ( ( lut.tournament[f.graph_mask] & 2 ) == 0 )
      {
        st.add( f, "component graph is not a transitive tournament" );
      }
    } );
    merge_sweep3( rep, states );
  }
  for ( uint32_t n = std::max( rep.n_min, 4u ); n <= rep.n_max; ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 800 + n, s );
      uint64_t const period = 2 + gen.below( num_configurations( n ) - 1 );
      auto g = period == num_configurations( n ) ? random_cyclic_permutation_graph( gen, n )
                                                 : random_rho_graph( gen, n, period );
      auto f = network_from_graph( g );
      ++rep.instances_checked;
      if ( !component_graph( interaction_graph( f ) ).is_transitive_tournament )
      {
        record_violation( rep, violation_entry( "component graph is not a transitive tournament",
                                                f ) );
      }
    }
  }
  finish( rep, clock, /* conjecture */ true );
  return rep;
}

inline suite_report suite_conjecture_selfdual( suite_params const& p )
{
  suite_clock clock;
  suite_report rep;
  rep.suite = "conjecture-selfdual-necessary";
  rep.n_min = p.n_min.value_or( 1 );
  rep.n_max = p.n_max.value_or( 4 );
  rep.samples = p.samples.value_or( 20000 );
  rep.seed = p.seed;

  /* exhaustive below four variables */
  for ( uint32_t n = rep.n_min; n <= std::min( rep.n_max, 2u ); ++n )
  {
    uint64_t const per = uint64_t( 1 ) << num_configurations( n );
    uint64_t total = 1;
    for ( uint32_t j = 0; j < n; ++j )
    {
      total *= per;
    }
    for ( uint64_t word = 0; word < total; ++word )
    {
      std::vector<truth_table> locals;
      uint64_t rest = word;
      for ( uint32_t j = 0; j < n; ++j )
      {
        locals.push_back( truth_table::from_word( n, rest % per ) );
        rest /= per;
      }
      boolean_network f( std::move( locals ) );
      if ( classify( transition_graph( f ) ).value != hamiltonian_class::kind::hamiltonian_cycle ||
           unate_analysis( f ).status == unate_report::status_kind::not_unate )
      {
        continue;
      }
      ++rep.instances_checked;
      if ( !is_self_dual( f, index_set::full( n ) ) )
      {
        record_violation( rep, violation_entry( "unate full cycle that is not self-dual", f ) );
      }
    }
  }
  if ( rep.n_min <= 3 && 3 <= rep.n_max )
  {
    auto states = sweep3<sweep3_violations>( p.threads, []( sweep3_violations& st, net3_facts const& f ) {
      if ( f.kind != hamiltonian_class::kind::hamiltonian_cycle || !f.unate )
      {
        return;
      }
      ++st.checked;
      if ( !f.self_dual_full )
      {
        st.add( f, "unate full cycle that is not self-dual" );
      }
    } );
    merge_sweep3( rep, states );
  }
  /* sampled search at four variables over random threshold networks */
  for ( uint32_t n = std::max( rep.n_min, 4u ); n <= std::min( rep.n_max, 4u ); ++n )
  {
    for ( uint64_t s = 0; s < rep.samples; ++s )
    {
      auto gen = instance_rng( p.seed, 900 + n, s );
      std::vector<truth_table> locals;
      for ( uint32_t j = 0; j < n; ++j )
      {
        std::vector<int> w( n );
        for ( auto& wi : w )
        {
          wi = int( gen.below( 7 ) ) - 3;
        }
        int const b = int( gen.below( 9 ) ) - 4;
        locals.push_back( truth_table::from_function( n, [&]( configuration const& x ) {
          int dot = 0;
          for ( uint32_t i = 1; i <= n; ++i )
          {
            dot += x.get( i ) ? w[i - 1] : 0;
          }
          return dot >= b;
        } ) );
      }
      boolean_network f( std::move( locals ) );
      if ( classify( transition_graph( f ) ).value != hamiltonian_class::kind::hamiltonian_cycle )
      {
        continue;
      }
      ++rep.instances_checked;
      if ( !is_self_dual( f, index_set::full( n ) ) )
      {
        record_violation( rep, violation_entry( "unate full cycle that is not self-dual", f ) );
      }
    }
  }
  finish( rep, clock, /* conjecture */ true );
  return rep;
}

} // namespace detail

inline std::vector<std::string> suite_names()
{
  return { "odd-indegree",       "unique-garden",      "subnetwork-cycle",
           "hamiltonian-connected", "strong-connectivity", "period-height-sum",
           "selfdual-iterates",  "selfdual-indegree",  "n2-signed-cycle",
           "family",             "table1",             "nonthreshold",
           "realize",            "sperner-bound",      "conj-height-bound",
           "conjecture-tournament", "conjecture-selfdual-necessary" };
}

/*! \brief Runs one catalog suite; deterministic given (params, seed). */
inline suite_report run_suite( std::string_view name, suite_params const& params = {} )
{
  if ( name == "odd-indegree" )
  {
    return detail::suite_odd_indegree( params );
  }
  if ( name == "unique-garden" )
  {
    return detail::suite_unique_garden( params );
  }
  if ( name == "subnetwork-cycle" )
  {
    return detail::suite_subnetwork_cycle( params );
  }
  if ( name == "hamiltonian-connected" )
  {
    return detail::suite_hamiltonian_connected( params );
  }
  if ( name == "strong-connectivity" )
  {
    return detail::suite_strong_connectivity( params );
  }
  if ( name == "period-height-sum" )
  {
    return detail::suite_period_height_sum( params );
  }
  if ( name == "selfdual-iterates" )
  {
    return detail::suite_selfdual_iterates( params );
  }
  if ( name == "selfdual-indegree" )
  {
    return detail::suite_selfdual_indegree( params );
  }
  if ( name == "n2-signed-cycle" )
  {
    return detail::suite_n2_signed_cycle( params );
  }
  if ( name == "family" )
  {
    return detail::suite_family( params );
  }
  if ( name == "table1" )
  {
    return detail::suite_table1( params );
  }
  if ( name == "nonthreshold" )
  {
    return detail::suite_nonthreshold( params );
  }
  if ( name == "realize" )
  {
    return detail::suite_realize( params );
  }
  if ( name == "sperner-bound" )
  {
    return detail::suite_sperner_bound( params );
  }
  if ( name == "conj-height-bound" )
  {
    return detail::suite_conj_height_bound( params );
  }
  if ( name == "conjecture-tournament" )
  {
    return detail::suite_conjecture_tournament( params );
  }
  if ( name == "conjecture-selfdual-necessary" )
  {
    return detail::suite_conjecture_selfdual( params );
  }
  throw std::invalid_argument( "unknown suite '" + std::string( name ) + "'" );
}

} // namespace hamnet
