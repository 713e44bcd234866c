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

#include <hamnet/construction.hpp>
#include <hamnet/generators.hpp>
#include <hamnet/properties.hpp>
#include <hamnet/rng.hpp>

#include "test_util.hpp"

using namespace hamnet;
using hamnet::test::cfg;
using hamnet::test::make_network;

namespace
{

/* independent decision: search integer weights in a small box; for
 * integer weights b = min over T works and the unit margin is free */
bool threshold_by_weight_search( truth_table const& t, int radius )
{
  uint32_t const n = t.num_vars();
  std::vector<uint32_t> true_pts, false_pts;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    ( t.get_bit( x ) ? true_pts : false_pts ).push_back( static_cast<uint32_t>( x ) );
  }
  if ( true_pts.empty() || false_pts.empty() )
  {
    return true;
  }
  std::vector<int> w( n, -radius );
  while ( true )
  {
    int min_true = INT32_MAX, max_false = INT32_MIN;
    for ( auto x : true_pts )
    {
      int dot = 0;
      for ( uint32_t i = 0; i < n; ++i )
      {
        dot += ( ( x >> i ) & 1 ) ? w[i] : 0;
      }
      min_true = std::min( min_true, dot );
    }
    for ( auto x : false_pts )
    {
      int dot = 0;
      for ( uint32_t i = 0; i < n; ++i )
      {
        dot += ( ( x >> i ) & 1 ) ? w[i] : 0;
      }
      max_false = std::max( max_false, dot );
    }
    if ( max_false < min_true )
    {
      return true;
    }
    uint32_t pos = 0;
    while ( pos < n && w[pos] == radius )
    {
      w[pos++] = -radius;
    }
    if ( pos == n )
    {
      return false;
    }
    ++w[pos];
  }
}

} // namespace

TEST_CASE( "balanced networks" )
{
  CHECK( is_balanced( build_family( 3, family_variant::f ).network ) );
  CHECK( is_balanced( paper_fixture( "f2" ) ) );
  CHECK( !is_balanced( paper_fixture( "ex1" ) ) );
  CHECK( !is_balanced( make_network( 2, { []( configuration const& ) { return false; },
                                          []( configuration const& x ) { return x.get( 1 ); } } ) ) );
}

TEST_CASE( "unate analysis" )
{
  CHECK( unate_analysis( build_family( 3, family_variant::f ).network ).status ==
         unate_report::status_kind::unate );

  auto mono = make_network( 2, { []( configuration const& x ) { return x.get( 1 ) && x.get( 2 ); },
                                 []( configuration const& x ) { return x.get( 1 ) || x.get( 2 ); } } );
  CHECK( unate_analysis( mono ).status == unate_report::status_kind::monotone );

  auto bad = make_network( 2, { []( configuration const& x ) { return x.get( 1 ) ^ x.get( 2 ); },
                                []( configuration const& x ) { return x.get( 2 ); } } );
  auto rep = unate_analysis( bad );
  REQUIRE( rep.status == unate_report::status_kind::not_unate );
  REQUIRE( rep.witness.has_value() );
  auto const& w = *rep.witness;
  CHECK( w.function_index == 1 );
  /* the witness pair exhibits both orientations with the variable low */
  CHECK( !w.increasing_at.get( w.variable ) );
  CHECK( !w.decreasing_at.get( w.variable ) );
  CHECK( evaluate_local( bad, w.function_index, w.increasing_at ) <
         evaluate_local( bad, w.function_index, w.increasing_at.flipped( w.variable ) ) );
  CHECK( evaluate_local( bad, w.function_index, w.decreasing_at ) >
         evaluate_local( bad, w.function_index, w.decreasing_at.flipped( w.variable ) ) );
}

TEST_CASE( "self-duality" )
{
  auto neg = make_network( 1, { []( configuration const& x ) { return !x.get( 1 ); } } );
  CHECK( is_self_dual( neg, index_set::full( 1 ) ) );

  CHECK( is_self_dual( build_family( 3, family_variant::f ).network, index_set::full( 3 ) ) );
  CHECK( is_self_dual( paper_fixture( "f2" ), index_set::full( 2 ) ) );

  auto zero = make_network( 2, { []( configuration const& ) { return false; },
                                 []( configuration const& ) { return false; } } );
  auto ce = self_dual_counterexample( zero, index_set::full( 2 ) );
  REQUIRE( ce.has_value() );
  auto is = index_set::full( 2 );
  CHECK( !( evaluate( zero, *ce ) == negate_on( evaluate( zero, negate_on( *ce, is ) ), is ) ) );

  CHECK_THROWS_AS( is_self_dual( zero, index_set::empty( 2 ) ), std::invalid_argument );
}

TEST_CASE( "self-dual generators and the iterate law" )
{
  rng gen( 107 );
  for ( int round = 0; round < 25; ++round )
  {
    uint32_t n = 2 + static_cast<uint32_t>( gen.below( 4 ) );
    index_set is( n, 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 1 ) ) );
    auto f = random_self_dual_network( gen, n, is );
    REQUIRE( is_self_dual( f, is ) );

    /* iterates inherit the symmetry */
    for ( uint64_t w = 0; w < num_configurations( n ); ++w )
    {
      configuration x( n, static_cast<uint32_t>( w ) );
      configuration a = x, b = negate_on( x, is );
      for ( uint32_t k = 1; k <= num_configurations( n ); ++k )
      {
        a = evaluate( f, a );
        b = evaluate( f, b );
        CHECK( a == negate_on( b, is ) );
      }
    }
  }
}

TEST_CASE( "half-cycle law on Hamiltonian cycles" )
{
  rng gen( 109 );
  for ( int round = 0; round < 40; ++round )
  {
    uint32_t n = 2 + static_cast<uint32_t>( gen.below( 4 ) );
    index_set is( n, 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 1 ) ) );

    auto sd = random_self_dual_hamiltonian_cycle( gen, n, is );
    CHECK( classify( transition_graph( sd ) ).value == hamiltonian_class::kind::hamiltonian_cycle );
    REQUIRE( is_self_dual( sd, is ) );

    auto check_equivalence = [&]( boolean_network const& f ) {
      bool half_law = true;
      for ( uint64_t w = 0; w < num_configurations( n ) && half_law; ++w )
      {
        configuration x( n, static_cast<uint32_t>( w ) );
        half_law = iterate( f, x, num_configurations( n ) / 2 ) == negate_on( x, is );
      }
      CHECK( half_law == is_self_dual( f, is ) );
    };
    check_equivalence( sd );

    /* control: a random Hamiltonian cycle, usually not self-dual in I */
    check_equivalence( network_from_graph( random_cyclic_permutation_graph( gen, n ) ) );
  }
}

TEST_CASE( "self-dual Hamiltonian cycles have full in-degree on the set" )
{
  rng gen( 113 );
  for ( int round = 0; round < 40; ++round )
  {
    uint32_t n = 3 + static_cast<uint32_t>( gen.below( 3 ) );
    index_set is( n, 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 1 ) ) );
    auto f = random_self_dual_hamiltonian_cycle( gen, n, is );
    auto g = interaction_graph( f );
    for ( uint32_t j : is.members() )
    {
      CHECK( g.in_degree( j ) == n );
    }
  }
}

TEST_CASE( "signed local graphs coincide at a configuration and its complement" )
{
  rng gen( 127 );
  for ( int round = 0; round < 30; ++round )
  {
    uint32_t n = 2 + static_cast<uint32_t>( gen.below( 4 ) );
    auto f = random_self_dual_network( gen, n, index_set::full( n ) );
    for ( uint64_t w = 0; w < num_configurations( n ); ++w )
    {
      configuration x( n, static_cast<uint32_t>( w ) );
      auto gx = local_interaction_graph( f, x );
      auto gxbar = local_interaction_graph( f, negate_on( x, index_set::full( n ) ) );
      CHECK( gx == gxbar );
    }
  }
}

TEST_CASE( "conditional point counts force full dependency" )
{
  /* |T| a positive multiple of four with an odd conditional slice means
   * the function reads every variable; exhaustive over all tables */
  for ( uint32_t n = 3; n <= 4; ++n )
  {
    uint64_t const tables = uint64_t( 1 ) << ( uint64_t( 1 ) << n );
    for ( uint64_t bits = 0; bits < tables; ++bits )
    {
      auto t = truth_table::from_word( n, bits );
      uint64_t const ones = t.count_ones();
      if ( ones == 0 || ones % 4 != 0 )
      {
        continue;
      }
      boolean_network f( std::vector<truth_table>( n, t ) );
      bool odd_slice = false;
      for ( uint32_t i = 1; i <= n && !odd_slice; ++i )
      {
        for ( bool a : { false, true } )
        {
          odd_slice = odd_slice || point_counts( f, 1, point_condition{ i, a } ) % 2 == 1;
        }
      }
      if ( odd_slice )
      {
        for ( uint32_t i = 1; i <= n; ++i )
        {
          CHECK( t.depends_on( i ) );
        }
      }
    }
  }
}

TEST_CASE( "threshold feasibility: named cases" )
{
  auto table_of = []( uint32_t n, std::string const& body ) {
    std::string text = "n=" + std::to_string( n ) + "\n";
    for ( uint32_t j = 1; j <= n; ++j )
    {
      text += "f" + std::to_string( j ) + " = " + ( j == 1 ? body : "0" ) + "\n";
    }
    return read_network( text ).local( 1 );
  };

  auto and2 = threshold_feasibility( table_of( 2, "x1 & x2" ) );
  CHECK( and2.feasible );
  CHECK( verify_threshold_certificate( table_of( 2, "x1 & x2" ), and2 ) );

  auto or2 = threshold_feasibility( table_of( 2, "x1 | x2" ) );
  CHECK( or2.feasible );

  CHECK( !threshold_feasibility( table_of( 2, "x1 ^ x2" ) ).feasible );

  /* monotone yet not linearly separable */
  CHECK( !threshold_feasibility( table_of( 4, "(x1 & x2) | (x3 & x4)" ) ).feasible );

  /* majority and its negation */
  auto maj = table_of( 3, "(x1 & x2) | (x1 & x3) | (x2 & x3)" );
  CHECK( threshold_feasibility( maj ).feasible );
  auto notmaj = table_of( 3, "!((x1 & x2) | (x1 & x3) | (x2 & x3))" );
  CHECK( threshold_feasibility( notmaj ).feasible );

  /* constants */
  CHECK( threshold_feasibility( truth_table::from_word( 3, 0x00 ) ).feasible );
  CHECK( threshold_feasibility( truth_table::from_word( 3, 0xff ) ).feasible );

  CHECK_THROWS_AS( threshold_feasibility( truth_table( 13 ) ), std::invalid_argument );
}

TEST_CASE( "threshold feasibility agrees with weight search on all 3-variable tables" )
{
  for ( uint32_t bits = 0; bits < 256; ++bits )
  {
    auto t = truth_table::from_word( 3, bits );
    auto cert = threshold_feasibility( t );
    CHECK( cert.feasible == threshold_by_weight_search( t, 6 ) );
    if ( cert.feasible )
    {
      CHECK( verify_threshold_certificate( t, cert ) );
    }
  }
}

TEST_CASE( "threshold feasibility agrees with weight search on random 4-variable tables" )
{
  rng gen( 131 );
  for ( int round = 0; round < 120; ++round )
  {
    truth_table t = truth_table::from_function(
        4, [&]( configuration const& ) { return gen.flip(); } );
    CHECK( threshold_feasibility( t ).feasible == threshold_by_weight_search( t, 7 ) );
  }
}

TEST_CASE( "the top local function of the family is linearly separable" )
{
  /* the non-neural claim fails computationally: the anchor row lifts and
   * its complement drops exactly along a separating hyperplane */
  for ( uint32_t n = 4; n <= 8; ++n )
  {
    auto fam = build_family( n, family_variant::f );
    auto cert = threshold_feasibility( fam.network.local( n ) );
    CHECK( cert.feasible );
    CHECK( verify_threshold_certificate( fam.network.local( n ), cert ) );
  }
}

TEST_CASE( "assumability violations" )
{
  auto xor2 = truth_table::from_word( 2, 0b0110 );
  auto w = assumability_violation( xor2, 2 );
  REQUIRE( w.has_value() );
  CHECK( w->true_points.size() == 2 );
  CHECK( w->false_points.size() == 2 );
  /* validity: sides lie in T and F and have equal component sums */
  std::vector<int> sum_t( 2, 0 ), sum_f( 2, 0 );
  for ( auto const& x : w->true_points )
  {
    CHECK( xor2.get_bit( x.word() ) );
    for ( uint32_t i = 0; i < 2; ++i )
    {
      sum_t[i] += ( x.word() >> i ) & 1;
    }
  }
  for ( auto const& x : w->false_points )
  {
    CHECK( !xor2.get_bit( x.word() ) );
    for ( uint32_t i = 0; i < 2; ++i )
    {
      sum_f[i] += ( x.word() >> i ) & 1;
    }
  }
  CHECK( sum_t == sum_f );

  auto and2 = truth_table::from_word( 2, 0b1000 );
  CHECK( !assumability_violation( and2, 4 ).has_value() );

  /* separable, hence assumable at any depth */
  CHECK( !assumability_violation( build_family( 4, family_variant::f ).network.local( 4 ), 3 )
              .has_value() );

  CHECK_THROWS_AS( assumability_violation( xor2, 1 ), std::invalid_argument );
}

TEST_CASE( "threshold and assumability cross-checks" )
{
  rng gen( 137 );
  for ( int round = 0; round < 150; ++round )
  {
    uint32_t n = 2 + static_cast<uint32_t>( gen.below( 4 ) );
    truth_table t = truth_table::from_function(
        n, [&]( configuration const& ) { return gen.flip(); } );
    bool const separable = threshold_feasibility( t ).feasible;
    auto violation = assumability_violation( t, 3 );
    if ( separable )
    {
      CHECK( !violation.has_value() );
    }
    if ( violation )
    {
      CHECK( !separable );
    }
  }
}
