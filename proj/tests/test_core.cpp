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

#include <hamnet/core.hpp>
#include <hamnet/rng.hpp>

#include "test_util.hpp"

using namespace hamnet;
using hamnet::test::cfg;
using hamnet::test::make_network;

namespace
{

/* the three-variable network of the garden-of-eden example */
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

/* intermediate-height example: tail of four states into a 4-cycle */
boolean_network example_three()
{
  return make_network( 3, {
    []( configuration const& x ) { return !x.get( 1 ); },
    []( configuration const& x ) {
      return ( !x.get( 2 ) && x.get( 3 ) ) || ( !x.get( 1 ) && x.get( 3 ) ) || ( x.get( 1 ) && x.get( 2 ) );
    },
    []( configuration const& x ) { return !x.get( 2 ); } } );
}

/* Hamiltonian-cycle example on three variables */
boolean_network example_four()
{
  return make_network( 3, {
    []( configuration const& x ) { return !x.get( 1 ); },
    []( configuration const& x ) {
      return ( !x.get( 2 ) && x.get( 3 ) ) || ( !x.get( 1 ) && x.get( 3 ) ) ||
             ( x.get( 1 ) && x.get( 2 ) && !x.get( 3 ) );
    },
    []( configuration const& x ) { return !x.get( 2 ); } } );
}

} // namespace

TEST_CASE( "configuration packing and printing" )
{
  auto x = cfg( "010" );
  CHECK( x.num_vars() == 3 );
  CHECK( x.word() == 2 );
  CHECK( !x.get( 1 ) );
  CHECK( x.get( 2 ) );
  CHECK( !x.get( 3 ) );
  CHECK( x.to_string() == "010" );

  CHECK( configuration::all_one( 4 ).word() == 15 );
  CHECK( configuration::unit( 4, 3 ).word() == 4 );
  CHECK_THROWS_AS( configuration::from_string( "01x" ), std::invalid_argument );
  CHECK_THROWS_AS( configuration( 0, 0 ), std::invalid_argument );
  CHECK_THROWS_AS( configuration( 21, 0 ), std::invalid_argument );
}

TEST_CASE( "negate_on flips exactly the indexed components" )
{
  CHECK( negate_on( cfg( "010" ), index_set::full( 3 ) ) == cfg( "101" ) );
  CHECK( negate_on( cfg( "010" ), index_set::empty( 3 ) ) == cfg( "010" ) );
  CHECK( negate_on( cfg( "1010" ), index_set::of( 4, { 1 } ) ) == cfg( "0010" ) );

  /* involution on random configurations and index sets */
  rng gen( 7 );
  for ( int round = 0; round < 200; ++round )
  {
    uint32_t n = 1 + static_cast<uint32_t>( gen.below( 12 ) );
    configuration x( n, static_cast<uint32_t>( gen.below( num_configurations( n ) ) ) );
    index_set is( n, static_cast<uint32_t>( gen.below( num_configurations( n ) ) ) );
    CHECK( negate_on( negate_on( x, is ), is ) == x );
  }
}

TEST_CASE( "evaluate matches the reference dynamics" )
{
  auto f2 = make_network( 2, { []( configuration const& x ) { return !x.get( 2 ); },
                               []( configuration const& x ) { return x.get( 1 ); } } );
  CHECK( evaluate( f2, cfg( "01" ) ) == cfg( "00" ) );
  CHECK( evaluate( f2, cfg( "00" ) ) == cfg( "10" ) );
  CHECK( evaluate( f2, cfg( "10" ) ) == cfg( "11" ) );
  CHECK( evaluate( f2, cfg( "11" ) ) == cfg( "01" ) );

  auto ex1 = example_one();
  /* the full successor map of the example */
  CHECK( evaluate( ex1, cfg( "100" ) ) == cfg( "110" ) );
  CHECK( evaluate( ex1, cfg( "110" ) ) == cfg( "010" ) );
  CHECK( evaluate( ex1, cfg( "010" ) ) == cfg( "000" ) );
  CHECK( evaluate( ex1, cfg( "000" ) ) == cfg( "000" ) );
  CHECK( evaluate( ex1, cfg( "111" ) ) == cfg( "111" ) );
  CHECK( evaluate( ex1, cfg( "101" ) ) == cfg( "011" ) );
  CHECK( evaluate( ex1, cfg( "011" ) ) == cfg( "001" ) );
  CHECK( evaluate( ex1, cfg( "001" ) ) == cfg( "011" ) );

  auto id2 = make_network( 2, { []( configuration const& x ) { return x.get( 1 ); },
                                []( configuration const& x ) { return x.get( 2 ); } } );
  for ( uint32_t w = 0; w < 4; ++w )
  {
    configuration x( 2, w );
    CHECK( evaluate( id2, x ) == x );
  }

  CHECK_THROWS_AS( evaluate( f2, cfg( "010" ) ), std::invalid_argument );
}

TEST_CASE( "evaluate_local" )
{
  auto ex1 = example_one();
  CHECK( evaluate_local( ex1, 3, cfg( "111" ) ) == true );
  CHECK( evaluate_local( ex1, 3, cfg( "110" ) ) == false );

  auto zero = make_network( 2, { []( configuration const& ) { return false; },
                                 []( configuration const& ) { return false; } } );
  for ( uint32_t w = 0; w < 4; ++w )
  {
    CHECK( evaluate_local( zero, 1, configuration( 2, w ) ) == false );
  }

  CHECK_THROWS_AS( evaluate_local( ex1, 0, cfg( "000" ) ), std::invalid_argument );
  CHECK_THROWS_AS( evaluate_local( ex1, 4, cfg( "000" ) ), std::invalid_argument );
}

TEST_CASE( "point counts" )
{
  auto f2 = make_network( 2, { []( configuration const& x ) { return !x.get( 2 ); },
                               []( configuration const& x ) { return x.get( 1 ); } } );
  CHECK( point_counts( f2, 2 ) == 2 );
  CHECK( point_counts( f2, 2, point_condition{ 1, false } ) == 0 );
  CHECK( point_counts( f2, 2, point_condition{ 1, true } ) == 2 );

  auto ex1 = example_one();
  CHECK( point_counts( ex1, 1 ) == 2 );
  CHECK( point_counts( ex1, 2 ) == 5 );
  CHECK( point_counts( ex1, 3 ) == 4 );

  /* conditional counts partition the plain count */
  rng gen( 11 );
  for ( int round = 0; round < 100; ++round )
  {
    uint32_t n = 1 + static_cast<uint32_t>( gen.below( 6 ) );
    std::vector<truth_table> locals;
    for ( uint32_t j = 0; j < n; ++j )
    {
      locals.push_back( truth_table::from_function(
          n, [&]( configuration const& ) { return gen.flip(); } ) );
    }
    boolean_network f( std::move( locals ) );
    for ( uint32_t j = 1; j <= n; ++j )
    {
      uint64_t zeros = 0;
      for ( uint64_t w = 0; w < num_configurations( n ); ++w )
      {
        zeros += !f.local( j ).get_bit( w );
      }
      CHECK( point_counts( f, j ) + zeros == num_configurations( n ) );
      for ( uint32_t i = 1; i <= n; ++i )
      {
        CHECK( point_counts( f, j, point_condition{ i, false } ) +
                   point_counts( f, j, point_condition{ i, true } ) ==
               point_counts( f, j ) );
      }
    }
  }
}

TEST_CASE( "subnetwork extraction on the reference examples" )
{
  auto ex4 = example_four();
  auto sub = subnetwork( ex4, index_set::of( 3, { 1 } ) );
  CHECK( sub.num_vars() == 1 );
  CHECK( sub.local( 1 ).get_bit( 0 ) == true );
  CHECK( sub.local( 1 ).get_bit( 1 ) == false );

  CHECK_THROWS_AS( subnetwork( ex4, index_set::full( 3 ) ), std::invalid_argument );
  CHECK_THROWS_AS( subnetwork( ex4, index_set::empty( 3 ) ), std::invalid_argument );

  /* {1,2} is not closed under dependency in the intermediate-height
   * example: f_2 reads x_3, so the projection must be rejected with the
   * offending pair */
  auto ex3 = example_three();
  try
  {
    subnetwork( ex3, index_set::of( 3, { 1, 2 } ) );
    CHECK( false );
  }
  catch ( projection_error const& e )
  {
    CHECK( e.function_index == 2 );
    CHECK( e.outside_variable == 3 );
  }

  /* a genuine two-variable source component whose projection is the
   * four-cycle network */
  auto prod = make_network( 3, { []( configuration const& x ) { return !x.get( 2 ); },
                                 []( configuration const& x ) { return x.get( 1 ); },
                                 []( configuration const& x ) {
                                   return x.get( 1 ) ^ x.get( 2 ) ^ x.get( 3 );
                                 } } );
  auto sub12 = subnetwork( prod, index_set::of( 3, { 1, 2 } ) );
  CHECK( sub12.num_vars() == 2 );
  CHECK( evaluate( sub12, cfg( "01" ) ) == cfg( "00" ) );
  CHECK( evaluate( sub12, cfg( "00" ) ) == cfg( "10" ) );
  CHECK( evaluate( sub12, cfg( "10" ) ) == cfg( "11" ) );
  CHECK( evaluate( sub12, cfg( "11" ) ) == cfg( "01" ) );
}

TEST_CASE( "subnetwork commutes with evaluation" )
{
  /* random networks with a forced source component I: locals inside I
   * read only I, locals outside read everything */
  rng gen( 23 );
  for ( int round = 0; round < 60; ++round )
  {
    uint32_t n = 2 + static_cast<uint32_t>( gen.below( 5 ) );
    uint32_t mask = 1 + static_cast<uint32_t>( gen.below( num_configurations( n ) - 2 ) );
    index_set is( n, mask );

    std::vector<truth_table> locals;
    for ( uint32_t j = 1; j <= n; ++j )
    {
      if ( is.contains( j ) )
      {
        truth_table inner = truth_table::from_function(
            is.size(), [&]( configuration const& ) { return gen.flip(); } );
        locals.push_back( truth_table::from_function( n, [&]( configuration const& x ) {
          return inner.get_bit( project( x, is ).word() );
        } ) );
      }
      else
      {
        locals.push_back( truth_table::from_function(
            n, [&]( configuration const& ) { return gen.flip(); } ) );
      }
    }
    boolean_network f( std::move( locals ) );
    auto sub = subnetwork( f, is );
    for ( uint64_t w = 0; w < num_configurations( n ); ++w )
    {
      configuration x( n, static_cast<uint32_t>( w ) );
      CHECK( evaluate( sub, project( x, is ) ) == project( evaluate( f, x ), is ) );
    }
  }
}

TEST_CASE( "truth table helpers" )
{
  auto t = truth_table::from_word( 2, 0b0110 );
  CHECK( t.count_ones() == 2 );
  CHECK( t.depends_on( 1 ) );
  CHECK( t.depends_on( 2 ) );

  auto c1 = truth_table::from_word( 3, 0xff );
  CHECK( c1.count_ones() == 8 );
  CHECK( !c1.depends_on( 1 ) );

  truth_table big( 8 );
  big.set_bit( 200 );
  CHECK( big.count_ones() == 1 );
  CHECK( big.get_bit( 200 ) );
  big.set_bit( 200, false );
  CHECK( big.count_ones() == 0 );
}
