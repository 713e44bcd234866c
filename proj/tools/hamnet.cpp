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
  \file hamnet.cpp
  \brief Command-line front end.

  Exit codes: 0 on success or a passing check, 1 when a checked
  property fails or a suite reports violations, 2 on usage or parse
  errors.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <hamnet/construction.hpp>
#include <hamnet/core.hpp>
#include <hamnet/dynamics.hpp>
#include <hamnet/formats.hpp>
#include <hamnet/interaction.hpp>
#include <hamnet/properties.hpp>
#include <hamnet/verify.hpp>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_property_failed = 1;
constexpr int exit_usage = 2;

std::string read_input( std::string const& path )
{
  if ( path.empty() || path == "-" )
  {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hamnet::boolean_network load_network( std::string const& path )
{
  return hamnet::read_network( read_input( path ) );
}

/* a dynamics argument accepts either a `.bn` network (its transition
 * graph is taken) or a raw successor listing headed `graph n=<k>` */
hamnet::functional_graph load_dynamics( std::string const& path )
{
  std::string text = read_input( path );
  std::istringstream in( text );
  std::string head;
  in >> head;
  if ( head == "graph" )
  {
    std::string nspec;
    in >> nspec;
    if ( nspec.rfind( "n=", 0 ) != 0 )
    {
      throw std::runtime_error( "graph header must be 'graph n=<int>'" );
    }
    uint32_t const n = static_cast<uint32_t>( std::stoul( nspec.substr( 2 ) ) );
    std::vector<uint32_t> succ;
    succ.reserve( hamnet::num_configurations( n ) );
    uint32_t value;
    while ( in >> value )
    {
      succ.push_back( value );
    }
    return hamnet::functional_graph( n, std::move( succ ) );
  }
  return hamnet::transition_graph( hamnet::read_network( text ) );
}

void print_summary( hamnet::functional_graph const& g, hamnet::dynamics_summary const& s )
{
  auto label = [&]( uint32_t w ) {
    return hamnet::configuration( g.num_vars(), w ).to_string();
  };
  std::cout << "states:        " << g.num_states() << "\n";
  std::cout << "fixed points: ";
  for ( auto fp : s.fixed_points )
  {
    std::cout << " " << label( fp );
  }
  std::cout << ( s.fixed_points.empty() ? " none\n" : "\n" );
  std::cout << "limit cycles:  " << s.limit_cycles.size() << "\n";
  for ( auto const& c : s.limit_cycles )
  {
    std::cout << "  length " << c.size() << ":";
    for ( auto v : c )
    {
      std::cout << " " << label( v );
    }
    std::cout << "\n";
  }
  std::cout << "gardens:      ";
  for ( auto gd : s.gardens )
  {
    std::cout << " " << label( gd );
  }
  std::cout << ( s.gardens.empty() ? " none\n" : "\n" );
  std::cout << "height:        " << s.height << "\n";
  std::cout << "period:        " << s.period.to_string() << "\n";
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "hamnet: Hamiltonian dynamics of Boolean networks" };
  app.require_subcommand( 1 );

  std::string file = "-";
  std::string file_b;
  std::string config_bits;
  std::string check_kind;
  std::string fixture_id;
  std::string construct_kind;
  std::string target_file;
  std::string on_set;
  bool want_dot = false;
  bool want_json = false;
  bool show_witness = false;
  uint32_t fn_index = 0;
  uint32_t size_n = 3;
  uint32_t k_max = 3;
  uint64_t period = 0;
  std::string range;
  uint64_t samples = 0;
  uint64_t seed = 1;
  uint32_t threads = 0;
  std::string suite_name;

  auto* eval = app.add_subcommand( "eval", "apply a network to a configuration" );
  eval->add_option( "file", file, "network file, - for stdin" );
  eval->add_option( "--x", config_bits, "configuration as x1..xn bits" )->required();

  auto* dynamics = app.add_subcommand( "dynamics", "attractors, height, period" );
  dynamics->add_option( "file", file, "network file, - for stdin" );
  dynamics->add_flag( "--dot", want_dot, "emit the transition graph as DOT" );

  auto* igraph = app.add_subcommand( "igraph", "interaction graph and connectivity" );
  igraph->add_option( "file", file, "network file, - for stdin" );
  igraph->add_flag( "--dot", want_dot, "emit the signed graph as DOT" );
  igraph->add_option( "--local", config_bits, "local graph at a configuration" );

  auto* check = app.add_subcommand( "check", "decide a named property" );
  check->add_option( "property", check_kind,
                     "balanced|unate|monotone|selfdual|threshold|assumable" )
      ->required();
  check->add_option( "file", file, "network file, - for stdin" );
  check->add_option( "--fn", fn_index, "local function index (threshold/assumable; 0 = all)" );
  check->add_option( "--on", on_set, "index set for selfdual, e.g. 1,3 (default full)" );
  check->add_option( "--kmax", k_max, "assumability search depth (default 3)" );

  auto* classify_cmd = app.add_subcommand( "classify", "Hamiltonian taxonomy" );
  classify_cmd->add_option( "file", file, "network file, - for stdin" );
  classify_cmd->add_flag( "--witness", show_witness, "also search a 2-Hamiltonian witness" );

  auto* construct = app.add_subcommand( "construct", "build family members and realizations" );
  construct->add_option( "kind", construct_kind, "f|h|h-or-c|h-and-d|realize|realize-2ham" )
      ->required();
  construct->add_option( "--n", size_n, "number of variables" );
  construct->add_option( "--period", period, "attractor length for realize" );
  construct->add_option( "--target", target_file, "target dynamics for realize-2ham" );

  auto* fixture = app.add_subcommand( "fixture", "emit a bundled reference network" );
  fixture->add_option( "id", fixture_id, "ex1|ex2|ex3|ex4|quasi3|bridoux5|f2|f3" )->required();

  auto* iso = app.add_subcommand( "iso", "compare two dynamics up to isomorphism" );
  iso->add_option( "a", file, "first network or graph file" )->required();
  iso->add_option( "b", file_b, "second network or graph file" )->required();

  auto* verify = app.add_subcommand( "verify", "run a verification suite" );
  verify->add_option( "suite", suite_name, "suite name, or 'list'" )->required();
  verify->add_option( "--n", range, "size range A or A:B" );
  verify->add_option( "--samples", samples, "samples per size" );
  verify->add_option( "--seed", seed, "ensemble seed" );
  verify->add_flag( "--json", want_json, "machine-readable report" );
  verify->add_option( "--threads", threads, "worker count (0 = auto)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int code = app.exit( e );
    return code == 0 ? exit_ok : exit_usage;
  }

  using namespace hamnet;
  try
  {
    if ( eval->parsed() )
    {
      auto f = load_network( file );
      auto x = configuration::from_string( config_bits );
      std::cout << evaluate( f, x ).to_string() << "\n";
      return exit_ok;
    }

    if ( dynamics->parsed() )
    {
      auto f = load_network( file );
      auto g = transition_graph( f );
      if ( want_dot )
      {
        std::cout << export_dot( g );
        return exit_ok;
      }
      print_summary( g, analyze( g ) );
      std::cout << "class:         " << to_string( classify( g ).value ) << "\n";
      return exit_ok;
    }

    if ( igraph->parsed() )
    {
      auto f = load_network( file );
      signed_digraph g = config_bits.empty()
                             ? interaction_graph( f )
                             : local_interaction_graph(
                                   f, configuration::from_string( config_bits ) );
      if ( want_dot )
      {
        std::cout << export_dot( g );
        return exit_ok;
      }
      for ( auto [i, j, s] : g.arcs() )
      {
        std::cout << i << " -> " << j << " [" << to_char( s ) << "]\n";
      }
      std::cout << "max in-degree: " << g.max_in_degree() << "\n";
      std::cout << "connectivity:  " << to_string( connectivity( g ) ) << "\n";
      return exit_ok;
    }

    if ( check->parsed() )
    {
      auto f = load_network( file );
      if ( check_kind == "balanced" )
      {
        bool const ok = is_balanced( f );
        std::cout << ( ok ? "balanced" : "not balanced" ) << "\n";
        return ok ? exit_ok : exit_property_failed;
      }
      if ( check_kind == "unate" || check_kind == "monotone" )
      {
        auto rep = unate_analysis( f );
        std::cout << to_string( rep.status ) << "\n";
        if ( rep.witness )
        {
          std::cout << "witness: f_" << rep.witness->function_index << " in x_"
                    << rep.witness->variable << " rises at "
                    << rep.witness->increasing_at.to_string() << " and falls at "
                    << rep.witness->decreasing_at.to_string() << "\n";
        }
        bool const ok = check_kind == "monotone"
                            ? rep.status == unate_report::status_kind::monotone
                            : rep.status != unate_report::status_kind::not_unate;
        return ok ? exit_ok : exit_property_failed;
      }
      if ( check_kind == "selfdual" )
      {
        index_set is = index_set::full( f.num_vars() );
        if ( !on_set.empty() )
        {
          std::vector<uint32_t> members;
          std::istringstream in( on_set );
          std::string tok;
          while ( std::getline( in, tok, ',' ) )
          {
            members.push_back( static_cast<uint32_t>( std::stoul( tok ) ) );
          }
          is = index_set::of( f.num_vars(), members );
        }
        auto ce = self_dual_counterexample( f, is );
        if ( ce )
        {
          std::cout << "not self-dual; counterexample " << ce->to_string() << "\n";
          return exit_property_failed;
        }
        std::cout << "self-dual\n";
        return exit_ok;
      }
      if ( check_kind == "threshold" )
      {
        bool all_ok = true;
        for ( uint32_t j = 1; j <= f.num_vars(); ++j )
        {
          if ( fn_index != 0 && j != fn_index )
          {
            continue;
          }
          auto cert = threshold_feasibility( f.local( j ) );
          std::cout << "f" << j << ": " << ( cert.feasible ? "feasible" : "infeasible" );
          if ( cert.feasible )
          {
            std::cout << "  a=(";
            for ( uint32_t i = 0; i < f.num_vars(); ++i )
            {
              std::cout << ( i ? ", " : "" ) << cert.weights[i].to_string();
            }
            std::cout << ") b=" << cert.threshold.to_string();
          }
          std::cout << "\n";
          all_ok = all_ok && cert.feasible;
        }
        return all_ok ? exit_ok : exit_property_failed;
      }
      if ( check_kind == "assumable" )
      {
        bool all_ok = true;
        for ( uint32_t j = 1; j <= f.num_vars(); ++j )
        {
          if ( fn_index != 0 && j != fn_index )
          {
            continue;
          }
          auto w = assumability_violation( f.local( j ), k_max );
          std::cout << "f" << j << ": "
                    << ( w ? "violation at k=" + std::to_string( w->true_points.size() )
                           : "no violation up to k=" + std::to_string( k_max ) );
          if ( w )
          {
            std::cout << "  T-side:";
            for ( auto const& x : w->true_points )
            {
              std::cout << " " << x.to_string();
            }
            std::cout << "  F-side:";
            for ( auto const& x : w->false_points )
            {
              std::cout << " " << x.to_string();
            }
          }
          std::cout << "\n";
          all_ok = all_ok && !w;
        }
        return all_ok ? exit_ok : exit_property_failed;
      }
      std::cerr << "unknown property '" << check_kind << "'\n";
      return exit_usage;
    }

    if ( classify_cmd->parsed() )
    {
      auto f = load_network( file );
      auto g = transition_graph( f );
      auto c = classify( g );
      std::cout << to_string( c.value );
      if ( c.is_hamiltonian() || c.value == hamiltonian_class::kind::quasi_hamiltonian )
      {
        std::cout << " (attractor length " << c.cycle_length << ")";
      }
      std::cout << "\n";
      if ( show_witness )
      {
        auto w = two_hamiltonian_witness( g );
        if ( w )
        {
          std::cout << "2-hamiltonian witness: "
                    << configuration( g.num_vars(), w->first ).to_string() << " and "
                    << configuration( g.num_vars(), w->second ).to_string() << "\n";
        }
        else
        {
          std::cout << "not 2-hamiltonian\n";
        }
      }
      return exit_ok;
    }

    if ( construct->parsed() )
    {
      boolean_network out( { truth_table( 1 ) } );
      if ( construct_kind == "f" || construct_kind == "h" || construct_kind == "h-or-c" ||
           construct_kind == "h-and-d" )
      {
        family_variant v = construct_kind == "f"        ? family_variant::f
                           : construct_kind == "h"      ? family_variant::h
                           : construct_kind == "h-or-c" ? family_variant::h_or_c
                                                        : family_variant::h_and_d;
        out = build_family( size_n, v ).network;
      }
      else if ( construct_kind == "realize" )
      {
        if ( period == 0 )
        {
          std::cerr << "realize needs --period\n";
          return exit_usage;
        }
        out = realize_hamiltonian( size_n, period );
      }
      else if ( construct_kind == "realize-2ham" )
      {
        if ( target_file.empty() )
        {
          std::cerr << "realize-2ham needs --target\n";
          return exit_usage;
        }
        out = realize_two_hamiltonian( load_dynamics( target_file ) );
      }
      else
      {
        std::cerr << "unknown construction '" << construct_kind << "'\n";
        return exit_usage;
      }
      std::cout << serialize_network( out, serialize_mode::table );
      return exit_ok;
    }

    if ( fixture->parsed() )
    {
      std::cout << fixture_source( fixture_id );
      return exit_ok;
    }

    if ( iso->parsed() )
    {
      auto a = load_dynamics( file );
      auto b = load_dynamics( file_b );
      bool const same = isomorphic( a, b );
      std::cout << ( same ? "isomorphic" : "not isomorphic" ) << "\n";
      return same ? exit_ok : exit_property_failed;
    }

    if ( verify->parsed() )
    {
      if ( suite_name == "list" )
      {
        for ( auto const& s : suite_names() )
        {
          std::cout << s << "\n";
        }
        return exit_ok;
      }
      suite_params params;
      params.seed = seed;
      params.threads = threads;
      if ( samples > 0 )
      {
        params.samples = samples;
      }
      if ( !range.empty() )
      {
        auto colon = range.find( ':' );
        if ( colon == std::string::npos )
        {
          params.n_min = params.n_max = static_cast<uint32_t>( std::stoul( range ) );
        }
        else
        {
          params.n_min = static_cast<uint32_t>( std::stoul( range.substr( 0, colon ) ) );
          params.n_max = static_cast<uint32_t>( std::stoul( range.substr( colon + 1 ) ) );
        }
      }
      auto rep = run_suite( suite_name, params );
      std::cout << ( want_json ? to_json( rep ) + "\n" : to_text( rep ) );
      return rep.violations_total == 0 ? exit_ok : exit_property_failed;
    }
  }
  catch ( parse_error const& e )
  {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_property_failed;
  }
  return exit_usage;
}
