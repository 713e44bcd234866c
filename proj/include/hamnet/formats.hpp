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
  \file formats.hpp
  \brief The `.bn` network text format, expression parsing and DOT export.

  Grammar of a network file:

      n=<int>                      header, variable count
      f<j> = <expr>                one definition per variable
      f<j> = table <hex>           alternative: raw truth table

  Expression operators, tightest first: `!`, `&`, `^`, `|`; all binary
  operators are left-associative; parentheses and the constants `0`, `1`
  are allowed; variables are written `x1` ... `xn`.  Whitespace is
  insignificant and `#` starts a comment to the end of the line.

  Table literals are hexadecimal, most significant digit first and
  left-padded to 2^n bits; bit k is the value on the configuration whose
  word is k (little-endian by configuration word).
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "dynamics.hpp"
#include "interaction.hpp"

namespace hamnet
{

/*! \brief Syntax or semantic error with 1-based position and the token
           set that would have been accepted. */
class parse_error : public std::runtime_error
{
public:
  parse_error( uint32_t line, uint32_t column, std::string const& message,
               std::vector<std::string> expected = {} )
      : std::runtime_error( "line " + std::to_string( line ) + ", column " +
                            std::to_string( column ) + ": " + message +
                            ( expected.empty() ? "" : " (expected " + join( expected ) + ")" ) ),
        line( line ), column( column ), expected( std::move( expected ) )
  {
  }

  uint32_t line;
  uint32_t column;
  std::vector<std::string> expected;

private:
  static std::string join( std::vector<std::string> const& items )
  {
    std::string out;
    for ( size_t i = 0; i < items.size(); ++i )
    {
      out += i ? ", " : "";
      out += items[i];
    }
    return out;
  }
};

/*! \brief Expression tree over variables, constants, !, &, ^ and |. */
class expression
{
public:
  enum class op : uint8_t
  {
    variable,
    constant,
    negation,
    conjunction,
    disjunction,
    exclusive_or
  };

  struct node
  {
    op kind;
    uint32_t lhs{ 0 }; /* child index, or variable index / constant value */
    uint32_t rhs{ 0 };
  };

  uint32_t add_leaf_variable( uint32_t var )
  {
    nodes_.push_back( { op::variable, var, 0 } );
    return last();
  }

  uint32_t add_leaf_constant( bool value )
  {
    nodes_.push_back( { op::constant, value ? 1u : 0u, 0 } );
    return last();
  }

  uint32_t add_negation( uint32_t child )
  {
    nodes_.push_back( { op::negation, child, 0 } );
    return last();
  }

  uint32_t add_binary( op kind, uint32_t lhs, uint32_t rhs )
  {
    nodes_.push_back( { kind, lhs, rhs } );
    return last();
  }

  bool evaluate( configuration const& x ) const
  {
    return evaluate_node( root_, x );
  }

  void set_root( uint32_t r ) { root_ = r; }

  uint32_t max_variable() const
  {
    uint32_t m = 0;
    for ( auto const& nd : nodes_ )
    {
      if ( nd.kind == op::variable )
      {
        m = std::max( m, nd.lhs );
      }
    }
    return m;
  }

private:
  uint32_t last() const { return static_cast<uint32_t>( nodes_.size() - 1 ); }

  bool evaluate_node( uint32_t idx, configuration const& x ) const
  {
    auto const& nd = nodes_[idx];
    switch ( nd.kind )
    {
    case op::variable: return x.get( nd.lhs );
    case op::constant: return nd.lhs != 0;
    case op::negation: return !evaluate_node( nd.lhs, x );
    case op::conjunction: return evaluate_node( nd.lhs, x ) && evaluate_node( nd.rhs, x );
    case op::disjunction: return evaluate_node( nd.lhs, x ) || evaluate_node( nd.rhs, x );
    default: return evaluate_node( nd.lhs, x ) != evaluate_node( nd.rhs, x );
    }
  }

  std::vector<node> nodes_;
  uint32_t root_{ 0 };
};

/*! \brief One parsed definition: either an expression or a raw table. */
struct network_definition
{
  uint32_t index;
  bool is_table;
  expression expr;
  truth_table table;
};

/*! \brief Parsed form of a `.bn` file. */
struct network_document
{
  uint32_t num_vars;
  std::vector<network_definition> definitions; /* in file order, one per variable */

  boolean_network to_network() const
  {
    std::vector<truth_table> locals( num_vars, truth_table( num_vars ) );
    for ( auto const& def : definitions )
    {
      if ( def.is_table )
      {
        locals[def.index - 1] = def.table;
      }
      else
      {
        locals[def.index - 1] = truth_table::from_function(
            num_vars, [&]( configuration const& x ) { return def.expr.evaluate( x ); } );
      }
    }
    return boolean_network( std::move( locals ) );
  }
};

namespace detail
{

class line_parser
{
public:
  line_parser( std::string_view text, uint32_t line_no )
      : text_( text ), line_( line_no )
  {
  }

  void skip_space()
  {
    while ( pos_ < text_.size() && ( text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ) )
    {
      ++pos_;
    }
  }

  bool at_end()
  {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_consume( char c )
  {
    if ( peek() == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect( char c, std::vector<std::string> expected )
  {
    if ( !try_consume( c ) )
    {
      fail( "unexpected input", std::move( expected ) );
    }
  }

  uint64_t parse_number()
  {
    skip_space();
    if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      fail( "unexpected input", { "integer" } );
    }
    uint64_t v = 0;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      v = v * 10 + ( text_[pos_] - '0' );
      if ( v > 10'000'000ull )
      {
        fail( "number too large" );
      }
      ++pos_;
    }
    return v;
  }

  std::string parse_hex_digits()
  {
    skip_space();
    std::string s;
    while ( pos_ < text_.size() && std::isxdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      s += text_[pos_++];
    }
    if ( s.empty() )
    {
      fail( "unexpected input", { "hex digits" } );
    }
    return s;
  }

  bool try_keyword( std::string_view kw )
  {
    skip_space();
    if ( text_.substr( pos_, kw.size() ) == kw )
    {
      size_t after = pos_ + kw.size();
      if ( after >= text_.size() || !std::isalnum( static_cast<unsigned char>( text_[after] ) ) )
      {
        pos_ = after;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail( std::string const& message, std::vector<std::string> expected = {} )
  {
    throw parse_error( line_, static_cast<uint32_t>( pos_ + 1 ), message, std::move( expected ) );
  }

  uint32_t column() const { return static_cast<uint32_t>( pos_ + 1 ); }
  uint32_t line_no() const { return line_; }

private:
  std::string_view text_;
  size_t pos_{ 0 };
  uint32_t line_;
};

/* precedence climbing: ! over & over ^ over |, left-associative */
inline uint32_t parse_disjunction( line_parser& lp, expression& e, uint32_t num_vars );

inline uint32_t parse_atom( line_parser& lp, expression& e, uint32_t num_vars )
{
  static std::vector<std::string> const expected{ "'!'", "'('", "'x<k>'", "'0'", "'1'" };
  char c = lp.peek();
  if ( c == '!' )
  {
    lp.try_consume( '!' );
    return e.add_negation( parse_atom( lp, e, num_vars ) );
  }
  if ( c == '(' )
  {
    lp.try_consume( '(' );
    uint32_t inner = parse_disjunction( lp, e, num_vars );
    lp.expect( ')', { "')'" } );
    return inner;
  }
  if ( c == '0' || c == '1' )
  {
    lp.try_consume( c );
    return e.add_leaf_constant( c == '1' );
  }
  if ( c == 'x' )
  {
    lp.try_consume( 'x' );
    uint32_t col = lp.column();
    uint64_t idx = lp.parse_number();
    if ( idx < 1 || idx > num_vars )
    {
      throw parse_error( lp.line_no(), col, "variable index x" + std::to_string( idx ) +
                                                " outside [x1, x" + std::to_string( num_vars ) + "]" );
    }
    return e.add_leaf_variable( static_cast<uint32_t>( idx ) );
  }
  lp.fail( "unexpected input", expected );
}

inline uint32_t parse_conjunction( line_parser& lp, expression& e, uint32_t num_vars )
{
  uint32_t lhs = parse_atom( lp, e, num_vars );
  while ( lp.try_consume( '&' ) )
  {
    lhs = e.add_binary( expression::op::conjunction, lhs, parse_atom( lp, e, num_vars ) );
  }
  return lhs;
}

inline uint32_t parse_exclusive_or( line_parser& lp, expression& e, uint32_t num_vars )
{
  uint32_t lhs = parse_conjunction( lp, e, num_vars );
  while ( lp.try_consume( '^' ) )
  {
    lhs = e.add_binary( expression::op::exclusive_or, lhs, parse_conjunction( lp, e, num_vars ) );
  }
  return lhs;
}

inline uint32_t parse_disjunction( line_parser& lp, expression& e, uint32_t num_vars )
{
  uint32_t lhs = parse_exclusive_or( lp, e, num_vars );
  while ( lp.try_consume( '|' ) )
  {
    lhs = e.add_binary( expression::op::disjunction, lhs, parse_exclusive_or( lp, e, num_vars ) );
  }
  return lhs;
}

inline truth_table parse_table_literal( line_parser& lp, uint32_t num_vars )
{
  uint32_t col = lp.column();
  std::string digits = lp.parse_hex_digits();
  uint64_t const bits = num_configurations( num_vars );
  uint64_t const max_digits = ( bits + 3 ) / 4;
  if ( digits.size() > max_digits )
  {
    throw parse_error( lp.line_no(), col,
                       "table literal wider than 2^n bits (" + std::to_string( max_digits ) +
                           " hex digits at most)" );
  }
  truth_table t( num_vars );
  for ( size_t d = 0; d < digits.size(); ++d )
  {
    char c = digits[digits.size() - 1 - d];
    uint32_t nibble = std::isdigit( static_cast<unsigned char>( c ) )
                          ? c - '0'
                          : 10 + ( std::tolower( c ) - 'a' );
    for ( uint32_t b = 0; b < 4; ++b )
    {
      if ( !( nibble & ( 1u << b ) ) )
      {
        continue;
      }
      uint64_t pos = 4 * d + b;
      if ( pos >= bits )
      {
        throw parse_error( lp.line_no(), col, "table literal wider than 2^n bits" );
      }
      t.set_bit( pos );
    }
  }
  return t;
}

} // namespace detail

/*! \brief Parses the `.bn` text format. */
inline network_document parse_network( std::string_view text )
{
  network_document doc{ 0, {} };
  bool have_header = false;
  std::vector<uint8_t> seen;

  uint32_t line_no = 0;
  size_t pos = 0;
  while ( pos <= text.size() )
  {
    size_t eol = text.find( '\n', pos );
    if ( eol == std::string_view::npos )
    {
      eol = text.size();
    }
    std::string_view raw = text.substr( pos, eol - pos );
    pos = eol + 1;
    ++line_no;

    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      raw = raw.substr( 0, hash );
    }
    detail::line_parser lp( raw, line_no );
    if ( lp.at_end() )
    {
      if ( pos > text.size() )
      {
        break;
      }
      continue;
    }

    if ( !have_header )
    {
      lp.expect( 'n', { "'n=<int>'" } );
      lp.expect( '=', { "'='" } );
      uint64_t n = lp.parse_number();
      if ( n < 1 || n > default_max_variables )
      {
        lp.fail( "variable count outside [1, " + std::to_string( default_max_variables ) + "]" );
      }
      if ( !lp.at_end() )
      {
        lp.fail( "trailing input after header" );
      }
      doc.num_vars = static_cast<uint32_t>( n );
      seen.assign( doc.num_vars + 1, 0 );
      have_header = true;
      continue;
    }

    lp.expect( 'f', { "'f<j> = <expr>'" } );
    uint32_t col = lp.column();
    uint64_t j = lp.parse_number();
    if ( j < 1 || j > doc.num_vars )
    {
      throw parse_error( line_no, col, "function index f" + std::to_string( j ) +
                                           " outside [f1, f" + std::to_string( doc.num_vars ) + "]" );
    }
    if ( seen[j] )
    {
      throw parse_error( line_no, col, "duplicate definition of f" + std::to_string( j ) );
    }
    seen[j] = 1;
    lp.expect( '=', { "'='" } );

    network_definition def;
    def.index = static_cast<uint32_t>( j );
    if ( lp.try_keyword( "table" ) )
    {
      def.is_table = true;
      def.table = detail::parse_table_literal( lp, doc.num_vars );
    }
    else
    {
      def.is_table = false;
      def.expr.set_root( detail::parse_disjunction( lp, def.expr, doc.num_vars ) );
    }
    if ( !lp.at_end() )
    {
      lp.fail( "trailing input after definition" );
    }
    doc.definitions.push_back( std::move( def ) );
  }

  if ( !have_header )
  {
    throw parse_error( 1, 1, "empty input", { "'n=<int>'" } );
  }
  for ( uint32_t j = 1; j <= doc.num_vars; ++j )
  {
    if ( !seen[j] )
    {
      throw parse_error( line_no, 1, "missing definition of f" + std::to_string( j ) );
    }
  }
  return doc;
}

/*! \brief Parses and materializes in one step. */
inline boolean_network read_network( std::string_view text )
{
  return parse_network( text ).to_network();
}

enum class serialize_mode : uint8_t
{
  table, /* bit-exact hex tables */
  expr   /* one disjunctive normal form per local function */
};

/*! \brief Writes a network back to `.bn` text.

  Table mode round-trips bit-exactly; expression mode emits a minterm
  DNF and round-trips semantically.
*/
inline std::string serialize_network( boolean_network const& f, serialize_mode mode )
{
  std::ostringstream out;
  uint32_t const n = f.num_vars();
  out << "n=" << n << "\n";
  for ( uint32_t j = 1; j <= n; ++j )
  {
    auto const& t = f.local( j );
    out << "f" << j << " = ";
    if ( mode == serialize_mode::table )
    {
      uint64_t const digits = ( t.num_bits() + 3 ) / 4;
      out << "table ";
      for ( uint64_t d = digits; d-- > 0; )
      {
        uint32_t nibble = 0;
        for ( uint32_t b = 0; b < 4; ++b )
        {
          uint64_t pos = 4 * d + b;
          if ( pos < t.num_bits() && t.get_bit( pos ) )
          {
            nibble |= 1u << b;
          }
        }
        out << "0123456789abcdef"[nibble];
      }
    }
    else
    {
      uint64_t const ones = t.count_ones();
      if ( ones == 0 )
      {
        out << "0";
      }
      else if ( ones == t.num_bits() )
      {
        out << "1";
      }
      else
      {
        bool first_term = true;
        for ( uint64_t w = 0; w < t.num_bits(); ++w )
        {
          if ( !t.get_bit( w ) )
          {
            continue;
          }
          if ( !first_term )
          {
            out << " | ";
          }
          first_term = false;
          for ( uint32_t i = 1; i <= n; ++i )
          {
            if ( i > 1 )
            {
              out << " & ";
            }
            if ( !( ( w >> ( i - 1 ) ) & 1 ) )
            {
              out << "!";
            }
            out << "x" << i;
          }
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

struct dot_options
{
  std::string graph_name{ "dynamics" };
};

/*! \brief DOT rendering of a dynamics; vertices are labeled x_1...x_n. */
inline std::string export_dot( functional_graph const& g, dot_options const& options = {} )
{
  uint32_t const n = g.num_vars();
  std::vector<std::string> labels( g.num_states() );
  for ( uint64_t w = 0; w < g.num_states(); ++w )
  {
    labels[w] = configuration( n, static_cast<uint32_t>( w ) ).to_string();
  }
  std::vector<uint32_t> order( g.num_states() );
  for ( uint32_t w = 0; w < g.num_states(); ++w )
  {
    order[w] = w;
  }
  std::sort( order.begin(), order.end(),
             [&]( uint32_t a, uint32_t b ) { return labels[a] < labels[b]; } );

  std::ostringstream out;
  out << "digraph \"" << options.graph_name << "\" {\n";
  out << "  node [shape=circle];\n";
  for ( auto w : order )
  {
    out << "  \"" << labels[w] << "\";\n";
  }
  for ( auto w : order )
  {
    out << "  \"" << labels[w] << "\" -> \"" << labels[g.successor( w )] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

/*! \brief DOT rendering of an interaction graph with sign labels. */
inline std::string export_dot( signed_digraph const& g, dot_options const& options = { "interaction" } )
{
  std::ostringstream out;
  out << "digraph \"" << options.graph_name << "\" {\n";
  out << "  node [shape=circle];\n";
  for ( uint32_t v = 1; v <= g.num_vertices(); ++v )
  {
    out << "  " << v << ";\n";
  }
  for ( uint32_t i = 1; i <= g.num_vertices(); ++i )
  {
    for ( uint32_t j = 1; j <= g.num_vertices(); ++j )
    {
      if ( !g.has_arc( i, j ) )
      {
        continue;
      }
      char const* label = g.sign( i, j ) == arc_sign::positive   ? "+"
                          : g.sign( i, j ) == arc_sign::negative ? "-"
                                                                 : "±";
      out << "  " << i << " -> " << j << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace hamnet
