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
  \file properties.hpp
  \brief Decision procedures for the function classes: balanced, unate
         and monotone, self-dual in an index set, threshold (with exact
         rational certificates) and assumability.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "interaction.hpp"

namespace hamnet
{

/* ------------------------------------------------------------------ */
/* balanced                                                            */
/* ------------------------------------------------------------------ */

/*! \brief True iff every local function has exactly 2^(n-1) true points. */
inline bool is_balanced( boolean_network const& f )
{
  for ( uint32_t j = 1; j <= f.num_vars(); ++j )
  {
    if ( f.local( j ).count_ones() != num_configurations( f.num_vars() ) / 2 )
    {
      return false;
    }
  }
  return true;
}

/* ------------------------------------------------------------------ */
/* unate / monotone                                                    */
/* ------------------------------------------------------------------ */

struct unate_report
{
  enum class status_kind : uint8_t
  {
    monotone,
    unate,
    not_unate
  };

  /*! \brief Two configurations exhibiting opposite monotonicity of f_j
             in variable i; both have x_i = 0. */
  struct mixed_witness
  {
    uint32_t function_index;
    uint32_t variable;
    configuration increasing_at; /* f_j here < f_j with the bit set */
    configuration decreasing_at; /* f_j here > f_j with the bit set */
  };

  status_kind status;
  signed_digraph signs; /* the interaction graph; meaningful when unate */
  std::optional<mixed_witness> witness;
};

inline char const* to_string( unate_report::status_kind s )
{
  switch ( s )
  {
  case unate_report::status_kind::monotone: return "monotone";
  case unate_report::status_kind::unate: return "unate";
  default: return "not-unate";
  }
}

/*! \brief Classifies the network as monotone, unate or neither.

  On a mixed arc the report carries the first witnessing pair of
  configurations in word order.
*/
inline unate_report unate_analysis( boolean_network const& f )
{
  unate_report rep{ unate_report::status_kind::monotone, interaction_graph( f ), std::nullopt };
  for ( uint32_t i = 1; i <= f.num_vars() && !rep.witness; ++i )
  {
    for ( uint32_t j = 1; j <= f.num_vars() && !rep.witness; ++j )
    {
      if ( !rep.signs.has_arc( i, j ) )
      {
        continue;
      }
      if ( rep.signs.sign( i, j ) == arc_sign::negative )
      {
        if ( rep.status == unate_report::status_kind::monotone )
        {
          rep.status = unate_report::status_kind::unate;
        }
      }
      else if ( rep.signs.sign( i, j ) == arc_sign::mixed )
      {
        rep.status = unate_report::status_kind::not_unate;
        uint64_t const step = uint64_t( 1 ) << ( i - 1 );
        std::optional<configuration> up, down;
        auto const& t = f.local( j );
        for ( uint64_t x = 0; x < t.num_bits() && !( up && down ); ++x )
        {
          if ( x & step )
          {
            continue;
          }
          bool const lo = t.get_bit( x ), hi = t.get_bit( x | step );
          if ( !lo && hi && !up )
          {
            up = configuration( f.num_vars(), static_cast<uint32_t>( x ) );
          }
          if ( lo && !hi && !down )
          {
            down = configuration( f.num_vars(), static_cast<uint32_t>( x ) );
          }
        }
        rep.witness = unate_report::mixed_witness{ j, i, *up, *down };
      }
    }
  }
  return rep;
}

/* ------------------------------------------------------------------ */
/* self-duality                                                        */
/* ------------------------------------------------------------------ */

/*! \brief First configuration violating f(x) = negate_on(f(negate_on(x, I)), I),
           or nothing when f is self-dual in I. */
inline std::optional<configuration> self_dual_counterexample( boolean_network const& f,
                                                              index_set const& is )
{
  if ( is.num_vars() != f.num_vars() )
  {
    throw std::invalid_argument( "index set dimension does not match network" );
  }
  if ( is.is_empty() )
  {
    throw std::invalid_argument( "self-duality requires a non-empty index set" );
  }
  for ( uint64_t w = 0; w < num_configurations( f.num_vars() ); ++w )
  {
    configuration x( f.num_vars(), static_cast<uint32_t>( w ) );
    auto lhs = evaluate( f, x );
    auto rhs = negate_on( evaluate( f, negate_on( x, is ) ), is );
    if ( !( lhs == rhs ) )
    {
      return x;
    }
  }
  return std::nullopt;
}

inline bool is_self_dual( boolean_network const& f, index_set const& is )
{
  return !self_dual_counterexample( f, is ).has_value();
}

/* ------------------------------------------------------------------ */
/* exact rationals                                                     */
/* ------------------------------------------------------------------ */

/*! \brief Exact fraction on 128-bit integers.

  Tableau entries of the feasibility solver are ratios of minors of a
  0/1 constraint matrix with at most thirteen columns, far inside the
  128-bit range; overflow nevertheless raises instead of wrapping.
*/
class rational
{
public:
  rational() = default;
  rational( long long value ) : num_( value ), den_( 1 ) {}
  rational( long long num, long long den ) : num_( num ), den_( den )
  {
    if ( den == 0 )
    {
      throw std::invalid_argument( "zero denominator" );
    }
    reduce();
  }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  rational operator-() const { return rational( -num_, den_, already_reduced{} ); }

  rational operator+( rational const& o ) const
  {
    return rational( checked_add( checked_mul( num_, o.den_ ), checked_mul( o.num_, den_ ) ),
                     checked_mul( den_, o.den_ ), needs_reduce{} );
  }

  rational operator-( rational const& o ) const { return *this + ( -o ); }

  rational operator*( rational const& o ) const
  {
    return rational( checked_mul( num_, o.num_ ), checked_mul( den_, o.den_ ), needs_reduce{} );
  }

  rational operator/( rational const& o ) const
  {
    if ( o.num_ == 0 )
    {
      throw std::invalid_argument( "division by zero" );
    }
    return rational( checked_mul( num_, o.den_ ), checked_mul( den_, o.num_ ), needs_reduce{} );
  }

  bool operator==( rational const& o ) const { return num_ == o.num_ && den_ == o.den_; }

  bool operator<( rational const& o ) const
  {
    return checked_mul( num_, o.den_ ) < checked_mul( o.num_, den_ );
  }

  bool operator<=( rational const& o ) const { return *this == o || *this < o; }

  long long numerator() const
  {
    return static_cast<long long>( num_ );
  }

  long long denominator() const
  {
    return static_cast<long long>( den_ );
  }

  std::string to_string() const
  {
    std::string s = int128_to_string( num_ );
    if ( den_ != 1 )
    {
      s += "/" + int128_to_string( den_ );
    }
    return s;
  }

private:
  struct already_reduced
  {
  };
  struct needs_reduce
  {
  };

  rational( __int128 num, __int128 den, already_reduced ) : num_( num ), den_( den ) {}

  rational( __int128 num, __int128 den, needs_reduce ) : num_( num ), den_( den )
  {
    reduce();
  }

  static __int128 checked_mul( __int128 a, __int128 b )
  {
    __int128 out;
    if ( __builtin_mul_overflow( a, b, &out ) )
    {
      throw std::overflow_error( "rational overflow" );
    }
    return out;
  }

  static __int128 checked_add( __int128 a, __int128 b )
  {
    __int128 out;
    if ( __builtin_add_overflow( a, b, &out ) )
    {
      throw std::overflow_error( "rational overflow" );
    }
    return out;
  }

  static std::string int128_to_string( __int128 v )
  {
    if ( v == 0 )
    {
      return "0";
    }
    bool const neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>( v ) : v;
    std::string s;
    while ( u )
    {
      s += char( '0' + int( u % 10 ) );
      u /= 10;
    }
    if ( neg )
    {
      s += '-';
    }
    std::reverse( s.begin(), s.end() );
    return s;
  }

  void reduce()
  {
    if ( den_ < 0 )
    {
      num_ = -num_;
      den_ = -den_;
    }
    __int128 a = num_ < 0 ? -num_ : num_, b = den_;
    while ( b )
    {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if ( a > 1 )
    {
      num_ /= a;
      den_ /= a;
    }
    if ( num_ == 0 )
    {
      den_ = 1;
    }
  }

  __int128 num_{ 0 };
  __int128 den_{ 1 };
};

/* ------------------------------------------------------------------ */
/* threshold feasibility                                               */
/* ------------------------------------------------------------------ */

struct threshold_certificate
{
  bool feasible{ false };
  std::vector<rational> weights; /* a_1 .. a_n, present iff feasible */
  rational threshold;            /* b */
};

/*! \brief Exact check of a certificate by direct substitution:
           every true point reaches b, every false point stays at b - 1. */
inline bool verify_threshold_certificate( truth_table const& t, threshold_certificate const& cert )
{
  if ( !cert.feasible || cert.weights.size() != t.num_vars() )
  {
    return false;
  }
  for ( uint64_t w = 0; w < t.num_bits(); ++w )
  {
    rational dot;
    for ( uint32_t i = 0; i < t.num_vars(); ++i )
    {
      if ( ( w >> i ) & 1 )
      {
        dot = dot + cert.weights[i];
      }
    }
    if ( t.get_bit( w ) )
    {
      if ( dot < cert.threshold )
      {
        return false;
      }
    }
    else if ( !( dot <= cert.threshold - rational( 1 ) ) )
    {
      return false;
    }
  }
  return true;
}

namespace detail
{

/*! \brief Feasibility of A x >= c in d unknowns by simplex on the Farkas
           dual: max c.y subject to A^T y = 0, y >= 0.

  The dual is bounded at zero exactly when the primal system is
  feasible; on optimality the simplex multipliers are a primal point.
  Bland's rule guards the fully degenerate pivots (the right-hand side
  is identically zero).  Returns the primal solution or nothing.
*/
inline std::optional<std::vector<rational>>
feasible_point( std::vector<std::vector<int>> const& rows, std::vector<int> const& rhs )
{
  size_t const m = rows.size();
  size_t const d = rows.front().size();

  /* initial basis: prefer unit-like columns, complete greedily to any
   * nonsingular set via exact elimination */
  std::vector<size_t> basis;
  std::vector<std::vector<rational>> binv( d, std::vector<rational>( d ) ); /* B^{-1} */
  {
    /* gather candidate columns in Bland order and run Gauss-Jordan on
     * [columns | I], keeping the first d independent ones */
    std::vector<std::vector<rational>> inv( d, std::vector<rational>( d ) );
    for ( size_t r = 0; r < d; ++r )
    {
      inv[r][r] = rational( 1 );
    }
    size_t have = 0;
    for ( size_t j = 0; j < m && have < d; ++j )
    {
      /* candidate column = rows[j] reduced by current eliminations */
      std::vector<rational> col( d );
      for ( size_t r = 0; r < d; ++r )
      {
        rational acc;
        for ( size_t s = 0; s < d; ++s )
        {
          if ( rows[j][s] != 0 )
          {
            acc = acc + inv[r][s] * rational( rows[j][s] );
          }
        }
        col[r] = acc;
      }
      /* pivot on the first nonzero entry in a fresh row */
      size_t pivot_row = d;
      for ( size_t r = have; r < d; ++r )
      {
        if ( !col[r].is_zero() )
        {
          pivot_row = r;
          break;
        }
      }
      if ( pivot_row == d )
      {
        continue; /* dependent on chosen ones */
      }
      std::swap( inv[pivot_row], inv[have] );
      std::swap( col[pivot_row], col[have] );
      rational const p = col[have];
      for ( size_t s = 0; s < d; ++s )
      {
        inv[have][s] = inv[have][s] / p;
      }
      for ( size_t r = 0; r < d; ++r )
      {
        if ( r != have && !col[r].is_zero() )
        {
          for ( size_t s = 0; s < d; ++s )
          {
            inv[r][s] = inv[r][s] - col[r] * inv[have][s];
          }
        }
      }
      basis.push_back( j );
      ++have;
    }
    if ( have < d )
    {
      /* the column space is degenerate; pad with virtual zero columns is
       * unnecessary: a rank-deficient system still admits the multiplier
       * construction on the reduced space, so solve on the independent
       * subset by dropping unreachable coordinates.  In practice the
       * nonnegativity rows make A full rank. */
      throw std::logic_error( "constraint matrix unexpectedly rank-deficient" );
    }
    binv = std::move( inv );
  }

  /* the tableau column B^{-1} a_j is recomputed on demand */
  auto column = [&]( size_t j ) {
    std::vector<rational> col( d );
    for ( size_t r = 0; r < d; ++r )
    {
      rational acc;
      for ( size_t s = 0; s < d; ++s )
      {
        if ( rows[j][s] != 0 )
        {
          acc = acc + binv[r][s] * rational( rows[j][s] );
        }
      }
      col[r] = acc;
    }
    return col;
  };

  uint64_t const pivot_limit = 200000 + 400ull * m * d;
  uint64_t pivots = 0;
  while ( true )
  {
    /* multipliers pi: solves B^T pi = c_B, i.e. pi = c_B^T B^{-1} */
    std::vector<rational> pi( d );
    for ( size_t s = 0; s < d; ++s )
    {
      rational acc;
      for ( size_t r = 0; r < d; ++r )
      {
        int const cb = rhs[basis[r]];
        if ( cb != 0 )
        {
          acc = acc + rational( cb ) * binv[r][s];
        }
      }
      pi[s] = acc;
    }

    /* Bland entering: smallest j with positive reduced cost c_j - pi.a_j */
    size_t entering = m;
    for ( size_t j = 0; j < m; ++j )
    {
      rational dot;
      for ( size_t s = 0; s < d; ++s )
      {
        if ( rows[j][s] != 0 )
        {
          dot = dot + pi[s] * rational( rows[j][s] );
        }
      }
      if ( rational( 0 ) < rational( rhs[j] ) - dot )
      {
        entering = j;
        break;
      }
    }
    if ( entering == m )
    {
      /* optimum zero: the multipliers satisfy every primal constraint */
      return pi;
    }

    auto col = column( entering );
    /* Bland leaving: all ratios are zero; choose the positive-entry row
     * whose basic column index is smallest */
    size_t leaving = d;
    for ( size_t r = 0; r < d; ++r )
    {
      if ( col[r].is_positive() && ( leaving == d || basis[r] < basis[leaving] ) )
      {
        leaving = r;
      }
    }
    if ( leaving == d )
    {
      /* dual unbounded: Farkas certificate of primal infeasibility */
      return std::nullopt;
    }

    /* pivot: update B^{-1} */
    rational const p = col[leaving];
    for ( size_t s = 0; s < d; ++s )
    {
      binv[leaving][s] = binv[leaving][s] / p;
    }
    for ( size_t r = 0; r < d; ++r )
    {
      if ( r != leaving && !col[r].is_zero() )
      {
        for ( size_t s = 0; s < d; ++s )
        {
          binv[r][s] = binv[r][s] - col[r] * binv[leaving][s];
        }
      }
    }
    basis[leaving] = entering;

    if ( ++pivots > pivot_limit )
    {
      throw std::logic_error( "feasibility solver exceeded its pivot budget" );
    }
  }
}

} // namespace detail

/*! \brief Exact threshold (linear separability) decision.

  Threshold functions are unate, so non-unate tables are rejected
  outright.  Otherwise decreasing variables are flipped, the monotone
  instance is reduced to its minimal true and maximal false points, and
  exact rational feasibility of

      a.x >= b on true points,  a.x <= b - 1 on false points

  is decided with nonnegative oriented weights (margin one is without
  loss of generality by scaling).  Feasible answers carry weights that
  verify by direct substitution.
*/
inline threshold_certificate threshold_feasibility( truth_table const& t )
{
  uint32_t const n = t.num_vars();
  if ( n > 12 )
  {
    throw std::invalid_argument( "threshold decision capped at twelve variables" );
  }

  uint64_t const ones = t.count_ones();
  if ( ones == 0 )
  {
    return { true, std::vector<rational>( n, rational( 0 ) ), rational( 1 ) };
  }
  if ( ones == t.num_bits() )
  {
    return { true, std::vector<rational>( n, rational( 0 ) ), rational( 0 ) };
  }

  /* orientation: flip strictly decreasing variables; mixed kills it */
  std::vector<bool> flip( n, false );
  uint32_t flip_mask = 0;
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
    }
    if ( increasing && decreasing )
    {
      return { false, {}, rational( 0 ) };
    }
    if ( decreasing )
    {
      flip[i - 1] = true;
      flip_mask |= uint32_t( 1 ) << ( i - 1 );
    }
  }

  /* monotone instance: minimal true points and maximal false points */
  std::vector<uint32_t> true_pts, false_pts;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    uint32_t const y = static_cast<uint32_t>( x ) ^ flip_mask;
    ( t.get_bit( x ) ? true_pts : false_pts ).push_back( y );
  }
  auto antichain = [&]( std::vector<uint32_t>& pts, bool minimal ) {
    std::vector<uint32_t> keep;
    for ( auto a : pts )
    {
      bool dominated = false;
      for ( auto b : pts )
      {
        if ( a != b && ( minimal ? ( ( a & b ) == b ) : ( ( a & b ) == a ) ) )
        {
          dominated = true;
          break;
        }
      }
      if ( !dominated )
      {
        keep.push_back( a );
      }
    }
    pts = std::move( keep );
  };
  antichain( true_pts, true );
  antichain( false_pts, false );

  /* rows of A x >= c over x = (w_1..w_n, B) */
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs;
  for ( uint32_t i = 0; i < n; ++i )
  {
    std::vector<int> row( n + 1, 0 );
    row[i] = 1;
    rows.push_back( std::move( row ) );
    rhs.push_back( 0 );
  }
  for ( auto y : true_pts )
  {
    std::vector<int> row( n + 1, 0 );
    for ( uint32_t i = 0; i < n; ++i )
    {
      row[i] = ( y >> i ) & 1 ? 1 : 0;
    }
    row[n] = -1;
    rows.push_back( std::move( row ) );
    rhs.push_back( 0 );
  }
  for ( auto y : false_pts )
  {
    std::vector<int> row( n + 1, 0 );
    for ( uint32_t i = 0; i < n; ++i )
    {
      row[i] = ( y >> i ) & 1 ? -1 : 0;
    }
    row[n] = 1;
    rows.push_back( std::move( row ) );
    rhs.push_back( 1 );
  }

  auto point = detail::feasible_point( rows, rhs );
  if ( !point )
  {
    return { false, {}, rational( 0 ) };
  }

  /* un-orient: flipped variables carry negated weight, the threshold
   * drops by their total */
  threshold_certificate cert;
  cert.feasible = true;
  cert.weights.resize( n );
  rational correction;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( flip[i] )
    {
      cert.weights[i] = -( *point )[i];
      correction = correction + ( *point )[i];
    }
    else
    {
      cert.weights[i] = ( *point )[i];
    }
  }
  cert.threshold = ( *point )[n] - correction;

  if ( !verify_threshold_certificate( t, cert ) )
  {
    throw std::logic_error( "threshold certificate failed substitution" );
  }
  return cert;
}

/* ------------------------------------------------------------------ */
/* assumability                                                        */
/* ------------------------------------------------------------------ */

/*! \brief Equal-length point lists from T and F with equal component sums. */
struct assumability_witness
{
  std::vector<configuration> true_points;
  std::vector<configuration> false_points;
};

/*! \brief Exhaustive search for an assumability violation with k <= k_max.

  Multisets of true points are indexed by their component sum; false
  multisets are scanned in lexicographic order, so the first violation
  found is deterministic.  Thresholdness implies no violation exists for
  any k.
*/
inline std::optional<assumability_witness> assumability_violation( truth_table const& t,
                                                                   uint32_t k_max = 3 )
{
  if ( k_max < 2 )
  {
    throw std::invalid_argument( "assumability search needs k_max >= 2" );
  }
  uint32_t const n = t.num_vars();
  std::vector<uint32_t> true_pts, false_pts;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    ( t.get_bit( x ) ? true_pts : false_pts ).push_back( static_cast<uint32_t>( x ) );
  }
  if ( true_pts.empty() || false_pts.empty() )
  {
    return std::nullopt;
  }

  auto sum_key = [&]( std::vector<uint32_t> const& pick ) {
    std::string key( n, '\0' );
    for ( auto w : pick )
    {
      for ( uint32_t i = 0; i < n; ++i )
      {
        key[i] += char( ( w >> i ) & 1 );
      }
    }
    return key;
  };

  for ( uint32_t k = 2; k <= k_max; ++k )
  {
    /* non-decreasing index tuples enumerate multisets */
    std::map<std::string, std::vector<uint32_t>> true_sums;
    std::vector<uint32_t> pick( k, 0 );
    auto enumerate = [&]( std::vector<uint32_t> const& pts, auto&& visit ) {
      std::vector<uint32_t> idx( k, 0 );
      while ( true )
      {
        for ( uint32_t s = 0; s < k; ++s )
        {
          pick[s] = pts[idx[s]];
        }
        if ( visit() )
        {
          return true;
        }
        uint32_t pos = k;
        while ( pos-- > 0 )
        {
          if ( ++idx[pos] < pts.size() )
          {
            for ( uint32_t s = pos + 1; s < k; ++s )
            {
              idx[s] = idx[pos];
            }
            break;
          }
          if ( pos == 0 )
          {
            return false;
          }
        }
      }
    };

    enumerate( true_pts, [&]() {
      true_sums.emplace( sum_key( pick ), pick );
      return false;
    } );

    std::optional<assumability_witness> found;
    enumerate( false_pts, [&]() {
      auto it = true_sums.find( sum_key( pick ) );
      if ( it == true_sums.end() )
      {
        return false;
      }
      assumability_witness w;
      for ( auto v : it->second )
      {
        w.true_points.emplace_back( n, v );
      }
      for ( auto v : pick )
      {
        w.false_points.emplace_back( n, v );
      }
      found = std::move( w );
      return true;
    } );
    if ( found )
    {
      return found;
    }
  }
  return std::nullopt;
}

} // namespace hamnet
