#pragma once

// The universal circuit UNIV(m,n) and the control-bit encoding of a
// concrete circuit into it.

#include "circuit.hpp"

#include <utility>
#include <vector>

namespace compcirc
{

/// One bit per (slot, ordered wire pair); slot-major, pairs lexicographic.
struct ControlEncoding
{
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Bit> bits;

  bool operator==( const ControlEncoding& ) const = default;
};

/// Ordered pairs (i,j), i != j, in lexicographic order: the pair order of a slot.
inline std::vector<std::pair<std::size_t, std::size_t>> universal_pairs( std::size_t m )
{
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve( m * ( m - 1 ) );
  for ( std::size_t i = 0; i < m; ++i )
  {
    for ( std::size_t j = 0; j < m; ++j )
    {
      if ( i != j )
      {
        pairs.emplace_back( i, j );
      }
    }
  }
  return pairs;
}

inline std::size_t universal_control_bits( std::size_t m, std::size_t n ) { return m * ( m - 1 ) * n; }

/* Builds UNIV(m,n).
 *
 * Input variables 0..K-1 are the control bits (K = m(m-1)n), variables
 * K..K+m-1 the data. Wires 0..m-1 carry the data; each control bit c owns a
 * wire pair (b, !b) annotated x_c and !x_c. The conditional gadget for the
 * pair (i,j) applies a comparator with the disjunction on j when b = 1 and
 * leaves the data alone when b = 0. The designated output is data wire 0.
 */
inline Circuit build_universal( std::size_t m, std::size_t n )
{
  detail::require( m >= 2, ErrorKind::bad_shape, "universal circuit needs m >= 2" );
  const auto pairs = universal_pairs( m );
  const auto controls = universal_control_bits( m, n );

  Circuit c( m );
  for ( std::size_t d = 0; d < m; ++d )
  {
    c.set_annotation( d, Annotation::input( controls + d ) );
  }
  for ( std::size_t bit = 0; bit < controls; ++bit )
  {
    const auto b = c.add_wire( Annotation::input( bit ) );
    const auto nb = c.add_wire( Annotation::neg_input( bit ) );
    const auto [i, j] = pairs[bit % pairs.size()];
    c.add_comparator( b, i );
    c.add_comparator( b, j );
    c.add_comparator( i, nb );
    c.add_comparator( b, i );
  }
  c.set_output( 0 );
  return c;
}

/// Wire of the `b` line for control bit `bit` in build_universal(m, n).
inline std::size_t universal_control_wire( std::size_t m, std::size_t bit ) { return m + 2 * bit; }

/// Control bits of `c`: slot t has a one at pair (min, max) of gate t.
inline ControlEncoding encode_control( const Circuit& c, std::size_t m, std::size_t n )
{
  detail::require( m >= 2, ErrorKind::bad_shape, "universal circuit needs m >= 2" );
  detail::require_no_negations( c );
  detail::require( c.num_wires() <= m, ErrorKind::too_many_wires,
                   std::to_string( c.num_wires() ) + " wires exceed m = " + std::to_string( m ) );
  detail::require( c.gates().size() <= n, ErrorKind::too_many_gates,
                   std::to_string( c.gates().size() ) + " gates exceed n = " + std::to_string( n ) );

  const auto per_slot = m * ( m - 1 );
  ControlEncoding enc{ m, n, std::vector<Bit>( per_slot * n, 0 ) };
  for ( std::size_t t = 0; t < c.gates().size(); ++t )
  {
    const auto& g = c.gates()[t];
    if ( g.is_dummy() )
    {
      continue;
    }
    // index of (i,j) among ordered pairs: skip the diagonal entry of row i
    const auto i = g.min_wire;
    const auto j = g.max_wire;
    const auto pair_index = i * ( m - 1 ) + ( j < i ? j : j - 1 );
    enc.bits[t * per_slot + pair_index] = 1;
  }
  return enc;
}

/// Inverse of encode_control on one-hot encodings (m wires, n gates, dummies on wire 0).
inline Circuit decode_control( const ControlEncoding& enc )
{
  const auto pairs = universal_pairs( enc.m );
  const auto per_slot = pairs.size();
  detail::require( enc.bits.size() == per_slot * enc.n, ErrorKind::bad_shape, "control vector length mismatch" );
  Circuit c( enc.m );
  for ( std::size_t t = 0; t < enc.n; ++t )
  {
    std::size_t ones = 0;
    Gate g = Gate::dummy( 0 );
    for ( std::size_t k = 0; k < per_slot; ++k )
    {
      if ( enc.bits[t * per_slot + k] )
      {
        ++ones;
        g = Gate::comparator( pairs[k].first, pairs[k].second );
      }
    }
    detail::require( ones <= 1, ErrorKind::bad_shape, "control slot " + std::to_string( t ) + " is not one-hot" );
    c.add_gate( g );
  }
  return c;
}

/// Full input vector for UNIV: control bits followed by the data.
inline std::vector<Bit> universal_input( const ControlEncoding& enc, std::span<const Bit> data )
{
  detail::require( data.size() == enc.m, ErrorKind::input_arity, "universal data vector must have m bits" );
  std::vector<Bit> x( enc.bits );
  x.insert( x.end(), data.begin(), data.end() );
  return x;
}

} // namespace compcirc
