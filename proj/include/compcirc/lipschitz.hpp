#pragma once

// Truth tables, exhaustive 1-Lipschitz checks and parity
// strictification.

#include "circuit.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace compcirc
{

/// Total function {0,1}^in_bits -> {0,1}^out_bits. Bit i of a row index is
/// input i; bit j of a row value is output j.
struct TruthTable
{
  std::size_t in_bits = 0;
  std::size_t out_bits = 0;
  std::vector<std::uint64_t> rows;

  static constexpr std::size_t max_in_bits = 16;
  static constexpr std::size_t max_out_bits = 63;

  TruthTable() = default;

  TruthTable( std::size_t in, std::size_t out, std::vector<std::uint64_t> values )
      : in_bits( in ), out_bits( out ), rows( std::move( values ) )
  {
    detail::require( in <= max_in_bits, ErrorKind::too_large, "truth tables are limited to 16 input bits" );
    detail::require( out <= max_out_bits, ErrorKind::too_large, "truth tables are limited to 63 output bits" );
    detail::require( rows.size() == ( std::size_t{ 1 } << in ), ErrorKind::bad_shape,
                     "truth table needs 2^in_bits rows" );
    const auto mask = out == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << out ) - 1;
    for ( auto r : rows )
    {
      detail::require( ( r & ~mask ) == 0, ErrorKind::bad_shape, "row value exceeds out_bits" );
    }
  }

  bool operator==( const TruthTable& ) const = default;
};

inline std::size_t hamming( std::uint64_t a, std::uint64_t b ) { return std::popcount( a ^ b ); }
inline Bit parity( std::uint64_t a ) { return std::popcount( a ) & 1u; }

/// Weak: neighbours map to outputs at distance <= 1. Strict: exactly 1.
inline bool is_one_lipschitz( const TruthTable& f, bool strict )
{
  detail::require( f.in_bits <= TruthTable::max_in_bits, ErrorKind::too_large, "truth table too large" );
  for ( std::size_t x = 0; x < f.rows.size(); ++x )
  {
    for ( std::size_t i = 0; i < f.in_bits; ++i )
    {
      const auto y = x ^ ( std::size_t{ 1 } << i );
      if ( y < x )
      {
        continue;
      }
      const auto d = hamming( f.rows[x], f.rows[y] );
      if ( d > 1 || ( strict && d != 1 ) )
      {
        return false;
      }
    }
  }
  return true;
}

/* g(X) = f(X) with one extra leading bit parity(X) xor parity(f(X)).
 *
 * The extra bit is the new most significant output bit. g preserves
 * parity and is strictly 1-Lipschitz whenever f is weakly 1-Lipschitz.
 */
inline TruthTable strictify( const TruthTable& f )
{
  detail::require( is_one_lipschitz( f, false ), ErrorKind::not_lipschitz, "function is not 1-Lipschitz" );
  std::vector<std::uint64_t> rows( f.rows.size() );
  for ( std::size_t x = 0; x < rows.size(); ++x )
  {
    const std::uint64_t lead = parity( x ) ^ parity( f.rows[x] );
    rows[x] = f.rows[x] | ( lead << f.out_bits );
  }
  return TruthTable( f.in_bits, f.out_bits + 1, std::move( rows ) );
}

/// Drops output bit `bit`, shifting the higher bits down.
inline TruthTable drop_output( const TruthTable& f, std::size_t bit )
{
  detail::require( bit < f.out_bits, ErrorKind::index_out_of_range, "output bit out of range" );
  std::vector<std::uint64_t> rows( f.rows.size() );
  const std::uint64_t low = ( std::uint64_t{ 1 } << bit ) - 1;
  for ( std::size_t x = 0; x < rows.size(); ++x )
  {
    rows[x] = ( f.rows[x] & low ) | ( ( f.rows[x] >> ( bit + 1 ) ) << bit );
  }
  return TruthTable( f.in_bits, f.out_bits - 1, std::move( rows ) );
}

/// Wire function of `c` on raw initial wire values (annotations ignored).
inline TruthTable circuit_function( const Circuit& c )
{
  const auto m = c.num_wires();
  detail::require( m <= TruthTable::max_in_bits, ErrorKind::too_large, "circuit has more than 16 wires" );
  std::vector<std::uint64_t> rows( std::size_t{ 1 } << m );
  std::vector<Bit> wires( m );
  for ( std::size_t x = 0; x < rows.size(); ++x )
  {
    for ( std::size_t w = 0; w < m; ++w )
    {
      wires[w] = ( x >> w ) & 1u;
    }
    const auto out = run_gates( c, wires, true );
    std::uint64_t v = 0;
    for ( std::size_t w = 0; w < m; ++w )
    {
      v |= std::uint64_t{ out[w] } << w;
    }
    rows[x] = v;
  }
  return TruthTable( m, m, std::move( rows ) );
}

/// Function of the annotated circuit: input variables -> wire outputs.
inline TruthTable annotated_function( const Circuit& c )
{
  const auto k = c.input_arity();
  detail::require( k <= TruthTable::max_in_bits, ErrorKind::too_large, "circuit has more than 16 inputs" );
  detail::require( c.num_wires() <= TruthTable::max_out_bits, ErrorKind::too_large, "too many wires" );
  std::vector<std::uint64_t> rows( std::size_t{ 1 } << k );
  std::vector<Bit> x( k );
  for ( std::size_t r = 0; r < rows.size(); ++r )
  {
    for ( std::size_t i = 0; i < k; ++i )
    {
      x[i] = ( r >> i ) & 1u;
    }
    const auto out = eval( c, x, { true, false } ).wire_outputs;
    std::uint64_t v = 0;
    for ( std::size_t w = 0; w < out.size(); ++w )
    {
      v |= std::uint64_t{ out[w] } << w;
    }
    rows[r] = v;
  }
  return TruthTable( k, c.num_wires(), std::move( rows ) );
}

} // namespace compcirc
