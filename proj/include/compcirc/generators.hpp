#pragma once

// Seeded random instances for every problem family.
//
// Each generator draws only from the `Rng` it is handed, so an instance is a
// pure function of the generator state. The seed overloads build that state
// with `Rng(seed)`.

#include "circuit.hpp"
#include "matching.hpp"
#include "reachability.hpp"
#include "rng.hpp"
#include "stable_marriage.hpp"

#include <numeric>
#include <vector>

namespace compcirc
{

enum class AnnotationMode : std::uint8_t
{
  /// Random constant bits.
  constants,
  /// Random mix of constants, x_i and !x_i over `inputs` variables.
  mixed,
  /// Wire w is labelled x_w.
  identity
};

struct CircuitParams
{
  std::size_t m_min = 1;
  std::size_t m_max = 6;
  std::size_t g_max = 12;
  bool with_neg = false;
  AnnotationMode annotations = AnnotationMode::identity;
  /// Variable count for `mixed`; 0 means "same as the wire count".
  std::size_t inputs = 0;
  std::uint64_t dummy_permille = 50;
  std::uint64_t neg_permille = 150;
};

inline Circuit gen_circuit( Rng& rng, const CircuitParams& p )
{
  detail::require( p.m_min >= 1 && p.m_min <= p.m_max, ErrorKind::bad_shape, "wire bounds must satisfy 1 <= min <= max" );
  detail::require( p.dummy_permille <= 1000 && p.neg_permille <= 1000, ErrorKind::bad_shape,
                   "probabilities are given in permille" );
  const auto m = static_cast<std::size_t>( rng.between( p.m_min, p.m_max ) );
  Circuit c( m );
  const auto k = p.inputs == 0 ? m : p.inputs;
  for ( std::size_t w = 0; w < m; ++w )
  {
    switch ( p.annotations )
    {
    case AnnotationMode::constants: c.set_annotation( w, Annotation::constant( rng.below( 2 ) ) ); break;
    case AnnotationMode::identity: c.set_annotation( w, Annotation::input( w ) ); break;
    case AnnotationMode::mixed:
      switch ( rng.below( 3 ) )
      {
      case 0: c.set_annotation( w, Annotation::constant( rng.below( 2 ) ) ); break;
      case 1: c.set_annotation( w, Annotation::input( rng.below( k ) ) ); break;
      default: c.set_annotation( w, Annotation::neg_input( rng.below( k ) ) ); break;
      }
      break;
    }
  }
  const auto gates = rng.below( p.g_max + 1 );
  for ( std::uint64_t i = 0; i < gates; ++i )
  {
    if ( p.with_neg && rng.chance( p.neg_permille ) )
    {
      c.add_negation( rng.below( m ) );
    }
    else if ( m == 1 || rng.chance( p.dummy_permille ) )
    {
      c.add_gate( Gate::dummy( rng.below( m ) ) );
    }
    else
    {
      const auto a = rng.below( m );
      auto b = rng.below( m - 1 );
      b += b >= a ? 1 : 0;
      c.add_comparator( a, b );
    }
  }
  c.set_output( rng.below( m ) );
  return c;
}

inline Circuit gen_circuit( std::uint64_t seed, std::size_t m_max, std::size_t g_max, bool with_neg )
{
  Rng rng( seed );
  CircuitParams p;
  p.m_max = m_max;
  p.g_max = g_max;
  p.with_neg = with_neg;
  return gen_circuit( rng, p );
}

/// Uniform bits of length `k`.
inline std::vector<Bit> gen_bits( Rng& rng, std::size_t k )
{
  std::vector<Bit> x( k );
  for ( auto& b : x )
  {
    b = static_cast<Bit>( rng.below( 2 ) );
  }
  return x;
}

inline std::vector<Tri> gen_tris( Rng& rng, std::size_t k )
{
  std::vector<Tri> x( k );
  for ( auto& v : x )
  {
    v = static_cast<Tri>( rng.below( 3 ) );
  }
  return x;
}

/// Vertex counts uniform in [0, max]; each edge present with `density_permille`.
inline BipartiteGraph gen_bipartite( Rng& rng, std::size_t b_max, std::size_t t_max, std::uint64_t density_permille )
{
  detail::require( density_permille <= 1000, ErrorKind::bad_shape, "density is given in permille" );
  const auto nb = rng.below( b_max + 1 );
  const auto nt = rng.below( t_max + 1 );
  BipartiteGraph g( nb, nt );
  for ( std::size_t b = 0; b < nb; ++b )
  {
    for ( std::size_t t = 0; t < nt; ++t )
    {
      if ( rng.chance( density_permille ) )
      {
        g.add_edge( b, t );
      }
    }
  }
  return g;
}

inline BipartiteGraph gen_bipartite( std::uint64_t seed, std::size_t b_max, std::size_t t_max,
                                     std::uint64_t density_permille )
{
  Rng rng( seed );
  return gen_bipartite( rng, b_max, t_max, density_permille );
}

/// Square graph with n in [1, n_max] where every vertex has degree <= `degree`.
inline BipartiteGraph gen_bounded_bipartite( Rng& rng, std::size_t n_max, std::size_t degree )
{
  detail::require( n_max >= 1, ErrorKind::bad_shape, "need at least one vertex per side" );
  const auto n = static_cast<std::size_t>( rng.between( 1, n_max ) );
  BipartiteGraph g( n, n );
  std::vector<std::size_t> top_degree( n, 0 );
  for ( std::size_t b = 0; b < n; ++b )
  {
    const auto attempts = rng.below( degree + 1 );
    for ( std::uint64_t i = 0; i < attempts; ++i )
    {
      const auto t = rng.below( n );
      if ( top_degree[t] < degree && !g.has_edge( b, t ) )
      {
        g.add_edge( b, t );
        ++top_degree[t];
      }
    }
  }
  return g;
}

inline std::vector<std::size_t> gen_permutation( Rng& rng, std::size_t n )
{
  std::vector<std::size_t> p( n );
  std::iota( p.begin(), p.end(), std::size_t{ 0 } );
  for ( std::size_t i = n; i > 1; --i )
  {
    std::swap( p[i - 1], p[rng.below( i )] );
  }
  return p;
}

/// Every preference row is an independent uniform permutation.
inline SMInstance gen_sm( Rng& rng, std::size_t n )
{
  detail::require( n >= 1, ErrorKind::bad_shape, "an instance needs at least one couple" );
  std::vector<std::vector<std::size_t>> men( n ), women( n );
  for ( auto& row : men )
  {
    row = gen_permutation( rng, n );
  }
  for ( auto& row : women )
  {
    row = gen_permutation( rng, n );
  }
  return SMInstance( std::move( men ), std::move( women ) );
}

inline SMInstance gen_sm( std::uint64_t seed, std::size_t n )
{
  Rng rng( seed );
  return gen_sm( rng, n );
}

/// n in [1, n_max]; every ordered pair u != v is an arc with `density_permille`.
inline Digraph gen_digraph( Rng& rng, std::size_t n_max, std::uint64_t density_permille, bool forward_only = false )
{
  detail::require( n_max >= 1, ErrorKind::bad_shape, "need at least one node" );
  detail::require( density_permille <= 1000, ErrorKind::bad_shape, "density is given in permille" );
  const auto n = static_cast<std::size_t>( rng.between( 1, n_max ) );
  Digraph g( n );
  for ( std::size_t u = 0; u < n; ++u )
  {
    for ( std::size_t v = forward_only ? u + 1 : 0; v < n; ++v )
    {
      if ( u != v && rng.chance( density_permille ) )
      {
        g.add_arc( u, v );
      }
    }
  }
  return g;
}

inline Digraph gen_digraph( std::uint64_t seed, std::size_t n_max, std::uint64_t density_permille )
{
  Rng rng( seed );
  return gen_digraph( rng, n_max, density_permille );
}

} // namespace compcirc
