#pragma once

// Directed graphs, time-expanded layering and the pebbling circuit
// that decides reachability from node 0.

#include "circuit.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace compcirc
{

class Digraph
{
public:
  explicit Digraph( std::size_t n = 0 ) : n_( n ) {}

  Digraph( std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs ) : n_( n )
  {
    for ( const auto& [u, v] : arcs )
    {
      add_arc( u, v );
    }
  }

  std::size_t num_nodes() const { return n_; }
  const std::set<std::pair<std::size_t, std::size_t>>& arcs() const { return arcs_; }

  /// Duplicate arcs are merged.
  void add_arc( std::size_t u, std::size_t v )
  {
    detail::require( u < n_ && v < n_, ErrorKind::index_out_of_range,
                     "arc (" + std::to_string( u ) + "," + std::to_string( v ) + ") out of range" );
    arcs_.emplace( u, v );
  }

  bool has_arc( std::size_t u, std::size_t v ) const { return arcs_.count( { u, v } ) != 0; }

  /// Every arc goes from a smaller to a larger index.
  bool is_forward() const
  {
    return std::all_of( arcs_.begin(), arcs_.end(), []( const auto& a ) { return a.first < a.second; } );
  }

  std::vector<std::vector<std::size_t>> successors() const
  {
    std::vector<std::vector<std::size_t>> out( n_ );
    for ( const auto& [u, v] : arcs_ )
    {
      out[u].push_back( v );
    }
    return out;
  }

  bool operator==( const Digraph& ) const = default;

private:
  std::size_t n_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> arcs_;
};

/// Nodes reachable from `src`, including `src`, as a membership vector.
inline std::vector<bool> reachable_set( const Digraph& g, std::size_t src )
{
  detail::require( src < g.num_nodes(), ErrorKind::index_out_of_range, "source out of range" );
  const auto succ = g.successors();
  std::vector<bool> seen( g.num_nodes(), false );
  std::queue<std::size_t> frontier;
  seen[src] = true;
  frontier.push( src );
  while ( !frontier.empty() )
  {
    const auto u = frontier.front();
    frontier.pop();
    for ( auto v : succ[u] )
    {
      if ( !seen[v] )
      {
        seen[v] = true;
        frontier.push( v );
      }
    }
  }
  return seen;
}

namespace detail
{

/// Swaps the labels of `src` and 0.
inline std::size_t source_first( std::size_t v, std::size_t src ) { return v == src ? 0 : ( v == 0 ? src : v ); }

} // namespace detail

struct LayeredGraph
{
  Digraph graph;
  std::size_t width = 0;
  std::size_t source = 0;

  /// Index of copy `t` of original node `v`.
  std::size_t node( std::size_t v, std::size_t t ) const { return t * width + detail::source_first( v, source ); }
};

/* Time expansion into n layers of n nodes.
 *
 * Each arc (u,v) yields (u,t) -> (v,t+1) and every node gets a stay arc
 * (v,t) -> (v,t+1). Within a layer the labels of `src` and 0 are swapped so
 * that (src,0) is node 0, which is where the pebbling circuit feeds in.
 * Every arc points forward, and (src,0) reaches (v,n-1) exactly when src
 * reaches v.
 */
inline LayeredGraph layer( const Digraph& g, std::size_t src = 0 )
{
  const auto n = g.num_nodes();
  detail::require( src < n, ErrorKind::index_out_of_range, "source out of range" );
  LayeredGraph out{ Digraph( n * n ), n, src };
  for ( std::size_t t = 0; t + 1 < n; ++t )
  {
    for ( std::size_t v = 0; v < n; ++v )
    {
      out.graph.add_arc( out.node( v, t ), out.node( v, t + 1 ) );
    }
    for ( const auto& [u, v] : g.arcs() )
    {
      out.graph.add_arc( out.node( u, t ), out.node( v, t + 1 ) );
    }
  }
  return out;
}

/// Wire layout of the pebbling circuit: iota_k = k, nu_k = n + k.
inline std::size_t pebble_feed_wire( std::size_t /*n*/, std::size_t k ) { return k; }
inline std::size_t pebble_node_wire( std::size_t n, std::size_t k ) { return n + k; }

/* Pebbling circuit for reachability from node 0 in a forward graph.
 *
 * n feed wires start at 1 and n node wires at 0. Round k first moves the
 * feed pebble onto node 0, then sweeps every pair i < j in order, moving a
 * pebble from i to j along an arc (a dummy gate stands in for a non-arc).
 * Afterwards node wire j is 1 iff j is reachable from 0.
 */
inline Circuit reach_to_ccv( const Digraph& g, std::size_t target )
{
  const auto n = g.num_nodes();
  detail::require( n >= 1, ErrorKind::bad_shape, "graph has no nodes" );
  detail::require( target < n, ErrorKind::index_out_of_range, "target out of range" );
  for ( const auto& [u, v] : g.arcs() )
  {
    if ( u >= v )
    {
      detail::fail( ErrorKind::precondition_violated,
                    "arc (" + std::to_string( u ) + "," + std::to_string( v ) + ") does not point forward" );
    }
  }
  Circuit c( 2 * n );
  for ( std::size_t k = 0; k < n; ++k )
  {
    c.set_annotation( pebble_feed_wire( n, k ), Annotation::constant( 1 ) );
  }
  for ( std::size_t k = 0; k < n; ++k )
  {
    c.add_comparator( pebble_feed_wire( n, k ), pebble_node_wire( n, 0 ) );
    for ( std::size_t i = 0; i < n; ++i )
    {
      for ( std::size_t j = i + 1; j < n; ++j )
      {
        if ( g.has_arc( i, j ) )
        {
          c.add_comparator( pebble_node_wire( n, i ), pebble_node_wire( n, j ) );
        }
        else
        {
          c.add_gate( Gate::dummy( pebble_node_wire( n, i ) ) );
        }
      }
    }
  }
  c.set_output( pebble_node_wire( n, target ) );
  return c;
}

} // namespace compcirc
