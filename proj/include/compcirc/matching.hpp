#pragma once

// Bipartite graphs and the greedy lexicographically-first maximal
// matching.

#include "error.hpp"
#include "tri.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace compcirc
{

/// (bottom, top)
using Edge = std::pair<std::size_t, std::size_t>;

class BipartiteGraph
{
public:
  BipartiteGraph() = default;

  BipartiteGraph( std::size_t num_bottom, std::size_t num_top )
      : num_bottom_( num_bottom ), num_top_( num_top ), adjacency_( num_bottom )
  {
  }

  BipartiteGraph( std::size_t num_bottom, std::size_t num_top, const std::vector<Edge>& edges )
      : BipartiteGraph( num_bottom, num_top )
  {
    for ( const auto& e : edges )
    {
      add_edge( e.first, e.second );
    }
  }

  std::size_t num_bottom() const { return num_bottom_; }
  std::size_t num_top() const { return num_top_; }

  /// Top neighbours of `bottom` in increasing order.
  const std::vector<std::size_t>& neighbors( std::size_t bottom ) const
  {
    check_bottom( bottom );
    return adjacency_[bottom];
  }

  bool has_edge( std::size_t bottom, std::size_t top ) const
  {
    check_bottom( bottom );
    check_top( top );
    const auto& adj = adjacency_[bottom];
    return std::binary_search( adj.begin(), adj.end(), top );
  }

  void add_edge( std::size_t bottom, std::size_t top )
  {
    check_bottom( bottom );
    check_top( top );
    auto& adj = adjacency_[bottom];
    auto it = std::lower_bound( adj.begin(), adj.end(), top );
    if ( it != adj.end() && *it == top )
    {
      detail::fail( ErrorKind::bad_shape,
                    "duplicate edge (" + std::to_string( bottom ) + "," + std::to_string( top ) + ")" );
    }
    adj.insert( it, top );
  }

  std::size_t add_bottom()
  {
    adjacency_.emplace_back();
    return num_bottom_++;
  }

  std::size_t add_top() { return num_top_++; }

  /// All edges sorted by (bottom, top).
  std::vector<Edge> edges() const
  {
    std::vector<Edge> out;
    for ( std::size_t b = 0; b < num_bottom_; ++b )
    {
      for ( auto t : adjacency_[b] )
      {
        out.emplace_back( b, t );
      }
    }
    return out;
  }

  std::size_t num_edges() const
  {
    std::size_t count = 0;
    for ( const auto& adj : adjacency_ )
    {
      count += adj.size();
    }
    return count;
  }

  std::vector<std::size_t> top_degrees() const
  {
    std::vector<std::size_t> deg( num_top_, 0 );
    for ( const auto& adj : adjacency_ )
    {
      for ( auto t : adj )
      {
        ++deg[t];
      }
    }
    return deg;
  }

  bool operator==( const BipartiteGraph& ) const = default;

private:
  void check_bottom( std::size_t b ) const
  {
    if ( b >= num_bottom_ )
    {
      detail::fail( ErrorKind::index_out_of_range, "bottom vertex " + std::to_string( b ) + " out of range" );
    }
  }
  void check_top( std::size_t t ) const
  {
    if ( t >= num_top_ )
    {
      detail::fail( ErrorKind::index_out_of_range, "top vertex " + std::to_string( t ) + " out of range" );
    }
  }

  std::size_t num_bottom_ = 0;
  std::size_t num_top_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// A matching stored from both sides.
struct MatchingB
{
  std::vector<std::optional<std::size_t>> top_of;    ///< bottom -> top
  std::vector<std::optional<std::size_t>> bottom_of; ///< top -> bottom

  /// Matched pairs sorted by bottom.
  std::set<Edge> pairs() const
  {
    std::set<Edge> out;
    for ( std::size_t b = 0; b < top_of.size(); ++b )
    {
      if ( top_of[b] )
      {
        out.emplace( b, *top_of[b] );
      }
    }
    return out;
  }

  bool contains( const Edge& e ) const
  {
    return e.first < top_of.size() && top_of[e.first] && *top_of[e.first] == e.second;
  }

  bool top_matched( std::size_t t ) const { return t < bottom_of.size() && bottom_of[t].has_value(); }

  bool operator==( const MatchingB& ) const = default;
};

/// Matches bottoms in index order, each to its least free top neighbour.
inline MatchingB lfm_matching( const BipartiteGraph& g )
{
  MatchingB m{ std::vector<std::optional<std::size_t>>( g.num_bottom() ),
               std::vector<std::optional<std::size_t>>( g.num_top() ) };
  for ( std::size_t b = 0; b < g.num_bottom(); ++b )
  {
    for ( auto t : g.neighbors( b ) )
    {
      if ( !m.bottom_of[t] )
      {
        m.bottom_of[t] = b;
        m.top_of[b] = t;
        break;
      }
    }
  }
  return m;
}

inline Bit lfmm_decision( const BipartiteGraph& g, const Edge& e )
{
  detail::require( e.first < g.num_bottom() && e.second < g.num_top(), ErrorKind::index_out_of_range,
                   "designated edge out of range" );
  return lfm_matching( g ).contains( e ) ? 1 : 0;
}

inline Bit vlfmm_decision( const BipartiteGraph& g, std::size_t top )
{
  detail::require( top < g.num_top(), ErrorKind::index_out_of_range,
                   "top vertex " + std::to_string( top ) + " out of range" );
  return lfm_matching( g ).top_matched( top ) ? 1 : 0;
}

/// Largest degree over bottom and top vertices.
inline std::size_t max_degree( const BipartiteGraph& g )
{
  std::size_t best = 0;
  for ( std::size_t b = 0; b < g.num_bottom(); ++b )
  {
    best = std::max( best, g.neighbors( b ).size() );
  }
  for ( auto d : g.top_degrees() )
  {
    best = std::max( best, d );
  }
  return best;
}

} // namespace compcirc
