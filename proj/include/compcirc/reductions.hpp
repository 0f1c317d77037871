#pragma once

// Lowering passes between circuit, matching and stable-marriage
// instances. Each pass returns the target instance together with
// the index correspondence needed to read answers back.

#include "circuit.hpp"
#include "matching.hpp"
#include "stable_marriage.hpp"

#include <string>
#include <utility>
#include <vector>

namespace compcirc
{

/// Bipartite graph with a designated top vertex.
struct VlfmmInstance
{
  BipartiteGraph graph;
  std::size_t target_top = 0;

  bool operator==( const VlfmmInstance& ) const = default;
};

/// Bipartite graph with a designated edge.
struct LfmmInstance
{
  BipartiteGraph graph;
  Edge target_edge{ 0, 0 };

  bool operator==( const LfmmInstance& ) const = default;
};

/// A circuit over {0,*,1} together with its three-valued inputs.
struct TriInstance
{
  Circuit circuit;
  std::vector<Tri> inputs;
};

/// Answer of a fully resolved (constant-annotated) circuit; negations allowed.
inline Bit ccv_value( const Circuit& c )
{
  detail::require( c.is_constant_annotated(), ErrorKind::precondition_violated,
                   "CCV instance must be constant-annotated" );
  return eval( c, std::span<const Bit>{}, { true, false } ).answer;
}

/// Replaces input annotations by the constants of `x` (negated where marked).
inline Circuit fix_inputs( const Circuit& c, std::span<const Bit> x )
{
  const auto values = resolve_inputs( c, x );
  Circuit out = c;
  for ( std::size_t w = 0; w < c.num_wires(); ++w )
  {
    out.set_annotation( w, Annotation::constant( values[w] ) );
  }
  return out;
}

// ---------------------------------------------------------------------------
// CCV -> 3vLFMM
// ---------------------------------------------------------------------------

struct Vlfmm3Reduction
{
  VlfmmInstance instance;
  std::size_t wires = 0;
  std::size_t layers = 0; ///< gate count + 1

  /// Node ids: both sides are indexed layer * wires + wire.
  std::size_t top( std::size_t layer, std::size_t wire ) const { return layer * wires + wire; }
  std::size_t bottom( std::size_t layer, std::size_t wire ) const { return layer * wires + wire; }
};

namespace detail
{

inline void require_all_up( const Circuit& c )
{
  for ( const auto& g : c.gates() )
  {
    if ( g.is_negation() )
    {
      fail( ErrorKind::has_negations, "circuit contains negation gates" );
    }
    if ( !g.is_dummy() && !g.points_up() )
    {
      fail( ErrorKind::not_all_up, "gate (" + std::to_string( g.min_wire ) + "," + std::to_string( g.max_wire ) +
                                       ") does not point up" );
    }
  }
}

inline void require_constant( const Circuit& c )
{
  require( c.is_constant_annotated(), ErrorKind::precondition_violated, "instance must be constant-annotated" );
}

/// `swap_gate_bottoms` exchanges the two gadget bottoms of every gate; it
/// exists only so tests can show that the order matters.
inline Vlfmm3Reduction build_3vlfmm( const Circuit& c, bool swap_gate_bottoms )
{
  require_constant( c );
  require_all_up( c );
  const auto m = c.num_wires();
  const auto layers = c.gates().size() + 1;
  Vlfmm3Reduction r{ { BipartiteGraph( layers * m, layers * m ), 0 }, m, layers };
  auto& g = r.instance.graph;

  for ( std::size_t w = 0; w < m; ++w )
  {
    if ( c.annotation( w ).value )
    {
      g.add_edge( r.bottom( 0, w ), r.top( 0, w ) );
    }
  }
  for ( std::size_t i = 1; i < layers; ++i )
  {
    const auto& gate = c.gates()[i - 1];
    const auto u = gate.max_wire; // receives the disjunction
    const auto v = gate.min_wire;
    for ( std::size_t w = 0; w < m; ++w )
    {
      if ( gate.is_dummy() || ( w != u && w != v ) )
      {
        g.add_edge( r.bottom( i, w ), r.top( i - 1, w ) );
        g.add_edge( r.bottom( i, w ), r.top( i, w ) );
      }
    }
    if ( gate.is_dummy() )
    {
      continue;
    }
    const auto bu = r.bottom( i, swap_gate_bottoms ? v : u );
    const auto bv = r.bottom( i, swap_gate_bottoms ? u : v );
    g.add_edge( bu, r.top( i - 1, u ) );
    g.add_edge( bu, r.top( i, u ) );
    g.add_edge( bv, r.top( i - 1, v ) );
    g.add_edge( bv, r.top( i, u ) );
    g.add_edge( bv, r.top( i, v ) );
  }
  r.instance.target_top = r.top( layers - 1, c.output_wire() );
  return r;
}

} // namespace detail

/* Comparator circuit to a degree-3 vLFMM instance.
 *
 * Layer 0 matches x'_0 to x_0 exactly when wire x starts at 1. For a gate
 * at layer i with disjunction on u and conjunction on v, bottom u' may
 * take {u_{i-1}, u_i} and bottom v' {v_{i-1}, u_i, v_i}; every other wire
 * copies its status through {c_{i-1}, c_i}. Once bottoms up to layer i are
 * placed, top x_i is matched iff wire x holds 1 after i gates. Requires an all-up, constant-annotated,
 * negation-free circuit so that u' precedes v' in bottom order.
 */
inline Vlfmm3Reduction ccv_to_3vlfmm( const Circuit& c ) { return detail::build_3vlfmm( c, false ); }

struct NormalizedVlfmm3
{
  Vlfmm3Reduction reduction;
  /// Original wire -> wire of the all-up circuit fed to the reduction.
  std::vector<std::size_t> wire_map;
};

/// Any constant-annotated negation-free circuit, normalized to all-up first.
inline NormalizedVlfmm3 ccv_to_3vlfmm_any( const Circuit& c )
{
  detail::require_constant( c );
  detail::require( !c.has_negations(), ErrorKind::has_negations, "circuit contains negation gates" );
  auto up = normalize_up( c );
  return { ccv_to_3vlfmm( up.circuit ), std::move( up.wire_map ) };
}

// ---------------------------------------------------------------------------
// vLFMM -> CCV
// ---------------------------------------------------------------------------

/* Simulates the greedy matching with comparators.
 *
 * Wires: tops (constant 0) then bottoms (constant 1). Bottom b, in order,
 * offers its 1 to each top neighbour in order; a top wire ends at 1 iff the
 * top is matched. `pad_dummies` adds a dummy gate for each non-edge so the
 * gate positions depend only on the graph size.
 */
inline Circuit vlfmm_to_ccv( const BipartiteGraph& g, std::size_t target_top, bool pad_dummies = false )
{
  detail::require( target_top < g.num_top(), ErrorKind::index_out_of_range, "target top out of range" );
  const auto tops = g.num_top();
  Circuit c( std::max<std::size_t>( 1, tops + g.num_bottom() ) );
  for ( std::size_t b = 0; b < g.num_bottom(); ++b )
  {
    c.set_annotation( tops + b, Annotation::constant( 1 ) );
  }
  for ( std::size_t b = 0; b < g.num_bottom(); ++b )
  {
    for ( std::size_t t = 0; t < tops; ++t )
    {
      if ( g.has_edge( b, t ) )
      {
        c.add_comparator( tops + b, t );
      }
      else if ( pad_dummies )
      {
        c.add_gate( Gate::dummy( tops + b ) );
      }
    }
  }
  c.set_output( target_top );
  return c;
}

// ---------------------------------------------------------------------------
// vLFMM -> LFMM and CCV -> 3LFMM
// ---------------------------------------------------------------------------

/* Adds top w_t and bottom w_b (both last) with edges
 *         {target, w_b} and {w_t, w_b}; the designated edge is (w_b, w_t).
 *
 * w_b takes the old target if it is still free, so (w_b, w_t) is matched
 * iff the target was matched.
 */
inline LfmmInstance vlfmm_to_lfmm( const VlfmmInstance& inst )
{
  LfmmInstance out{ inst.graph, { 0, 0 } };
  const auto wt = out.graph.add_top();
  const auto wb = out.graph.add_bottom();
  out.graph.add_edge( wb, inst.target_top );
  out.graph.add_edge( wb, wt );
  out.target_edge = { wb, wt };
  return out;
}

inline LfmmInstance ccv_to_3lfmm( const Circuit& c )
{
  return vlfmm_to_lfmm( ccv_to_3vlfmm_any( c ).reduction.instance );
}

// ---------------------------------------------------------------------------
// CCV with negations -> CCV (double rail)
// ---------------------------------------------------------------------------

struct DoubleRail
{
  Circuit circuit;
  std::size_t wires = 0; ///< wires of the source circuit

  std::size_t rail( std::size_t w ) const { return 2 * w; }
  std::size_t bar( std::size_t w ) const { return 2 * w + 1; }
  std::size_t scratch() const { return 2 * wires; }
};

/* Removes negation gates using complementary rails.
 *
 * Wire w becomes rails 2w (value) and 2w+1 (complement) plus one scratch
 * wire 2m held at 0. A comparator is applied to the value rails and, with
 * its direction reversed, to the complement rails. A negation swaps the two
 * rails of its wire through the scratch wire with three comparators.
 * Input annotations are allowed; the complement rail gets the negated label.
 */
inline DoubleRail ccvneg_to_ccv( const Circuit& c )
{
  const auto m = c.num_wires();
  DoubleRail dr{ Circuit( 2 * m + 1 ), m };
  auto& out = dr.circuit;
  for ( std::size_t w = 0; w < m; ++w )
  {
    out.set_annotation( dr.rail( w ), c.annotation( w ) );
    out.set_annotation( dr.bar( w ), c.annotation( w ).negated() );
  }
  for ( const auto& g : c.gates() )
  {
    if ( g.is_negation() )
    {
      const auto z = g.wire();
      out.add_comparator( dr.rail( z ), dr.scratch() );
      out.add_comparator( dr.bar( z ), dr.rail( z ) );
      out.add_comparator( dr.scratch(), dr.bar( z ) );
    }
    else if ( g.is_dummy() )
    {
      out.add_gate( Gate::dummy( dr.rail( g.min_wire ) ) );
      out.add_gate( Gate::dummy( dr.bar( g.min_wire ) ) );
    }
    else
    {
      out.add_comparator( dr.rail( g.min_wire ), dr.rail( g.max_wire ) );
      out.add_comparator( dr.bar( g.max_wire ), dr.bar( g.min_wire ) );
    }
  }
  out.set_output( dr.rail( c.output_wire() ) );
  return dr;
}

// ---------------------------------------------------------------------------
// LFMM -> CCV with negations
// ---------------------------------------------------------------------------

struct LfmmCircuit
{
  Circuit circuit;
  std::size_t tops = 0;    ///< tops kept after restriction (c + 1)
  std::size_t bottoms = 0; ///< bottoms kept after restriction (y + 1)

  std::size_t full_top( std::size_t t ) const { return t; }
  std::size_t full_bottom( std::size_t b ) const { return tops + b; }
  std::size_t minus_top( std::size_t t ) const { return tops + bottoms + t; }
  std::size_t minus_bottom( std::size_t b ) const { return 2 * tops + bottoms + b; }
};

/* Decides whether edge (y,c) is in the greedy matching.
 *
 * Only tops up to c and bottoms up to y matter. Two greedy simulations run
 * side by side: the full one and a copy without the gate for (y,c). Then
 * the designated wire gets c_full AND NOT c_minus:
 *   (y,c) matched      -> c_full = 1, c_minus = 0
 *   c taken before y   -> both 1
 *   c never taken by y -> c_full = 0
 */
inline LfmmCircuit lfmm_to_ccvneg( const BipartiteGraph& g, const Edge& e, bool pad_dummies = false )
{
  const auto [y, c] = e;
  detail::require( y < g.num_bottom() && c < g.num_top(), ErrorKind::index_out_of_range,
                   "designated edge out of range" );
  if ( !g.has_edge( y, c ) )
  {
    detail::fail( ErrorKind::edge_not_in_graph,
                  "edge (" + std::to_string( y ) + "," + std::to_string( c ) + ") is not in the graph" );
  }
  LfmmCircuit lc{ Circuit( 2 * ( c + 1 ) + 2 * ( y + 1 ) ), c + 1, y + 1 };
  auto& out = lc.circuit;
  for ( std::size_t b = 0; b <= y; ++b )
  {
    out.set_annotation( lc.full_bottom( b ), Annotation::constant( 1 ) );
    out.set_annotation( lc.minus_bottom( b ), Annotation::constant( 1 ) );
  }
  for ( int copy = 0; copy < 2; ++copy )
  {
    for ( std::size_t b = 0; b <= y; ++b )
    {
      for ( std::size_t t = 0; t <= c; ++t )
      {
        const bool present = g.has_edge( b, t ) && !( copy == 1 && b == y && t == c );
        const auto bw = copy == 0 ? lc.full_bottom( b ) : lc.minus_bottom( b );
        if ( present )
        {
          out.add_comparator( bw, copy == 0 ? lc.full_top( t ) : lc.minus_top( t ) );
        }
        else if ( pad_dummies )
        {
          out.add_gate( Gate::dummy( bw ) );
        }
      }
    }
  }
  out.add_negation( lc.minus_top( c ) );
  out.add_comparator( lc.full_top( c ), lc.minus_top( c ) );
  out.set_output( lc.full_top( c ) );
  return lc;
}

// ---------------------------------------------------------------------------
// Three-valued CCV -> CCV
// ---------------------------------------------------------------------------

struct RailLowering
{
  Circuit circuit;
  std::size_t wires = 0;

  std::size_t low( std::size_t w ) const { return 2 * w; }
  std::size_t high( std::size_t w ) const { return 2 * w + 1; }
};

/// (0,0) -> 0, (0,1) -> *, (1,1) -> 1; (1,0) is not a valid rail pair.
inline Tri decode_rails( Bit low, Bit high )
{
  detail::require( low <= high, ErrorKind::internal_bound_violation, "rail pair (1,0) is invalid" );
  return low ? Tri::one : ( high ? Tri::star : Tri::zero );
}

inline std::pair<Bit, Bit> encode_rails( Tri v )
{
  switch ( v )
  {
  case Tri::zero: return { 0, 0 };
  case Tri::star: return { 0, 1 };
  case Tri::one: return { 1, 1 };
  }
  return { 0, 0 };
}

namespace detail
{

/// Rail pairs and per-rail gates, without the final collecting gate.
inline RailLowering lower_rails( const Circuit& c, std::span<const Tri> x )
{
  require( !c.has_negations(), ErrorKind::has_negations, "three-valued circuits have no negation gates" );
  const auto values = resolve_tri_inputs( c, x );
  RailLowering rl{ Circuit( 2 * c.num_wires() ), c.num_wires() };
  auto& out = rl.circuit;
  for ( std::size_t w = 0; w < c.num_wires(); ++w )
  {
    const auto [lo, hi] = encode_rails( values[w] );
    out.set_annotation( rl.low( w ), Annotation::constant( lo ) );
    out.set_annotation( rl.high( w ), Annotation::constant( hi ) );
  }
  for ( const auto& g : c.gates() )
  {
    out.add_comparator( rl.low( g.min_wire ), rl.low( g.max_wire ) );
    out.add_comparator( rl.high( g.min_wire ), rl.high( g.max_wire ) );
  }
  out.set_output( rl.low( c.output_wire() ) );
  return rl;
}

} // namespace detail

/* Lowers a three-valued instance to a Boolean one.
 *
 * Each wire becomes a rail pair, each gate one gate per rail, and a final
 * comparator leaves low AND high of the designated pair on its low rail, so
 * the Boolean answer is 1 exactly when the three-valued answer is 1.
 */
inline RailLowering tri_to_bool( const Circuit& c, std::span<const Tri> x )
{
  auto rl = detail::lower_rails( c, x );
  const auto d = c.output_wire();
  rl.circuit.add_comparator( rl.low( d ), rl.high( d ) );
  rl.circuit.set_output( rl.low( d ) );
  return rl;
}

inline RailLowering tri_to_bool( const TriInstance& inst ) { return tri_to_bool( inst.circuit, inst.inputs ); }

// ---------------------------------------------------------------------------
// 3LFMM -> SM
// ---------------------------------------------------------------------------

/* Stable-marriage instance of size 2n whose unique stable marriage
 *         contains the greedy matching of `g`.
 *
 * Man i < n lists his neighbours, then the new women n..2n-1, then his
 * non-neighbours, each group in index order. New men list all women in
 * order. Women are defined the same way from the top side.
 */
inline SMInstance lfmm3_to_sm( const BipartiteGraph& g )
{
  const auto n = g.num_bottom();
  detail::require( g.num_top() == n, ErrorKind::not_square, "graph must have as many tops as bottoms" );
  detail::require( max_degree( g ) <= 3, ErrorKind::degree_too_high, "graph degree exceeds three" );

  std::vector<std::vector<bool>> adj( n, std::vector<bool>( n, false ) );
  for ( const auto& [b, t] : g.edges() )
  {
    adj[b][t] = true;
  }
  auto list = [n]( auto is_neighbor ) {
    std::vector<std::size_t> row;
    row.reserve( 2 * n );
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( is_neighbor( j ) )
      {
        row.push_back( j );
      }
    }
    for ( std::size_t j = n; j < 2 * n; ++j )
    {
      row.push_back( j );
    }
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( !is_neighbor( j ) )
      {
        row.push_back( j );
      }
    }
    return row;
  };
  std::vector<std::size_t> plain( 2 * n );
  for ( std::size_t j = 0; j < 2 * n; ++j )
  {
    plain[j] = j;
  }

  std::vector<std::vector<std::size_t>> men( 2 * n, plain ), women( 2 * n, plain );
  for ( std::size_t i = 0; i < n; ++i )
  {
    men[i] = list( [&]( std::size_t j ) { return adj[i][j]; } );
    women[i] = list( [&]( std::size_t j ) { return adj[j][i]; } );
  }
  return SMInstance( std::move( men ), std::move( women ) );
}

// ---------------------------------------------------------------------------
// SM -> three-valued CCV -> CCV
// ---------------------------------------------------------------------------

struct SmTriCircuit
{
  TriInstance instance;
  std::size_t iterations = 0;
  /// Final wire of MM(m,w) and WW(w,m), identity-indexed.
  std::vector<std::vector<std::size_t>> mm_wire;
  std::vector<std::vector<std::size_t>> ww_wire;
};

/* Unrolls 2n^2 iterations of Subramanian's update into a
 *         three-valued comparator circuit.
 *
 * Every (m,w) pair meets once per iteration in a comparator with the
 * conjunction on the MM side. The conjunction becomes MM(m, next woman
 * after w for m), the disjunction WW(w, next man after m for w); outputs
 * past the last rank are dropped and rank-0 cells restart on fresh
 * constant wires. Unknown initial cells read the single input, which is *.
 */
inline SmTriCircuit sm_to_tri_circuit( const SMInstance& inst )
{
  const auto n = inst.n();
  detail::require( n >= 1, ErrorKind::bad_shape, "empty instance" );
  SmTriCircuit out;
  out.iterations = 2 * n * n;
  out.mm_wire.assign( n, std::vector<std::size_t>( n ) );
  out.ww_wire.assign( n, std::vector<std::size_t>( n ) );
  Circuit c( 2 * n * n );
  for ( std::size_t p = 0; p < n; ++p )
  {
    for ( std::size_t q = 0; q < n; ++q )
    {
      out.mm_wire[p][q] = p * n + q;
      out.ww_wire[p][q] = n * n + p * n + q;
      c.set_annotation( out.mm_wire[p][q], inst.man_choice( p, 0 ) == q ? Annotation::constant( 1 )
                                                                         : Annotation::input( 0 ) );
      c.set_annotation( out.ww_wire[p][q], inst.woman_choice( p, 0 ) == q ? Annotation::constant( 0 )
                                                                           : Annotation::input( 0 ) );
    }
  }
  for ( std::size_t it = 0; it < out.iterations; ++it )
  {
    auto next_mm = out.mm_wire;
    auto next_ww = out.ww_wire;
    for ( std::size_t m = 0; m < n; ++m )
    {
      for ( std::size_t w = 0; w < n; ++w )
      {
        const auto a = out.mm_wire[m][w];
        const auto b = out.ww_wire[w][m];
        c.add_comparator( a, b );
        const auto rm = inst.man_rank( m, w );
        if ( rm + 1 < n )
        {
          next_mm[m][inst.man_choice( m, rm + 1 )] = a;
        }
        const auto rw = inst.woman_rank( w, m );
        if ( rw + 1 < n )
        {
          next_ww[w][inst.woman_choice( w, rw + 1 )] = b;
        }
      }
    }
    for ( std::size_t p = 0; p < n; ++p )
    {
      next_mm[p][inst.man_choice( p, 0 )] = c.add_wire( Annotation::constant( 1 ) );
      next_ww[p][inst.woman_choice( p, 0 )] = c.add_wire( Annotation::constant( 0 ) );
    }
    out.mm_wire = std::move( next_mm );
    out.ww_wire = std::move( next_ww );
  }
  c.set_output( out.mm_wire[0][inst.man_choice( 0, 0 )] );
  out.instance = { std::move( c ), { Tri::star } };
  return out;
}

/// Reads the final matrices off an evaluated sm_to_tri_circuit.
inline MatrixPair decode_sm_matrices( const SmTriCircuit& sc, std::span<const Tri> wire_values )
{
  const auto n = sc.mm_wire.size();
  auto mp = MatrixPair::filled( n, Tri::star );
  for ( std::size_t p = 0; p < n; ++p )
  {
    for ( std::size_t q = 0; q < n; ++q )
    {
      mp.mm[p][q] = wire_values[sc.mm_wire[p][q]];
      mp.ww[p][q] = wire_values[sc.ww_wire[p][q]];
    }
  }
  return mp;
}

namespace detail
{

inline void check_pair( const SMInstance& inst, std::size_t m, std::size_t w )
{
  require( m < inst.n() && w < inst.n(), ErrorKind::index_out_of_range,
           "pair (" + std::to_string( m ) + "," + std::to_string( w ) + ") out of range" );
}

} // namespace detail

/* CCV instance answering "is (m,w) in the man-optimal marriage".
 *
 * With w at rank i for m, let (alpha, beta) be the rails of MM(m,w) and
 * gamma the low rail of the next cell in m's row. The answer is
 * alpha AND beta AND NOT gamma (alpha AND beta at the last rank); the
 * negation is then removed with double rails.
 */
inline Circuit mosm_to_ccv( const SMInstance& inst, std::size_t m, std::size_t w )
{
  detail::check_pair( inst, m, w );
  const auto sc = sm_to_tri_circuit( inst );
  auto rl = detail::lower_rails( sc.instance.circuit, sc.instance.inputs );
  auto& c = rl.circuit;
  const auto i = inst.man_rank( m, w );
  const auto cell = sc.mm_wire[m][w];
  const auto alpha = rl.low( cell );
  const auto beta = rl.high( cell );
  c.add_comparator( alpha, beta );
  if ( i + 1 < inst.n() )
  {
    const auto gamma = rl.low( sc.mm_wire[m][inst.man_choice( m, i + 1 )] );
    c.add_negation( gamma );
    c.add_comparator( alpha, gamma );
  }
  c.set_output( alpha );
  return ccvneg_to_ccv( c ).circuit;
}

/* CCV instance answering "is (m,w) in the woman-optimal marriage".
 *
 * With m at rank i for w, beta is the high rail of WW(w,m) and delta the
 * high rail of the next cell in w's row; the answer is NOT beta AND delta
 * (NOT beta at the last rank).
 */
inline Circuit wosm_to_ccv( const SMInstance& inst, std::size_t m, std::size_t w )
{
  detail::check_pair( inst, m, w );
  const auto sc = sm_to_tri_circuit( inst );
  auto rl = detail::lower_rails( sc.instance.circuit, sc.instance.inputs );
  auto& c = rl.circuit;
  const auto i = inst.woman_rank( w, m );
  const auto beta = rl.high( sc.ww_wire[w][m] );
  c.add_negation( beta );
  if ( i + 1 < inst.n() )
  {
    const auto delta = rl.high( sc.ww_wire[w][inst.woman_choice( w, i + 1 )] );
    c.add_comparator( beta, delta );
  }
  c.set_output( beta );
  return ccvneg_to_ccv( c ).circuit;
}

} // namespace compcirc
