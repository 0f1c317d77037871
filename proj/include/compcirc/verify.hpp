#pragma once

// Seeded property suites over every construction.
//
// A suite draws `cases` instances per property family. Case `i` of family
// `f` uses `Rng::for_case(seed, f, i)`, so any case can be replayed without
// running the ones before it, and the report is a pure function of
// (suite, cases, seed). Counterexamples are written in the io_formats
// grammars, with extra context on `#` comment lines.

#include "circuit.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "io_formats.hpp"
#include "lipschitz.hpp"
#include "matching.hpp"
#include "reachability.hpp"
#include "reductions.hpp"
#include "stable_marriage.hpp"
#include "universal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace compcirc
{

/// Deliberate defects that tests inject to show a suite can fail.
enum class Mutation : std::uint8_t
{
  none,
  /// ccv_to_3vlfmm with the two gadget bottoms of every gate exchanged.
  swap_gate_bottoms
};

struct SuiteOptions
{
  Mutation mutation = Mutation::none;
};

struct Failure
{
  std::size_t case_index = 0;
  std::string counterexample;
};

struct PropertyResult
{
  std::string name;
  std::size_t checks = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

struct Report
{
  std::string suite;
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const
  {
    return std::all_of( properties.begin(), properties.end(), []( const auto& p ) { return p.passed(); } );
  }

  const PropertyResult* find( std::string_view name ) const
  {
    for ( const auto& p : properties )
    {
      if ( p.name == name )
      {
        return &p;
      }
    }
    return nullptr;
  }

  /// One `pass`/`fail` line per property; a failing property is followed by
  /// its first counterexample between `--- case <i>` and `---`.
  std::string text() const
  {
    std::ostringstream out;
    out << "suite " << suite << " cases " << cases << " seed " << seed << "\n";
    for ( const auto& p : properties )
    {
      out << ( p.passed() ? "pass " : "fail " ) << p.name << " " << p.checks - p.failures.size() << "/" << p.checks
          << "\n";
      if ( !p.passed() )
      {
        const auto& f = p.failures.front();
        out << "--- case " << f.case_index << "\n" << f.counterexample;
        if ( !f.counterexample.empty() && f.counterexample.back() != '\n' )
        {
          out << "\n";
        }
        out << "---\n";
      }
    }
    out << ( passed() ? "result pass" : "result fail" ) << "\n";
    return out.str();
  }
};

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{ "golden",   "universal", "trilower", "reductions",
                                               "sm-ladder", "feasible", "sm-to-ccv", "reach",
                                               "structural", "strictify", "formats" };
  return names;
}

namespace detail
{

class SuiteRun
{
public:
  SuiteRun( Report& report, std::size_t cases, std::uint64_t seed, SuiteOptions options )
      : report_( report ), cases_( cases ), seed_( seed ), options_( options )
  {
  }

  std::size_t cases() const { return cases_; }
  const SuiteOptions& options() const { return options_; }

  Rng rng( std::string_view family, std::size_t index ) const { return Rng::for_case( seed_, family, index ); }

  PropertyResult& property( const std::string& name )
  {
    for ( auto& p : report_.properties )
    {
      if ( p.name == name )
      {
        return p;
      }
    }
    report_.properties.push_back( { name, 0, {} } );
    return report_.properties.back();
  }

  /// `cex` is only evaluated on failure.
  void check( const std::string& name, std::size_t index, bool ok, const std::function<std::string()>& cex )
  {
    auto& p = property( name );
    ++p.checks;
    if ( !ok )
    {
      p.failures.push_back( { index, cex() } );
    }
  }

  /// Runs `body` for every case; an exception fails `name` for that case.
  void each_case( const std::string& name, const std::function<void( std::size_t )>& body )
  {
    for ( std::size_t i = 0; i < cases_; ++i )
    {
      guarded( name, i, [&] { body( i ); } );
    }
  }

  void guarded( const std::string& name, std::size_t index, const std::function<void()>& body )
  {
    try
    {
      body();
    }
    catch ( const std::exception& e )
    {
      check( name, index, false, [&] { return std::string( "# exception: " ) + e.what() + "\n"; } );
    }
  }

private:
  Report& report_;
  std::size_t cases_;
  std::uint64_t seed_;
  SuiteOptions options_;
};

template<class T>
std::string join_values( const std::vector<T>& v )
{
  std::string s;
  for ( const auto& x : v )
  {
    if constexpr ( std::is_same_v<T, Tri> )
    {
      s += to_char( x );
    }
    else
    {
      s += static_cast<char>( '0' + x );
    }
  }
  return s;
}

inline std::string comment( const std::string& key, const std::string& value ) { return "# " + key + " " + value + "\n"; }

inline std::size_t ceil_div( std::size_t a, std::size_t b ) { return ( a + b - 1 ) / b; }

inline std::uint64_t fnv( std::string_view s ) { return Rng::hash( s ); }

// ---------------------------------------------------------------------------
// golden
// ---------------------------------------------------------------------------

inline void suite_golden( SuiteRun& run )
{
  auto expect = [&]( const std::string& name, bool ok, const std::string& cex ) {
    run.check( name, 0, ok, [&] { return cex; } );
  };

  run.guarded( "annotated-six-wire", 0, [&] {
    const auto c = parse_circuit( fixtures::annotated_six_wire );
    const auto r = eval( c, { 1, 1, 1 } );
    expect( "annotated-six-wire", r.wire_outputs == std::vector<Bit>{ 0, 1, 1, 0, 1, 0 } && r.answer == 0,
            comment( "outputs", join_values( r.wire_outputs ) ) + std::string( fixtures::annotated_six_wire ) );
  } );

  run.guarded( "greedy-matching", 0, [&] {
    const auto f = parse_graph( fixtures::greedy_matching );
    const auto mt = lfm_matching( f.graph );
    const std::set<Edge> want{ { 0, 0 }, { 2, 2 }, { 3, 1 } };
    expect( "greedy-matching", mt.pairs() == want && lfmm_decision( f.graph, *f.target_edge ) == 1,
            std::string( fixtures::greedy_matching ) );
  } );

  run.guarded( "three-wire-up", 0, [&] {
    const auto c = parse_circuit( fixtures::three_wire_up );
    const auto r = eval( c, std::span<const Bit>{} );
    const auto red = ccv_to_3vlfmm( c );
    std::vector<Bit> status;
    for ( std::size_t w = 0; w < c.num_wires(); ++w )
    {
      status.push_back( vlfmm_decision( red.instance.graph, red.top( red.layers - 1, w ) ) );
    }
    const std::vector<Bit> want{ 1, 1, 0 };
    expect( "three-wire-up", r.wire_outputs == want && status == want && max_degree( red.instance.graph ) <= 3,
            comment( "outputs", join_values( r.wire_outputs ) ) + comment( "statuses", join_values( status ) ) +
                std::string( fixtures::three_wire_up ) );
  } );

  run.guarded( "matching-sim", 0, [&] {
    const auto f = parse_graph( fixtures::matching_sim );
    const auto c = vlfmm_to_ccv( f.graph, *f.target_top, true );
    const auto r = eval( c, std::span<const Bit>{} );
    expect( "matching-sim",
            c.gates().size() == 12 && r.wire_outputs == std::vector<Bit>{ 1, 1, 1, 0, 0, 0, 0 } && r.answer == 1,
            comment( "outputs", join_values( r.wire_outputs ) ) + serialize_circuit( c ) );
  } );

  run.guarded( "negation-rails", 0, [&] {
    const auto c = parse_circuit( fixtures::negation_rails );
    const auto r = eval( c, std::span<const Bit>{}, { true, false } );
    const auto dr = ccvneg_to_ccv( c );
    const auto d = eval( dr.circuit, std::span<const Bit>{} );
    expect( "negation-rails",
            r.wire_outputs == std::vector<Bit>{ 1, 1, 1 } &&
                d.wire_outputs == std::vector<Bit>{ 1, 0, 1, 0, 1, 0, 0 } && d.answer == 1,
            comment( "outputs", join_values( d.wire_outputs ) ) + serialize_circuit( dr.circuit ) );
  } );

  run.guarded( "edge-decision", 0, [&] {
    const auto f = parse_graph( fixtures::edge_decision );
    const auto lc = lfmm_to_ccvneg( f.graph, *f.target_edge );
    const auto r = eval( lc.circuit, std::span<const Bit>{}, { true, false } );
    expect( "edge-decision", r.wire_outputs == std::vector<Bit>{ 1, 0, 1, 0, 0, 1, 0, 1, 0, 1 } && r.answer == 1,
            comment( "outputs", join_values( r.wire_outputs ) ) + serialize_circuit( lc.circuit ) );
  } );

  run.guarded( "pebbling", 0, [&] {
    const auto g = parse_digraph( fixtures::pebbling );
    const auto c = reach_to_ccv( g, 4 );
    const auto r = eval( c, std::span<const Bit>{} );
    expect( "pebbling", r.wire_outputs == std::vector<Bit>( { 0, 0, 0, 0, 0, 1, 1, 1, 1, 1 } ) && r.answer == 1,
            comment( "outputs", join_values( r.wire_outputs ) ) + std::string( fixtures::pebbling ) );
  } );

  run.guarded( "normalize-single-gate", 0, [&] {
    // one up-pointing gate on raw inputs x (wire 0) and y (wire 1)
    Circuit c( 2, { Annotation::input( 0 ), Annotation::input( 1 ) }, { Gate::comparator( 1, 0 ) }, 0 );
    const auto nd = normalize_down( c );
    bool ok = nd.circuit.num_wires() == 4 && nd.circuit.gates().size() == 3;
    for ( const auto& gt : nd.circuit.gates() )
    {
      ok = ok && gt.points_down();
    }
    for ( Bit x = 0; x < 2 && ok; ++x )
    {
      for ( Bit y = 0; y < 2; ++y )
      {
        const auto out = eval( nd.circuit, { x, y } ).wire_outputs;
        ok = ok && out[nd.wire_map[0]] == ( x | y ) && out[nd.wire_map[1]] == ( x & y );
      }
    }
    expect( "normalize-single-gate", ok, serialize_circuit( nd.circuit ) );
  } );
}

// ---------------------------------------------------------------------------
// universal
// ---------------------------------------------------------------------------

inline void suite_universal( SuiteRun& run )
{
  run.each_case( "universal-agreement", [&]( std::size_t i ) {
    auto rng = run.rng( "universal", i );
    CircuitParams p;
    p.m_max = 6;
    p.g_max = 12;
    const auto c = gen_circuit( rng, p );
    const auto m = std::max<std::size_t>( 2, c.num_wires() ) + rng.below( 2 );
    const auto n = c.gates().size() + rng.below( 3 );
    const auto univ = build_universal( m, n );
    const auto enc = encode_control( c, m, n );
    bool ok = decode_control( enc ).gates().size() == n;
    std::string bad;
    for ( int trial = 0; trial < 8; ++trial )
    {
      const auto y = gen_bits( rng, m );
      std::vector<Bit> expect( y );
      std::vector<Bit> direct( y.begin(), y.begin() + c.num_wires() );
      direct = run_gates( c, direct );
      std::copy( direct.begin(), direct.end(), expect.begin() );
      const auto r = eval( univ, universal_input( enc, y ), { false, false } );
      const bool same = std::equal( expect.begin(), expect.end(), r.wire_outputs.begin() ) && r.answer == expect[0];
      if ( !same && bad.empty() )
      {
        bad = join_values( y );
      }
      ok = ok && same;
    }
    run.check( "universal-agreement", i, ok, [&] {
      return comment( "univ", std::to_string( m ) + " " + std::to_string( n ) ) + comment( "data", bad ) +
             serialize_circuit( c );
    } );
  } );
}

// ---------------------------------------------------------------------------
// trilower
// ---------------------------------------------------------------------------

inline void suite_trilower( SuiteRun& run )
{
  // (p, q, p and q, p or q) over the chain 0 < * < 1
  static constexpr std::array<std::array<char, 4>, 9> table{ {
      { '0', '0', '0', '0' },
      { '0', '*', '0', '*' },
      { '0', '1', '0', '1' },
      { '*', '0', '0', '*' },
      { '*', '*', '*', '*' },
      { '*', '1', '*', '1' },
      { '1', '0', '0', '1' },
      { '1', '*', '*', '1' },
      { '1', '1', '1', '1' },
  } };
  for ( std::size_t row = 0; row < table.size(); ++row )
  {
    run.guarded( "gate-table", row, [&] {
      const auto& t = table[row];
      const Circuit c( 2, { Annotation::input( 0 ), Annotation::input( 1 ) }, { Gate::comparator( 0, 1 ) }, 0 );
      const std::vector<Tri> x{ *tri_from_char( t[0] ), *tri_from_char( t[1] ) };
      const auto direct = eval_tri( c, x, false ).wire_outputs;
      const auto rl = tri_to_bool( c, x );
      const auto lowered = eval( rl.circuit, std::span<const Bit>{}, { false, false } ).wire_outputs;
      const auto lo = decode_rails( lowered[rl.low( 0 )], lowered[rl.high( 0 )] );
      const auto hi = decode_rails( lowered[rl.low( 1 )], lowered[rl.high( 1 )] );
      const bool ok = to_char( direct[0] ) == t[2] && to_char( direct[1] ) == t[3] && to_char( lo ) == t[2] &&
                      to_char( hi ) == t[3];
      run.check( "gate-table", row, ok, [&] {
        return comment( "row", std::string( t.begin(), t.end() ) ) + serialize_circuit( rl.circuit );
      } );
    } );
  }

  run.each_case( "rail-decode", [&]( std::size_t i ) {
    auto rng = run.rng( "trilower", i );
    CircuitParams p;
    p.m_max = 5;
    p.g_max = 12;
    p.annotations = AnnotationMode::mixed;
    p.inputs = 1 + rng.below( 5 );
    const auto c = gen_circuit( rng, p );
    const auto x = gen_tris( rng, c.input_arity() );
    const auto want = eval_tri( c, x, false );
    const auto rl = detail::lower_rails( c, x );
    const auto r = eval( rl.circuit, std::span<const Bit>{}, { false, true } );

    // each gate lowers to a low and a high comparator; between the two the
    // rails may cross, so the order is checked after every whole gate
    bool ordered = r.trace.snapshots.size() == 2 * c.gates().size() + 1;
    for ( std::size_t k = 0; k < r.trace.snapshots.size() && ordered; k += 2 )
    {
      const auto& snap = r.trace.snapshots[k];
      for ( std::size_t w = 0; w < c.num_wires(); ++w )
      {
        ordered = ordered && snap[rl.low( w )] <= snap[rl.high( w )];
      }
    }
    bool decoded = ordered;
    for ( std::size_t w = 0; w < c.num_wires() && decoded; ++w )
    {
      decoded = decode_rails( r.wire_outputs[rl.low( w )], r.wire_outputs[rl.high( w )] ) == want.wire_outputs[w];
    }
    const auto full = tri_to_bool( c, x );
    const auto answer = eval( full.circuit, std::span<const Bit>{}, { false, false } ).answer;
    const bool answer_ok = answer == ( want.answer == Tri::one ? 1 : 0 );
    auto cex = [&] { return comment( "tri", join_values( x ) ) + serialize_circuit( c ); };
    run.check( "rail-order", i, ordered, cex );
    run.check( "rail-decode", i, decoded, cex );
    run.check( "rail-answer", i, answer_ok, cex );
  } );
}

// ---------------------------------------------------------------------------
// reductions
// ---------------------------------------------------------------------------

inline Circuit constant_circuit( Rng& rng, bool with_neg )
{
  CircuitParams p;
  p.m_max = 6;
  p.g_max = 12;
  p.with_neg = with_neg;
  p.annotations = AnnotationMode::constants;
  return gen_circuit( rng, p );
}

/// Graph with at least one top and one edge, so both decisions are defined.
inline BipartiteGraph decision_graph( Rng& rng )
{
  auto g = gen_bipartite( rng, 6, 6, 150 + rng.below( 700 ) );
  if ( g.num_top() == 0 )
  {
    g.add_top();
  }
  if ( g.num_bottom() == 0 )
  {
    g.add_bottom();
  }
  if ( g.num_edges() == 0 )
  {
    g.add_edge( rng.below( g.num_bottom() ), rng.below( g.num_top() ) );
  }
  return g;
}

inline void suite_reductions( SuiteRun& run )
{
  const bool mutated = run.options().mutation == Mutation::swap_gate_bottoms;

  run.each_case( "ccv-to-3vlfmm", [&]( std::size_t i ) {
    auto rng = run.rng( "ccv-to-3vlfmm", i );
    const auto c = constant_circuit( rng, false );
    const auto up = normalize_up( c );
    const auto red = detail::build_3vlfmm( up.circuit, mutated );
    const auto want = ccv_value( c );
    const auto got = vlfmm_decision( red.instance.graph, red.instance.target_top );
    auto cex = [&] { return comment( "expected", std::to_string( want ) ) + serialize_circuit( c ); };
    run.check( "ccv-to-3vlfmm", i, got == want, cex );
    run.check( "ccv-to-3vlfmm-degree", i, max_degree( red.instance.graph ) <= 3, cex );
  } );

  run.each_case( "vlfmm-to-ccv", [&]( std::size_t i ) {
    auto rng = run.rng( "vlfmm-to-ccv", i );
    const auto g = decision_graph( rng );
    const auto t = rng.below( g.num_top() );
    const auto c = vlfmm_to_ccv( g, t, rng.below( 2 ) == 1 );
    run.check( "vlfmm-to-ccv", i, ccv_value( c ) == vlfmm_decision( g, t ),
               [&] { return serialize_graph( GraphFile{ g, {}, t } ); } );
  } );

  run.each_case( "ccv-to-3lfmm", [&]( std::size_t i ) {
    auto rng = run.rng( "ccv-to-3lfmm", i );
    const auto c = constant_circuit( rng, false );
    const auto up = normalize_up( c );
    const auto inst = vlfmm_to_lfmm( detail::build_3vlfmm( up.circuit, mutated ).instance );
    auto cex = [&] { return serialize_circuit( c ); };
    run.check( "ccv-to-3lfmm", i, lfmm_decision( inst.graph, inst.target_edge ) == ccv_value( c ), cex );
    run.check( "ccv-to-3lfmm-degree", i, max_degree( inst.graph ) <= 3, cex );
  } );

  run.each_case( "lfmm-to-ccvneg", [&]( std::size_t i ) {
    auto rng = run.rng( "lfmm-to-ccvneg", i );
    const auto g = decision_graph( rng );
    const auto edges = g.edges();
    const auto e = edges[rng.below( edges.size() )];
    const auto lc = lfmm_to_ccvneg( g, e, rng.below( 2 ) == 1 );
    run.check( "lfmm-to-ccvneg", i, ccv_value( lc.circuit ) == lfmm_decision( g, e ),
               [&] { return serialize_graph( GraphFile{ g, e, {} } ); } );
  } );

  run.each_case( "ccvneg-to-ccv", [&]( std::size_t i ) {
    auto rng = run.rng( "ccvneg-to-ccv", i );
    const auto c = constant_circuit( rng, true );
    const auto want = eval( c, std::span<const Bit>{}, { true, false } ).wire_outputs;
    const auto dr = ccvneg_to_ccv( c );
    const auto got = eval( dr.circuit, std::span<const Bit>{}, { false, false } ).wire_outputs;
    bool ok = !dr.circuit.has_negations() && got[dr.scratch()] == 0;
    for ( std::size_t w = 0; w < c.num_wires(); ++w )
    {
      ok = ok && got[dr.rail( w )] == want[w] && got[dr.bar( w )] == ( want[w] ^ 1u );
    }
    run.check( "ccvneg-to-ccv", i, ok, [&] { return serialize_circuit( c ); } );
  } );

  run.each_case( "normalize-down", [&]( std::size_t i ) {
    auto rng = run.rng( "normalize-down", i );
    CircuitParams p;
    p.m_max = 6;
    p.g_max = 12;
    p.annotations = AnnotationMode::mixed;
    p.inputs = 1 + rng.below( 4 );
    const auto c = gen_circuit( rng, p );
    const auto nd = normalize_down( c );
    bool ok = std::all_of( nd.circuit.gates().begin(), nd.circuit.gates().end(),
                           []( const Gate& g ) { return g.is_dummy() || g.points_down(); } );
    ok = ok && nd.circuit.output_wire() == nd.wire_map[c.output_wire()];
    const auto k = c.input_arity();
    std::vector<Bit> x( k );
    for ( std::size_t r = 0; r < ( std::size_t{ 1 } << k ) && ok; ++r )
    {
      for ( std::size_t b = 0; b < k; ++b )
      {
        x[b] = ( r >> b ) & 1u;
      }
      const auto a = eval( c, x, { false, false } ).wire_outputs;
      const auto b = eval( nd.circuit, x, { false, false } ).wire_outputs;
      for ( std::size_t w = 0; w < c.num_wires(); ++w )
      {
        ok = ok && a[w] == b[nd.wire_map[w]];
      }
    }
    run.check( "normalize-down", i, ok, [&] { return serialize_circuit( c ); } );
  } );

  run.each_case( "dual", [&]( std::size_t i ) {
    auto rng = run.rng( "dual", i );
    CircuitParams p;
    p.m_max = 6;
    p.g_max = 12;
    p.annotations = AnnotationMode::mixed;
    p.inputs = 1 + rng.below( 4 );
    const auto c = gen_circuit( rng, p );
    const auto d = dual( c );
    const auto k = c.input_arity();
    bool ok = true;
    std::vector<Bit> x( k );
    for ( std::size_t r = 0; r < ( std::size_t{ 1 } << k ) && ok; ++r )
    {
      for ( std::size_t b = 0; b < k; ++b )
      {
        x[b] = ( r >> b ) & 1u;
      }
      const auto a = eval( c, x, { false, false } ).wire_outputs;
      const auto b = eval( d, x, { false, false } ).wire_outputs;
      for ( std::size_t w = 0; w < c.num_wires(); ++w )
      {
        ok = ok && b[w] == ( a[w] ^ 1u );
      }
    }
    run.check( "dual", i, ok, [&] { return serialize_circuit( c ); } );
  } );

  run.each_case( "lfmm3-to-sm", [&]( std::size_t i ) {
    auto rng = run.rng( "lfmm3-to-sm", i );
    const auto g = gen_bounded_bipartite( rng, 5, 3 );
    const auto inst = lfmm3_to_sm( g );
    const auto wife = gale_shapley( inst ).marriage.wife;
    const auto mt = lfm_matching( g );
    bool ok = true;
    for ( const auto& [b, t] : g.edges() )
    {
      ok = ok && ( wife[b] == t ) == mt.contains( { b, t } );
    }
    run.check( "lfmm3-to-sm", i, ok, [&] { return serialize_graph( g ); } );
  } );
}

// ---------------------------------------------------------------------------
// stable marriage
// ---------------------------------------------------------------------------

inline void suite_sm_ladder( SuiteRun& run )
{
  const auto step_cases = ceil_div( run.cases(), 3 );
  run.each_case( "sm-ladder", [&]( std::size_t i ) {
    auto rng = run.rng( "sm-ladder", i );
    const bool steps = i < step_cases;
    const auto n = static_cast<std::size_t>( rng.between( 1, steps ? 5 : 6 ) );
    const auto inst = gen_sm( rng, n );
    auto cex = [&] { return serialize_sm( inst ); };

    const auto gs = gale_shapley( inst );
    const auto sym = symmetric_gs( inst );
    const auto iv = interval_run( inst );
    const auto div = delayed_interval_run( inst );
    const auto il = interval_logic_run( inst );
    const auto sub = subramanian_run( inst );
    const auto wopt = gale_shapley( inst.swapped() ).marriage.swapped();

    const auto& man = gs.marriage;
    run.check( "man-optimal-agree", i,
               sym.man_opt == man && iv.man_opt == man && div.man_opt == man && il.man_opt == man &&
                   sub.man_opt == man,
               cex );
    run.check( "woman-optimal-agree", i,
               sym.woman_opt == wopt && iv.woman_opt == wopt && div.woman_opt == wopt && il.woman_opt == wopt &&
                   sub.woman_opt == wopt,
               cex );
    const auto n2 = n * n;
    run.check( "round-bounds", i,
               gs.rounds <= n2 && sym.rounds <= n2 && iv.rounds <= 2 * n2 && div.rounds <= 2 * n2 &&
                   il.rounds <= 2 * n2 && sub.rounds <= 2 * n2,
               [&] {
                 return comment( "rounds", std::to_string( gs.rounds ) + " " + std::to_string( sym.rounds ) + " " +
                                               std::to_string( iv.rounds ) + " " + std::to_string( div.rounds ) +
                                               " " + std::to_string( il.rounds ) + " " +
                                               std::to_string( sub.rounds ) ) +
                        serialize_sm( inst );
               } );
    if ( steps )
    {
      bool same = div.steps.size() == il.steps.size();
      for ( std::size_t s = 0; s < div.steps.size() && same; ++s )
      {
        same = matrix_of_intervals( inst, div.steps[s] ) == il.steps[s] &&
               intervals_of_matrix( inst, il.steps[s] ) == div.steps[s];
      }
      run.check( "per-step-matrix", i, same, cex );
    }
    if ( n <= 5 )
    {
      const auto all = all_stable_marriages( inst );
      bool best = !all.empty();
      for ( const auto& s : all )
      {
        const auto sh = s.husbands();
        const auto mh = man.husbands();
        const auto wh = wopt.husbands();
        for ( std::size_t p = 0; p < n; ++p )
        {
          best = best && inst.man_rank( p, man.wife[p] ) <= inst.man_rank( p, s.wife[p] );
          best = best && inst.woman_rank( p, wh[p] ) <= inst.woman_rank( p, sh[p] );
          best = best && inst.man_rank( p, wopt.wife[p] ) >= inst.man_rank( p, s.wife[p] );
          best = best && inst.woman_rank( p, mh[p] ) >= inst.woman_rank( p, sh[p] );
        }
      }
      run.check( "optimal-over-all-stable", i, best, cex );
    }
  } );
}

/// Calls `visit` for every assignment of `radix[d]` choices to each digit,
/// passing the highest digit that changed; digits below it changed too.
/// The first call reports the top digit so callers write every cell once.
/// `radix` must be non-empty.
inline void odometer( const std::vector<std::size_t>& radix, std::vector<std::size_t>& digit,
                      const std::function<void( std::size_t changed )>& visit )
{
  digit.assign( radix.size(), 0 );
  visit( radix.size() - 1 );
  while ( true )
  {
    std::size_t d = 0;
    while ( d < radix.size() && ++digit[d] == radix[d] )
    {
      digit[d] = 0;
      ++d;
    }
    if ( d == radix.size() )
    {
      return;
    }
    visit( d );
  }
}

/// Every 0/1 feasible pair. For n <= 3 all 2^(2n^2) matrices are tried;
/// beyond that only monotone rows, which the fixed-point equations force
/// (each entry is bounded by its predecessor in rank order).
inline std::vector<MatrixPair> enumerate_feasible( const SMInstance& inst )
{
  const auto n = inst.n();
  std::vector<MatrixPair> found;
  auto mp = MatrixPair::filled( n, Tri::zero );
  std::vector<std::size_t> digit;
  if ( n <= 3 )
  {
    const std::vector<std::size_t> radix( 2 * n * n, 2 );
    auto cell = [&]( std::size_t d ) -> Tri& {
      const auto side = d / ( n * n ), p = ( d / n ) % n, q = d % n;
      return side == 0 ? mp.mm[p][q] : mp.ww[p][q];
    };
    odometer( radix, digit, [&]( std::size_t changed ) {
      for ( std::size_t d = 0; d <= changed; ++d )
      {
        cell( d ) = digit[d] ? Tri::one : Tri::zero;
      }
      if ( is_feasible_pair( inst, mp ) )
      {
        found.push_back( mp );
      }
    } );
    return found;
  }
  // digit p < n: man p has `digit` leading ones; digit n + w: woman w has `digit` leading zeros
  const std::vector<std::size_t> radix( 2 * n, n + 1 );
  odometer( radix, digit, [&]( std::size_t changed ) {
    for ( std::size_t d = 0; d <= changed; ++d )
    {
      const auto p = d % n;
      for ( std::size_t r = 0; r < n; ++r )
      {
        if ( d < n )
        {
          mp.mm[p][inst.man_choice( p, r )] = r < digit[d] ? Tri::one : Tri::zero;
        }
        else
        {
          mp.ww[p][inst.woman_choice( p, r )] = r < digit[d] ? Tri::zero : Tri::one;
        }
      }
    }
    if ( is_feasible_pair( inst, mp ) )
    {
      found.push_back( mp );
    }
  } );
  return found;
}

inline void suite_feasible( SuiteRun& run )
{
  run.each_case( "feasible-count", [&]( std::size_t i ) {
    auto rng = run.rng( "feasible", i );
    const auto n = static_cast<std::size_t>( rng.between( 1, 4 ) );
    const auto inst = gen_sm( rng, n );
    auto cex = [&] { return serialize_sm( inst ); };
    const auto stable = all_stable_marriages( inst );
    const auto feasible = enumerate_feasible( inst );
    run.check( "feasible-count", i, stable.size() == feasible.size(), [&] {
      return comment( "counts", std::to_string( stable.size() ) + " " + std::to_string( feasible.size() ) ) +
             serialize_sm( inst );
    } );
    bool there = true;
    for ( const auto& s : stable )
    {
      const auto mp = marriage_to_feasible( inst, s );
      there = there && is_feasible_pair( inst, mp ) && feasible_to_marriage( inst, mp ) == s;
    }
    run.check( "marriage-roundtrip", i, there, cex );
    bool back = true;
    for ( const auto& mp : feasible )
    {
      const auto s = feasible_to_marriage( inst, mp );
      back = back && is_stable( inst, s ) && marriage_to_feasible( inst, s ) == mp;
    }
    run.check( "feasible-roundtrip", i, back, cex );
  } );
}

inline void suite_sm_to_ccv( SuiteRun& run )
{
  run.each_case( "mosm-to-ccv", [&]( std::size_t i ) {
    auto rng = run.rng( "sm-to-ccv", i );
    const auto n = static_cast<std::size_t>( rng.between( 1, 4 ) );
    const auto inst = gen_sm( rng, n );
    const auto sw = inst.swapped();
    const auto man = gale_shapley( inst ).marriage;
    const auto woman = gale_shapley( sw ).marriage.swapped();
    bool mo = true, wo = true, mo_sw = true, wo_sw = true;
    std::string where;
    for ( std::size_t m = 0; m < n; ++m )
    {
      for ( std::size_t w = 0; w < n; ++w )
      {
        const bool a = ccv_value( mosm_to_ccv( inst, m, w ) ) == ( man.wife[m] == w );
        const bool b = ccv_value( wosm_to_ccv( inst, m, w ) ) == ( woman.wife[m] == w );
        // in the swapped instance woman w plays man w
        const bool c = ccv_value( mosm_to_ccv( sw, w, m ) ) == ( woman.wife[m] == w );
        const bool d = ccv_value( wosm_to_ccv( sw, w, m ) ) == ( man.wife[m] == w );
        if ( !( a && b && c && d ) && where.empty() )
        {
          where = std::to_string( m ) + " " + std::to_string( w );
        }
        mo = mo && a;
        wo = wo && b;
        mo_sw = mo_sw && c;
        wo_sw = wo_sw && d;
      }
    }
    auto cex = [&] { return comment( "pair", where ) + serialize_sm( inst ); };
    run.check( "mosm-to-ccv", i, mo, cex );
    run.check( "wosm-to-ccv", i, wo, cex );
    run.check( "mosm-to-ccv-swapped", i, mo_sw, cex );
    run.check( "wosm-to-ccv-swapped", i, wo_sw, cex );

    const auto sc = sm_to_tri_circuit( inst );
    const auto values = eval_tri( sc.instance.circuit, sc.instance.inputs, false ).wire_outputs;
    run.check( "tri-unrolling", i, decode_sm_matrices( sc, values ) == subramanian_run( inst ).final_state, cex );
  } );
}

// ---------------------------------------------------------------------------
// reachability
// ---------------------------------------------------------------------------

inline void suite_reach( SuiteRun& run )
{
  run.each_case( "layered-reach", [&]( std::size_t i ) {
    auto rng = run.rng( "reach", i );
    const auto g = gen_digraph( rng, 8, 100 + rng.below( 400 ) );
    const auto n = g.num_nodes();
    const auto src = rng.below( n );
    const auto want = reachable_set( g, src );
    const auto lg = layer( g, src );
    const auto c = reach_to_ccv( lg.graph, 0 );
    const auto out = eval( c, std::span<const Bit>{} ).wire_outputs;
    const auto total = n * n;
    bool ok = lg.graph.is_forward();
    for ( std::size_t v = 0; v < n; ++v )
    {
      ok = ok && out[pebble_node_wire( total, lg.node( v, n - 1 ) )] == ( want[v] ? 1 : 0 );
    }
    const auto ones = static_cast<std::size_t>( std::count( out.begin(), out.end(), Bit{ 1 } ) );
    auto cex = [&] { return comment( "source", std::to_string( src ) ) + serialize_digraph( g ); };
    run.check( "layered-reach", i, ok, cex );
    run.check( "pebble-conservation", i, ones == total, cex );
  } );

  run.each_case( "forward-reach", [&]( std::size_t i ) {
    auto rng = run.rng( "reach-forward", i );
    const auto g = gen_digraph( rng, 8, 100 + rng.below( 500 ), true );
    const auto n = g.num_nodes();
    const auto want = reachable_set( g, 0 );
    const auto target = rng.below( n );
    const auto r = eval( reach_to_ccv( g, target ), std::span<const Bit>{} );
    bool ok = r.answer == ( want[target] ? 1 : 0 );
    for ( std::size_t v = 0; v < n; ++v )
    {
      ok = ok && r.wire_outputs[pebble_node_wire( n, v )] == ( want[v] ? 1 : 0 );
    }
    run.check( "forward-reach", i, ok, [&] { return serialize_digraph( g ); } );
  } );
}

// ---------------------------------------------------------------------------
// structural invariants
// ---------------------------------------------------------------------------

inline void suite_structural( SuiteRun& run )
{
  run.each_case( "popcount", [&]( std::size_t i ) {
    auto rng = run.rng( "structural", i );
    CircuitParams p;
    p.m_max = 8;
    p.g_max = 16;
    const auto c = gen_circuit( rng, p );
    const auto f = circuit_function( c );
    auto cex = [&] { return serialize_circuit( c ); };

    bool conserve = true, mono = true;
    for ( std::size_t x = 0; x < f.rows.size(); ++x )
    {
      conserve = conserve && std::popcount( x ) == std::popcount( f.rows[x] );
      for ( std::size_t b = 0; b < f.in_bits; ++b )
      {
        if ( !( ( x >> b ) & 1u ) )
        {
          const auto up = f.rows[x | ( std::size_t{ 1 } << b )];
          mono = mono && ( f.rows[x] & ~up ) == 0;
        }
      }
    }
    run.check( "popcount", i, conserve, cex );
    run.check( "monotone", i, mono, cex );
    run.check( "strict-lipschitz", i, is_one_lipschitz( f, true ), cex );

    bool refined = true;
    for ( int trial = 0; trial < 8; ++trial )
    {
      const auto t = gen_tris( rng, c.num_wires() );
      std::vector<Bit> b( t.size() );
      for ( std::size_t w = 0; w < t.size(); ++w )
      {
        b[w] = t[w] == Tri::star ? static_cast<Bit>( rng.below( 2 ) ) : ( t[w] == Tri::one ? 1 : 0 );
      }
      const auto coarse = run_gates_tri( c, t );
      const auto fine = run_gates( c, b );
      for ( std::size_t w = 0; w < t.size(); ++w )
      {
        refined = refined && refines( coarse[w], to_tri( fine[w] ) );
      }
    }
    run.check( "tri-refinement", i, refined, cex );

    if ( i % 10 == 0 )
    {
      CircuitParams wide;
      wide.m_min = 9;
      wide.m_max = 10;
      wide.g_max = 20;
      const auto big = gen_circuit( rng, wide );
      run.check( "strict-lipschitz-wide", i, is_one_lipschitz( circuit_function( big ), true ),
                 [&] { return serialize_circuit( big ); } );
    }
  } );
}

inline std::string table_text( const TruthTable& f )
{
  std::string s = "# table " + std::to_string( f.in_bits ) + " " + std::to_string( f.out_bits ) + ":";
  for ( auto r : f.rows )
  {
    s += " " + std::to_string( r );
  }
  return s + "\n";
}

inline bool strictify_ok( const TruthTable& f )
{
  const auto g = strictify( f );
  bool ok = is_one_lipschitz( g, true ) && drop_output( g, f.out_bits ) == f;
  for ( std::size_t x = 0; x < g.rows.size() && ok; ++x )
  {
    ok = parity( x ) == parity( g.rows[x] );
  }
  return ok;
}

inline void suite_strictify( SuiteRun& run )
{
  if ( run.cases() == 0 )
  {
    return;
  }
  // every table with in_bits <= 4 and 2^in_bits * out_bits <= 16 cells
  std::size_t index = 0;
  for ( std::size_t in = 0; in <= 4; ++in )
  {
    const auto rows = std::size_t{ 1 } << in;
    for ( std::size_t out = 0; rows * out <= 16; ++out )
    {
      const auto total = std::uint64_t{ 1 } << ( rows * out );
      for ( std::uint64_t code = 0; code < total; ++code, ++index )
      {
        std::vector<std::uint64_t> values( rows );
        for ( std::size_t x = 0; x < rows; ++x )
        {
          values[x] = ( code >> ( x * out ) ) & ( ( std::uint64_t{ 1 } << out ) - 1 );
        }
        const TruthTable f( in, out, std::move( values ) );
        if ( !is_one_lipschitz( f, false ) )
        {
          continue;
        }
        run.guarded( "exhaustive", index, [&] {
          run.check( "exhaustive", index, strictify_ok( f ), [&] { return table_text( f ); } );
        } );
      }
    }
  }

  run.each_case( "circuit-derived", [&]( std::size_t i ) {
    auto rng = run.rng( "strictify", i );
    CircuitParams p;
    p.m_max = 4;
    p.g_max = 8;
    const auto c = gen_circuit( rng, p );
    auto f = circuit_function( c );
    // dropping outputs turns a strict table into a weak one
    const auto drops = rng.below( f.out_bits );
    for ( std::uint64_t d = 0; d < drops; ++d )
    {
      f = drop_output( f, rng.below( f.out_bits ) );
    }
    run.check( "circuit-derived", i, strictify_ok( f ), [&] { return table_text( f ) + serialize_circuit( c ); } );
  } );
}

// ---------------------------------------------------------------------------
// formats
// ---------------------------------------------------------------------------

/// Same content with comments, blank lines and extra blanks sprinkled in.
inline std::string noisy( const std::string& canonical, Rng& rng )
{
  std::istringstream in( canonical );
  std::string line, out;
  while ( std::getline( in, line ) )
  {
    if ( rng.chance( 200 ) )
    {
      out += "# note\n\n";
    }
    std::string spaced;
    for ( char ch : line )
    {
      spaced += ch == ' ' && rng.chance( 300 ) ? std::string( "  \t" ) : std::string( 1, ch );
    }
    out += spaced + ( rng.chance( 200 ) ? "   # trailing\n" : "\n" );
  }
  return out;
}

template<class T, class Parse, class Print>
void roundtrip( SuiteRun& run, const std::string& name, std::size_t i, Rng& rng, const T& value, Parse parse,
                Print print )
{
  const auto text = print( value );
  const auto back = parse( text );
  const bool ok = back == value && print( back ) == text && parse( noisy( text, rng ) ) == value;
  run.check( name, i, ok, [&] { return text; } );
}

/// Hash over the first instances of every generator for seed 1.
inline std::uint64_t generator_stream_hash()
{
  std::string all;
  for ( std::size_t i = 0; i < 4; ++i )
  {
    auto rng = Rng::for_case( 1, "stream", i );
    CircuitParams p;
    p.with_neg = true;
    p.annotations = AnnotationMode::mixed;
    all += serialize_circuit( gen_circuit( rng, p ) );
    all += serialize_graph( gen_bipartite( rng, 5, 5, 400 ) );
    all += serialize_sm( gen_sm( rng, 1 + rng.below( 5 ) ) );
    all += serialize_digraph( gen_digraph( rng, 6, 300 ) );
  }
  return fnv( all );
}

inline constexpr std::uint64_t published_stream_hash = 15410813190071406449ULL;

inline Report run_suite_impl( const std::string& name, std::size_t cases, std::uint64_t seed, SuiteOptions options );

inline void suite_formats( SuiteRun& run, std::uint64_t seed )
{
  if ( run.cases() > 0 )
  {
    for ( std::size_t k = 0; k < fixtures::all.size(); ++k )
    {
      const auto& fx = fixtures::all[k];
      run.guarded( "fixture-roundtrip", k, [&] {
        const std::string text( fx.text );
        std::string again;
        if ( text.rfind( "CCV", 0 ) == 0 )
        {
          again = serialize_circuit( parse_circuit( text ) );
        }
        else if ( text.rfind( "GRAPH", 0 ) == 0 )
        {
          again = serialize_graph( parse_graph( text ) );
        }
        else
        {
          again = serialize_digraph( parse_digraph( text ) );
        }
        run.check( "fixture-roundtrip", k, again == text, [&] { return comment( "file", std::string( fx.file ) ) + text; } );
      } );
    }
    run.guarded( "generator-hash", 0, [&] {
      const auto h = generator_stream_hash();
      run.check( "generator-hash", 0, h == published_stream_hash, [&] { return comment( "hash", std::to_string( h ) ); } );
    } );
    run.guarded( "determinism", 0, [&] {
      const auto a = run_suite_impl( "universal", 5, seed, {} ).text();
      const auto b = run_suite_impl( "universal", 5, seed, {} ).text();
      const auto other = run_suite_impl( "universal", 5, seed + 1, {} );
      run.check( "determinism", 0, a == b && other.passed(), [&] { return a + b; } );
    } );
  }

  run.each_case( "circuit-roundtrip", [&]( std::size_t i ) {
    auto rng = run.rng( "formats-circuit", i );
    CircuitParams p;
    p.m_max = 8;
    p.g_max = 16;
    p.with_neg = true;
    p.annotations = AnnotationMode::mixed;
    p.inputs = 1 + rng.below( 8 );
    roundtrip( run, "circuit-roundtrip", i, rng, gen_circuit( rng, p ), parse_circuit,
               []( const Circuit& c ) { return serialize_circuit( c ); } );
  } );
  run.each_case( "graph-roundtrip", [&]( std::size_t i ) {
    auto rng = run.rng( "formats-graph", i );
    GraphFile f{ gen_bipartite( rng, 8, 8, rng.below( 1001 ) ), {}, {} };
    const auto edges = f.graph.edges();
    if ( !edges.empty() && rng.chance( 400 ) )
    {
      f.target_edge = edges[rng.below( edges.size() )];
    }
    else if ( f.graph.num_top() > 0 && rng.chance( 500 ) )
    {
      f.target_top = rng.below( f.graph.num_top() );
    }
    roundtrip( run, "graph-roundtrip", i, rng, f, parse_graph, []( const GraphFile& g ) { return serialize_graph( g ); } );
  } );
  run.each_case( "sm-roundtrip", [&]( std::size_t i ) {
    auto rng = run.rng( "formats-sm", i );
    roundtrip( run, "sm-roundtrip", i, rng, gen_sm( rng, 1 + rng.below( 6 ) ), parse_sm,
               []( const SMInstance& s ) { return serialize_sm( s ); } );
  } );
  run.each_case( "digraph-roundtrip", [&]( std::size_t i ) {
    auto rng = run.rng( "formats-digraph", i );
    roundtrip( run, "digraph-roundtrip", i, rng, gen_digraph( rng, 8, rng.below( 1001 ) ), parse_digraph,
               []( const Digraph& g ) { return serialize_digraph( g ); } );
  } );
}

inline Report run_suite_impl( const std::string& name, std::size_t cases, std::uint64_t seed, SuiteOptions options )
{
  Report report{ name, cases, seed, {} };
  SuiteRun run( report, cases, seed, options );
  if ( cases == 0 )
  {
    return report;
  }
  if ( name == "golden" )
  {
    suite_golden( run );
  }
  else if ( name == "universal" )
  {
    suite_universal( run );
  }
  else if ( name == "trilower" )
  {
    suite_trilower( run );
  }
  else if ( name == "reductions" )
  {
    suite_reductions( run );
  }
  else if ( name == "sm-ladder" )
  {
    suite_sm_ladder( run );
  }
  else if ( name == "feasible" )
  {
    suite_feasible( run );
  }
  else if ( name == "sm-to-ccv" )
  {
    suite_sm_to_ccv( run );
  }
  else if ( name == "reach" )
  {
    suite_reach( run );
  }
  else if ( name == "structural" )
  {
    suite_structural( run );
  }
  else if ( name == "strictify" )
  {
    suite_strictify( run );
  }
  else if ( name == "formats" )
  {
    suite_formats( run, seed );
  }
  return report;
}

} // namespace detail

/* Runs suite `name` over `cases` seeded instances per property.
 *
 * Fixed checks (golden fixtures, gate tables, exhaustive tables, fixtures) run
 * whenever `cases > 0`; `cases == 0` yields an empty, passing report.
 * Throws UnknownSuite for names outside suite_names().
 */
inline Report run_suite( const std::string& name, std::size_t cases, std::uint64_t seed, SuiteOptions options = {} )
{
  const auto& names = suite_names();
  if ( std::find( names.begin(), names.end(), name ) == names.end() )
  {
    detail::fail( ErrorKind::unknown_suite, "unknown suite '" + name + "'" );
  }
  return detail::run_suite_impl( name, cases, seed, options );
}

} // namespace compcirc
