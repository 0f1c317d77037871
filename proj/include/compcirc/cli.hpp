#pragma once

// The `compcirc` command line, as a function over streams.
//
// Exit status: 0 success, 1 decision answered "no" (lfmm, gs, reach) or a
// failing verify suite, 2 usage, parse or precondition error, 3 internal
// invariant violation. File arguments accept `-` for stdin/stdout.

#include "circuit.hpp"
#include "io_formats.hpp"
#include "matching.hpp"
#include "reachability.hpp"
#include "reductions.hpp"
#include "stable_marriage.hpp"
#include "universal.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace compcirc
{

enum ExitStatus : int
{
  exit_ok = 0,
  exit_false = 1,
  exit_usage = 2,
  exit_internal = 3
};

/// Default case counts for `verify` when `--cases` is omitted.
inline std::size_t default_cases( const std::string& suite )
{
  static const std::map<std::string, std::size_t> counts{
      { "golden", 1 },     { "universal", 500 }, { "trilower", 300 },   { "reductions", 500 },
      { "sm-ladder", 300 }, { "feasible", 200 },  { "sm-to-ccv", 100 },  { "reach", 300 },
      { "structural", 1000 }, { "strictify", 200 }, { "formats", 200 } };
  const auto it = counts.find( suite );
  return it == counts.end() ? 0 : it->second;
}

inline const std::vector<std::string>& reduce_passes()
{
  static const std::vector<std::string> passes{
      "normalize-down", "dual",          "neg-elim",    "tri-lower",   "ccv-to-3vlfmm",
      "vlfmm-to-ccv",   "ccv-to-3lfmm",  "lfmm-to-ccvneg", "lfmm3-to-sm", "mosm-to-ccv",
      "wosm-to-ccv",    "reach-to-ccv",  "universal" };
  return passes;
}

namespace detail
{

struct Io
{
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  std::string read( const std::string& path ) const
  {
    if ( path == "-" )
    {
      return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
    }
    std::ifstream file( path, std::ios::binary );
    if ( !file )
    {
      throw Error( ErrorKind::bad_shape, "cannot open '" + path + "'" );
    }
    return { std::istreambuf_iterator<char>( file ), std::istreambuf_iterator<char>() };
  }

  void write( const std::string& path, const std::string& text ) const
  {
    if ( path == "-" )
    {
      out << text;
      return;
    }
    std::ofstream file( path, std::ios::binary );
    if ( !file )
    {
      throw Error( ErrorKind::bad_shape, "cannot write '" + path + "'" );
    }
    file << text;
  }
};

inline std::vector<Bit> parse_bits( const std::string& s )
{
  std::vector<Bit> x;
  for ( char ch : s )
  {
    require( ch == '0' || ch == '1', ErrorKind::bad_shape, "--input expects a string over 0 and 1" );
    x.push_back( static_cast<Bit>( ch - '0' ) );
  }
  return x;
}

inline std::vector<Tri> parse_tris( const std::string& s )
{
  std::vector<Tri> x;
  for ( char ch : s )
  {
    const auto v = tri_from_char( ch );
    require( v.has_value(), ErrorKind::bad_shape, "--tri expects a string over 0, * and 1" );
    x.push_back( *v );
  }
  return x;
}

template<class V>
void print_outputs( std::ostream& out, const EvalResult<V>& r, bool trace )
{
  auto text = []( V v ) {
    if constexpr ( std::is_same_v<V, Tri> )
    {
      return to_char( v );
    }
    else
    {
      return static_cast<char>( '0' + v );
    }
  };
  if ( trace )
  {
    for ( std::size_t k = 1; k < r.trace.snapshots.size(); ++k )
    {
      out << "step " << k << " ";
      for ( auto v : r.trace.snapshots[k] )
      {
        out << text( v );
      }
      out << "\n";
    }
  }
  for ( std::size_t w = 0; w < r.wire_outputs.size(); ++w )
  {
    out << "w" << w << "=" << text( r.wire_outputs[w] ) << "\n";
  }
  out << "answer=" << text( r.answer ) << "\n";
}

/// Sidecar lines: `MAP v1`, `pass <name>`, then `<key> <values...>`.
class Sidecar
{
public:
  explicit Sidecar( const std::string& pass ) { out_ << "MAP v1\npass " << pass << "\n"; }

  template<class... T>
  Sidecar& line( const std::string& key, const T&... values )
  {
    out_ << key;
    ( ( out_ << " " << values ), ... );
    out_ << "\n";
    return *this;
  }

  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

struct ReduceArgs
{
  std::string pass, input, output;
  std::string tri;
  std::optional<std::size_t> man, woman, target, source, m, n;
};

struct Reduced
{
  std::string text;
  std::string map;
};

inline Reduced reduce( const ReduceArgs& a, const std::string& text )
{
  const auto& p = a.pass;
  Sidecar map( p );
  auto need = [&]( const std::optional<std::size_t>& v, const char* flag ) {
    require( v.has_value(), ErrorKind::bad_shape, "pass " + p + " needs " + flag );
    return *v;
  };

  if ( p == "normalize-down" )
  {
    const auto nd = normalize_down( parse_circuit( text ) );
    for ( std::size_t w = 0; w < nd.wire_map.size(); ++w )
    {
      map.line( "wire", w, nd.wire_map[w] );
    }
    return { serialize_circuit( nd.circuit ), map.str() };
  }
  if ( p == "dual" )
  {
    const auto c = parse_circuit( text );
    for ( std::size_t w = 0; w < c.num_wires(); ++w )
    {
      map.line( "wire", w, w );
    }
    return { serialize_circuit( dual( c ) ), map.str() };
  }
  if ( p == "neg-elim" )
  {
    const auto dr = ccvneg_to_ccv( parse_circuit( text ) );
    for ( std::size_t w = 0; w < dr.wires; ++w )
    {
      map.line( "wire", w, dr.rail( w ), dr.bar( w ) );
    }
    map.line( "scratch", dr.scratch() );
    return { serialize_circuit( dr.circuit ), map.str() };
  }
  if ( p == "tri-lower" )
  {
    const auto c = parse_circuit( text );
    const auto rl = tri_to_bool( c, parse_tris( a.tri ) );
    map.line( "tri", a.tri.empty() ? std::string( "-" ) : a.tri );
    for ( std::size_t w = 0; w < rl.wires; ++w )
    {
      map.line( "wire", w, rl.low( w ), rl.high( w ) );
    }
    return { serialize_circuit( rl.circuit ), map.str() };
  }
  if ( p == "ccv-to-3vlfmm" )
  {
    const auto c = parse_circuit( text );
    const auto r = ccv_to_3vlfmm_any( c );
    map.line( "wires", r.reduction.wires ).line( "layers", r.reduction.layers );
    map.line( "node", "layer*wires+wire" );
    for ( std::size_t w = 0; w < r.wire_map.size(); ++w )
    {
      map.line( "wire", w, r.wire_map[w], r.reduction.top( r.reduction.layers - 1, r.wire_map[w] ) );
    }
    return { serialize_graph( GraphFile{ r.reduction.instance.graph, {}, r.reduction.instance.target_top } ),
             map.str() };
  }
  if ( p == "vlfmm-to-ccv" )
  {
    const auto f = parse_graph( text );
    const auto t = f.target_top ? *f.target_top : need( a.target, "target-top in the file or --target" );
    const auto c = vlfmm_to_ccv( f.graph, t );
    for ( std::size_t j = 0; j < f.graph.num_top(); ++j )
    {
      map.line( "top", j, j );
    }
    for ( std::size_t b = 0; b < f.graph.num_bottom(); ++b )
    {
      map.line( "bottom", b, f.graph.num_top() + b );
    }
    return { serialize_circuit( c ), map.str() };
  }
  if ( p == "ccv-to-3lfmm" )
  {
    const auto inst = ccv_to_3lfmm( parse_circuit( text ) );
    map.line( "edge", inst.target_edge.first, inst.target_edge.second );
    return { serialize_graph( GraphFile{ inst.graph, inst.target_edge, {} } ), map.str() };
  }
  if ( p == "lfmm-to-ccvneg" )
  {
    const auto f = parse_graph( text );
    require( f.target_edge.has_value(), ErrorKind::bad_shape, "pass lfmm-to-ccvneg needs target-edge in the file" );
    const auto lc = lfmm_to_ccvneg( f.graph, *f.target_edge );
    for ( std::size_t j = 0; j < lc.tops; ++j )
    {
      map.line( "top", j, lc.full_top( j ), lc.minus_top( j ) );
    }
    for ( std::size_t b = 0; b < lc.bottoms; ++b )
    {
      map.line( "bottom", b, lc.full_bottom( b ), lc.minus_bottom( b ) );
    }
    return { serialize_circuit( lc.circuit ), map.str() };
  }
  if ( p == "lfmm3-to-sm" )
  {
    const auto f = parse_graph( text );
    const auto inst = lfmm3_to_sm( f.graph );
    for ( std::size_t b = 0; b < f.graph.num_bottom(); ++b )
    {
      map.line( "man", b, "bottom", b );
    }
    for ( std::size_t j = 0; j < f.graph.num_top(); ++j )
    {
      map.line( "woman", j, "top", j );
    }
    return { serialize_sm( inst ), map.str() };
  }
  if ( p == "mosm-to-ccv" || p == "wosm-to-ccv" )
  {
    const auto inst = parse_sm( text );
    const auto m = need( a.man, "--man" );
    const auto w = need( a.woman, "--woman" );
    const auto c = p == "mosm-to-ccv" ? mosm_to_ccv( inst, m, w ) : wosm_to_ccv( inst, m, w );
    map.line( "pair", m, w ).line( "output", c.output_wire() );
    return { serialize_circuit( c ), map.str() };
  }
  if ( p == "reach-to-ccv" )
  {
    const auto g = parse_digraph( text );
    const auto target = need( a.target, "--target" );
    require( target < g.num_nodes(), ErrorKind::index_out_of_range, "target out of range" );
    if ( !a.source && g.is_forward() )
    {
      const auto c = reach_to_ccv( g, target );
      for ( std::size_t v = 0; v < g.num_nodes(); ++v )
      {
        map.line( "node", v, pebble_feed_wire( g.num_nodes(), v ), pebble_node_wire( g.num_nodes(), v ) );
      }
      return { serialize_circuit( c ), map.str() };
    }
    const auto src = a.source.value_or( 0 );
    const auto lg = layer( g, src );
    const auto total = lg.graph.num_nodes();
    const auto c = reach_to_ccv( lg.graph, lg.node( target, g.num_nodes() - 1 ) );
    map.line( "layered", g.num_nodes() ).line( "source", src );
    for ( std::size_t v = 0; v < g.num_nodes(); ++v )
    {
      map.line( "node", v, pebble_node_wire( total, lg.node( v, g.num_nodes() - 1 ) ) );
    }
    return { serialize_circuit( c ), map.str() };
  }
  if ( p == "universal" )
  {
    const auto c = parse_circuit( text );
    const auto m = a.m.value_or( std::max<std::size_t>( 2, c.num_wires() ) );
    const auto n = a.n.value_or( c.gates().size() );
    const auto enc = encode_control( c, m, n );
    auto u = build_universal( m, n );
    const auto controls = enc.bits.size();
    // bake the control bits in; data wire d keeps the label x_d
    for ( std::size_t w = 0; w < u.num_wires(); ++w )
    {
      const auto an = u.annotation( w );
      if ( an.value < controls )
      {
        const Bit b = enc.bits[an.value];
        u.set_annotation( w, Annotation::constant( an.kind == Annotation::Kind::input ? b : b ^ 1u ) );
      }
      else
      {
        u.set_annotation( w, Annotation::input( an.value - controls ) );
      }
    }
    map.line( "m", m ).line( "n", n ).line( "controls", controls );
    return { serialize_circuit( u ), map.str() };
  }
  throw Error( ErrorKind::bad_shape, "unknown pass '" + p + "'" );
}

inline std::string sidecar_comment( const std::string& map )
{
  std::istringstream in( map );
  std::string line, out;
  while ( std::getline( in, line ) )
  {
    out += "# " + line + "\n";
  }
  return out;
}

inline void print_marriage( std::ostream& out, const char* title, const Marriage& mar )
{
  out << title << "\n";
  for ( std::size_t m = 0; m < mar.wife.size(); ++m )
  {
    out << "m" << m << " w" << mar.wife[m] << "\n";
  }
}

} // namespace detail

/* Runs the command line `args` (without the program name).
 *
 * Subcommands: eval, reduce, lfmm, gs, reach, verify. See the README for
 * the full syntax; `--help` on any subcommand prints its options.
 */
inline int run_cli( const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err )
{
  detail::Io io{ in, out, err };
  CLI::App app( "Comparator circuits, their reductions and verification suites", "compcirc" );
  app.require_subcommand( 1 );

  std::string file, input_bits, tri, suite;
  bool trace = false;
  std::optional<std::size_t> target, source;
  std::size_t alg = 1;
  std::optional<std::size_t> cases;
  std::uint64_t seed = 1;
  detail::ReduceArgs ra;

  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a circuit" );
  eval_cmd->add_option( "file", file, "circuit file or -" )->required();
  eval_cmd->add_option( "--input", input_bits, "input variable values over 0/1" );
  eval_cmd->add_option( "--tri", tri, "three-valued input values over 0/*/1" );
  eval_cmd->add_flag( "--trace", trace, "print wire values after every gate" );

  auto* reduce_cmd = app.add_subcommand( "reduce", "Run a reduction pass" );
  reduce_cmd->add_option( "pass", ra.pass, "pass name" )->required();
  reduce_cmd->add_option( "in", ra.input, "input file or -" )->required();
  reduce_cmd->add_option( "out", ra.output, "output file or -; the map goes to <out>.map" )->required();
  reduce_cmd->add_option( "--tri", ra.tri, "three-valued inputs for tri-lower" );
  reduce_cmd->add_option( "--man", ra.man, "man for mosm/wosm" );
  reduce_cmd->add_option( "--woman", ra.woman, "woman for mosm/wosm" );
  reduce_cmd->add_option( "--target", ra.target, "target node or top" );
  reduce_cmd->add_option( "--source", ra.source, "source node; layers the digraph first" );
  reduce_cmd->add_option( "--m", ra.m, "universal circuit wires" );
  reduce_cmd->add_option( "--n", ra.n, "universal circuit gates" );

  auto* lfmm_cmd = app.add_subcommand( "lfmm", "Greedy matching of a bipartite graph" );
  lfmm_cmd->add_option( "file", file, "graph file or -" )->required();

  auto* gs_cmd = app.add_subcommand( "gs", "Optimal stable marriages" );
  gs_cmd->add_option( "file", file, "instance file or -" )->required();
  gs_cmd->add_option( "--alg", alg, "1 Gale-Shapley, 2 symmetric, 3 interval, 4 delayed interval, "
                                    "5 three-valued interval, 6 Subramanian" )
      ->check( CLI::Range( 1, 6 ) );

  auto* reach_cmd = app.add_subcommand( "reach", "Reachability through the pebbling circuit" );
  reach_cmd->add_option( "file", file, "digraph file or -" )->required();
  reach_cmd->add_option( "--target", target, "target node" )->required();
  reach_cmd->add_option( "--source", source, "source node (default 0)" );

  auto* verify_cmd = app.add_subcommand( "verify", "Run a property suite" );
  verify_cmd->add_option( "suite", suite, "suite name or all" )->required();
  verify_cmd->add_option( "--cases", cases, "instances per property" );
  verify_cmd->add_option( "--seed", seed, "64-bit seed" );

  std::vector<std::string> reversed( args.rbegin(), args.rend() );
  try
  {
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( *eval_cmd )
    {
      const auto c = parse_circuit( io.read( file ) );
      if ( !tri.empty() )
      {
        detail::print_outputs( out, eval_tri( c, detail::parse_tris( tri ), trace ), trace );
      }
      else
      {
        const auto x = detail::parse_bits( input_bits );
        detail::print_outputs( out, eval( c, x, { true, trace } ), trace );
      }
      return exit_ok;
    }
    if ( *reduce_cmd )
    {
      const auto& passes = reduce_passes();
      if ( std::find( passes.begin(), passes.end(), ra.pass ) == passes.end() )
      {
        err << "unknown pass '" << ra.pass << "'\n";
        return exit_usage;
      }
      const auto r = detail::reduce( ra, io.read( ra.input ) );
      if ( ra.output == "-" )
      {
        out << r.text << detail::sidecar_comment( r.map );
      }
      else
      {
        io.write( ra.output, r.text );
        io.write( ra.output + ".map", r.map );
      }
      return exit_ok;
    }
    if ( *lfmm_cmd )
    {
      const auto f = parse_graph( io.read( file ) );
      const auto mt = lfm_matching( f.graph );
      for ( const auto& [b, t] : mt.pairs() )
      {
        out << "b" << b << " t" << t << "\n";
      }
      std::optional<Bit> answer;
      if ( f.target_edge )
      {
        answer = lfmm_decision( f.graph, *f.target_edge );
      }
      else if ( f.target_top )
      {
        answer = vlfmm_decision( f.graph, *f.target_top );
      }
      if ( answer )
      {
        out << "answer=" << int( *answer ) << "\n";
        return *answer ? exit_ok : exit_false;
      }
      return exit_ok;
    }
    if ( *gs_cmd )
    {
      const auto inst = parse_sm( io.read( file ) );
      std::size_t rounds = 0;
      Marriage man, woman;
      switch ( alg )
      {
      case 1:
      {
        const auto r = gale_shapley( inst );
        detail::print_marriage( out, "man-optimal", r.marriage );
        out << "rounds=" << r.rounds << "\n";
        return exit_ok;
      }
      case 2:
      {
        const auto r = symmetric_gs( inst );
        man = r.man_opt, woman = r.woman_opt, rounds = r.rounds;
        break;
      }
      case 3:
      case 4:
      {
        const auto r = alg == 3 ? interval_run( inst ) : delayed_interval_run( inst );
        man = r.man_opt, woman = r.woman_opt, rounds = r.rounds;
        break;
      }
      default:
      {
        const auto r = alg == 5 ? interval_logic_run( inst ) : subramanian_run( inst );
        man = r.man_opt, woman = r.woman_opt, rounds = r.rounds;
        break;
      }
      }
      detail::print_marriage( out, "man-optimal", man );
      detail::print_marriage( out, "woman-optimal", woman );
      out << "rounds=" << rounds << "\n";
      return exit_ok;
    }
    if ( *reach_cmd )
    {
      const auto g = parse_digraph( io.read( file ) );
      const auto src = source.value_or( 0 );
      detail::require( *target < g.num_nodes(), ErrorKind::index_out_of_range, "target out of range" );
      const auto lg = layer( g, src );
      const auto r = eval( reach_to_ccv( lg.graph, lg.node( *target, g.num_nodes() - 1 ) ), std::span<const Bit>{} );
      out << "reachable=" << int( r.answer ) << "\n";
      return r.answer ? exit_ok : exit_false;
    }
    if ( *verify_cmd )
    {
      std::vector<std::string> names;
      if ( suite == "all" )
      {
        names = suite_names();
      }
      else
      {
        names.push_back( suite );
      }
      bool all_pass = true;
      for ( const auto& s : names )
      {
        const auto report = run_suite( s, cases.value_or( default_cases( s ) ), seed );
        out << report.text();
        all_pass = all_pass && report.passed();
      }
      return all_pass ? exit_ok : exit_false;
    }
  }
  catch ( const Error& e )
  {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::internal_bound_violation ? exit_internal : exit_usage;
  }
  catch ( const std::exception& e )
  {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

} // namespace compcirc
