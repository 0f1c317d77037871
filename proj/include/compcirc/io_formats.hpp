#pragma once

// Line-oriented text formats for circuits, bipartite graphs,
// stable-marriage instances and digraphs.
//
// All indices are 0-based. `#` starts a comment; blank lines are ignored.
//
//     CCV v1                 GRAPH v1             SM v1            DIGRAPH v1
//     wires <m>              bottom <b>           n <n>            nodes <n>
//     annot <w> <0|1|xI|!xI> top <t>              man <i>: <j..>   arc <u> <v>
//     gate <min> <max>       edge <i> <j>         woman <j>: <i..>
//     neg <w>                target-edge <i> <j>
//     output <w>             target-top <j>
//
// Serializers emit the canonical form: directives in the order above,
// single spaces, annotations and persons in ascending index order, edges
// and arcs sorted.

#include "circuit.hpp"
#include "matching.hpp"
#include "reachability.hpp"
#include "stable_marriage.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace compcirc
{

namespace detail
{

struct Line
{
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

/// Splits into non-empty, comment-stripped, whitespace-tokenized lines.
inline std::vector<Line> tokenize( std::string_view text )
{
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    ++number;
    auto raw = text.substr( pos, end - pos );
    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      raw = raw.substr( 0, hash );
    }
    std::istringstream in{ std::string( raw ) };
    Line line{ number, {} };
    for ( std::string tok; in >> tok; )
    {
      line.tokens.push_back( std::move( tok ) );
    }
    if ( !line.tokens.empty() )
    {
      lines.push_back( std::move( line ) );
    }
    pos = end + 1;
  }
  return lines;
}

inline std::size_t last_line( std::string_view text )
{
  const auto breaks = static_cast<std::size_t>( std::count( text.begin(), text.end(), '\n' ) );
  return text.empty() || text.back() != '\n' ? breaks + 1 : breaks;
}

[[noreturn]] inline void parse_fail( std::size_t line, const std::string& message )
{
  throw ParseError( line, message );
}

inline std::size_t parse_index( const Line& line, const std::string& tok )
{
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars( first, last, value );
  if ( ec != std::errc() || ptr != last || tok.empty() )
  {
    parse_fail( line.number, "expected a non-negative integer, got '" + tok + "'" );
  }
  return value;
}

inline void expect_arity( const Line& line, std::size_t n )
{
  if ( line.tokens.size() != n )
  {
    parse_fail( line.number, "'" + line.tokens[0] + "' expects " + std::to_string( n - 1 ) + " argument(s)" );
  }
}

inline void expect_header( const std::vector<Line>& lines, std::string_view magic, std::string_view text )
{
  if ( lines.empty() )
  {
    parse_fail( last_line( text ), "missing '" + std::string( magic ) + " v1' header" );
  }
  const auto& h = lines.front();
  if ( h.tokens.size() != 2 || h.tokens[0] != magic || h.tokens[1] != "v1" )
  {
    parse_fail( h.number, "expected header '" + std::string( magic ) + " v1'" );
  }
}

inline std::size_t check_range( const Line& line, std::size_t value, std::size_t bound, const char* what )
{
  if ( value >= bound )
  {
    parse_fail( line.number, std::string( what ) + " " + std::to_string( value ) + " out of range" );
  }
  return value;
}

} // namespace detail

// ---------------------------------------------------------------------------
// circuits
// ---------------------------------------------------------------------------

inline std::string annotation_text( const Annotation& a )
{
  switch ( a.kind )
  {
  case Annotation::Kind::constant: return a.value ? "1" : "0";
  case Annotation::Kind::input: return "x" + std::to_string( a.value );
  case Annotation::Kind::neg_input: return "!x" + std::to_string( a.value );
  }
  return "0";
}

inline Circuit parse_circuit( std::string_view text )
{
  using namespace detail;
  const auto lines = tokenize( text );
  expect_header( lines, "CCV", text );

  std::optional<std::size_t> wires;
  std::vector<std::optional<Annotation>> annots;
  std::vector<Gate> gates;
  std::optional<std::size_t> output;

  for ( std::size_t k = 1; k < lines.size(); ++k )
  {
    const auto& line = lines[k];
    const auto& op = line.tokens[0];
    if ( op == "wires" )
    {
      expect_arity( line, 2 );
      if ( wires )
      {
        parse_fail( line.number, "duplicate 'wires'" );
      }
      wires = parse_index( line, line.tokens[1] );
      if ( *wires == 0 )
      {
        parse_fail( line.number, "a circuit needs at least one wire" );
      }
      annots.assign( *wires, std::nullopt );
      continue;
    }
    if ( !wires )
    {
      parse_fail( line.number, "'" + op + "' before 'wires'" );
    }
    if ( op == "annot" )
    {
      expect_arity( line, 3 );
      const auto w = check_range( line, parse_index( line, line.tokens[1] ), *wires, "wire" );
      if ( annots[w] )
      {
        parse_fail( line.number, "duplicate annotation for wire " + std::to_string( w ) );
      }
      const auto& v = line.tokens[2];
      if ( v == "0" || v == "1" )
      {
        annots[w] = Annotation::constant( v == "1" ? 1 : 0 );
      }
      else if ( v.size() > 1 && v[0] == 'x' )
      {
        annots[w] = Annotation::input( parse_index( line, v.substr( 1 ) ) );
      }
      else if ( v.size() > 2 && v[0] == '!' && v[1] == 'x' )
      {
        annots[w] = Annotation::neg_input( parse_index( line, v.substr( 2 ) ) );
      }
      else
      {
        parse_fail( line.number, "bad annotation '" + v + "'" );
      }
    }
    else if ( op == "gate" )
    {
      expect_arity( line, 3 );
      if ( output )
      {
        parse_fail( line.number, "'gate' after 'output'" );
      }
      const auto a = check_range( line, parse_index( line, line.tokens[1] ), *wires, "wire" );
      const auto b = check_range( line, parse_index( line, line.tokens[2] ), *wires, "wire" );
      gates.push_back( Gate::comparator( a, b ) );
    }
    else if ( op == "neg" )
    {
      expect_arity( line, 2 );
      if ( output )
      {
        parse_fail( line.number, "'neg' after 'output'" );
      }
      gates.push_back( Gate::negation( check_range( line, parse_index( line, line.tokens[1] ), *wires, "wire" ) ) );
    }
    else if ( op == "output" )
    {
      expect_arity( line, 2 );
      if ( output )
      {
        parse_fail( line.number, "duplicate 'output'" );
      }
      output = check_range( line, parse_index( line, line.tokens[1] ), *wires, "wire" );
    }
    else
    {
      parse_fail( line.number, "unknown directive '" + op + "'" );
    }
  }

  const auto end = last_line( text );
  if ( !wires )
  {
    parse_fail( end, "missing 'wires'" );
  }
  std::vector<Annotation> resolved;
  for ( std::size_t w = 0; w < *wires; ++w )
  {
    if ( !annots[w] )
    {
      parse_fail( end, "missing annotation for wire " + std::to_string( w ) );
    }
    resolved.push_back( *annots[w] );
  }
  if ( !output )
  {
    parse_fail( end, "missing 'output'" );
  }
  return Circuit( *wires, std::move( resolved ), std::move( gates ), *output );
}

inline std::string serialize_circuit( const Circuit& c )
{
  std::ostringstream out;
  out << "CCV v1\n";
  out << "wires " << c.num_wires() << "\n";
  for ( std::size_t w = 0; w < c.num_wires(); ++w )
  {
    out << "annot " << w << " " << annotation_text( c.annotation( w ) ) << "\n";
  }
  for ( const auto& g : c.gates() )
  {
    if ( g.is_negation() )
    {
      out << "neg " << g.wire() << "\n";
    }
    else
    {
      out << "gate " << g.min_wire << " " << g.max_wire << "\n";
    }
  }
  out << "output " << c.output_wire() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// bipartite graphs
// ---------------------------------------------------------------------------

struct GraphFile
{
  BipartiteGraph graph;
  std::optional<Edge> target_edge;
  std::optional<std::size_t> target_top;

  bool operator==( const GraphFile& ) const = default;
};

inline GraphFile parse_graph( std::string_view text )
{
  using namespace detail;
  const auto lines = tokenize( text );
  expect_header( lines, "GRAPH", text );
  std::optional<std::size_t> bottoms, tops;
  GraphFile out;
  for ( std::size_t k = 1; k < lines.size(); ++k )
  {
    const auto& line = lines[k];
    const auto& op = line.tokens[0];
    if ( op == "bottom" || op == "top" )
    {
      expect_arity( line, 2 );
      auto& slot = op == "bottom" ? bottoms : tops;
      if ( slot )
      {
        parse_fail( line.number, "duplicate '" + op + "'" );
      }
      if ( op == "top" && !bottoms )
      {
        parse_fail( line.number, "'top' before 'bottom'" );
      }
      slot = parse_index( line, line.tokens[1] );
      if ( bottoms && tops )
      {
        out.graph = BipartiteGraph( *bottoms, *tops );
      }
      continue;
    }
    if ( !bottoms || !tops )
    {
      parse_fail( line.number, "'" + op + "' before 'bottom' and 'top'" );
    }
    if ( op == "edge" )
    {
      expect_arity( line, 3 );
      if ( out.target_edge || out.target_top )
      {
        parse_fail( line.number, "'edge' after target" );
      }
      const auto b = check_range( line, parse_index( line, line.tokens[1] ), *bottoms, "bottom" );
      const auto t = check_range( line, parse_index( line, line.tokens[2] ), *tops, "top" );
      if ( out.graph.has_edge( b, t ) )
      {
        parse_fail( line.number, "duplicate edge " + std::to_string( b ) + " " + std::to_string( t ) );
      }
      out.graph.add_edge( b, t );
    }
    else if ( op == "target-edge" )
    {
      expect_arity( line, 3 );
      if ( out.target_edge || out.target_top )
      {
        parse_fail( line.number, "duplicate target" );
      }
      const auto b = check_range( line, parse_index( line, line.tokens[1] ), *bottoms, "bottom" );
      const auto t = check_range( line, parse_index( line, line.tokens[2] ), *tops, "top" );
      out.target_edge = Edge{ b, t };
    }
    else if ( op == "target-top" )
    {
      expect_arity( line, 2 );
      if ( out.target_edge || out.target_top )
      {
        parse_fail( line.number, "duplicate target" );
      }
      out.target_top = check_range( line, parse_index( line, line.tokens[1] ), *tops, "top" );
    }
    else
    {
      parse_fail( line.number, "unknown directive '" + op + "'" );
    }
  }
  if ( !bottoms || !tops )
  {
    parse_fail( last_line( text ), "missing 'bottom' or 'top'" );
  }
  return out;
}

inline std::string serialize_graph( const GraphFile& f )
{
  std::ostringstream out;
  out << "GRAPH v1\n";
  out << "bottom " << f.graph.num_bottom() << "\n";
  out << "top " << f.graph.num_top() << "\n";
  for ( const auto& [b, t] : f.graph.edges() )
  {
    out << "edge " << b << " " << t << "\n";
  }
  if ( f.target_edge )
  {
    out << "target-edge " << f.target_edge->first << " " << f.target_edge->second << "\n";
  }
  if ( f.target_top )
  {
    out << "target-top " << *f.target_top << "\n";
  }
  return out.str();
}

inline std::string serialize_graph( const BipartiteGraph& g ) { return serialize_graph( GraphFile{ g, {}, {} } ); }

// ---------------------------------------------------------------------------
// stable-marriage instances
// ---------------------------------------------------------------------------

inline SMInstance parse_sm( std::string_view text )
{
  using namespace detail;
  const auto lines = tokenize( text );
  expect_header( lines, "SM", text );
  std::optional<std::size_t> n;
  std::vector<std::optional<std::vector<std::size_t>>> men, women;
  for ( std::size_t k = 1; k < lines.size(); ++k )
  {
    const auto& line = lines[k];
    const auto& op = line.tokens[0];
    if ( op == "n" )
    {
      expect_arity( line, 2 );
      if ( n )
      {
        parse_fail( line.number, "duplicate 'n'" );
      }
      n = parse_index( line, line.tokens[1] );
      men.assign( *n, std::nullopt );
      women.assign( *n, std::nullopt );
      continue;
    }
    if ( !n )
    {
      parse_fail( line.number, "'" + op + "' before 'n'" );
    }
    if ( op != "man" && op != "woman" )
    {
      parse_fail( line.number, "unknown directive '" + op + "'" );
    }
    if ( line.tokens.size() != *n + 2 )
    {
      parse_fail( line.number, "'" + op + "' expects an index and " + std::to_string( *n ) + " preferences" );
    }
    auto label = line.tokens[1];
    if ( label.empty() || label.back() != ':' )
    {
      parse_fail( line.number, "expected '<index>:' after '" + op + "'" );
    }
    label.pop_back();
    const auto p = check_range( line, parse_index( line, label ), *n, op == "man" ? "man" : "woman" );
    auto& slot = op == "man" ? men[p] : women[p];
    if ( slot )
    {
      parse_fail( line.number, "duplicate list for " + op + " " + std::to_string( p ) );
    }
    std::vector<std::size_t> row;
    std::vector<bool> seen( *n, false );
    for ( std::size_t r = 0; r < *n; ++r )
    {
      const auto q = check_range( line, parse_index( line, line.tokens[r + 2] ), *n, "person" );
      if ( seen[q] )
      {
        parse_fail( line.number, "list of " + op + " " + std::to_string( p ) + " is not a permutation" );
      }
      seen[q] = true;
      row.push_back( q );
    }
    slot = std::move( row );
  }
  if ( !n )
  {
    parse_fail( last_line( text ), "missing 'n'" );
  }
  std::vector<std::vector<std::size_t>> mp, wp;
  for ( std::size_t p = 0; p < *n; ++p )
  {
    if ( !men[p] || !women[p] )
    {
      parse_fail( last_line( text ), "missing list for person " + std::to_string( p ) );
    }
    mp.push_back( *men[p] );
    wp.push_back( *women[p] );
  }
  return SMInstance( std::move( mp ), std::move( wp ) );
}

inline std::string serialize_sm( const SMInstance& inst )
{
  std::ostringstream out;
  out << "SM v1\n";
  out << "n " << inst.n() << "\n";
  for ( const auto* side : { &inst.man_prefs(), &inst.woman_prefs() } )
  {
    const char* who = side == &inst.man_prefs() ? "man" : "woman";
    for ( std::size_t p = 0; p < inst.n(); ++p )
    {
      out << who << " " << p << ":";
      for ( auto q : ( *side )[p] )
      {
        out << " " << q;
      }
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// digraphs
// ---------------------------------------------------------------------------

inline Digraph parse_digraph( std::string_view text )
{
  using namespace detail;
  const auto lines = tokenize( text );
  expect_header( lines, "DIGRAPH", text );
  std::optional<std::size_t> n;
  Digraph g;
  for ( std::size_t k = 1; k < lines.size(); ++k )
  {
    const auto& line = lines[k];
    const auto& op = line.tokens[0];
    if ( op == "nodes" )
    {
      expect_arity( line, 2 );
      if ( n )
      {
        parse_fail( line.number, "duplicate 'nodes'" );
      }
      n = parse_index( line, line.tokens[1] );
      g = Digraph( *n );
    }
    else if ( op == "arc" )
    {
      expect_arity( line, 3 );
      if ( !n )
      {
        parse_fail( line.number, "'arc' before 'nodes'" );
      }
      const auto u = check_range( line, parse_index( line, line.tokens[1] ), *n, "node" );
      const auto v = check_range( line, parse_index( line, line.tokens[2] ), *n, "node" );
      if ( g.has_arc( u, v ) )
      {
        parse_fail( line.number, "duplicate arc" );
      }
      g.add_arc( u, v );
    }
    else
    {
      parse_fail( line.number, "unknown directive '" + op + "'" );
    }
  }
  if ( !n )
  {
    parse_fail( last_line( text ), "missing 'nodes'" );
  }
  return g;
}

inline std::string serialize_digraph( const Digraph& g )
{
  std::ostringstream out;
  out << "DIGRAPH v1\n";
  out << "nodes " << g.num_nodes() << "\n";
  for ( const auto& [u, v] : g.arcs() )
  {
    out << "arc " << u << " " << v << "\n";
  }
  return out.str();
}

} // namespace compcirc
