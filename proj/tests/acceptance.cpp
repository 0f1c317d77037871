// One line per acceptance criterion. Each criterion runs its property suite at
// full size and, where cheap, repeats a slice of the check against the
// brute-force oracles in oracles.hpp so the suite cannot grade itself.

#include "oracles.hpp"

#include <compcirc/cli.hpp>
#include <compcirc/compcirc.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace compcirc;

namespace
{

constexpr std::uint64_t seed = 20240601;

struct Outcome
{
  bool ok;
  std::string detail;
};

Outcome suite( const char* name )
{
  const auto r = run_suite( name, default_cases( name ), seed );
  std::size_t checks = 0;
  for ( const auto& p : r.properties )
  {
    checks += p.checks;
  }
  return { r.passed(), std::to_string( checks ) + " checks" + ( r.passed() ? "" : "\n" + r.text() ) };
}

Outcome both( Outcome a, bool cross, const char* what )
{
  if ( !cross )
  {
    a.ok = false;
    a.detail += std::string( "; oracle cross-check failed: " ) + what;
  }
  else
  {
    a.detail += std::string( "; oracle " ) + what + " ok";
  }
  return a;
}

bool golden_oracle()
{
  const auto c = parse_circuit( fixtures::annotated_six_wire );
  const auto v = oracle::eval_bits( c, { 1, 1, 1 } );
  const auto g = parse_graph( fixtures::greedy_matching ).graph;
  const auto m = oracle::greedy( g );
  return v == std::vector<int>{ 0, 1, 1, 0, 1, 0 } && m == std::vector<long>{ 0, -1, 2, 1 };
}

bool ring_oracle()
{
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( seed, "acceptance-ring", i );
    CircuitParams p;
    p.annotations = AnnotationMode::constants;
    const auto c = gen_circuit( rng, p );
    const auto inst = ccv_to_3vlfmm_any( c ).reduction.instance;
    if ( oracle::top_covered( inst.graph, inst.target_top ) != ( oracle::circuit_value( c ) == 1 ) )
    {
      return false;
    }
  }
  return true;
}

bool ladder_oracle()
{
  for ( std::size_t i = 0; i < 100; ++i )
  {
    const auto inst = gen_sm( Rng::for_case( seed, "acceptance-sm", i ).next(), 1 + i % 6 );
    if ( subramanian_run( inst ).man_opt.wife != oracle::man_optimal( inst ) )
    {
      return false;
    }
  }
  return true;
}

bool reach_oracle()
{
  for ( std::size_t i = 0; i < 100; ++i )
  {
    auto rng = Rng::for_case( seed, "acceptance-reach", i );
    const auto g = gen_digraph( rng, 8, 300 );
    const auto closure = oracle::closure( g );
    const auto n = g.num_nodes();
    const auto lg = layer( g, 0 );
    const auto values = eval( reach_to_ccv( lg.graph, 0 ), std::span<const Bit>{} ).wire_outputs;
    for ( std::size_t v = 0; v < n; ++v )
    {
      if ( bool( values[pebble_node_wire( n * n, lg.node( v, n - 1 ) )] ) != ( v == 0 || closure[0][v] ) )
      {
        return false;
      }
    }
  }
  return true;
}

bool formats_determinism()
{
  const auto a = run_suite( "formats", 50, seed ).text();
  const auto b = run_suite( "formats", 50, seed ).text();
  return a == b;
}

} // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      { "golden fixtures", [] { return both( suite( "golden" ), golden_oracle(), "fixture values" ); } },
      { "universal circuits", [] { return suite( "universal" ); } },
      { "three-valued lowering", [] { return suite( "trilower" ); } },
      { "reduction ring", [] { return both( suite( "reductions" ), ring_oracle(), "ccv-to-3vlfmm" ); } },
      { "stable-marriage ladder", [] { return both( suite( "sm-ladder" ), ladder_oracle(), "man-optimal" ); } },
      { "feasible-pair bijection", [] { return suite( "feasible" ); } },
      { "end-to-end sm-to-ccv", [] { return suite( "sm-to-ccv" ); } },
      { "reachability", [] { return both( suite( "reach" ), reach_oracle(), "closure" ); } },
      { "structural invariants", [] { return suite( "structural" ); } },
      { "strictification", [] { return suite( "strictify" ); } },
      { "formats", [] { return both( suite( "formats" ), formats_determinism(), "determinism" ); } },
  };

  int failed = 0;
  int index = 0;
  for ( const auto& [name, run] : criteria )
  {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = run();
    }
    catch ( const std::exception& e )
    {
      o = { false, std::string( "exception: " ) + e.what() };
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - start ).count();
    std::cout << ( o.ok ? "PASS" : "FAIL" ) << " " << index << " " << name << " (" << o.detail << ", " << ms
              << " ms)\n";
    failed += !o.ok;
  }
  std::cout << ( failed ? "FAILED " : "ALL PASSED " ) << ( 11 - failed ) << "/11\n";
  return failed ? 1 : 0;
}
