#include "oracles.hpp"

#include <compcirc/fixtures.hpp>
#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/reachability.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

TEST( Reachability, PebblingFixture )
{
  const auto g = parse_digraph( fixtures::pebbling );
  const auto c = reach_to_ccv( g, 3 );
  EXPECT_EQ( c.num_wires(), 10u );
  EXPECT_EQ( c.gates().size(), 5u * ( 1 + 10 ) );
  const auto out = eval( c, std::span<const Bit>{} ).wire_outputs;
  for ( std::size_t k = 0; k < 5; ++k )
  {
    EXPECT_EQ( out[pebble_feed_wire( 5, k )], 0 );
    EXPECT_EQ( out[pebble_node_wire( 5, k )], 1 );
  }
}

TEST( Reachability, UnreachableNodeStaysEmpty )
{
  const Digraph g( 3, { { 1, 2 } } );
  const auto out = eval( reach_to_ccv( g, 2 ), std::span<const Bit>{} );
  EXPECT_EQ( out.answer, 0 );
  EXPECT_EQ( out.wire_outputs[pebble_node_wire( 3, 0 )], 1 );
}

TEST( Reachability, RejectsBackwardArcs )
{
  const Digraph g( 3, { { 2, 1 } } );
  try
  {
    reach_to_ccv( g, 1 );
    FAIL();
  }
  catch ( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::precondition_violated );
  }
}

TEST( Reachability, LayeringIsForwardAndFaithful )
{
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 51, "reach-test", i );
    const auto g = gen_digraph( rng, 7, rng.below( 600 ) );
    const auto n = g.num_nodes();
    const auto src = rng.below( n );
    const auto closure = oracle::closure( g );
    const auto set = reachable_set( g, src );
    const auto lg = layer( g, src );
    ASSERT_TRUE( lg.graph.is_forward() );
    EXPECT_EQ( lg.node( src, 0 ), 0u );
    const auto out = eval( reach_to_ccv( lg.graph, 0 ), std::span<const Bit>{} ).wire_outputs;
    for ( std::size_t v = 0; v < n; ++v )
    {
      ASSERT_EQ( set[v], closure[src][v] ) << serialize_digraph( g );
      ASSERT_EQ( out[pebble_node_wire( n * n, lg.node( v, n - 1 ) )] == 1, closure[src][v] )
          << serialize_digraph( g );
    }
  }
}
