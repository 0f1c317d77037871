#include "oracles.hpp"

#include <compcirc/fixtures.hpp>
#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/matching.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

TEST( Matching, GreedyFixture )
{
  const auto f = parse_graph( fixtures::greedy_matching );
  const auto m = lfm_matching( f.graph );
  EXPECT_EQ( m.pairs(), ( std::set<Edge>{ { 0, 0 }, { 2, 2 }, { 3, 1 } } ) );
  EXPECT_FALSE( m.top_of[1].has_value() );
  EXPECT_EQ( lfmm_decision( f.graph, { 3, 1 } ), 1 );
  EXPECT_EQ( lfmm_decision( f.graph, { 0, 1 } ), 0 );
  EXPECT_EQ( vlfmm_decision( f.graph, 1 ), 1 );
  EXPECT_EQ( max_degree( f.graph ), 3u );
}

TEST( Matching, EmptyAndEdgeless )
{
  const BipartiteGraph empty;
  EXPECT_TRUE( lfm_matching( empty ).pairs().empty() );
  const BipartiteGraph g( 3, 2 );
  EXPECT_EQ( vlfmm_decision( g, 1 ), 0 );
  EXPECT_EQ( max_degree( g ), 0u );
}

TEST( Matching, GraphValidation )
{
  BipartiteGraph g( 2, 2 );
  g.add_edge( 0, 1 );
  try
  {
    g.add_edge( 0, 1 );
    FAIL();
  }
  catch ( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::bad_shape );
  }
  try
  {
    g.add_edge( 2, 0 );
    FAIL();
  }
  catch ( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::index_out_of_range );
  }
  EXPECT_EQ( g.add_top(), 2u );
  EXPECT_EQ( g.add_bottom(), 2u );
  EXPECT_EQ( g.neighbors( 0 ), ( std::vector<std::size_t>{ 1 } ) );
}

TEST( Matching, GreedyMatchesOracle )
{
  for ( std::size_t i = 0; i < 500; ++i )
  {
    auto rng = Rng::for_case( 31, "matching", i );
    const auto g = gen_bipartite( rng, 7, 7, rng.below( 1001 ) );
    const auto want = oracle::greedy( g );
    const auto got = lfm_matching( g );
    for ( std::size_t b = 0; b < g.num_bottom(); ++b )
    {
      ASSERT_EQ( got.top_of[b] ? long( *got.top_of[b] ) : -1L, want[b] ) << serialize_graph( g );
    }
    for ( std::size_t t = 0; t < g.num_top(); ++t )
    {
      ASSERT_EQ( vlfmm_decision( g, t ) == 1, oracle::top_covered( g, t ) );
    }
  }
}
