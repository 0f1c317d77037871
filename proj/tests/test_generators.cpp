#include "oracles.hpp"

#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/verify.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

TEST( Rng, MatchesPublishedSplitMix64 )
{
  Rng r( 0 );
  EXPECT_EQ( r.next(), 0xE220A8397B1DCDAFULL );
  oracle::SplitMix ref{ 987654321 };
  Rng mine( 987654321 );
  for ( int i = 0; i < 1000; ++i )
  {
    ASSERT_EQ( mine.next(), ref() );
  }
}

TEST( Rng, BelowStaysInRangeAndCoversIt )
{
  Rng r( 3 );
  std::vector<int> seen( 7, 0 );
  for ( int i = 0; i < 7000; ++i )
  {
    const auto v = r.below( 7 );
    ASSERT_LT( v, 7u );
    ++seen[v];
  }
  for ( auto s : seen )
  {
    EXPECT_GT( s, 800 );
  }
  EXPECT_EQ( Rng( 5 ).below( 1 ), 0u );
}

TEST( Rng, CaseStreamsAreIndependentOfOrder )
{
  auto a = Rng::for_case( 9, "x", 4 );
  auto b = Rng::for_case( 9, "x", 4 );
  EXPECT_EQ( a.next(), b.next() );
  EXPECT_NE( Rng::for_case( 9, "x", 4 ).next(), Rng::for_case( 9, "y", 4 ).next() );
  EXPECT_NE( Rng::for_case( 9, "x", 4 ).next(), Rng::for_case( 9, "x", 5 ).next() );
}

TEST( Generators, FixedSeedReproducesPublishedHash )
{
  EXPECT_EQ( detail::generator_stream_hash(), detail::published_stream_hash );
  EXPECT_EQ( serialize_circuit( gen_circuit( 42, 5, 8, true ) ), serialize_circuit( gen_circuit( 42, 5, 8, true ) ) );
}

TEST( Generators, SingleCoupleInstanceIsUnique )
{
  EXPECT_EQ( gen_sm( 1, 1 ), gen_sm( 2, 1 ) );
}

TEST( Generators, ZeroDensityIsEdgeless )
{
  for ( std::uint64_t s = 0; s < 20; ++s )
  {
    EXPECT_EQ( gen_bipartite( s, 6, 6, 0 ).num_edges(), 0u );
    EXPECT_TRUE( gen_digraph( s, 6, 0 ).arcs().empty() );
  }
}

TEST( Generators, BadBoundsAreRejected )
{
  auto kind = []( const std::function<void()>& f ) {
    try
    {
      f();
    }
    catch ( const Error& e )
    {
      return e.kind();
    }
    return ErrorKind::parse_error;
  };
  Rng r( 1 );
  CircuitParams p;
  p.m_min = 4;
  p.m_max = 3;
  EXPECT_EQ( kind( [&] { gen_circuit( r, p ); } ), ErrorKind::bad_shape );
  EXPECT_EQ( kind( [&] { gen_circuit( 1, 0, 3, false ); } ), ErrorKind::bad_shape );
  EXPECT_EQ( kind( [&] { gen_bipartite( 1, 3, 3, 1001 ); } ), ErrorKind::bad_shape );
  EXPECT_EQ( kind( [&] { gen_sm( 1, 0 ); } ), ErrorKind::bad_shape );
  EXPECT_EQ( kind( [&] { gen_digraph( 1, 0, 10 ); } ), ErrorKind::bad_shape );
}

TEST( Generators, BoundsAreRespected )
{
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 91, "bounds", i );
    CircuitParams p;
    p.m_max = 5;
    p.g_max = 7;
    const auto c = gen_circuit( rng, p );
    ASSERT_LE( c.num_wires(), 5u );
    ASSERT_LE( c.gates().size(), 7u );
    ASSERT_FALSE( c.has_negations() );
    const auto g = gen_bounded_bipartite( rng, 6, 3 );
    ASSERT_EQ( g.num_bottom(), g.num_top() );
    ASSERT_LE( max_degree( g ), 3u );
    const auto d = gen_digraph( rng, 6, 500, true );
    ASSERT_TRUE( d.is_forward() );
  }
}
