#include <compcirc/fixtures.hpp>
#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

using namespace compcirc;

namespace
{

std::size_t error_line( const std::function<void()>& f )
{
  try
  {
    f();
  }
  catch ( const ParseError& e )
  {
    return e.line();
  }
  return 0;
}

std::string slurp( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
}

} // namespace

TEST( Formats, FixtureFilesMatchEmbeddedCopies )
{
  for ( const auto& f : fixtures::all )
  {
    EXPECT_EQ( slurp( std::string( COMPCIRC_FIXTURE_DIR ) + "/" + std::string( f.file ) ), f.text ) << f.file;
  }
}

TEST( Formats, FixturesRoundTripByteIdentically )
{
  EXPECT_EQ( serialize_circuit( parse_circuit( fixtures::three_wire_up ) ), fixtures::three_wire_up );
  EXPECT_EQ( serialize_circuit( parse_circuit( fixtures::annotated_six_wire ) ), fixtures::annotated_six_wire );
  EXPECT_EQ( serialize_graph( parse_graph( fixtures::greedy_matching ) ), fixtures::greedy_matching );
  EXPECT_EQ( serialize_graph( parse_graph( fixtures::matching_sim ) ), fixtures::matching_sim );
  EXPECT_EQ( serialize_digraph( parse_digraph( fixtures::pebbling ) ), fixtures::pebbling );
}

TEST( Formats, CircuitGrammar )
{
  const auto c = parse_circuit( "# comment\nCCV v1\nwires 3\nannot 0 x1\nannot 1 !x0\nannot 2 1\n"
                                "gate 2 2\nneg 1\ngate 0 1 # trailing\n\noutput 2\n" );
  EXPECT_EQ( c.num_wires(), 3u );
  EXPECT_TRUE( c.gates()[0].is_dummy() );
  EXPECT_TRUE( c.gates()[1].is_negation() );
  EXPECT_EQ( c.annotation( 1 ), Annotation::neg_input( 0 ) );
  EXPECT_EQ( c.output_wire(), 2u );
}

TEST( Formats, CircuitErrorsCarryLineNumbers )
{
  EXPECT_EQ( error_line( [] { parse_circuit( "CCV v1\nwires 1\nannot 0 0\n" ); } ), 3u );
  EXPECT_EQ( error_line( [] { parse_circuit( "CCV v1\nwires 1\nannot 0 0\noutput 0\noutput 0\n" ); } ), 5u );
  EXPECT_EQ( error_line( [] { parse_circuit( "CCV v1\nwires 2\nannot 0 0\noutput 0\n" ); } ), 4u );
  EXPECT_EQ( error_line( [] { parse_circuit( "CCV v1\nwires 2\nannot 0 0\nannot 1 1\ngate 0 2\noutput 0\n" ); } ),
             5u );
  EXPECT_EQ( error_line( [] { parse_circuit( "GRAPH v1\n" ); } ), 1u );
  EXPECT_EQ( error_line( [] { parse_circuit( "CCV v1\nwires 1\nannot 0 y\noutput 0\n" ); } ), 3u );
}

TEST( Formats, GraphGrammar )
{
  const auto empty = parse_graph( "GRAPH v1\nbottom 0\ntop 0\n" );
  EXPECT_EQ( empty.graph.num_edges(), 0u );
  EXPECT_EQ( serialize_graph( empty ), "GRAPH v1\nbottom 0\ntop 0\n" );
  EXPECT_EQ( error_line( [] { parse_graph( "GRAPH v1\nbottom 1\ntop 1\nedge 0 0\nedge 0 0\n" ); } ), 5u );
  EXPECT_EQ( error_line( [] { parse_graph( "GRAPH v1\nbottom 1\ntop 1\nedge 1 0\n" ); } ), 4u );
  const auto f = parse_graph( fixtures::greedy_matching );
  EXPECT_EQ( f.target_edge, ( Edge{ 3, 1 } ) );
  EXPECT_FALSE( f.target_top.has_value() );
}

TEST( Formats, SmGrammar )
{
  const auto one = parse_sm( "SM v1\nn 1\nman 0: 0\nwoman 0: 0\n" );
  EXPECT_EQ( one.n(), 1u );
  EXPECT_EQ( error_line( [] { parse_sm( "SM v1\nn 2\nman 0: 0 0\nman 1: 0 1\nwoman 0: 0 1\nwoman 1: 0 1\n" ); } ),
             3u );
  EXPECT_NE( error_line( [] { parse_sm( "SM v1\nn 2\nman 0: 0 1\nwoman 0: 0 1\nwoman 1: 0 1\n" ); } ), 0u );
}

TEST( Formats, DigraphGrammar )
{
  const auto g = parse_digraph( "DIGRAPH v1\nnodes 2\narc 1 0\n" );
  EXPECT_TRUE( g.has_arc( 1, 0 ) );
  EXPECT_EQ( error_line( [] { parse_digraph( "DIGRAPH v1\nnodes 2\narc 0 2\n" ); } ), 3u );
}

TEST( Formats, RandomRoundTrips )
{
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 81, "formats-test", i );
    CircuitParams p;
    p.with_neg = true;
    p.annotations = AnnotationMode::mixed;
    const auto c = gen_circuit( rng, p );
    ASSERT_EQ( parse_circuit( serialize_circuit( c ) ), c );
    const auto g = gen_bipartite( rng, 6, 6, 500 );
    ASSERT_EQ( parse_graph( serialize_graph( g ) ).graph, g );
    const auto s = gen_sm( rng, 1 + rng.below( 5 ) );
    ASSERT_EQ( parse_sm( serialize_sm( s ) ), s );
    const auto d = gen_digraph( rng, 6, 400 );
    ASSERT_EQ( parse_digraph( serialize_digraph( d ) ), d );
  }
}
