#include "oracles.hpp"

#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/universal.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

TEST( Universal, Shape )
{
  const auto u = build_universal( 3, 2 );
  const auto k = universal_control_bits( 3, 2 );
  EXPECT_EQ( k, 12u );
  EXPECT_EQ( u.num_wires(), 3 + 2 * k );
  EXPECT_EQ( u.gates().size(), 4 * k );
  EXPECT_EQ( u.input_arity(), k + 3 );
  EXPECT_EQ( u.output_wire(), 0u );
  EXPECT_EQ( universal_pairs( 3 ).size(), 6u );
}

TEST( Universal, GadgetIsConditionalComparator )
{
  // UNIV(2,1): control bit 0 selects (0,1), bit 1 selects (1,0)
  const auto u = build_universal( 2, 1 );
  for ( std::size_t r = 0; r < 16; ++r )
  {
    const std::vector<Bit> x{ Bit( r & 1 ), Bit( ( r >> 1 ) & 1 ), Bit( ( r >> 2 ) & 1 ), Bit( ( r >> 3 ) & 1 ) };
    const Bit a = x[2], b = x[3];
    Bit w0 = a, w1 = b;
    if ( x[0] )
    {
      std::tie( w0, w1 ) = std::pair<Bit, Bit>( w0 & w1, w0 | w1 );
    }
    if ( x[1] )
    {
      std::tie( w1, w0 ) = std::pair<Bit, Bit>( w1 & w0, w1 | w0 );
    }
    const auto out = eval( u, x ).wire_outputs;
    EXPECT_EQ( out[0], w0 ) << r;
    EXPECT_EQ( out[1], w1 ) << r;
  }
}

TEST( Universal, EncodeDecodeRoundTrip )
{
  const Circuit c( 3, { Annotation::input( 0 ), Annotation::input( 1 ), Annotation::input( 2 ) },
                   { Gate::comparator( 2, 0 ), Gate::dummy( 0 ), Gate::comparator( 0, 1 ) }, 0 );
  const auto enc = encode_control( c, 3, 3 );
  EXPECT_EQ( std::count( enc.bits.begin(), enc.bits.end(), Bit{ 1 } ), 2 );
  const auto back = decode_control( enc );
  ASSERT_EQ( back.gates().size(), 3u );
  EXPECT_EQ( back.gates()[0], Gate::comparator( 2, 0 ) );
  EXPECT_TRUE( back.gates()[1].is_dummy() );
  EXPECT_EQ( back.gates()[2], Gate::comparator( 0, 1 ) );
}

TEST( Universal, RejectsOversizedCircuits )
{
  Circuit c( 4 );
  c.add_comparator( 0, 3 );
  auto kind_of = [&]( auto&& f ) {
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
  EXPECT_EQ( kind_of( [&] { encode_control( c, 3, 5 ); } ), ErrorKind::too_many_wires );
  EXPECT_EQ( kind_of( [&] { encode_control( c, 4, 0 ); } ), ErrorKind::too_many_gates );
  c.add_negation( 1 );
  EXPECT_EQ( kind_of( [&] { encode_control( c, 4, 5 ); } ), ErrorKind::negation_not_supported );
}

TEST( Universal, AgreesWithDirectSimulation )
{
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 21, "universal-test", i );
    CircuitParams p;
    p.m_max = 5;
    p.g_max = 8;
    const auto c = gen_circuit( rng, p );
    const auto m = std::max<std::size_t>( 2, c.num_wires() );
    const auto n = c.gates().size() + rng.below( 2 );
    const auto u = build_universal( m, n );
    const auto enc = encode_control( c, m, n );
    const auto y = gen_bits( rng, m );
    std::vector<int> direct( y.begin(), y.begin() + c.num_wires() );
    direct = oracle::run_raw( c, direct );
    const auto out = eval( u, universal_input( enc, y ), { false, false } ).wire_outputs;
    for ( std::size_t d = 0; d < c.num_wires(); ++d )
    {
      ASSERT_EQ( int( out[d] ), direct[d] ) << serialize_circuit( c );
    }
  }
}
