#include "oracles.hpp"

#include <compcirc/fixtures.hpp>
#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/reductions.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

namespace
{

ErrorKind kind_of( const std::function<void()>& f )
{
  try
  {
    f();
  }
  catch ( const Error& e )
  {
    return e.kind();
  }
  return ErrorKind::parse_error;
}

Circuit constant_circuit( Rng& rng, bool with_neg )
{
  CircuitParams p;
  p.with_neg = with_neg;
  p.annotations = AnnotationMode::constants;
  return gen_circuit( rng, p );
}

} // namespace

TEST( Reductions, ThreeWireUpToMatching )
{
  const auto c = parse_circuit( fixtures::three_wire_up );
  const auto r = ccv_to_3vlfmm( c );
  EXPECT_EQ( r.layers, 3u );
  EXPECT_EQ( r.instance.graph.num_bottom(), 9u );
  EXPECT_LE( max_degree( r.instance.graph ), 3u );
  const std::vector<int> want{ 1, 1, 0 };
  for ( std::size_t w = 0; w < 3; ++w )
  {
    EXPECT_EQ( vlfmm_decision( r.instance.graph, r.top( 2, w ) ), want[w] ) << w;
  }
  EXPECT_EQ( vlfmm_decision( r.instance.graph, r.instance.target_top ), 0 );
}

TEST( Reductions, ThreeVlfmmPreconditions )
{
  Circuit down( 2, { Annotation::constant( 1 ), Annotation::constant( 0 ) }, { Gate::comparator( 0, 1 ) }, 0 );
  EXPECT_EQ( kind_of( [&] { ccv_to_3vlfmm( down ); } ), ErrorKind::not_all_up );
  Circuit neg( 1 );
  neg.add_negation( 0 );
  EXPECT_EQ( kind_of( [&] { ccv_to_3vlfmm( neg ); } ), ErrorKind::has_negations );
  Circuit open( 1, { Annotation::input( 0 ) }, {}, 0 );
  EXPECT_EQ( kind_of( [&] { ccv_to_3vlfmm( open ); } ), ErrorKind::precondition_violated );
  // the general entry point normalizes direction first
  EXPECT_EQ( vlfmm_decision( ccv_to_3vlfmm_any( down ).reduction.instance.graph,
                             ccv_to_3vlfmm_any( down ).reduction.instance.target_top ),
             0 );
}

TEST( Reductions, SwappedGadgetBottomsBreakTheReduction )
{
  std::size_t broken = 0;
  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 71, "mutation", i );
    const auto c = constant_circuit( rng, false );
    const auto up = normalize_up( c );
    const auto r = detail::build_3vlfmm( up.circuit, true );
    broken += vlfmm_decision( r.instance.graph, r.instance.target_top ) != oracle::circuit_value( c );
  }
  EXPECT_GT( broken, 0u );
}

TEST( Reductions, MatchingSimulationFixture )
{
  const auto f = parse_graph( fixtures::matching_sim );
  const auto c = vlfmm_to_ccv( f.graph, *f.target_top, true );
  EXPECT_EQ( c.gates().size(), 12u );
  const auto out = eval( c, std::span<const Bit>{} ).wire_outputs;
  EXPECT_EQ( out, ( std::vector<Bit>{ 1, 1, 1, 0, 0, 0, 0 } ) );
  EXPECT_EQ( vlfmm_to_ccv( f.graph, 2 ).gates().size(), 7u );
}

TEST( Reductions, NegationRailsFixture )
{
  const auto c = parse_circuit( fixtures::negation_rails );
  const auto dr = ccvneg_to_ccv( c );
  EXPECT_FALSE( dr.circuit.has_negations() );
  EXPECT_EQ( eval( dr.circuit, std::span<const Bit>{} ).wire_outputs,
             ( std::vector<Bit>{ 1, 0, 1, 0, 1, 0, 0 } ) );
}

TEST( Reductions, EdgeDecisionFixture )
{
  const auto f = parse_graph( fixtures::edge_decision );
  const auto lc = lfmm_to_ccvneg( f.graph, *f.target_edge );
  const auto r = eval( lc.circuit, std::span<const Bit>{}, { true, false } );
  EXPECT_EQ( r.wire_outputs, ( std::vector<Bit>{ 1, 0, 1, 0, 0, 1, 0, 1, 0, 1 } ) );
  EXPECT_EQ( r.answer, 1 );
  EXPECT_EQ( kind_of( [&] { lfmm_to_ccvneg( f.graph, { 0, 2 } ); } ), ErrorKind::edge_not_in_graph );
}

TEST( Reductions, RingAgainstOracles )
{
  for ( std::size_t i = 0; i < 300; ++i )
  {
    auto rng = Rng::for_case( 72, "ring", i );
    const auto c = constant_circuit( rng, false );
    const auto value = oracle::circuit_value( c );

    const auto v3 = ccv_to_3vlfmm_any( c ).reduction.instance;
    ASSERT_LE( max_degree( v3.graph ), 3u );
    ASSERT_EQ( oracle::top_covered( v3.graph, v3.target_top ), value == 1 ) << serialize_circuit( c );

    const auto l3 = ccv_to_3lfmm( c );
    ASSERT_LE( max_degree( l3.graph ), 3u );
    const auto m = oracle::greedy( l3.graph );
    ASSERT_EQ( m[l3.target_edge.first] == long( l3.target_edge.second ), value == 1 );

    const auto back = lfmm_to_ccvneg( l3.graph, l3.target_edge );
    ASSERT_EQ( oracle::circuit_value( back.circuit ), value );
    ASSERT_EQ( oracle::circuit_value( ccvneg_to_ccv( back.circuit ).circuit ), value );

    const auto sim = vlfmm_to_ccv( v3.graph, v3.target_top );
    ASSERT_EQ( oracle::circuit_value( sim ), value );

    auto with_neg = constant_circuit( rng, true );
    const auto dr = ccvneg_to_ccv( with_neg );
    ASSERT_EQ( oracle::circuit_value( dr.circuit ), oracle::circuit_value( with_neg ) );
  }
}

TEST( Reductions, TriLoweringGateTable )
{
  const char* rows[] = { "0000", "0*0*", "0101", "*00*", "****", "*1*1", "1001", "1**1", "1111" };
  const Circuit c( 2, { Annotation::input( 0 ), Annotation::input( 1 ) }, { Gate::comparator( 0, 1 ) }, 0 );
  for ( const char* row : rows )
  {
    const std::vector<Tri> x{ *tri_from_char( row[0] ), *tri_from_char( row[1] ) };
    const auto rl = tri_to_bool( c, x );
    const auto out = eval( rl.circuit, std::span<const Bit>{} ).wire_outputs;
    EXPECT_EQ( to_char( decode_rails( out[rl.low( 0 )], out[rl.high( 0 )] ) ), row[2] ) << row;
    EXPECT_EQ( to_char( decode_rails( out[rl.low( 1 )], out[rl.high( 1 )] ) ), row[3] ) << row;
  }
  EXPECT_EQ( encode_rails( Tri::star ), ( std::pair<Bit, Bit>{ 0, 1 } ) );
  EXPECT_THROW( decode_rails( 1, 0 ), Error );
}

TEST( Reductions, TriAnswerIsOneOnlyWhenDetermined )
{
  const Circuit pass( 1, { Annotation::input( 0 ) }, {}, 0 );
  for ( Tri t : { Tri::zero, Tri::star, Tri::one } )
  {
    const auto rl = tri_to_bool( pass, std::vector<Tri>{ t } );
    EXPECT_EQ( eval( rl.circuit, std::span<const Bit>{} ).answer, t == Tri::one ? 1 : 0 );
  }
}

TEST( Reductions, LfmmThreeToStableMarriage )
{
  const auto f = parse_graph( fixtures::greedy_matching );
  EXPECT_EQ( kind_of( [&] { lfmm3_to_sm( f.graph ); } ), ErrorKind::not_square );
  BipartiteGraph dense( 4, 4 );
  for ( std::size_t t = 0; t < 4; ++t )
  {
    dense.add_edge( 0, t );
  }
  EXPECT_EQ( kind_of( [&] { lfmm3_to_sm( dense ); } ), ErrorKind::degree_too_high );

  for ( std::size_t i = 0; i < 200; ++i )
  {
    auto rng = Rng::for_case( 73, "lfmm3-sm", i );
    const auto g = gen_bounded_bipartite( rng, 4, 3 );
    const auto inst = lfmm3_to_sm( g );
    ASSERT_EQ( inst.n(), 2 * g.num_bottom() );
    const auto greedy = oracle::greedy( g );
    const auto stable = oracle::man_optimal( inst );
    for ( const auto& [b, t] : g.edges() )
    {
      ASSERT_EQ( stable[b] == t, greedy[b] == long( t ) ) << serialize_graph( g );
    }
  }
}

TEST( Reductions, StableMarriageCircuits )
{
  for ( std::size_t i = 0; i < 30; ++i )
  {
    auto rng = Rng::for_case( 74, "sm-ccv", i );
    const auto n = static_cast<std::size_t>( rng.between( 1, 3 ) );
    const auto inst = gen_sm( rng, n );
    const auto man = oracle::man_optimal( inst );
    const auto wopt = oracle::man_optimal( inst.swapped() );
    for ( std::size_t m = 0; m < n; ++m )
    {
      for ( std::size_t w = 0; w < n; ++w )
      {
        const auto a = mosm_to_ccv( inst, m, w );
        ASSERT_FALSE( a.has_negations() );
        ASSERT_EQ( oracle::circuit_value( a ) == 1, man[m] == w ) << serialize_sm( inst );
        ASSERT_EQ( oracle::circuit_value( wosm_to_ccv( inst, m, w ) ) == 1, wopt[w] == m ) << serialize_sm( inst );
      }
    }
  }
  const auto inst = gen_sm( 3, 2 );
  EXPECT_EQ( kind_of( [&] { mosm_to_ccv( inst, 2, 0 ); } ), ErrorKind::index_out_of_range );
}

TEST( Reductions, UnrolledSubramanianCircuit )
{
  const auto inst = gen_sm( 8, 3 );
  const auto sc = sm_to_tri_circuit( inst );
  EXPECT_EQ( sc.iterations, 18u );
  EXPECT_EQ( sc.instance.circuit.gates().size(), 18u * 9 );
  const auto values = eval_tri( sc.instance.circuit, sc.instance.inputs, false ).wire_outputs;
  EXPECT_EQ( decode_sm_matrices( sc, values ), subramanian_run( inst ).final_state );
}
