#include "oracles.hpp"

#include <compcirc/generators.hpp>
#include <compcirc/io_formats.hpp>
#include <compcirc/stable_marriage.hpp>
#include <compcirc/verify.hpp>

#include <gtest/gtest.h>

using namespace compcirc;

namespace
{

// Cyclic 3x3 instance: three stable marriages, man- and woman-optimal differ.
SMInstance two_stable()
{
  return SMInstance( { { 0, 1, 2 }, { 1, 2, 0 }, { 2, 0, 1 } }, { { 1, 2, 0 }, { 2, 0, 1 }, { 0, 1, 2 } } );
}

} // namespace

TEST( StableMarriage, InstanceValidation )
{
  EXPECT_THROW( SMInstance( { { 0, 0 }, { 1, 0 } }, { { 0, 1 }, { 0, 1 } } ), Error );
  EXPECT_THROW( SMInstance( { { 0 } }, {} ), Error );
  const auto inst = two_stable();
  EXPECT_EQ( inst.man_rank( 1, 0 ), 2u );
  EXPECT_EQ( inst.woman_choice( 2, 0 ), 0u );
  EXPECT_EQ( inst.swapped().swapped(), inst );
}

TEST( StableMarriage, SingleCouple )
{
  const auto inst = gen_sm( 5, 1 );
  EXPECT_EQ( inst, SMInstance( { { 0 } }, { { 0 } } ) );
  const auto r = gale_shapley( inst );
  EXPECT_EQ( r.marriage.wife, ( std::vector<std::size_t>{ 0 } ) );
  EXPECT_EQ( r.rounds, 1u );
  EXPECT_EQ( subramanian_run( inst ).man_opt, r.marriage );
}

TEST( StableMarriage, OptimalSidesDiffer )
{
  const auto inst = two_stable();
  const auto g = gale_shapley( inst );
  EXPECT_EQ( g.marriage.wife, ( std::vector<std::size_t>{ 0, 1, 2 } ) );
  const auto s = symmetric_gs( inst );
  EXPECT_EQ( s.man_opt, g.marriage );
  EXPECT_EQ( s.woman_opt.wife, ( std::vector<std::size_t>{ 2, 0, 1 } ) );
  EXPECT_EQ( all_stable_marriages( inst ).size(), 3u );
}

TEST( StableMarriage, IntervalMatrixConversions )
{
  const auto inst = two_stable();
  const auto full = IntervalState::full( 3 );
  EXPECT_EQ( matrix_of_intervals( inst, full ), initial_matrices( inst ) );
  EXPECT_EQ( intervals_of_matrix( inst, initial_matrices( inst ) ), full );
}

TEST( StableMarriage, FeasiblePairs )
{
  const auto inst = two_stable();
  for ( const auto& s : all_stable_marriages( inst ) )
  {
    const auto mp = marriage_to_feasible( inst, s );
    EXPECT_TRUE( is_feasible_pair( inst, mp ) );
    EXPECT_EQ( feasible_to_marriage( inst, mp ), s );
  }
  auto stars = MatrixPair::filled( 3, Tri::star );
  try
  {
    feasible_to_marriage( inst, stars );
    FAIL();
  }
  catch ( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::has_stars );
  }
  try
  {
    feasible_to_marriage( inst, MatrixPair::filled( 3, Tri::zero ) );
    FAIL();
  }
  catch ( const Error& e )
  {
    EXPECT_EQ( e.kind(), ErrorKind::not_feasible );
  }
  EXPECT_EQ( detail::enumerate_feasible( inst ).size(), 3u );
}

TEST( StableMarriage, AllStableTooLarge )
{
  EXPECT_THROW( all_stable_marriages( gen_sm( 1, 11 ) ), Error );
}

TEST( StableMarriage, LadderAgreesWithOracle )
{
  for ( std::size_t i = 0; i < 150; ++i )
  {
    auto rng = Rng::for_case( 41, "sm-test", i );
    const auto n = static_cast<std::size_t>( rng.between( 1, 6 ) );
    const auto inst = gen_sm( rng, n );
    const auto want = oracle::man_optimal( inst );
    const auto wopt = oracle::man_optimal( inst.swapped() );
    std::vector<std::size_t> woman_view( n );
    for ( std::size_t w = 0; w < n; ++w )
    {
      woman_view[wopt[w]] = w;
    }
    ASSERT_EQ( gale_shapley( inst ).marriage.wife, want ) << serialize_sm( inst );
    ASSERT_EQ( symmetric_gs( inst ).woman_opt.wife, woman_view );
    ASSERT_EQ( interval_run( inst ).man_opt.wife, want );
    ASSERT_EQ( delayed_interval_run( inst ).woman_opt.wife, woman_view );
    ASSERT_EQ( interval_logic_run( inst ).man_opt.wife, want );
    ASSERT_EQ( subramanian_run( inst ).woman_opt.wife, woman_view );

    const auto all = oracle::stable_marriages( inst );
    const auto lib = all_stable_marriages( inst );
    ASSERT_EQ( lib.size(), all.size() );
    for ( std::size_t k = 0; k < all.size(); ++k )
    {
      ASSERT_EQ( lib[k].wife, all[k] );
    }
  }
}

TEST( StableMarriage, DelayedStepsMatchMatrices )
{
  for ( std::size_t i = 0; i < 60; ++i )
  {
    const auto inst = gen_sm( 900 + i, 1 + i % 5 );
    const auto a = delayed_interval_run( inst );
    const auto b = interval_logic_run( inst );
    ASSERT_EQ( a.steps.size(), b.steps.size() );
    for ( std::size_t s = 0; s < a.steps.size(); ++s )
    {
      ASSERT_EQ( matrix_of_intervals( inst, a.steps[s] ), b.steps[s] );
    }
    EXPECT_EQ( b.final_state, b.steps.back() );
  }
}
