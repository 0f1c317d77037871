#include <compcirc/cli.hpp>
#include <compcirc/fixtures.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace compcirc;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run cli( std::vector<std::string> args, const std::string& stdin_text = "" )
{
  std::istringstream in( stdin_text );
  std::ostringstream out, err;
  const int code = run_cli( args, in, out, err );
  return { code, out.str(), err.str() };
}

std::string fixture( const char* name ) { return std::string( COMPCIRC_FIXTURE_DIR ) + "/" + name; }

} // namespace

TEST( Cli, EvalSixWire )
{
  const auto r = cli( { "eval", fixture( "annotated_six_wire.ccv" ), "--input", "111" } );
  EXPECT_EQ( r.code, exit_ok );
  EXPECT_NE( r.out.find( "answer=0" ), std::string::npos ) << r.out;
  EXPECT_NE( r.out.find( "w1=1" ), std::string::npos );
  const auto t = cli( { "eval", "-", "--input", "111", "--trace" }, std::string( fixtures::annotated_six_wire ) );
  EXPECT_NE( t.out.find( "step 4" ), std::string::npos ) << t.out;
}

TEST( Cli, EvalTri )
{
  const auto r = cli( { "eval", "-", "--tri", "*1" }, "CCV v1\nwires 2\nannot 0 x0\nannot 1 x1\ngate 0 1\noutput 0\n" );
  EXPECT_EQ( r.code, exit_ok );
  EXPECT_NE( r.out.find( "w0=*" ), std::string::npos ) << r.out;
  EXPECT_NE( r.out.find( "w1=1" ), std::string::npos );
}

TEST( Cli, ReduceThenEvaluate )
{
  const auto dir = std::filesystem::temp_directory_path() / "compcirc_cli_test";
  std::filesystem::create_directories( dir );
  const auto out = ( dir / "sim.ccv" ).string();
  const auto r = cli( { "reduce", "vlfmm-to-ccv", fixture( "matching_sim.graph" ), out } );
  ASSERT_EQ( r.code, exit_ok ) << r.err;
  EXPECT_TRUE( std::filesystem::exists( out + ".map" ) );
  const auto e = cli( { "eval", out } );
  EXPECT_NE( e.out.find( "answer=1" ), std::string::npos ) << e.out;

  const auto piped = cli( { "reduce", "neg-elim", fixture( "negation_rails.ccv" ), "-" } );
  ASSERT_EQ( piped.code, exit_ok ) << piped.err;
  EXPECT_NE( piped.out.find( "# MAP v1" ), std::string::npos ) << piped.out;
  const auto e2 = cli( { "eval", "-" }, piped.out );
  EXPECT_EQ( e2.code, exit_ok ) << e2.err;
  EXPECT_NE( e2.out.find( "answer=1" ), std::string::npos ) << e2.out;
  std::filesystem::remove_all( dir );
}

TEST( Cli, UsageErrors )
{
  EXPECT_EQ( cli( { "reduce", "no-such-pass", "-", "-" } ).code, exit_usage );
  EXPECT_EQ( cli( { "verify", "no-such-suite" } ).code, exit_usage );
  EXPECT_EQ( cli( { "eval", "-" }, "CCV v1\nwires 1\n" ).code, exit_usage );
  EXPECT_EQ( cli( { "frobnicate" } ).code, exit_usage );
  EXPECT_EQ( cli( { "gs", "-", "--alg", "7" }, "SM v1\nn 1\nman 0: 0\nwoman 0: 0\n" ).code, exit_usage );
}

TEST( Cli, GreedyMatching )
{
  const auto r = cli( { "lfmm", fixture( "greedy_matching.graph" ) } );
  EXPECT_EQ( r.code, exit_ok );
  EXPECT_EQ( r.out, "b0 t0\nb2 t2\nb3 t1\nanswer=1\n" );
  const auto f = cli( { "lfmm", fixture( "edge_decision.graph" ) } );
  EXPECT_NE( f.out.find( "answer=" ), std::string::npos );
}

TEST( Cli, StableMarriageAlgorithmsAgree )
{
  const std::string inst = "SM v1\nn 3\nman 0: 0 1 2\nman 1: 1 2 0\nman 2: 2 0 1\n"
                           "woman 0: 1 2 0\nwoman 1: 2 0 1\nwoman 2: 0 1 2\n";
  const auto a = cli( { "gs", "-", "--alg", "1" }, inst );
  ASSERT_EQ( a.code, exit_ok ) << a.err;
  const auto man_block = a.out.substr( 0, a.out.find( "rounds=" ) );
  for ( const char* alg : { "2", "3", "4", "5", "6" } )
  {
    const auto b = cli( { "gs", "-", "--alg", alg }, inst );
    ASSERT_EQ( b.code, exit_ok ) << b.err;
    EXPECT_EQ( b.out.substr( 0, man_block.size() ), man_block ) << alg;
    EXPECT_NE( b.out.find( "woman-optimal\nm0 w2\nm1 w0\nm2 w1\n" ), std::string::npos ) << b.out;
  }
}

TEST( Cli, Reachability )
{
  const auto yes = cli( { "reach", "-", "--target", "2" }, "DIGRAPH v1\nnodes 3\narc 0 1\narc 1 2\n" );
  EXPECT_EQ( yes.code, exit_ok );
  EXPECT_NE( yes.out.find( "reachable=1" ), std::string::npos );
  const auto no = cli( { "reach", "-", "--target", "0", "--source", "2" }, "DIGRAPH v1\nnodes 3\narc 0 1\narc 1 2\n" );
  EXPECT_EQ( no.code, exit_false );
  EXPECT_NE( no.out.find( "reachable=0" ), std::string::npos );
}

TEST( Cli, VerifyIsDeterministic )
{
  const auto a = cli( { "verify", "formats", "--cases", "20", "--seed", "4" } );
  const auto b = cli( { "verify", "formats", "--cases", "20", "--seed", "4" } );
  EXPECT_EQ( a.code, exit_ok ) << a.out;
  EXPECT_EQ( a.out, b.out );
  EXPECT_NE( a.out.find( "result pass" ), std::string::npos );
}
