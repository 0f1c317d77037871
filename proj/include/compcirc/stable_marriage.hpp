#pragma once

// Stable-marriage instances and the algorithm ladder from
// Gale-Shapley to Subramanian's three-valued fixed point.
//
// Ranks are 0-based: rank 0 is a person's first choice. Round counts
// include the final pass that detects the fixed point, so an instance that
// is already stable reports one round.

#include "error.hpp"
#include "tri.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace compcirc
{

class SMInstance
{
public:
  SMInstance() = default;

  /// `man_pref[m]` lists women from most to least preferred; dually for women.
  SMInstance( std::vector<std::vector<std::size_t>> man_pref, std::vector<std::vector<std::size_t>> woman_pref )
      : n_( man_pref.size() ), man_pref_( std::move( man_pref ) ), woman_pref_( std::move( woman_pref ) )
  {
    detail::require( woman_pref_.size() == n_, ErrorKind::bad_shape, "men and women counts differ" );
    man_rank_ = ranks( man_pref_, "man" );
    woman_rank_ = ranks( woman_pref_, "woman" );
  }

  std::size_t n() const { return n_; }
  const std::vector<std::vector<std::size_t>>& man_prefs() const { return man_pref_; }
  const std::vector<std::vector<std::size_t>>& woman_prefs() const { return woman_pref_; }

  /// The woman of rank `r` in man `m`'s list.
  std::size_t man_choice( std::size_t m, std::size_t r ) const { return man_pref_[m][r]; }
  std::size_t woman_choice( std::size_t w, std::size_t r ) const { return woman_pref_[w][r]; }
  std::size_t man_rank( std::size_t m, std::size_t w ) const { return man_rank_[m][w]; }
  std::size_t woman_rank( std::size_t w, std::size_t m ) const { return woman_rank_[w][m]; }

  /// Same instance with the roles of men and women exchanged.
  SMInstance swapped() const { return SMInstance( woman_pref_, man_pref_ ); }

  bool operator==( const SMInstance& other ) const
  {
    return man_pref_ == other.man_pref_ && woman_pref_ == other.woman_pref_;
  }

private:
  std::vector<std::vector<std::size_t>> ranks( const std::vector<std::vector<std::size_t>>& prefs,
                                               const char* who ) const
  {
    std::vector<std::vector<std::size_t>> rank( n_, std::vector<std::size_t>( n_, n_ ) );
    for ( std::size_t p = 0; p < n_; ++p )
    {
      const auto& row = prefs[p];
      detail::require( row.size() == n_, ErrorKind::bad_shape,
                       std::string( who ) + " " + std::to_string( p ) + " has a list of wrong length" );
      for ( std::size_t r = 0; r < n_; ++r )
      {
        const auto q = row[r];
        detail::require( q < n_ && rank[p][q] == n_, ErrorKind::bad_shape,
                         std::string( who ) + " " + std::to_string( p ) + " list is not a permutation" );
        rank[p][q] = r;
      }
    }
    return rank;
  }

  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> man_pref_, woman_pref_;
  std::vector<std::vector<std::size_t>> man_rank_, woman_rank_;
};

/// A perfect matching, stored as man -> woman.
struct Marriage
{
  std::vector<std::size_t> wife;

  std::vector<std::size_t> husbands() const
  {
    std::vector<std::size_t> h( wife.size() );
    for ( std::size_t m = 0; m < wife.size(); ++m )
    {
      h[wife[m]] = m;
    }
    return h;
  }

  bool contains( std::size_t m, std::size_t w ) const { return m < wife.size() && wife[m] == w; }

  /// The same pairs read with the sexes exchanged (woman -> man).
  Marriage swapped() const { return { husbands() }; }

  auto operator<=>( const Marriage& ) const = default;
};

/// Contiguous rank range [lo, hi] of a person's remaining candidates.
struct Interval
{
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool contains_rank( std::size_t r ) const { return lo <= r && r <= hi; }
  bool operator==( const Interval& ) const = default;
};

struct IntervalState
{
  std::vector<Interval> men;
  std::vector<Interval> women;

  static IntervalState full( std::size_t n )
  {
    return { std::vector<Interval>( n, { 0, n - 1 } ), std::vector<Interval>( n, { 0, n - 1 } ) };
  }

  bool operator==( const IntervalState& ) const = default;
};

/// MM(m,w) and WW(w,m), both indexed by partner identity.
struct MatrixPair
{
  std::vector<std::vector<Tri>> mm;
  std::vector<std::vector<Tri>> ww;

  static MatrixPair filled( std::size_t n, Tri v )
  {
    return { std::vector<std::vector<Tri>>( n, std::vector<Tri>( n, v ) ),
             std::vector<std::vector<Tri>>( n, std::vector<Tri>( n, v ) ) };
  }

  bool has_stars() const
  {
    for ( const auto* mat : { &mm, &ww } )
    {
      for ( const auto& row : *mat )
      {
        if ( std::find( row.begin(), row.end(), Tri::star ) != row.end() )
        {
          return true;
        }
      }
    }
    return false;
  }

  bool operator==( const MatrixPair& ) const = default;
};

struct GsResult
{
  Marriage marriage;
  std::size_t rounds = 0;
};

struct SymmetricResult
{
  Marriage man_opt;
  Marriage woman_opt;
  std::size_t rounds = 0;
};

struct IntervalResult
{
  Marriage man_opt;
  Marriage woman_opt;
  IntervalState final_state;
  std::size_t rounds = 0;
  /// State before each round plus the final one (filled by delayed_interval_run).
  std::vector<IntervalState> steps;
};

struct MatrixResult
{
  Marriage man_opt; ///< S_M
  Marriage woman_opt; ///< S_W
  MatrixPair final_state;
  std::size_t rounds = 0;
  std::vector<MatrixPair> steps;
};

namespace detail
{

inline std::size_t round_guard( std::size_t n ) { return 2 * n * n + 1; }

inline void check_round( std::size_t rounds, std::size_t n, const char* alg )
{
  if ( rounds > round_guard( n ) )
  {
    fail( ErrorKind::internal_bound_violation, std::string( alg ) + " exceeded 2n^2+1 rounds" );
  }
}

/// Builds a Marriage from a man -> woman choice and checks it is a bijection.
inline Marriage to_marriage( const std::vector<std::optional<std::size_t>>& choice, const char* alg )
{
  const auto n = choice.size();
  Marriage mar{ std::vector<std::size_t>( n ) };
  std::vector<bool> used( n, false );
  for ( std::size_t m = 0; m < n; ++m )
  {
    if ( !choice[m] || used[*choice[m]] )
    {
      fail( ErrorKind::internal_bound_violation, std::string( alg ) + " did not produce a marriage" );
    }
    used[*choice[m]] = true;
    mar.wife[m] = *choice[m];
  }
  return mar;
}

} // namespace detail

/// Gale-Shapley: men propose to their best remaining woman, rejected pairs are removed.
inline GsResult gale_shapley( const SMInstance& inst )
{
  const auto n = inst.n();
  // a man only ever loses his current top choice, so his remaining women are
  // exactly the ranks >= next_rank[m]
  std::vector<std::size_t> next_rank( n, 0 );
  GsResult result;
  bool changed = true;
  while ( changed )
  {
    detail::check_round( ++result.rounds, n, "gale_shapley" );
    changed = false;
    std::vector<std::size_t> top( n );
    std::vector<std::optional<std::size_t>> best( n );
    for ( std::size_t m = 0; m < n; ++m )
    {
      detail::require( next_rank[m] < n, ErrorKind::internal_bound_violation, "man ran out of women" );
      top[m] = inst.man_choice( m, next_rank[m] );
      auto& b = best[top[m]];
      if ( !b || inst.woman_rank( top[m], m ) < inst.woman_rank( top[m], *b ) )
      {
        b = m;
      }
    }
    for ( std::size_t m = 0; m < n; ++m )
    {
      if ( *best[top[m]] != m )
      {
        ++next_rank[m];
        changed = true;
      }
    }
  }
  result.marriage.wife.resize( n );
  for ( std::size_t m = 0; m < n; ++m )
  {
    result.marriage.wife[m] = inst.man_choice( m, next_rank[m] );
  }
  return result;
}

/// Symmetric Gale-Shapley: both sexes propose and reject in parallel on one shared graph.
inline SymmetricResult symmetric_gs( const SMInstance& inst )
{
  const auto n = inst.n();
  std::vector<std::vector<bool>> g( n, std::vector<bool>( n, true ) ); // g[m][w]
  SymmetricResult result;
  std::vector<std::optional<std::size_t>> top_m( n ), top_w( n );
  bool changed = true;
  while ( changed )
  {
    detail::check_round( ++result.rounds, n, "symmetric_gs" );
    changed = false;
    for ( std::size_t m = 0; m < n; ++m )
    {
      top_m[m].reset();
      for ( std::size_t r = 0; r < n && !top_m[m]; ++r )
      {
        if ( g[m][inst.man_choice( m, r )] )
        {
          top_m[m] = inst.man_choice( m, r );
        }
      }
    }
    for ( std::size_t w = 0; w < n; ++w )
    {
      top_w[w].reset();
      for ( std::size_t r = 0; r < n && !top_w[w]; ++r )
      {
        if ( g[inst.woman_choice( w, r )][w] )
        {
          top_w[w] = inst.woman_choice( w, r );
        }
      }
    }
    std::vector<std::optional<std::size_t>> best_w( n ), best_m( n );
    for ( std::size_t m = 0; m < n; ++m )
    {
      if ( top_m[m] )
      {
        auto& b = best_w[*top_m[m]];
        if ( !b || inst.woman_rank( *top_m[m], m ) < inst.woman_rank( *top_m[m], *b ) )
        {
          b = m;
        }
      }
    }
    for ( std::size_t w = 0; w < n; ++w )
    {
      if ( top_w[w] )
      {
        auto& b = best_m[*top_w[w]];
        if ( !b || inst.man_rank( *top_w[w], w ) < inst.man_rank( *top_w[w], *b ) )
        {
          b = w;
        }
      }
    }
    for ( std::size_t m = 0; m < n; ++m )
    {
      if ( top_m[m] && best_w[*top_m[m]] != m && g[m][*top_m[m]] )
      {
        g[m][*top_m[m]] = false;
        changed = true;
      }
    }
    for ( std::size_t w = 0; w < n; ++w )
    {
      if ( top_w[w] && best_m[*top_w[w]] != w && g[*top_w[w]][w] )
      {
        g[*top_w[w]][w] = false;
        changed = true;
      }
    }
  }
  result.man_opt = detail::to_marriage( top_m, "symmetric_gs" );
  std::vector<std::optional<std::size_t>> wife_w( n );
  for ( std::size_t w = 0; w < n; ++w )
  {
    if ( top_w[w] )
    {
      wife_w[*top_w[w]] = w;
    }
  }
  result.woman_opt = detail::to_marriage( wife_w, "symmetric_gs" );
  return result;
}

namespace detail
{

/// One round of interval narrowing; with `delayed` a top choice is dropped only once the previous state excludes it.
inline IntervalState interval_round( const SMInstance& inst, const IntervalState& s, bool delayed )
{
  const auto n = inst.n();
  std::vector<std::size_t> top_m( n ), top_w( n );
  for ( std::size_t p = 0; p < n; ++p )
  {
    top_m[p] = inst.man_choice( p, s.men[p].lo );
    top_w[p] = inst.woman_choice( p, s.women[p].lo );
  }
  // best_w[w]: rank (in w's list) of her best proposer among men; dually best_m
  std::vector<std::optional<std::size_t>> best_w( n ), best_m( n );
  for ( std::size_t m = 0; m < n; ++m )
  {
    const auto w = top_m[m];
    const auto r = inst.woman_rank( w, m );
    if ( !best_w[w] || r < *best_w[w] )
    {
      best_w[w] = r;
    }
  }
  for ( std::size_t w = 0; w < n; ++w )
  {
    const auto m = top_w[w];
    const auto r = inst.man_rank( m, w );
    if ( !best_m[m] || r < *best_m[m] )
    {
      best_m[m] = r;
    }
  }

  IntervalState next = s;
  // remove everyone ranked below the best suitor
  for ( std::size_t p = 0; p < n; ++p )
  {
    if ( best_m[p] )
    {
      next.men[p].hi = std::min( next.men[p].hi, *best_m[p] );
    }
    if ( best_w[p] )
    {
      next.women[p].hi = std::min( next.women[p].hi, *best_w[p] );
    }
  }
  // drop the top choice when rejected now, or (delayed) when it had already left the partner's interval
  for ( std::size_t m = 0; m < n; ++m )
  {
    const auto w = top_m[m];
    const bool drop = delayed ? !s.women[w].contains_rank( inst.woman_rank( w, m ) )
                              : *best_w[w] != inst.woman_rank( w, m );
    if ( drop )
    {
      ++next.men[m].lo;
    }
  }
  for ( std::size_t w = 0; w < n; ++w )
  {
    const auto m = top_w[w];
    const bool drop = delayed ? !s.men[m].contains_rank( inst.man_rank( m, w ) )
                              : *best_m[m] != inst.man_rank( m, w );
    if ( drop )
    {
      ++next.women[w].lo;
    }
  }
  for ( const auto* side : { &next.men, &next.women } )
  {
    for ( const auto& iv : *side )
    {
      require( iv.lo <= iv.hi, ErrorKind::internal_bound_violation, "interval became empty" );
    }
  }
  return next;
}

inline IntervalResult run_intervals( const SMInstance& inst, bool delayed, bool record )
{
  const auto n = inst.n();
  IntervalResult result;
  auto state = IntervalState::full( n );
  if ( record )
  {
    result.steps.push_back( state );
  }
  while ( true )
  {
    check_round( ++result.rounds, n, delayed ? "delayed_interval_run" : "interval_run" );
    auto next = interval_round( inst, state, delayed );
    if ( record )
    {
      result.steps.push_back( next );
    }
    if ( next == state )
    {
      break;
    }
    state = std::move( next );
  }
  std::vector<std::optional<std::size_t>> wife_m( n ), wife_w( n );
  for ( std::size_t p = 0; p < n; ++p )
  {
    wife_m[p] = inst.man_choice( p, state.men[p].lo );
    wife_w[inst.woman_choice( p, state.women[p].lo )] = p;
  }
  result.man_opt = to_marriage( wife_m, "interval algorithm" );
  result.woman_opt = to_marriage( wife_w, "interval algorithm" );
  result.final_state = std::move( state );
  return result;
}

} // namespace detail

/// Interval narrowing, both sides updated from the same state.
inline IntervalResult interval_run( const SMInstance& inst ) { return detail::run_intervals( inst, false, false ); }

/// Delayed interval narrowing; `steps` holds the state before every round and the final state.
inline IntervalResult delayed_interval_run( const SMInstance& inst )
{
  return detail::run_intervals( inst, true, true );
}

/* Matrix representation of intervals.
 *
 * Man row:  1 for ranks <= lo, * inside (lo, hi], 0 after hi.
 * Woman row: 0 for ranks <= lo, * inside (lo, hi], 1 after hi.
 */
inline MatrixPair matrix_of_intervals( const SMInstance& inst, const IntervalState& s )
{
  const auto n = inst.n();
  auto mp = MatrixPair::filled( n, Tri::star );
  for ( std::size_t p = 0; p < n; ++p )
  {
    for ( std::size_t r = 0; r < n; ++r )
    {
      const auto& im = s.men[p];
      mp.mm[p][inst.man_choice( p, r )] = r <= im.lo ? Tri::one : ( r <= im.hi ? Tri::star : Tri::zero );
      const auto& iw = s.women[p];
      mp.ww[p][inst.woman_choice( p, r )] = r <= iw.lo ? Tri::zero : ( r <= iw.hi ? Tri::star : Tri::one );
    }
  }
  return mp;
}

/// Reads intervals back from monotone rows; inverse of matrix_of_intervals.
inline IntervalState intervals_of_matrix( const SMInstance& inst, const MatrixPair& mp )
{
  const auto n = inst.n();
  IntervalState s = IntervalState::full( n );
  for ( std::size_t p = 0; p < n; ++p )
  {
    std::size_t ones = 0, stars = 0, zeros = 0, ones_w = 0;
    for ( std::size_t r = 0; r < n; ++r )
    {
      const auto v = mp.mm[p][inst.man_choice( p, r )];
      ones += v == Tri::one;
      stars += v == Tri::star;
      const auto u = mp.ww[p][inst.woman_choice( p, r )];
      zeros += u == Tri::zero;
      ones_w += u == Tri::one;
    }
    detail::require( ones >= 1 && zeros >= 1, ErrorKind::bad_shape, "row has no determined first entry" );
    s.men[p] = { ones - 1, ones - 1 + stars };
    s.women[p] = { zeros - 1, n - 1 - ones_w };
  }
  return s;
}

/// Initial matrices of the three-valued runs.
inline MatrixPair initial_matrices( const SMInstance& inst )
{
  const auto n = inst.n();
  auto mp = MatrixPair::filled( n, Tri::star );
  for ( std::size_t p = 0; p < n; ++p )
  {
    mp.mm[p][inst.man_choice( p, 0 )] = Tri::one;
    mp.ww[p][inst.woman_choice( p, 0 )] = Tri::zero;
  }
  return mp;
}

namespace detail
{

inline MatrixPair logic_round( const SMInstance& inst, const MatrixPair& s, bool prefix )
{
  const auto n = inst.n();
  MatrixPair next = s;
  for ( std::size_t m = 0; m < n; ++m )
  {
    next.mm[m][inst.man_choice( m, 0 )] = Tri::one;
    Tri acc = Tri::one;
    for ( std::size_t i = 1; i < n; ++i )
    {
      const auto prev = inst.man_choice( m, i - 1 );
      acc = prefix ? tri_and( acc, s.ww[prev][m] ) : s.ww[prev][m];
      next.mm[m][inst.man_choice( m, i )] = tri_and( s.mm[m][prev], acc );
    }
  }
  for ( std::size_t w = 0; w < n; ++w )
  {
    next.ww[w][inst.woman_choice( w, 0 )] = Tri::zero;
    Tri acc = Tri::zero;
    for ( std::size_t i = 1; i < n; ++i )
    {
      const auto prev = inst.woman_choice( w, i - 1 );
      acc = prefix ? tri_or( acc, s.mm[prev][w] ) : s.mm[prev][w];
      next.ww[w][inst.woman_choice( w, i )] = tri_or( s.ww[w][prev], acc );
    }
  }
  return next;
}

/// S_M = {MM = 1, WW in {0,*}} and S_W = {WW = 0, MM in {1,*}}.
inline void extract_marriages( const MatrixPair& mp, MatrixResult& out, const char* alg )
{
  const auto n = mp.mm.size();
  std::vector<std::optional<std::size_t>> sm( n ), sw( n );
  for ( std::size_t m = 0; m < n; ++m )
  {
    for ( std::size_t w = 0; w < n; ++w )
    {
      if ( mp.mm[m][w] == Tri::one && mp.ww[w][m] != Tri::one )
      {
        require( !sm[m], ErrorKind::internal_bound_violation, std::string( alg ) + ": S_M is not a marriage" );
        sm[m] = w;
      }
      if ( mp.ww[w][m] == Tri::zero && mp.mm[m][w] != Tri::zero )
      {
        require( !sw[m], ErrorKind::internal_bound_violation, std::string( alg ) + ": S_W is not a marriage" );
        sw[m] = w;
      }
    }
  }
  out.man_opt = to_marriage( sm, alg );
  out.woman_opt = to_marriage( sw, alg );
}

inline MatrixResult run_logic( const SMInstance& inst, bool prefix, bool record )
{
  MatrixResult result;
  auto state = initial_matrices( inst );
  if ( record )
  {
    result.steps.push_back( state );
  }
  const char* alg = prefix ? "interval_logic_run" : "subramanian_run";
  while ( true )
  {
    check_round( ++result.rounds, inst.n(), alg );
    auto next = logic_round( inst, state, prefix );
    if ( record )
    {
      result.steps.push_back( next );
    }
    if ( next == state )
    {
      break;
    }
    state = std::move( next );
  }
  extract_marriages( state, result, alg );
  result.final_state = std::move( state );
  return result;
}

} // namespace detail

/// Three-valued intervals via prefix conjunctions; `steps` holds every matrix pair.
inline MatrixResult interval_logic_run( const SMInstance& inst ) { return detail::run_logic( inst, true, true ); }

/// Subramanian-style update that looks only at the predecessor entry.
inline MatrixResult subramanian_run( const SMInstance& inst, bool record_steps = false )
{
  return detail::run_logic( inst, false, record_steps );
}

inline bool is_stable( const SMInstance& inst, const Marriage& mar )
{
  const auto n = inst.n();
  if ( mar.wife.size() != n )
  {
    return false;
  }
  std::vector<bool> seen( n, false );
  for ( auto w : mar.wife )
  {
    if ( w >= n || seen[w] )
    {
      return false;
    }
    seen[w] = true;
  }
  const auto husband = mar.husbands();
  for ( std::size_t m = 0; m < n; ++m )
  {
    for ( std::size_t r = 0; r < inst.man_rank( m, mar.wife[m] ); ++r )
    {
      const auto w = inst.man_choice( m, r );
      if ( inst.woman_rank( w, m ) < inst.woman_rank( w, husband[w] ) )
      {
        return false;
      }
    }
  }
  return true;
}

/// Every stable marriage, in lexicographic order of the wife vector.
inline std::vector<Marriage> all_stable_marriages( const SMInstance& inst )
{
  const auto n = inst.n();
  detail::require( n <= 10, ErrorKind::too_large, "all_stable_marriages is limited to n <= 10" );
  std::vector<Marriage> out;
  std::vector<std::size_t> wife( n ), husband( n, n );

  // A pair (m, w) blocks once both are assigned and prefer each other; checking
  // each new couple against all earlier men prunes the n! search tree.
  auto blocks = [&]( std::size_t m, std::size_t w ) {
    return inst.man_rank( m, w ) < inst.man_rank( m, wife[m] ) &&
           inst.woman_rank( w, m ) < inst.woman_rank( w, husband[w] );
  };
  auto rec = [&]( auto&& self, std::size_t m ) -> void {
    if ( m == n )
    {
      out.push_back( { wife } );
      return;
    }
    for ( std::size_t w = 0; w < n; ++w )
    {
      if ( husband[w] != n )
      {
        continue;
      }
      wife[m] = w;
      husband[w] = m;
      bool ok = true;
      for ( std::size_t k = 0; k < m && ok; ++k )
      {
        ok = !blocks( k, w ) && !blocks( m, wife[k] );
      }
      if ( ok )
      {
        self( self, m + 1 );
      }
      husband[w] = n;
    }
  };
  rec( rec, 0 );
  return out;
}

/// 0/1 feasible pair of a marriage: MM row is 1 up to the wife, WW row 0 up to the husband.
inline MatrixPair marriage_to_feasible( const SMInstance& inst, const Marriage& mar )
{
  const auto n = inst.n();
  detail::require( mar.wife.size() == n, ErrorKind::bad_shape, "marriage size mismatch" );
  const auto husband = mar.husbands();
  auto mp = MatrixPair::filled( n, Tri::zero );
  for ( std::size_t p = 0; p < n; ++p )
  {
    for ( std::size_t q = 0; q < n; ++q )
    {
      mp.mm[p][q] = inst.man_rank( p, q ) <= inst.man_rank( p, mar.wife[p] ) ? Tri::one : Tri::zero;
      mp.ww[p][q] = inst.woman_rank( p, q ) <= inst.woman_rank( p, husband[p] ) ? Tri::zero : Tri::one;
    }
  }
  return mp;
}

/// First-rank values plus the fixed-point equations of the Subramanian update.
inline bool is_feasible_pair( const SMInstance& inst, const MatrixPair& mp )
{
  const auto n = inst.n();
  if ( mp.mm.size() != n || mp.ww.size() != n )
  {
    return false;
  }
  for ( std::size_t p = 0; p < n; ++p )
  {
    if ( mp.mm[p].size() != n || mp.ww[p].size() != n )
    {
      return false;
    }
  }
  for ( std::size_t m = 0; m < n; ++m )
  {
    if ( mp.mm[m][inst.man_choice( m, 0 )] != Tri::one )
    {
      return false;
    }
    for ( std::size_t i = 1; i < n; ++i )
    {
      const auto prev = inst.man_choice( m, i - 1 );
      if ( mp.mm[m][inst.man_choice( m, i )] != tri_and( mp.mm[m][prev], mp.ww[prev][m] ) )
      {
        return false;
      }
    }
  }
  for ( std::size_t w = 0; w < n; ++w )
  {
    if ( mp.ww[w][inst.woman_choice( w, 0 )] != Tri::zero )
    {
      return false;
    }
    for ( std::size_t i = 1; i < n; ++i )
    {
      const auto prev = inst.woman_choice( w, i - 1 );
      if ( mp.ww[w][inst.woman_choice( w, i )] != tri_or( mp.ww[w][prev], mp.mm[prev][w] ) )
      {
        return false;
      }
    }
  }
  return true;
}

/// Each man takes the last 1 of his MM row, each woman the last 0 of her WW row.
inline Marriage feasible_to_marriage( const SMInstance& inst, const MatrixPair& mp )
{
  const auto n = inst.n();
  detail::require( !mp.has_stars(), ErrorKind::has_stars, "matrix pair contains * entries" );
  detail::require( is_feasible_pair( inst, mp ), ErrorKind::not_feasible, "matrix pair is not feasible" );
  std::vector<std::optional<std::size_t>> wife( n );
  for ( std::size_t m = 0; m < n; ++m )
  {
    for ( std::size_t r = 0; r < n && mp.mm[m][inst.man_choice( m, r )] == Tri::one; ++r )
    {
      wife[m] = inst.man_choice( m, r );
    }
  }
  auto mar = detail::to_marriage( wife, "feasible_to_marriage" );
  const auto husband = mar.husbands();
  for ( std::size_t w = 0; w < n; ++w )
  {
    std::size_t last = n;
    for ( std::size_t r = 0; r < n && mp.ww[w][inst.woman_choice( w, r )] == Tri::zero; ++r )
    {
      last = inst.woman_choice( w, r );
    }
    detail::require( last == husband[w], ErrorKind::internal_bound_violation,
                     "men and women read different marriages" );
  }
  return mar;
}

} // namespace compcirc
