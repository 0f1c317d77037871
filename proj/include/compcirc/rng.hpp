#pragma once

// SplitMix64, the one PRNG used by every generator.
//
// The output of `next()` is fixed by the algorithm alone, and `below()` uses
// rejection sampling rather than a library distribution, so a seed yields the
// same instance stream on every platform and standard library.

#include <cstdint>
#include <string_view>

namespace compcirc
{

class Rng
{
public:
  explicit constexpr Rng( std::uint64_t seed = 0 ) : state_( seed ) {}

  static constexpr std::uint64_t mix( std::uint64_t z )
  {
    z = ( z ^ ( z >> 30 ) ) * 0xBF58476D1CE4E5B9ULL;
    z = ( z ^ ( z >> 27 ) ) * 0x94D049BB133111EBULL;
    return z ^ ( z >> 31 );
  }

  /// FNV-1a; names a stream independently of its position in any list.
  static constexpr std::uint64_t hash( std::string_view s )
  {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for ( char c : s )
    {
      h = ( h ^ static_cast<unsigned char>( c ) ) * 0x100000001B3ULL;
    }
    return h;
  }

  /// Independent generator for case `index` of stream `stream`.
  static constexpr Rng for_case( std::uint64_t seed, std::string_view stream, std::uint64_t index )
  {
    return Rng( mix( mix( seed ^ hash( stream ) ) + index ) );
  }

  constexpr std::uint64_t next()
  {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix( state_ );
  }

  /// Uniform in [0, n); n must be positive.
  constexpr std::uint64_t below( std::uint64_t n )
  {
    const std::uint64_t reject = ( 0 - n ) % n; // 2^64 mod n
    while ( true )
    {
      const auto r = next();
      if ( r >= reject )
      {
        return r % n;
      }
    }
  }

  /// Uniform in [lo, hi].
  constexpr std::uint64_t between( std::uint64_t lo, std::uint64_t hi ) { return lo + below( hi - lo + 1 ); }

  /// True with probability `permille` / 1000.
  constexpr bool chance( std::uint64_t permille ) { return below( 1000 ) < permille; }

private:
  std::uint64_t state_;
};

} // namespace compcirc
