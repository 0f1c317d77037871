#pragma once

// Boolean bits and the three-valued domain {0, *, 1}.

#include <algorithm>
#include <cstdint>
#include <optional>

namespace compcirc
{

/// A Boolean wire value, always 0 or 1.
using Bit = std::uint8_t;

/* Three-valued wire value.
 *
 * The enumerator order is the chain 0 < * < 1, so conjunction and
 * disjunction are min and max. `star` means "not known to be 0 or 1".
 */
enum class Tri : std::uint8_t
{
  zero = 0,
  star = 1,
  one = 2
};

constexpr Tri tri_and( Tri a, Tri b ) { return std::min( a, b ); }
constexpr Tri tri_or( Tri a, Tri b ) { return std::max( a, b ); }

constexpr Tri tri_not( Tri a )
{
  return a == Tri::zero ? Tri::one : ( a == Tri::one ? Tri::zero : Tri::star );
}

constexpr Tri to_tri( Bit b ) { return b ? Tri::one : Tri::zero; }

constexpr bool is_determined( Tri a ) { return a != Tri::star; }

/// True iff `fine` is obtainable from `coarse` by replacing a star with 0 or 1.
constexpr bool refines( Tri coarse, Tri fine ) { return coarse == Tri::star || coarse == fine; }

constexpr char to_char( Tri a )
{
  return a == Tri::zero ? '0' : ( a == Tri::one ? '1' : '*' );
}

constexpr std::optional<Tri> tri_from_char( char c )
{
  switch ( c )
  {
  case '0': return Tri::zero;
  case '1': return Tri::one;
  case '*': return Tri::star;
  default: return std::nullopt;
  }
}

} // namespace compcirc
