#pragma once

// Comparator-circuit IR, Boolean and three-valued evaluation, and
// the structural passes (dual, normalize_down, mirror, compose).

#include "error.hpp"
#include "tri.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace compcirc
{

/// Input label on the left end of a wire.
struct Annotation
{
  enum class Kind : std::uint8_t
  {
    constant,
    input,
    neg_input
  };

  Kind kind = Kind::constant;
  /// Constant bit for `constant`, input-variable ordinal otherwise.
  std::size_t value = 0;

  static constexpr Annotation constant( Bit b ) { return { Kind::constant, b ? 1u : 0u }; }
  static constexpr Annotation input( std::size_t i ) { return { Kind::input, i }; }
  static constexpr Annotation neg_input( std::size_t i ) { return { Kind::neg_input, i }; }

  constexpr bool is_constant() const { return kind == Kind::constant; }

  /// De Morgan image: 0 <-> 1, x_i <-> !x_i.
  constexpr Annotation negated() const
  {
    switch ( kind )
    {
    case Kind::constant: return constant( value ? 0 : 1 );
    case Kind::input: return neg_input( value );
    case Kind::neg_input: return input( value );
    }
    return *this;
  }

  bool operator==( const Annotation& ) const = default;
};

/* A comparator or a negation gate.
 *
 * After a comparator, `min_wire` holds the conjunction and `max_wire` the
 * disjunction (the arrow tip). `min_wire == max_wire` is a dummy gate.
 * A negation stores its wire in both fields.
 */
struct Gate
{
  enum class Kind : std::uint8_t
  {
    comparator,
    negation
  };

  Kind kind = Kind::comparator;
  std::size_t min_wire = 0;
  std::size_t max_wire = 0;

  static constexpr Gate comparator( std::size_t min_wire, std::size_t max_wire )
  {
    return { Kind::comparator, min_wire, max_wire };
  }
  static constexpr Gate dummy( std::size_t wire ) { return comparator( wire, wire ); }
  static constexpr Gate negation( std::size_t wire ) { return { Kind::negation, wire, wire }; }

  constexpr bool is_comparator() const { return kind == Kind::comparator; }
  constexpr bool is_negation() const { return kind == Kind::negation; }
  constexpr bool is_dummy() const { return is_comparator() && min_wire == max_wire; }
  constexpr std::size_t wire() const { return min_wire; }

  /// Arrow points to a larger index.
  constexpr bool points_down() const { return is_comparator() && min_wire < max_wire; }
  /// Arrow points to a smaller index.
  constexpr bool points_up() const { return is_comparator() && max_wire < min_wire; }

  bool operator==( const Gate& ) const = default;
};

/* An annotated comparator circuit with a designated output wire.
 *
 * All indices are validated on construction and on every mutation, so a
 * `Circuit` value always satisfies its invariants.
 */
class Circuit
{
public:
  /// `num_wires` wires annotated with constant 0, no gates, output wire 0.
  explicit Circuit( std::size_t num_wires = 1 )
      : num_wires_( num_wires ), annotations_( num_wires, Annotation::constant( 0 ) )
  {
    detail::require( num_wires >= 1, ErrorKind::bad_shape, "a circuit needs at least one wire" );
  }

  Circuit( std::size_t num_wires, std::vector<Annotation> annotations, std::vector<Gate> gates,
           std::size_t output_wire )
      : num_wires_( num_wires ), annotations_( std::move( annotations ) ), gates_( std::move( gates ) ),
        output_wire_( output_wire )
  {
    detail::require( num_wires_ >= 1, ErrorKind::bad_shape, "a circuit needs at least one wire" );
    detail::require( annotations_.size() == num_wires_, ErrorKind::bad_shape,
                     "expected one annotation per wire" );
    check_wire( output_wire_ );
    for ( const auto& g : gates_ )
    {
      check_gate( g );
    }
  }

  std::size_t num_wires() const { return num_wires_; }
  const std::vector<Annotation>& annotations() const { return annotations_; }
  const Annotation& annotation( std::size_t wire ) const { return annotations_.at( wire ); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t output_wire() const { return output_wire_; }

  /// Appends a wire and returns its index.
  std::size_t add_wire( Annotation a = Annotation::constant( 0 ) )
  {
    annotations_.push_back( a );
    return num_wires_++;
  }

  void add_gate( Gate g )
  {
    check_gate( g );
    gates_.push_back( g );
  }

  void add_comparator( std::size_t min_wire, std::size_t max_wire )
  {
    add_gate( Gate::comparator( min_wire, max_wire ) );
  }

  void add_negation( std::size_t wire ) { add_gate( Gate::negation( wire ) ); }

  void set_annotation( std::size_t wire, Annotation a )
  {
    check_wire( wire );
    annotations_[wire] = a;
  }

  void set_output( std::size_t wire )
  {
    check_wire( wire );
    output_wire_ = wire;
  }

  /// Number of input variables, i.e. 1 + the largest referenced ordinal.
  std::size_t input_arity() const
  {
    std::size_t arity = 0;
    for ( const auto& a : annotations_ )
    {
      if ( !a.is_constant() )
      {
        arity = std::max( arity, a.value + 1 );
      }
    }
    return arity;
  }

  bool has_negations() const
  {
    return std::any_of( gates_.begin(), gates_.end(), []( const Gate& g ) { return g.is_negation(); } );
  }

  bool is_constant_annotated() const
  {
    return std::all_of( annotations_.begin(), annotations_.end(),
                        []( const Annotation& a ) { return a.is_constant(); } );
  }

  std::size_t num_non_dummy_comparators() const
  {
    return static_cast<std::size_t>( std::count_if( gates_.begin(), gates_.end(), []( const Gate& g ) {
      return g.is_comparator() && !g.is_dummy();
    } ) );
  }

  bool operator==( const Circuit& ) const = default;

private:
  void check_wire( std::size_t wire ) const
  {
    if ( wire >= num_wires_ )
    {
      detail::fail( ErrorKind::index_out_of_range,
                    "wire " + std::to_string( wire ) + " out of range (" + std::to_string( num_wires_ ) + " wires)" );
    }
  }

  void check_gate( const Gate& g ) const
  {
    check_wire( g.min_wire );
    check_wire( g.max_wire );
    detail::require( g.is_comparator() || g.min_wire == g.max_wire, ErrorKind::bad_shape,
                     "negation gate acts on one wire" );
  }

  std::size_t num_wires_ = 1;
  std::vector<Annotation> annotations_;
  std::vector<Gate> gates_;
  std::size_t output_wire_ = 0;
};

/// Wire values before the first gate and after every gate.
template<class Value>
struct BasicTrace
{
  std::vector<std::vector<Value>> snapshots;
};

using Trace = BasicTrace<Bit>;
using TriTrace = BasicTrace<Tri>;

template<class Value>
struct EvalResult
{
  std::vector<Value> wire_outputs;
  Value answer{};
  BasicTrace<Value> trace;
};

struct EvalOptions
{
  /// Accept negation gates (CCV with negations).
  bool allow_negation = false;
  /// Record a snapshot after every gate.
  bool record_trace = true;
};

namespace detail
{

inline void require_no_negations( const Circuit& c, ErrorKind kind = ErrorKind::negation_not_supported )
{
  require( !c.has_negations(), kind, "circuit contains negation gates" );
}

inline void require_arity( const Circuit& c, std::size_t given )
{
  const auto needed = c.input_arity();
  if ( given < needed )
  {
    fail( ErrorKind::input_arity,
          "circuit reads " + std::to_string( needed ) + " inputs, got " + std::to_string( given ) );
  }
}

/// Applies one gate in place; `Ops` supplies the value algebra.
template<class Value, class And, class Or, class Not>
inline void apply_gate( const Gate& g, std::vector<Value>& wires, And conj, Or disj, Not neg )
{
  if ( g.is_negation() )
  {
    wires[g.wire()] = neg( wires[g.wire()] );
    return;
  }
  if ( g.is_dummy() )
  {
    return;
  }
  const Value p = wires[g.min_wire];
  const Value q = wires[g.max_wire];
  wires[g.min_wire] = conj( p, q );
  wires[g.max_wire] = disj( p, q );
}

inline Bit bit_and( Bit a, Bit b ) { return a & b; }
inline Bit bit_or( Bit a, Bit b ) { return a | b; }
inline Bit bit_not( Bit a ) { return a ^ 1u; }

} // namespace detail

/// Initial wire values: constant, x[i] or !x[i] per annotation.
inline std::vector<Bit> resolve_inputs( const Circuit& c, std::span<const Bit> x )
{
  detail::require_arity( c, x.size() );
  std::vector<Bit> wires( c.num_wires() );
  for ( std::size_t w = 0; w < c.num_wires(); ++w )
  {
    const auto& a = c.annotation( w );
    switch ( a.kind )
    {
    case Annotation::Kind::constant: wires[w] = static_cast<Bit>( a.value ); break;
    case Annotation::Kind::input: wires[w] = x[a.value] & 1u; break;
    case Annotation::Kind::neg_input: wires[w] = ( x[a.value] & 1u ) ^ 1u; break;
    }
  }
  return wires;
}

/// Three-valued counterpart; a negated input uses Kleene negation (!* = *).
inline std::vector<Tri> resolve_tri_inputs( const Circuit& c, std::span<const Tri> x )
{
  detail::require_arity( c, x.size() );
  std::vector<Tri> wires( c.num_wires() );
  for ( std::size_t w = 0; w < c.num_wires(); ++w )
  {
    const auto& a = c.annotation( w );
    switch ( a.kind )
    {
    case Annotation::Kind::constant: wires[w] = to_tri( static_cast<Bit>( a.value ) ); break;
    case Annotation::Kind::input: wires[w] = x[a.value]; break;
    case Annotation::Kind::neg_input: wires[w] = tri_not( x[a.value] ); break;
    }
  }
  return wires;
}

/* Runs the gate sequence on explicit initial wire values.
 *
 * Annotations are ignored; this is the circuit viewed as a function
 * {0,1}^m -> {0,1}^m.
 */
inline std::vector<Bit> run_gates( const Circuit& c, std::vector<Bit> wires, bool allow_negation = false,
                                   Trace* trace = nullptr )
{
  detail::require( wires.size() == c.num_wires(), ErrorKind::bad_shape, "wire vector length mismatch" );
  if ( !allow_negation )
  {
    detail::require_no_negations( c );
  }
  if ( trace )
  {
    trace->snapshots.clear();
    trace->snapshots.reserve( c.gates().size() + 1 );
    trace->snapshots.push_back( wires );
  }
  for ( const auto& g : c.gates() )
  {
    detail::apply_gate<Bit>( g, wires, detail::bit_and, detail::bit_or, detail::bit_not );
    if ( trace )
    {
      trace->snapshots.push_back( wires );
    }
  }
  return wires;
}

inline std::vector<Tri> run_gates_tri( const Circuit& c, std::vector<Tri> wires, TriTrace* trace = nullptr )
{
  detail::require( wires.size() == c.num_wires(), ErrorKind::bad_shape, "wire vector length mismatch" );
  detail::require_no_negations( c );
  if ( trace )
  {
    trace->snapshots.clear();
    trace->snapshots.reserve( c.gates().size() + 1 );
    trace->snapshots.push_back( wires );
  }
  for ( const auto& g : c.gates() )
  {
    detail::apply_gate<Tri>( g, wires, tri_and, tri_or, tri_not );
    if ( trace )
    {
      trace->snapshots.push_back( wires );
    }
  }
  return wires;
}

/// Boolean evaluation; the answer is the value on the designated wire.
inline EvalResult<Bit> eval( const Circuit& c, std::span<const Bit> x, EvalOptions options = {} )
{
  EvalResult<Bit> result;
  result.wire_outputs = run_gates( c, resolve_inputs( c, x ), options.allow_negation,
                                   options.record_trace ? &result.trace : nullptr );
  result.answer = result.wire_outputs[c.output_wire()];
  return result;
}

inline EvalResult<Bit> eval( const Circuit& c, std::initializer_list<Bit> x, EvalOptions options = {} )
{
  return eval( c, std::span<const Bit>( x.begin(), x.size() ), options );
}

/// Three-valued evaluation (gates are min/max under 0 < * < 1).
inline EvalResult<Tri> eval_tri( const Circuit& c, std::span<const Tri> x, bool record_trace = true )
{
  detail::require_no_negations( c );
  EvalResult<Tri> result;
  result.wire_outputs = run_gates_tri( c, resolve_tri_inputs( c, x ), record_trace ? &result.trace : nullptr );
  result.answer = result.wire_outputs[c.output_wire()];
  return result;
}

/* De Morgan dual: computes the negation of every wire.
 *
 * Annotations are negated and every comparator (i,j) becomes (j,i). Wire
 * and gate counts are unchanged.
 */
inline Circuit dual( const Circuit& c )
{
  detail::require_no_negations( c );
  std::vector<Annotation> annotations;
  annotations.reserve( c.num_wires() );
  for ( const auto& a : c.annotations() )
  {
    annotations.push_back( a.negated() );
  }
  std::vector<Gate> gates;
  gates.reserve( c.gates().size() );
  for ( const auto& g : c.gates() )
  {
    gates.push_back( Gate::comparator( g.max_wire, g.min_wire ) );
  }
  return Circuit( c.num_wires(), std::move( annotations ), std::move( gates ), c.output_wire() );
}

struct NormalizedCircuit
{
  Circuit circuit;
  /// Original wire -> wire holding its final value in `circuit`.
  std::vector<std::size_t> wire_map;
};

/* Rewrites a circuit so that every comparator points down.
 *
 * Each non-dummy gate on holders (a, b) is relocated onto two fresh wires
 * p < q appended below everything else:
 *
 *     (a -> p)   p := a, a := 0
 *     (b -> p)   p := a | b, b := a & b
 *     (b -> q)   q := a & b, b := 0
 *
 * so p becomes the holder of the gate's max wire and q of its min wire.
 * Dummy gates are kept (as dummies on the current holder).
 */
inline NormalizedCircuit normalize_down( const Circuit& c )
{
  detail::require_no_negations( c );
  Circuit out( c.num_wires(), c.annotations(), {}, 0 );
  std::vector<std::size_t> holder( c.num_wires() );
  for ( std::size_t w = 0; w < holder.size(); ++w )
  {
    holder[w] = w;
  }
  for ( const auto& g : c.gates() )
  {
    if ( g.is_dummy() )
    {
      out.add_gate( Gate::dummy( holder[g.min_wire] ) );
      continue;
    }
    const auto a = holder[g.min_wire];
    const auto b = holder[g.max_wire];
    const auto p = out.add_wire();
    const auto q = out.add_wire();
    out.add_comparator( a, p );
    out.add_comparator( b, p );
    out.add_comparator( b, q );
    holder[g.max_wire] = p;
    holder[g.min_wire] = q;
  }
  out.set_output( holder[c.output_wire()] );
  return { std::move( out ), std::move( holder ) };
}

/// Reverses wire indices (i -> m-1-i); gate semantics are unchanged.
inline Circuit mirror( const Circuit& c )
{
  const auto last = c.num_wires() - 1;
  std::vector<Annotation> annotations( c.annotations().rbegin(), c.annotations().rend() );
  std::vector<Gate> gates;
  gates.reserve( c.gates().size() );
  for ( const auto& g : c.gates() )
  {
    gates.push_back( g.is_negation() ? Gate::negation( last - g.wire() )
                                     : Gate::comparator( last - g.min_wire, last - g.max_wire ) );
  }
  return Circuit( c.num_wires(), std::move( annotations ), std::move( gates ), last - c.output_wire() );
}

/// All-up form used by the matching reductions: mirror(normalize_down(c)).
inline NormalizedCircuit normalize_up( const Circuit& c )
{
  auto down = normalize_down( c );
  const auto last = down.circuit.num_wires() - 1;
  for ( auto& w : down.wire_map )
  {
    w = last - w;
  }
  return { mirror( down.circuit ), std::move( down.wire_map ) };
}

/* Substitutes circuits for the input variables of `outer`.
 *
 * A wire of `outer` annotated x_i becomes a fresh copy of `inners[i]` whose
 * designated output takes the wire's place; !x_i splices a copy of
 * `dual(inners[i])`. The inner copies run first, then the gates of
 * `outer`. The result reads the inners' shared input variables.
 */
inline Circuit compose( const Circuit& outer, std::span<const Circuit> inners )
{
  detail::require_no_negations( outer );
  detail::require_arity( outer, inners.size() );
  std::vector<Circuit> duals( inners.size() );
  std::vector<bool> have_dual( inners.size(), false );
  for ( const auto& inner : inners )
  {
    detail::require_no_negations( inner );
  }

  std::vector<Annotation> annotations;
  std::vector<Gate> gates;
  std::vector<std::size_t> image( outer.num_wires() );

  for ( std::size_t w = 0; w < outer.num_wires(); ++w )
  {
    const auto& a = outer.annotation( w );
    if ( a.is_constant() )
    {
      image[w] = annotations.size();
      annotations.push_back( a );
      continue;
    }
    const Circuit* block = &inners[a.value];
    if ( a.kind == Annotation::Kind::neg_input )
    {
      if ( !have_dual[a.value] )
      {
        duals[a.value] = dual( inners[a.value] );
        have_dual[a.value] = true;
      }
      block = &duals[a.value];
    }
    const auto offset = annotations.size();
    annotations.insert( annotations.end(), block->annotations().begin(), block->annotations().end() );
    for ( const auto& g : block->gates() )
    {
      gates.push_back( Gate::comparator( g.min_wire + offset, g.max_wire + offset ) );
    }
    image[w] = offset + block->output_wire();
  }
  for ( const auto& g : outer.gates() )
  {
    gates.push_back( Gate::comparator( image[g.min_wire], image[g.max_wire] ) );
  }
  const auto wires = annotations.size();
  return Circuit( wires, std::move( annotations ), std::move( gates ), image[outer.output_wire()] );
}

inline Circuit compose( const Circuit& outer, std::initializer_list<Circuit> inners )
{
  return compose( outer, std::span<const Circuit>( inners.begin(), inners.size() ) );
}

} // namespace compcirc
