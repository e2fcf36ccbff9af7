#pragma once

#include <optional>

#include "ball.hpp"
#include "bridges.hpp"
#include "diagram.hpp"

namespace fillings {

// A normal form per ball element; sigma_g is verified to represent g.
struct Combing {
  std::vector<Word> forms; // indexed by ball vertex id
  const Word& of(int vertex) const { return forms[static_cast<size_t>(vertex)]; }
};

enum class CombingKind { Geodesic, ExponentCollected, Bs12NormalForm };

// geodesic: the lex-least geodesic of every element (free groups and
// finite-ball combings); exponent-collected: a1^r1 ... am^rm over Z^m;
// bs12: the rewriting-system normal forms b^r u a^s.
Combing standard_combing(CombingKind kind, const CayleyBall& ball, const WordOracle& oracle);

// Fixed point of leftmost application of the BS(1,2) rewriting rules
// ab -> ba^2, a^-1 b -> b a^-2, a^2 b^-1 -> b^-1 a, a^-1 b^-1 -> a b^-1 a^-1
// plus free cancellations.
Word bs12_normal_form(const Word& w);
// Language predicate for the normal forms: b^r u a^s with u over
// {ab^-1, b^-1} not starting with b^-1.
bool is_bs12_normal(const Word& w);

struct FellowTravel {
  int sync_k = 0;  // max over adjacent pairs and times of d(sigma_g(t), sigma_h(t))
  int async_k = 0; // max over adjacent pairs of the optimal reparametrized bound
};

// Both constants over every edge between elements of the radius-`within`
// subball (the whole ball by default); lines are walked in the full ball,
// so normal-form paths that stray need headroom. Throws BallTooSmall when a
// path or distance query leaves the ball.
FellowTravel fellow_traveler_check(const Combing& c, const CayleyBall& ball, int within = -1);

// L(n) = max length of a normal form over the radius-n subball.
int length_function(const Combing& c, const CayleyBall& ball, int n);

struct Cockleshell {
  Diagram diagram;
  NullSequence sequence; // the ladder filling realizing the diagram
  int rung_bound = 0;    // max rung length used (the fellow constant k)
  int cells = 0;
  Presentation derived;  // null-homotopic words of length <= 2k+2
};

// The ladder-by-ladder filling along combing lines. Cell boundaries have
// length at most 2k+2; the area satisfies area <= 2 l(w) L(floor(l(w)/2)).
Cockleshell cockleshell(const Word& w, const Combing& c, const CayleyBall& ball,
                        const WordOracle& oracle);

// All null-homotopic words of length at most `bound` (unreduced included),
// as a presentation; the cockleshell cells live here.
Presentation derived_presentation(const WordOracle& oracle, int bound);

} // namespace fillings
