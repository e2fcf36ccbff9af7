#pragma once

#include "dps.hpp"
#include "oracle.hpp"

namespace fillings {

// The class-2 machinery for the 3-dimensional integral Heisenberg group
// <x,y,z | xyXYZ, xzXZ, yzYZ>. Compression words keep powers of the
// central z short: for 0 <= s < n^2, u(s) = z^{s0} [x^n, y^{s1}] with
// s = s0 + s1 n; u(n^2) = [x^n, y^n]; u(A + B n^2) = u(A) u(n^2)^B.
Word compression_word(long s, int n);

// A replay-valid P-sequence from z^s to u(s) over the h3 presentation,
// absorbing z^n runs into commutators. Relator moves fit K2 * n^3.
NullSequence compress_sequence(long s, int n, long k1 = 4);

struct H3Fill {
  NullSequence seq;
  ReplayStats stats;
  int scale = 0; // the n used for compression
};

// Fills a null-homotopic word: z-letters are shuffled to the ends (z right,
// z^-1 left), the x/y middle is collected with lifted commutations whose
// byproducts are compressed incrementally, and the two compressed blocks
// cancel freely. maxLen stays linear in l(w), relator moves cubic.
H3Fill h3_fill(const Word& w);

const Presentation& h3_presentation();
const WordOracle& h3_oracle();

} // namespace fillings
