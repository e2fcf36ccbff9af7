#pragma once

#include "diagram.hpp"
#include "dps.hpp"
#include "shelling.hpp"

namespace fillings {

// Realizes a null-sequence as a van Kampen diagram for its start word by
// attaching one 2-cell per relator move inside a shrinking inner region and
// folding boundary edges on free reductions (the singular-annuli
// construction). The result has area at most the sequence's relator count.
// Moves after the first empty word are ignored. Throws InvalidSequence when
// the replay fails or does not end at the empty word.
Diagram sequence_to_diagram(const NullSequence& ns, const Presentation& p);

// Boundary words of a shelling as a null-sequence: 2-cell collapses become
// relator applications (the cell word read from the collapsed edge), 1-cell
// collapses free reductions, expansions free expansions.
NullSequence diagram_to_sequence(const Diagram& d, const Shelling& s);

} // namespace fillings
