#pragma once

#include "tkmoves/diagram.hpp"

namespace tkm {

enum class MoveKind { TK, TBARK, FULLTWIST };

// Which side keeps its orientation when an odd antiparallel twist merges or
// splits components (even twists never need the choice).
enum class TbarOrient { FirstAnchor, SecondAnchor };

// A surgery slot.  TK/TBARK anchor two edges crossing the slot (parallel
// resp. antiparallel); FULLTWIST anchors the m distinct edges meeting the
// twist disk, ordered across it.  Anchors must cobound a face of the diagram
// except for crossing-free circles, which may always be brought to the slot.
struct MoveSite {
    MoveKind kind = MoveKind::TK;
    std::vector<int> anchors;
    TbarOrient orient = TbarOrient::FirstAnchor;
};

// Inserts k half twists (TK: positive-parallel for k > 0; TBARK: the
// antiparallel band pattern, negative oriented crossings for k > 0), or for
// FULLTWIST k full twists of the m anchored strands.  k = 0 returns the
// diagram unchanged up to edge relabeling.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& site, int k);

// Signed count of the anchored strands through a FULLTWIST slot (the "q" of
// the twist disk), measured relative to the first anchor's direction.
int site_algebraic_count(const LinkDiagram& d, const MoveSite& site);

// Crossing-level surgeries used by the skein engines and the test suites.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing_index);
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing_index);        // oriented
LinkDiagram smooth_crossing_other(const LinkDiagram& d, int crossing_index);  // disoriented
// Cap smoothing of an antiparallel two-strand slot (the "infinity" tangle).
LinkDiagram smooth_site(const LinkDiagram& d, int e1, int e2);

}  // namespace tkm
