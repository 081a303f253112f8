#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpb/basket.hpp"

namespace fpb {

// Segment-level view of a knot/link diagram: crossings wired together by
// segment ids (arcs between consecutive crossing passages).  This is all the
// Kauffman state sum needs; it is shared by arc-presentation diagrams and
// diagrams realized from Gauss/DT codes.
struct DiagramCrossing {
    int in_over = -1, out_over = -1, in_under = -1, out_under = -1;
    int sign = 0;  // oriented crossing sign
};

struct CrossingDiagram {
    int num_segments = 0;
    int free_loops = 0;  // crossing-free components
    std::vector<DiagramCrossing> crossings;

    int writhe() const {
        int w = 0;
        for (auto& c : crossings) w += c.sign;
        return w;
    }
};

// One step of the left-to-right sweep over an arc presentation.  Positions
// index the frontier bottom-to-top.
struct SweepEvent {
    enum Kind { kCup, kCap, kCross };
    Kind kind;
    int pos;               // lower of the two frontier positions involved
    bool a_is_turnback = false;  // kCross: A-smoothing is the cap-cup (e_i) side
};

struct GaussVisit {
    int crossing = 0;  // index into ArcDiagram::crossings
    bool over = false;
};

// Boundary diagram of a basket surface: bands drawn as nested semicircular
// strips over the disk's top edge, four crossings per interleaved pair, the
// higher page in front.
struct ArcDiagram {
    int n = 0;
    int components = 0;
    struct Crossing {
        int over_band = 0, under_band = 0;
        int sign = 0;
        bool over_enters_lower = false;
    };
    std::vector<Crossing> crossings;
    std::vector<std::vector<GaussVisit>> visits;  // per component, traversal order
    std::vector<SweepEvent> events;               // global sweep order
    CrossingDiagram flat;
    // For component 0: traversal step of each foot's left endpoint, as an
    // index into visits[0] (first visit at or after that point).
    std::vector<int> visit_after_foot;

    int writhe() const { return flat.writhe(); }
};

ArcDiagram build_arc_diagram(const BasketCode& code);

// A Gauss code: crossing visits in traversal order.  Ids are 1-based in
// first-visit order; each id appears once over and once under.
struct GaussEntry {
    int id = 0;
    bool over = false;
    int sign = 0;
};
using GaussCode = std::vector<GaussEntry>;

// Knot diagrams only (throws on multi-component input).  start is a word
// position: the walk begins at that foot's left endpoint; default matches the
// upper-left corner, clockwise reading.
GaussCode gauss_code(const ArcDiagram& diagram, int start_foot = 0, bool ccw = false);

std::string gauss_to_string(const GaussCode& g);
GaussCode parse_gauss(const std::string& text);

// Signed even-integer DT sequence paired with odd visit labels.
std::vector<int> dt_from_gauss(const GaussCode& g);
std::string dt_to_string(const std::vector<int>& dt);
std::vector<int> parse_dt(const std::string& text);

// Reidemeister I/II reduction to a fixpoint; deterministic removal order.
GaussCode simplify_r_moves(const GaussCode& g);

}  // namespace fpb
