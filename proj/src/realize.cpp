#include "fpb/realize.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "fpb/bracket.hpp"
#include "fpb/intmath.hpp"

namespace fpb {

namespace {

struct Traversal {
    int c = 0;
    // visit k: crossing index and whether the strand passes over
    std::vector<int> crossing;
    std::vector<char> over;
    std::vector<int> over_pos, under_pos;  // per crossing
};

Traversal traversal_of(const GaussCode& gauss) {
    Traversal t;
    int len = static_cast<int>(gauss.size());
    if (len % 2) throw std::invalid_argument("gauss: odd length");
    t.c = len / 2;
    t.crossing.resize(len);
    t.over.resize(len);
    t.over_pos.assign(t.c, -1);
    t.under_pos.assign(t.c, -1);
    for (int p = 0; p < len; ++p) {
        int id = gauss[p].id;
        if (id < 1 || id > t.c) throw std::invalid_argument("gauss: crossing id out of range");
        int k = id - 1;
        t.crossing[p] = k;
        t.over[p] = gauss[p].over ? 1 : 0;
        int& slot = gauss[p].over ? t.over_pos[k] : t.under_pos[k];
        if (slot != -1) throw std::invalid_argument("gauss: repeated over/under visit");
        slot = p;
    }
    for (int k = 0; k < t.c; ++k)
        if (t.over_pos[k] < 0 || t.under_pos[k] < 0)
            throw std::invalid_argument("gauss: crossing missing a visit");
    return t;
}

// Rotation system: CCW slot order around crossing k is
//   sign>0: (over_in, under_in, over_out, under_out)
//   sign<0: (over_in, under_out, over_out, under_in)
// Slots hold (segment, is_in).  Ends are indexed 4k+slot.
std::vector<std::pair<int, bool>> rotation_slots(const DiagramCrossing& cr) {
    if (cr.sign > 0)
        return {{cr.in_over, true}, {cr.in_under, true}, {cr.out_over, false}, {cr.out_under, false}};
    return {{cr.in_over, true}, {cr.out_under, false}, {cr.out_over, false}, {cr.in_under, true}};
}

// Faces of the rotation system: orbits of e -> succ(other(e)) on edge ends.
// Returns the face id of every end (as the tail of a directed edge) and the
// face count.
int trace_faces(const std::vector<DiagramCrossing>& crossings, int num_segments,
                std::vector<int>* face_of_end = nullptr) {
    int c = static_cast<int>(crossings.size());
    std::vector<int> seg_in_end(num_segments, -1), seg_out_end(num_segments, -1);
    std::vector<std::pair<int, bool>> slots(4 * c);
    for (int k = 0; k < c; ++k) {
        auto r = rotation_slots(crossings[k]);
        for (int s = 0; s < 4; ++s) {
            slots[4 * k + s] = r[s];
            (r[s].second ? seg_in_end : seg_out_end)[r[s].first] = 4 * k + s;
        }
    }
    auto other = [&](int e) {
        auto [seg, in] = slots[e];
        return in ? seg_out_end[seg] : seg_in_end[seg];
    };
    auto succ = [](int e) { return (e & ~3) | ((e + 1) & 3); };
    std::vector<int> face(4 * c, -1);
    int nfaces = 0;
    for (int e0 = 0; e0 < 4 * c; ++e0) {
        if (face[e0] != -1) continue;
        int f = nfaces++;
        for (int e = e0; face[e] == -1; e = succ(other(e))) face[e] = f;
    }
    if (face_of_end) *face_of_end = std::move(face);
    return nfaces;
}

// Walk the diagram strand; returns visit order as (crossing, over) pairs.
// Throws if the diagram is not a single closed component.
std::vector<std::pair<int, bool>> walk_strand(const CrossingDiagram& d) {
    int c = static_cast<int>(d.crossings.size());
    std::vector<std::pair<int, bool>> visits;
    if (c == 0) return visits;
    std::vector<std::pair<int, bool>> next_of_seg(d.num_segments, {-1, false});
    for (int k = 0; k < c; ++k) {
        next_of_seg[d.crossings[k].in_over] = {k, true};
        next_of_seg[d.crossings[k].in_under] = {k, false};
    }
    int seg = d.crossings[0].out_over;
    for (int step = 0; step < 2 * c; ++step) {
        auto [k, over] = next_of_seg[seg];
        if (k < 0) throw std::invalid_argument("diagram: broken segment wiring");
        visits.push_back({k, over});
        seg = over ? d.crossings[k].out_over : d.crossings[k].out_under;
    }
    if (seg != d.crossings[0].out_over || static_cast<int>(visits.size()) != 2 * c)
        throw std::invalid_argument("diagram: not a single closed component");
    std::vector<int> seen(c, 0);
    for (auto& [k, over] : visits) seen[k]++;
    for (int k = 0; k < c; ++k)
        if (seen[k] != 2) throw std::invalid_argument("diagram: not a single closed component");
    return visits;
}

LaurentPoly normalize_alexander(LaurentPoly p) {
    if (p.is_zero())
        throw std::invalid_argument("alexander: determinant vanishes (link input?)");
    int lo = p.min_exp(), hi = p.max_exp();
    if ((lo + hi) % 2 != 0) throw std::logic_error("alexander: no symmetric normalization");
    p = p.shifted(-(lo + hi) / 2);
    long long at_one = p.evaluate(1);
    if (at_one == -1)
        p = -p;
    else if (at_one != 1)
        throw std::invalid_argument("alexander: Delta(1) is not a unit");
    return p;
}

// Fraction-free Bareiss determinant over the Laurent ring.
LaurentPoly poly_det_bareiss(std::vector<std::vector<LaurentPoly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return LaurentPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_by(prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

GaussCode gauss_from_dt(const std::vector<int>& dt) {
    int c = static_cast<int>(dt.size());
    GaussCode g(2 * c);
    std::vector<char> used(2 * c, 0);
    for (int i = 0; i < c; ++i) {
        int even = std::abs(dt[i]);
        if (even < 2 || even > 2 * c || even % 2)
            throw std::invalid_argument("dt: entries must be distinct even integers in range");
        if (used[even - 1]) throw std::invalid_argument("dt: repeated even label");
        used[even - 1] = 1;
        bool even_over = dt[i] < 0;
        g[2 * i] = {i + 1, !even_over, 0};
        g[even - 1] = {i + 1, even_over, 0};
    }
    // relabel ids in first-visit order
    std::vector<int> remap(c + 1, 0);
    int next = 0;
    for (auto& e : g)
        if (!remap[e.id]) remap[e.id] = ++next;
    for (auto& e : g) e.id = remap[e.id];
    return g;
}

CrossingDiagram realize_gauss(const GaussCode& gauss) {
    Traversal t = traversal_of(gauss);
    int c = t.c;
    CrossingDiagram d;
    d.num_segments = 2 * c;
    if (c == 0) {
        d.num_segments = 0;
        d.free_loops = 1;
        return d;
    }
    // segment p runs from visit p to visit p+1 (mod 2c)
    auto seg_before = [&](int p) { return (p + 2 * c - 1) % (2 * c); };
    d.crossings.resize(c);
    for (int k = 0; k < c; ++k) {
        auto& cr = d.crossings[k];
        cr.in_over = seg_before(t.over_pos[k]);
        cr.out_over = t.over_pos[k];
        cr.in_under = seg_before(t.under_pos[k]);
        cr.out_under = t.under_pos[k];
    }
    // search rotation choices; crossing 0 fixed (global mirror freedom)
    for (std::uint32_t mask = 0; mask < (1u << (c - 1)) || c == 1; ++mask) {
        d.crossings[0].sign = 1;
        for (int k = 1; k < c; ++k) d.crossings[k].sign = (mask >> (k - 1)) & 1u ? 1 : -1;
        if (trace_faces(d.crossings, d.num_segments) == c + 2) return d;
        if (c == 1) break;
    }
    throw std::invalid_argument("gauss: code is not realizable in the plane");
}

CrossingDiagram realize_dt(const std::vector<int>& dt) {
    return realize_gauss(gauss_from_dt(dt));
}

LaurentPoly alexander_from_diagram(const CrossingDiagram& d) {
    int c = static_cast<int>(d.crossings.size());
    if (c == 0) return LaurentPoly(1);
    auto visits = walk_strand(d);
    // arcs break after each under passage
    std::vector<int> arc_after(2 * c);  // arc holding the gap after visit p
    int arc = 0;
    for (int p = 0; p < 2 * c; ++p) {
        if (!visits[p].second) ++arc;
        arc_after[p] = arc;
    }
    int narcs = arc;  // == c; the wrap-around merges arc 0 into arc c
    auto arc_id = [&](int p) { return arc_after[p] % narcs; };
    std::vector<int> over_arc(c), in_arc(c), out_arc(c);
    for (int p = 0; p < 2 * c; ++p) {
        int k = visits[p].first;
        if (visits[p].second) {
            over_arc[k] = arc_id(p);
        } else {
            in_arc[k] = arc_id((p + 2 * c - 1) % (2 * c));
            out_arc[k] = arc_id(p);
        }
    }
    LaurentPoly one(1), tt = LaurentPoly::monomial(1, 1);
    std::vector<std::vector<LaurentPoly>> m(c, std::vector<LaurentPoly>(c - 1));
    auto add = [&](int row, int col, const LaurentPoly& v) {
        if (col < c - 1) m[row][col] = m[row][col] + v;
    };
    for (int k = 0; k < c; ++k) {
        if (d.crossings[k].sign > 0) {
            add(k, in_arc[k], tt);
            add(k, out_arc[k], -one);
            add(k, over_arc[k], one - tt);
        } else {
            add(k, in_arc[k], one);
            add(k, out_arc[k], -tt);
            add(k, over_arc[k], tt - one);
        }
    }
    m.pop_back();  // any c-1 of the c rows generate the ideal
    return normalize_alexander(poly_det_bareiss(std::move(m)));
}

namespace {

// Goeritz matrix of the white checkerboard regions with region 0 deleted,
// plus the Gordon-Litherland correction term mu.  Empty matrix (and mu = 0)
// for the crossingless unknot diagram.
std::vector<std::vector<long long>> goeritz_reduced(const CrossingDiagram& d, int& mu) {
    mu = 0;
    int c = static_cast<int>(d.crossings.size());
    if (c == 0) return {};
    (void)walk_strand(d);  // knots only
    std::vector<int> face;
    int nfaces = trace_faces(d.crossings, d.num_segments, &face);
    if (nfaces != c + 2) throw std::invalid_argument("signature: diagram is not planar");
    // checkerboard coloring: the two sides of segment s are the faces of its
    // two directed versions
    std::vector<int> seg_in_end(d.num_segments, -1), seg_out_end(d.num_segments, -1);
    for (int k = 0; k < c; ++k) {
        auto r = rotation_slots(d.crossings[k]);
        for (int s = 0; s < 4; ++s) (r[s].second ? seg_in_end : seg_out_end)[r[s].first] = 4 * k + s;
    }
    std::vector<int> color(nfaces, -1);
    color[face[0]] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < d.num_segments; ++s) {
            int fa = face[seg_in_end[s]], fb = face[seg_out_end[s]];
            if (fa == fb) throw std::logic_error("signature: coloring failure");
            if (color[fa] != -1 && color[fb] == -1) color[fb] = 1 - color[fa], changed = true;
            if (color[fb] != -1 && color[fa] == -1) color[fa] = 1 - color[fb], changed = true;
            if (color[fa] != -1 && color[fb] != -1 && color[fa] == color[fb])
                throw std::logic_error("signature: coloring failure");
        }
    }
    int white = 0;  // the color of the face traced first
    std::vector<int> region(nfaces, -1);
    int nregions = 0;
    for (int f = 0; f < nfaces; ++f)
        if (color[f] == white) region[f] = nregions++;
    // corner between slots t and t+1 at crossing k is swept by the face of
    // end (k, t+1)
    auto corner_face = [&](int k, int t) { return face[4 * k + ((t + 1) & 3)]; };
    std::vector<std::vector<long long>> G(nregions, std::vector<long long>(nregions, 0));
    for (int k = 0; k < c; ++k) {
        int f0 = corner_face(k, 0), f1 = corner_face(k, 1);
        bool w02 = color[f0] == white;  // white diagonal is {slot01, slot23} corners
        int ra = w02 ? region[f0] : region[f1];
        int rb = w02 ? region[corner_face(k, 2)] : region[corner_face(k, 3)];
        int sign = d.crossings[k].sign;
        // Goeritz sign and Gordon-Litherland type, with this file's rotation
        // convention; calibrated against Seifert-matrix signatures (both
        // checkerboard colorings give the same signed value).
        int eta = w02 ? -1 : 1;
        bool type2 = (sign > 0) != w02;
        if (type2) mu += eta;
        if (ra != rb) {
            G[ra][rb] -= eta;
            G[rb][ra] -= eta;
            G[ra][ra] += eta;
            G[rb][rb] += eta;
        }
    }
    // delete region 0
    std::vector<std::vector<long long>> M(nregions - 1, std::vector<long long>(nregions - 1));
    for (int i = 1; i < nregions; ++i)
        for (int j = 1; j < nregions; ++j) M[i - 1][j - 1] = G[i][j];
    return M;
}

}  // namespace

int signature_from_diagram(const CrossingDiagram& d) {
    int mu;
    std::vector<std::vector<long long>> M = goeritz_reduced(d, mu);
    return symmetric_signature(std::move(M)) - mu;
}

std::vector<long long> torsion_from_diagram(const CrossingDiagram& d) {
    // The reduced Goeritz matrix presents H_1 of the double branched cover.
    int mu;
    return invariant_factors(goeritz_reduced(d, mu));
}

LaurentPoly jones_from_diagram(const CrossingDiagram& d) {
    return jones_from_bracket(naive_bracket(d), d.writhe());
}

Fingerprint fingerprint_from_diagram(const CrossingDiagram& d) {
    Fingerprint f;
    f.alexander = alexander_from_diagram(d);
    f.determinant = std::llabs(f.alexander.evaluate(-1));
    f.signature_abs = std::abs(signature_from_diagram(d));
    f.torsion = torsion_from_diagram(d);
    f.jones_canon = jones_canonical(jones_from_diagram(d));
    return f;
}

}  // namespace fpb
