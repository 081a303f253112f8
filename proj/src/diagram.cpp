#include "fpb/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fpb {

namespace {

// Thrown when a jittered placement produces coincident event abscissae or a
// non-adjacent frontier swap; the caller retries with a fresh seed.
struct Degenerate {};

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Rat {
    long long num = 0;
    long long den = 1;  // > 0
};

int rat_cmp(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

// A band edge drawn as the upper semicircle through endpoints u < v; c and r
// are the doubled center and radius, so all crossing abscissae stay rational
// with small integer parts.
struct Edge {
    int u = 0, v = 0;
    int band = 0;
    long long c = 0, r = 0;
};

constexpr int kBottom = -1;  // strand around the underside of the disk
constexpr int kGap = -2;     // strand along the disk edge between two feet

ArcDiagram build_attempt(const BasketCode& code, std::uint64_t seed) {
    const int n = code.bands();
    ArcDiagram d;
    d.n = n;
    if (n == 0) {
        d.components = 1;
        d.visits = {{}};
        d.flat.free_loops = 1;
        return d;
    }

    const int E = 4 * n;
    std::vector<long long> X(E);
    for (int e = 0; e < E; ++e)
        X[e] = 1024LL * e + static_cast<long long>(mix64(seed * 1000003 + e) % 512);

    std::vector<int> first(n + 1, -1), second(n + 1, -1);
    for (int p = 0; p < 2 * n; ++p) {
        int k = code.word[p];
        (first[k] < 0 ? first[k] : second[k]) = p;
    }

    std::vector<Edge> edges;
    for (int k = 1; k <= n; ++k) {
        int p = first[k], q = second[k];
        edges.push_back({2 * p, 2 * q + 1, k});
        edges.push_back({2 * p + 1, 2 * q, k});
    }
    for (auto& ed : edges) {
        ed.c = X[ed.u] + X[ed.v];
        ed.r = X[ed.v] - X[ed.u];
    }

    // Crossings: one per pair of edges whose endpoint intervals interleave.
    struct CrossAux {
        Rat x;
        int e1 = 0, e2 = 0;
    };
    std::vector<CrossAux> aux;
    std::vector<std::vector<int>> edge_cross(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            bool inter = (a.u < b.u && b.u < a.v && a.v < b.v) ||
                         (b.u < a.u && a.u < b.v && b.v < a.v);
            if (!inter) continue;
            long long den = 4 * (b.c - a.c);
            long long num = a.r * a.r - b.r * b.r + b.c * b.c - a.c * a.c;
            if (den == 0) throw Degenerate{};
            if (den < 0) {
                den = -den;
                num = -num;
            }
            int cid = static_cast<int>(d.crossings.size());
            ArcDiagram::Crossing c;
            const Edge& over = a.band > b.band ? a : b;
            const Edge& under = a.band > b.band ? b : a;
            c.over_band = over.band;
            c.under_band = under.band;
            // Just left of the crossing the semicircle with the larger center
            // is the lower one.
            c.over_enters_lower = over.c > under.c;
            d.crossings.push_back(c);
            aux.push_back({Rat{num, den}, static_cast<int>(i), static_cast<int>(j)});
            edge_cross[i].push_back(cid);
            edge_cross[j].push_back(cid);
        }
    }
    for (auto& list : edge_cross) {
        std::sort(list.begin(), list.end(),
                  [&](int a, int b) { return rat_cmp(aux[a].x, aux[b].x) < 0; });
        for (size_t i = 1; i < list.size(); ++i)
            if (rat_cmp(aux[list[i - 1]].x, aux[list[i]].x) == 0) throw Degenerate{};
    }

    // Sweep events: endpoints and crossings merged in abscissa order.
    struct Ev {
        Rat x;
        bool is_cross = false;
        int idx = 0;  // endpoint or crossing id
    };
    std::vector<Ev> evs;
    for (int e = 0; e < E; ++e) evs.push_back({Rat{X[e], 1}, false, e});
    for (size_t cid = 0; cid < aux.size(); ++cid)
        evs.push_back({aux[cid].x, true, static_cast<int>(cid)});
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        int c = rat_cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.is_cross < b.is_cross;  // order irrelevant; ties rejected below
    });
    for (size_t i = 1; i < evs.size(); ++i)
        if (rat_cmp(evs[i - 1].x, evs[i].x) == 0) throw Degenerate{};

    std::vector<int> frontier;  // strand per position, bottom to top
    auto find_pos = [&](int strand) {
        for (size_t i = 0; i < frontier.size(); ++i)
            if (frontier[i] == strand) return static_cast<int>(i);
        throw Degenerate{};
    };
    for (const Ev& ev : evs) {
        if (ev.is_cross) {
            int p1 = find_pos(aux[ev.idx].e1);
            int p2 = find_pos(aux[ev.idx].e2);
            if (p1 > p2) std::swap(p1, p2);
            if (p2 != p1 + 1) throw Degenerate{};
            // the strand entering from below must be the larger-center edge
            if (edges[frontier[p1]].c < edges[frontier[p2]].c) throw Degenerate{};
            d.events.push_back({SweepEvent::kCross, p1,
                                d.crossings[ev.idx].over_enters_lower});
            std::swap(frontier[p1], frontier[p2]);
            continue;
        }
        int e = ev.idx;
        int p = e / 2;
        bool left_side = (e % 2 == 0);
        int k = code.word[p];
        bool left_foot = (first[k] == p);
        int outer_edge = 2 * (k - 1), inner_edge = 2 * (k - 1) + 1;
        if (left_side && left_foot) {
            if (p == 0) {
                if (!frontier.empty()) throw Degenerate{};
                d.events.push_back({SweepEvent::kCup, 0, false});
                frontier.push_back(kBottom);
                frontier.push_back(outer_edge);
            } else {
                if (frontier.size() < 2 || frontier[1] != kGap) throw Degenerate{};
                frontier[1] = outer_edge;
            }
        } else if (!left_side && left_foot) {
            d.events.push_back({SweepEvent::kCup, 1, false});
            frontier.insert(frontier.begin() + 1, {kGap, inner_edge});
        } else if (left_side && !left_foot) {
            if (frontier.size() < 3 || frontier[1] != kGap || frontier[2] != inner_edge)
                throw Degenerate{};
            d.events.push_back({SweepEvent::kCap, 1, false});
            frontier.erase(frontier.begin() + 1, frontier.begin() + 3);
        } else {
            if (p == 2 * n - 1) {
                if (frontier.size() != 2 || frontier[0] != kBottom || frontier[1] != outer_edge)
                    throw Degenerate{};
                d.events.push_back({SweepEvent::kCap, 0, false});
                frontier.clear();
            } else {
                if (frontier.size() < 2 || frontier[1] != outer_edge) throw Degenerate{};
                frontier[1] = kGap;
            }
        }
    }
    if (!frontier.empty()) throw Degenerate{};

    // Boundary traversal: band-edge then disk-arc, as in component_count.
    std::vector<int> band_partner(E), disk_partner(E), edge_at(E);
    for (int k = 1; k <= n; ++k) {
        int p = first[k], q = second[k];
        band_partner[2 * p] = 2 * q + 1;
        band_partner[2 * q + 1] = 2 * p;
        band_partner[2 * p + 1] = 2 * q;
        band_partner[2 * q] = 2 * p + 1;
    }
    for (int p = 0; p < 2 * n; ++p) {
        int next = (p + 1) % (2 * n);
        disk_partner[2 * p + 1] = 2 * next;
        disk_partner[2 * next] = 2 * p + 1;
    }
    for (size_t id = 0; id < edges.size(); ++id) {
        edge_at[edges[id].u] = static_cast<int>(id);
        edge_at[edges[id].v] = static_cast<int>(id);
    }

    const size_t nc = d.crossings.size();
    std::vector<int> dir_over(nc, 0), dir_under(nc, 0);
    d.flat.crossings.assign(nc, DiagramCrossing{});
    std::vector<char> seen(E, 0);
    std::vector<int> mark(2 * n, -1);
    int seg_base = 0;
    for (int s0 = 0; s0 < E; ++s0) {
        if (seen[s0]) continue;
        int comp = static_cast<int>(d.visits.size());
        d.visits.emplace_back();
        auto& vis = d.visits.back();
        std::vector<std::pair<int, bool>> ends;  // (crossing, over?) per visit
        int s = s0;
        do {
            seen[s] = 1;
            if (comp == 0 && s % 2 == 0) mark[s / 2] = static_cast<int>(vis.size());
            int ed = edge_at[s];
            int t = band_partner[s];
            int dir = (s == edges[ed].u) ? 1 : -1;
            std::vector<int> list = edge_cross[ed];
            if (dir < 0) std::reverse(list.begin(), list.end());
            for (int cid : list) {
                bool over = (edges[ed].band == d.crossings[cid].over_band);
                (over ? dir_over[cid] : dir_under[cid]) = dir;
                vis.push_back({cid, over});
                ends.push_back({cid, over});
            }
            seen[t] = 1;
            if (comp == 0 && t % 2 == 0) mark[t / 2] = static_cast<int>(vis.size());
            s = disk_partner[t];
        } while (s != s0);
        int m = static_cast<int>(vis.size());
        if (m == 0) {
            ++d.flat.free_loops;
            continue;
        }
        for (int i = 0; i < m; ++i) {
            auto [cid, over] = ends[i];
            int in_seg = seg_base + (i + m - 1) % m;
            int out_seg = seg_base + i;
            auto& fc = d.flat.crossings[cid];
            (over ? fc.in_over : fc.in_under) = in_seg;
            (over ? fc.out_over : fc.out_under) = out_seg;
        }
        seg_base += m;
    }
    d.flat.num_segments = seg_base;
    d.components = static_cast<int>(d.visits.size());

    for (size_t cid = 0; cid < nc; ++cid) {
        int sign = (d.crossings[cid].over_enters_lower ? -1 : 1) * dir_over[cid] * dir_under[cid];
        d.crossings[cid].sign = sign;
        d.flat.crossings[cid].sign = sign;
    }

    int m0 = d.visits.empty() ? 0 : static_cast<int>(d.visits[0].size());
    d.visit_after_foot.assign(2 * n, 0);
    for (int p = 0; p < 2 * n; ++p)
        if (mark[p] >= 0 && m0 > 0) d.visit_after_foot[p] = mark[p] % m0;
    return d;
}

}  // namespace

ArcDiagram build_arc_diagram(const BasketCode& code) {
    validate_code(code);
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        try {
            return build_attempt(code, seed);
        } catch (const Degenerate&) {
        }
    }
    throw std::logic_error("build_arc_diagram: no non-degenerate placement found");
}

GaussCode gauss_code(const ArcDiagram& diagram, int start_foot, bool ccw) {
    if (diagram.components != 1)
        throw std::invalid_argument("gauss_code: diagram has more than one component");
    GaussCode out;
    const auto& vis = diagram.visits.empty() ? std::vector<GaussVisit>{} : diagram.visits[0];
    const int m = static_cast<int>(vis.size());
    if (m == 0) return out;
    if (start_foot < 0 || start_foot >= 2 * diagram.n)
        throw std::invalid_argument("gauss_code: start foot out of range");
    int k = diagram.visit_after_foot[start_foot];
    std::vector<GaussVisit> seq(m);
    for (int i = 0; i < m; ++i) seq[i] = vis[(k + i) % m];
    if (ccw) std::reverse(seq.begin(), seq.end());
    std::vector<int> id_of(diagram.crossings.size(), 0);
    int next_id = 0;
    for (const auto& v : seq) {
        if (id_of[v.crossing] == 0) id_of[v.crossing] = ++next_id;
        out.push_back({id_of[v.crossing], v.over, diagram.crossings[v.crossing].sign});
    }
    return out;
}

std::string gauss_to_string(const GaussCode& g) {
    std::string s;
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += g[i].over ? 'O' : 'U';
        s += std::to_string(g[i].id);
        s += g[i].sign >= 0 ? '+' : '-';
    }
    return s;
}

GaussCode parse_gauss(const std::string& text) {
    GaussCode g;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        GaussEntry e;
        if (c == 'O' || c == 'o')
            e.over = true;
        else if (c == 'U' || c == 'u')
            e.over = false;
        else
            throw std::invalid_argument("gauss code: expected O or U");
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("gauss code: missing crossing id");
        e.id = std::stoi(text.substr(start, i - start));
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw std::invalid_argument("gauss code: missing sign");
        e.sign = text[i] == '+' ? 1 : -1;
        ++i;
        g.push_back(e);
    }
    // every id must appear once over and once under with a consistent sign
    std::map<int, std::pair<int, int>> counts;  // id -> (over, under)
    std::map<int, int> signs;
    for (const auto& e : g) {
        (e.over ? counts[e.id].first : counts[e.id].second)++;
        auto it = signs.find(e.id);
        if (it == signs.end())
            signs[e.id] = e.sign;
        else if (it->second != e.sign)
            throw std::invalid_argument("gauss code: inconsistent crossing sign");
    }
    for (auto& [id, c] : counts)
        if (c.first != 1 || c.second != 1)
            throw std::invalid_argument("gauss code: crossing must appear once over, once under");
    return g;
}

std::vector<int> dt_from_gauss(const GaussCode& g) {
    const int m = static_cast<int>(g.size());
    if (m % 2 != 0) throw std::invalid_argument("dt: odd gauss code length");
    const int c = m / 2;
    std::vector<int> odd_label(c + 1, 0), even_label(c + 1, 0);
    std::vector<char> over_at_even(c + 1, 0);
    for (int i = 0; i < m; ++i) {
        const auto& e = g[i];
        if (e.id < 1 || e.id > c) throw std::invalid_argument("dt: crossing ids must be 1..c");
        int lab = i + 1;
        if (lab % 2 == 1) {
            if (odd_label[e.id]) throw std::invalid_argument("dt: crossing met twice at odd steps");
            odd_label[e.id] = lab;
        } else {
            if (even_label[e.id]) throw std::invalid_argument("dt: crossing met twice at even steps");
            even_label[e.id] = lab;
            over_at_even[e.id] = e.over;
        }
    }
    std::vector<int> by_odd(c + 1, 0);
    for (int id = 1; id <= c; ++id) {
        if (!odd_label[id] || !even_label[id])
            throw std::invalid_argument("dt: unpaired crossing");
        by_odd[(odd_label[id] + 1) / 2] = over_at_even[id] ? -even_label[id] : even_label[id];
    }
    return {by_odd.begin() + 1, by_odd.end()};
}

std::string dt_to_string(const std::vector<int>& dt) {
    std::string s;
    for (size_t i = 0; i < dt.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(dt[i]);
    }
    return s;
}

std::vector<int> parse_dt(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> dt;
    int v;
    while (in >> v) {
        if (v == 0 || v % 2 != 0) throw std::invalid_argument("dt: entries must be nonzero even");
        dt.push_back(v);
    }
    if (!in.eof()) throw std::invalid_argument("dt: malformed integer");
    std::vector<char> seen(2 * dt.size() + 1, 0);
    for (int x : dt) {
        int a = std::abs(x);
        if (a > 2 * static_cast<int>(dt.size()) || seen[a])
            throw std::invalid_argument("dt: even labels must be a permutation");
        seen[a] = 1;
    }
    return dt;
}

namespace {

GaussCode remove_crossings(const GaussCode& g, int a, int b) {
    GaussCode out;
    for (const auto& e : g)
        if (e.id != a && e.id != b) out.push_back(e);
    return out;
}

GaussCode renumber(const GaussCode& g) {
    std::map<int, int> id_map;
    GaussCode out;
    for (const auto& e : g) {
        auto [it, fresh] = id_map.insert({e.id, static_cast<int>(id_map.size()) + 1});
        out.push_back({it->second, e.over, e.sign});
    }
    return out;
}

}  // namespace

GaussCode simplify_r_moves(const GaussCode& g0) {
    GaussCode g = g0;
    for (;;) {
        const int m = static_cast<int>(g.size());
        if (m == 0) break;
        bool changed = false;
        for (int i = 0; i < m && !changed; ++i) {
            if (g[i].id == g[(i + 1) % m].id) {
                g = remove_crossings(g, g[i].id, g[i].id);
                changed = true;
            }
        }
        if (changed) continue;
        for (int i = 0; i < m && !changed; ++i) {
            int i1 = (i + 1) % m;
            int a = g[i].id, b = g[i1].id;
            if (a == b || g[i].over != g[i1].over) continue;
            for (int j = 0; j < m; ++j) {
                int j1 = (j + 1) % m;
                if (g[j].id == b && g[j1].id == a && g[j].over == g[j1].over &&
                    g[j].over != g[i].over) {
                    g = remove_crossings(g, a, b);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) break;
    }
    return renumber(g);
}

}  // namespace fpb
