#include "fpb/bracket.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fpb {

namespace {

LaurentPoly loop_value() {
    LaurentPoly d;
    d.set_coeff(2, -1);
    d.set_coeff(-2, -1);
    return d;
}

// A frontier state: partner[i] is the position matched with i in the
// noncrossing planar matching of open strand ends.
using State = std::vector<std::int8_t>;

State state_cup(const State& s, int pos) {
    State t(s.size() + 2);
    for (size_t i = 0; i < s.size(); ++i) {
        int ni = static_cast<int>(i) < pos ? static_cast<int>(i) : static_cast<int>(i) + 2;
        int p = s[i];
        t[ni] = static_cast<std::int8_t>(p < pos ? p : p + 2);
    }
    t[pos] = static_cast<std::int8_t>(pos + 1);
    t[pos + 1] = static_cast<std::int8_t>(pos);
    return t;
}

State state_cap(const State& s, int pos, bool& loop) {
    int a = s[pos], b = s[pos + 1];
    loop = (a == pos + 1);
    State t(s.size() - 2);
    auto remap = [&](int i) { return i > pos + 1 ? i - 2 : i; };
    for (size_t i = 0; i < s.size(); ++i) {
        if (static_cast<int>(i) == pos || static_cast<int>(i) == pos + 1) continue;
        int p = s[i];
        if (p == pos) p = b;       // join: partner of pos's mate becomes b's mate
        else if (p == pos + 1) p = a;
        t[remap(static_cast<int>(i))] = static_cast<std::int8_t>(remap(p));
    }
    return t;
}

State state_turnback(const State& s, int pos, bool& loop) {
    int a = s[pos], b = s[pos + 1];
    loop = (a == pos + 1);
    if (loop) return s;
    State t = s;
    t[a] = static_cast<std::int8_t>(b);
    t[b] = static_cast<std::int8_t>(a);
    t[pos] = static_cast<std::int8_t>(pos + 1);
    t[pos + 1] = static_cast<std::int8_t>(pos);
    return t;
}

void accumulate(std::map<State, LaurentPoly>& m, const State& s, const LaurentPoly& p) {
    auto [it, fresh] = m.try_emplace(s, p);
    if (!fresh) it->second = it->second + p;
}

}  // namespace

LaurentPoly sweep_bracket(const std::vector<SweepEvent>& events) {
    if (events.empty()) return LaurentPoly(1);
    const LaurentPoly delta = loop_value();
    std::map<State, LaurentPoly> cur;
    cur[{}] = LaurentPoly(1);
    for (const SweepEvent& ev : events) {
        std::map<State, LaurentPoly> next;
        for (const auto& [s, poly] : cur) {
            if (ev.kind == SweepEvent::kCup) {
                accumulate(next, state_cup(s, ev.pos), poly);
            } else if (ev.kind == SweepEvent::kCap) {
                bool loop = false;
                State t = state_cap(s, ev.pos, loop);
                accumulate(next, t, loop ? poly * delta : poly);
            } else {
                // A-smoothing carries A, the other carries A^-1.
                LaurentPoly pa = poly * LaurentPoly::monomial(1, ev.a_is_turnback ? 1 : -1);
                bool loop = false;
                State t = state_turnback(s, ev.pos, loop);
                accumulate(next, t, loop ? pa * delta : pa);
                LaurentPoly pp = poly * LaurentPoly::monomial(1, ev.a_is_turnback ? -1 : 1);
                accumulate(next, s, pp);
            }
        }
        cur = std::move(next);
    }
    if (cur.size() != 1 || !cur.begin()->first.empty())
        throw std::logic_error("sweep_bracket: frontier did not close");
    return cur.begin()->second.divided_by(delta);
}

LaurentPoly kauffman_bracket(const ArcDiagram& d) { return sweep_bracket(d.events); }

LaurentPoly naive_bracket(const CrossingDiagram& d) {
    const int c = static_cast<int>(d.crossings.size());
    if (c > 24) throw std::invalid_argument("naive_bracket: too many crossings");
    const LaurentPoly delta = loop_value();
    std::vector<LaurentPoly> dpow(d.num_segments + d.free_loops + 1);
    dpow[0] = LaurentPoly(1);
    for (size_t i = 1; i < dpow.size(); ++i) dpow[i] = dpow[i - 1] * delta;

    LaurentPoly total;
    std::vector<int> uf(d.num_segments);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[a] = b;
    };
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::iota(uf.begin(), uf.end(), 0);
        int apow = 0;
        for (int i = 0; i < c; ++i) {
            const auto& cr = d.crossings[i];
            bool a_state = (mask >> i) & 1u;
            apow += a_state ? 1 : -1;
            // for a positive crossing the A-smoothing is the oriented one
            bool oriented = (cr.sign > 0) == a_state;
            if (oriented) {
                unite(cr.in_over, cr.out_under);
                unite(cr.in_under, cr.out_over);
            } else {
                unite(cr.in_over, cr.in_under);
                unite(cr.out_over, cr.out_under);
            }
        }
        int loops = d.free_loops;
        for (int i = 0; i < d.num_segments; ++i)
            if (find(i) == i) ++loops;
        if (loops == 0) throw std::logic_error("naive_bracket: empty diagram state");
        total = total + LaurentPoly::monomial(1, apow) * dpow[loops - 1];
    }
    return total;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket_a, int writhe) {
    LaurentPoly v = bracket_a.shifted(-3 * writhe);
    if (writhe % 2 != 0) v = -v;
    LaurentPoly out;
    for (auto [exp, coeff] : v.terms()) {
        if (exp % 4 != 0)
            throw std::invalid_argument("jones: exponent not a multiple of four (link input?)");
        out.set_coeff(-exp / 4, coeff);
    }
    return out;
}

LaurentPoly jones(const ArcDiagram& d) {
    return jones_from_bracket(kauffman_bracket(d), d.writhe());
}

}  // namespace fpb
