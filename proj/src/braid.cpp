#include "fpb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fpb {

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw std::invalid_argument("braid: strands must be positive");
    BraidWord b;
    b.strands = strands;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        std::string body = tok;
        if (body.front() == 's' || body.front() == 'S') body.erase(0, 1);
        if (!body.empty() && body.back() == '\'') {
            sign = -1;
            body.pop_back();
        }
        size_t pos = 0;
        int idx;
        try {
            idx = std::stoi(body, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("braid: malformed token '" + tok + "'");
        }
        if (pos != body.size()) throw std::invalid_argument("braid: malformed token '" + tok + "'");
        if (idx < 0) {
            if (sign < 0) throw std::invalid_argument("braid: malformed token '" + tok + "'");
            sign = -1;
            idx = -idx;
        }
        if (idx < 1 || idx > strands - 1)
            throw std::invalid_argument("braid: generator index out of range");
        b.letters.push_back(sign * idx);
    }
    return b;
}

std::string braid_to_string(const BraidWord& braid) {
    std::string s;
    for (size_t i = 0; i < braid.letters.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(braid.letters[i]);
    }
    return s;
}

int closed_components(const BraidWord& braid) {
    std::vector<int> perm(braid.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : braid.letters) {
        int g = std::abs(letter) - 1;
        std::swap(perm[g], perm[g + 1]);
    }
    std::vector<char> seen(braid.strands, 0);
    int cycles = 0;
    for (int i = 0; i < braid.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return cycles;
}

BasketCode fhk_code(const BraidWord& braid) {
    const int n = braid.strands;
    const int m = braid.length();
    if (m == 0) return {};
    if (n < 2) throw std::invalid_argument("fhk_code: nonempty word needs at least 2 strands");
    if (m < n - 1) throw std::invalid_argument("fhk_code: word shorter than the disk prefix");

    // prefix: one letter per generator, any order and signs
    std::vector<int> prefix_sign(n, 0), prefix_col(n, 0);
    for (int i = 0; i < n - 1; ++i) {
        int g = std::abs(braid.letters[i]);
        if (prefix_sign[g] != 0)
            throw std::invalid_argument("fhk_code: prefix must touch every generator exactly once");
        prefix_sign[g] = braid.letters[i] > 0 ? 1 : -1;
        prefix_col[g] = i + 1;
    }

    // Events on each strand circle, ordered by column.  A connector carries
    // the walk to the neighbouring strand; a foot emits one band foot; a
    // cluster emits the five feet of the sign-flip gadget a1 a2 L a1 a2.
    struct Event {
        int col;
        enum Kind { kConnector, kFoot, kCluster } kind;
        int band = 0;       // kFoot / kCluster: main band id
        int other_row = 0;  // kConnector
    };
    std::vector<std::vector<Event>> rows(n + 1);
    int bands = 0;
    std::vector<std::pair<int, int>> cluster_aux;  // band -> (a1, a2)
    cluster_aux.resize(3 * m + 2, {0, 0});
    std::vector<int> band_gen(3 * m + 2, 0);  // band -> generator of its letter
    // groups: a plain band alone, or a gadget triple (a1, a2, main); col is
    // the letter position, used to order groups within a generator
    struct Group {
        int a1, a2, main;  // a1 == -1 for a plain band (main only)
        int col, gen;
    };
    std::vector<Group> groups;
    for (int g = 1; g <= n - 1; ++g) {
        rows[g].push_back({prefix_col[g], Event::kConnector, 0, g + 1});
        rows[g + 1].push_back({prefix_col[g], Event::kConnector, 0, g});
    }
    for (int j = n - 1; j < m; ++j) {
        int g = std::abs(braid.letters[j]);
        int sign = braid.letters[j] > 0 ? 1 : -1;
        int col = j + 1;
        int band = ++bands;
        band_gen[band] = g;
        if (sign != prefix_sign[g]) {
            groups.push_back({-1, -1, band, col, g});
            rows[g].push_back({col, Event::kFoot, band, 0});
            rows[g + 1].push_back({col, Event::kFoot, band, 0});
        } else {
            int a1 = ++bands;
            int a2 = ++bands;
            band_gen[a1] = band_gen[a2] = g;
            cluster_aux[band] = {a1, a2};
            groups.push_back({a1, a2, band, col, g});
            // the gadget is chiral: a positive pair needs the mirrored layout
            int foot_row = sign > 0 ? g + 1 : g;
            rows[foot_row].push_back({col, Event::kFoot, band, 0});
            rows[g + (foot_row == g ? 1 : 0)].push_back({col, Event::kCluster, band, 0});
        }
    }
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](const Event& a, const Event& b) { return a.col < b.col; });

    // Boundary walk: always rightward with cyclic wrap, starting into the
    // generator-1 connector on strand 1.
    auto index_of = [&](int row, int col) {
        for (size_t i = 0; i < rows[row].size(); ++i)
            if (rows[row][i].col == col) return static_cast<int>(i);
        throw std::logic_error("fhk_code: lost connector");
    };
    std::vector<int> feet;
    int row = 1;
    int idx = index_of(1, prefix_col[1]);
    const int start_row = row, start_idx = idx;
    bool first = true;
    int steps = 0, max_steps = 2 * (m + n) + 8;
    while (first || row != start_row || idx != start_idx) {
        first = false;
        if (++steps > max_steps) throw std::logic_error("fhk_code: walk does not close");
        const Event& ev = rows[row][idx];
        if (ev.kind == Event::kConnector) {
            int col = ev.col;
            row = ev.other_row;
            idx = index_of(row, col);
        } else if (ev.kind == Event::kFoot) {
            feet.push_back(ev.band);
        } else {
            auto [a1, a2] = cluster_aux[ev.band];
            feet.push_back(a1);
            feet.push_back(a2);
            feet.push_back(ev.band);
            feet.push_back(a1);
            feet.push_back(a2);
        }
        idx = static_cast<int>((idx + 1) % rows[row].size());
        if (feet.size() > 4u * bands) throw std::logic_error("fhk_code: walk does not close");
    }
    if (feet.size() != 2u * bands) throw std::logic_error("fhk_code: boundary walk incomplete");

    // Pages: all bands of one generator form a contiguous page block;
    // blocks are stacked in the order the walk first meets each generator.
    // Within a block the letters are taken left to right, reversed when the
    // prefix letter of that generator is negative (flattening the negative
    // half twist mirrors everything plumbed over it).  A gadget occupies
    // three consecutive pages: main lowest for a positive pair, the two
    // annuli lowest for a negative one.
    std::vector<int> gen_first(n, m + bands + 2);
    for (size_t i = 0; i < feet.size(); ++i) {
        int g = band_gen[feet[i]];
        gen_first[g] = std::min(gen_first[g], static_cast<int>(i));
    }
    std::vector<int> gen_order;
    for (int g = 1; g <= n - 1; ++g) gen_order.push_back(g);
    std::sort(gen_order.begin(), gen_order.end(),
              [&](int a, int b) { return gen_first[a] < gen_first[b]; });
    std::vector<int> page(bands + 1, 0);
    int next_page = 0;
    for (int g : gen_order) {
        std::vector<const Group*> block;
        for (const Group& gr : groups)
            if (gr.gen == g) block.push_back(&gr);
        std::sort(block.begin(), block.end(),
                  [](const Group* a, const Group* b) { return a->col < b->col; });
        if (prefix_sign[g] < 0) std::reverse(block.begin(), block.end());
        for (const Group* gr : block) {
            if (gr->a1 < 0) {
                page[gr->main] = ++next_page;
            } else if (prefix_sign[g] > 0) {
                page[gr->main] = next_page + 1;
                page[gr->a2] = next_page + 2;
                page[gr->a1] = next_page + 3;
                next_page += 3;
            } else {
                page[gr->a1] = next_page + 1;
                page[gr->a2] = next_page + 2;
                page[gr->main] = next_page + 3;
                next_page += 3;
            }
        }
    }
    BasketCode out;
    for (int band : feet) out.word.push_back(page[band]);
    validate_code(out);
    return out;
}

int bound_fhk(const BraidWord& braid) {
    const int n = braid.strands;
    if (braid.length() < n - 1)
        throw std::invalid_argument("bound_fhk: word shorter than the normal-form prefix");
    for (int i = 0; i < n - 1; ++i)
        if (braid.letters[i] != n - 1 - i)
            throw std::invalid_argument(
                "bound_fhk: word not in the normal form sigma_{n-1} ... sigma_1 W");
    int m = braid.length() - (n - 1), p = 0;
    for (int i = n - 1; i < braid.length(); ++i)
        if (braid.letters[i] > 0) ++p;
    return m + 2 * p;
}

int bound_kim(const BraidWord& braid) {
    const int n = braid.strands;
    std::vector<int> pos(n, 0), neg(n, 0);
    for (int letter : braid.letters) (letter > 0 ? pos : neg)[std::abs(letter)]++;
    int gamma = 0, sum = 0;
    for (int g = 1; g <= n - 1; ++g) {
        if (pos[g] > 0 && neg[g] > 0) ++gamma;
        bool eps_positive = (1 <= pos[g] && pos[g] <= neg[g]) || neg[g] == 0;
        sum += eps_positive ? pos[g] : neg[g];
    }
    return braid.length() + n - 1 - 4 * gamma + 2 * sum;
}

}  // namespace fpb
