#include "fpb/basket.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpb {

namespace {

void foot_positions(const BasketCode& code, std::vector<int>& first, std::vector<int>& second) {
    const int n = code.bands();
    first.assign(n + 1, -1);
    second.assign(n + 1, -1);
    for (int p = 0; p < 2 * n; ++p) {
        int k = code.word[p];
        (first[k] < 0 ? first[k] : second[k]) = p;
    }
}

}  // namespace

void validate_code(const BasketCode& code) {
    const int n = code.bands();
    if (code.word.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("basket code: odd word length");
    std::vector<int> count(n + 1, 0);
    for (int k : code.word) {
        if (k < 1 || k > n) throw std::invalid_argument("basket code: label out of range 1..n");
        ++count[k];
    }
    for (int k = 1; k <= n; ++k)
        if (count[k] != 2) throw std::invalid_argument("basket code: label must occur exactly twice");
}

BasketCode parse_code(const std::string& text) {
    BasketCode code;
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && (text[i] == '[' || text.find_first_of(", ") != std::string::npos)) {
        std::string body = text;
        for (char& c : body)
            if (c == '[' || c == ']' || c == ',') c = ' ';
        std::istringstream in(body);
        int v;
        while (in >> v) code.word.push_back(v);
        if (!in.eof()) throw std::invalid_argument("basket code: malformed integer list");
    } else {
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("basket code: unexpected character");
            code.word.push_back(c - '0');
        }
    }
    validate_code(code);
    return code;
}

std::string code_to_string(const BasketCode& code) {
    if (code.bands() <= 9) {
        std::string s;
        for (int k : code.word) s.push_back(static_cast<char>('0' + k));
        return s;
    }
    std::string s = "[";
    for (size_t i = 0; i < code.word.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(code.word[i]);
    }
    return s + "]";
}

bool interleaved(const BasketCode& code, int a, int b) {
    const int n = code.bands();
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("interleaved: invalid labels");
    // a and b alternate cyclically iff exactly one occurrence of b lies
    // between the two occurrences of a in the linear word.
    int between = 0, seen_a = 0;
    for (int k : code.word) {
        if (k == a) ++seen_a;
        else if (k == b && seen_a == 1) ++between;
    }
    return between == 1;
}

int component_count(const BasketCode& code) {
    const int n = code.bands();
    if (n == 0) return 1;
    std::vector<int> first, second;
    foot_positions(code, first, second);
    // Endpoints 2p (left side of foot p) and 2p+1 (right side).  Band edges:
    // outer L(p) <-> R(q), inner R(p) <-> L(q) for feet p < q.  Disk arcs join
    // R(p) to L(p+1) cyclically.
    const int m = 4 * n;
    std::vector<int> band_partner(m), disk_partner(m);
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
    std::vector<char> seen(m, 0);
    int components = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++components;
        int v = s;
        while (!seen[v]) {
            seen[v] = 1;
            int w = band_partner[v];
            seen[w] = 1;
            v = disk_partner[w];
        }
    }
    return components;
}

SurfaceStats surface_stats(const BasketCode& code) {
    SurfaceStats s;
    s.n = code.bands();
    s.euler = 1 - s.n;
    s.mu = component_count(code);
    int twice_genus = 2 - s.euler - s.mu;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::logic_error("surface_stats: non-integral genus");
    s.genus = twice_genus / 2;
    return s;
}

std::uint64_t code_count(int n) {
    std::uint64_t total = 1;
    for (int i = 1; i <= 2 * n; ++i) total *= static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) total /= 2;
    return total;
}

namespace {

std::uint64_t enumerate_rec(int n, std::vector<int>& word, std::vector<int>& used,
                            const std::function<void(const BasketCode&)>& fn) {
    if (word.size() == static_cast<size_t>(2 * n)) {
        if (fn) fn(BasketCode{word});
        return 1;
    }
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
        if (used[k] == 2) continue;
        ++used[k];
        word.push_back(k);
        total += enumerate_rec(n, word, used, fn);
        word.pop_back();
        --used[k];
    }
    return total;
}

}  // namespace

std::uint64_t enumerate_codes(int n, const std::function<void(const BasketCode&)>& fn) {
    if (n < 0 || n > 8) throw std::out_of_range("enumerate_codes: n must be in [0, 8]");
    std::vector<int> word, used(n + 1, 0);
    word.reserve(2 * n);
    return enumerate_rec(n, word, used, fn);
}

void enumerate_codes_with_prefix(int n, const std::vector<int>& prefix,
                                 const std::function<void(const BasketCode&)>& fn) {
    if (n < 0 || n > 8) throw std::out_of_range("enumerate_codes_with_prefix: n must be in [0, 8]");
    std::vector<int> word = prefix, used(n + 1, 0);
    word.reserve(2 * n);
    for (int k : prefix) {
        if (k < 1 || k > n || ++used[k] > 2)
            throw std::invalid_argument("enumerate_codes_with_prefix: bad prefix");
    }
    enumerate_rec(n, word, used, fn);
}

BasketCode symmetry_apply(const BasketCode& code, const SymmetryElement& g) {
    const int n = code.bands();
    const int len = 2 * n;
    BasketCode out;
    out.word.resize(len);
    for (int i = 0; i < len; ++i) {
        int src = (i + g.start_rotation % len + len) % len;
        out.word[i] = code.word[src];
    }
    if (g.reading_reversed) std::reverse(out.word.begin(), out.word.end());
    if (n > 0) {
        for (int& k : out.word) {
            k = (k - 1 + g.page_rotation % n + n) % n + 1;
            if (g.page_reversed) k = n + 1 - k;
        }
    }
    return out;
}

std::vector<BasketCode> symmetry_orbit(const BasketCode& code) {
    const int n = code.bands();
    std::set<BasketCode> orbit;
    if (n == 0) return {code};
    for (int rot = 0; rot < 2 * n; ++rot)
        for (int rev = 0; rev < 2; ++rev)
            for (int prot = 0; prot < n; ++prot)
                for (int prev = 0; prev < 2; ++prev)
                    orbit.insert(symmetry_apply(code, {rot, rev != 0, prot, prev != 0}));
    return {orbit.begin(), orbit.end()};
}

void canonical_form_inplace(const BasketCode& code, BasketCode& out, BasketCode& scratch) {
    const int n = code.bands();
    out = code;
    if (n == 0) return;
    const int len = 2 * n;
    scratch.word.resize(len);
    for (int rot = 0; rot < len; ++rot)
        for (int rev = 0; rev < 2; ++rev)
            for (int prot = 0; prot < n; ++prot)
                for (int prev = 0; prev < 2; ++prev) {
                    for (int i = 0; i < len; ++i) {
                        int src = rev ? (rot + len - 1 - i) % len : (rot + i) % len;
                        int k = (code.word[src] - 1 + prot) % n + 1;
                        if (prev) k = n + 1 - k;
                        scratch.word[i] = k;
                    }
                    if (scratch.word < out.word) std::swap(out.word, scratch.word);
                }
}

BasketCode canonical_form(const BasketCode& code) {
    BasketCode out, scratch;
    canonical_form_inplace(code, out, scratch);
    return out;
}

std::vector<std::pair<int, int>> find_type_one_moves(const BasketCode& code, bool page_refined) {
    const int n = code.bands();
    const int len = 2 * n;
    std::set<std::pair<int, int>> moves;
    if (n < 2) return {};
    for (int i = 0; i < len; ++i) {
        int b = code.word[i], a = code.word[(i + 1) % len];
        if (a == b || code.word[(i + 2) % len] != b) continue;
        if (page_refined) {
            int lo = std::min(a, b), hi = std::max(a, b);
            bool blocked = false;
            for (int c = lo + 1; c < hi && !blocked; ++c)
                if (interleaved(code, a, c)) blocked = true;
            if (blocked) continue;
        }
        moves.insert({std::min(a, b), std::max(a, b)});
    }
    return {moves.begin(), moves.end()};
}

bool has_type_one_move(const BasketCode& code, bool page_refined) {
    return !find_type_one_moves(code, page_refined).empty();
}

BasketCode apply_type_one(const BasketCode& code, std::pair<int, int> move) {
    auto moves = find_type_one_moves(code, kTypeOnePageRefined);
    if (std::find(moves.begin(), moves.end(), move) == moves.end())
        throw std::invalid_argument("apply_type_one: move not applicable");
    const int n = code.bands();
    std::vector<int> relabel(n + 1, 0);
    int next = 0;
    for (int k = 1; k <= n; ++k)
        if (k != move.first && k != move.second) relabel[k] = ++next;
    BasketCode out;
    for (int k : code.word)
        if (relabel[k] != 0) out.word.push_back(relabel[k]);
    return out;
}

BasketCode reduce_type_one(const BasketCode& code) {
    BasketCode cur = code;
    for (;;) {
        auto moves = find_type_one_moves(cur, kTypeOnePageRefined);
        if (moves.empty()) return cur;
        cur = apply_type_one(cur, moves.front());
    }
}

std::vector<std::vector<int>> seifert_matrix(const BasketCode& code) {
    const int n = code.bands();
    std::vector<int> first, second;
    foot_positions(code, first, second);
    std::vector<std::vector<int>> v(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (interleaved(code, i, j)) v[i - 1][j - 1] = first[i] < first[j] ? -1 : 1;
    return v;
}

}  // namespace fpb
