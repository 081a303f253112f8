#include "fpb/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "fpb/invariants.hpp"

namespace fpb {

namespace {

struct ChunkResult {
    std::uint64_t total = 0, links = 0, knots = 0, reducible = 0, surviving = 0;
    std::map<std::vector<int>, std::uint64_t> canon;  // canonical word -> code count
    bool done = false;
};

// All valid chunk prefixes of the given length, in lexicographic order.
std::vector<std::vector<int>> make_prefixes(int n, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur, used(n + 1, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == len) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= n; ++k) {
            if (used[k] == 2) continue;
            ++used[k];
            cur.push_back(k);
            self(self, depth + 1);
            cur.pop_back();
            --used[k];
        }
    };
    rec(rec, 0);
    return out;
}

void process_chunk(int n, const std::vector<int>& prefix, ChunkResult& r) {
    BasketCode canon, scratch;
    enumerate_codes_with_prefix(n, prefix, [&](const BasketCode& c) {
        ++r.total;
        if (component_count(c) != 1) {
            ++r.links;
            return;
        }
        ++r.knots;
        if (has_type_one_move(c)) {
            ++r.reducible;
            return;
        }
        ++r.surviving;
        canonical_form_inplace(c, canon, scratch);
        ++r.canon[canon.word];
    });
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (int k : w) s += static_cast<char>('0' + k);
    return s;
}

// Resume line: "chunk <idx> <total> <links> <knots> <reducible> <surviving>
// <count> <word>:<n> ... end"
std::string chunk_line(size_t idx, const ChunkResult& r) {
    std::ostringstream os;
    os << "chunk " << idx << ' ' << r.total << ' ' << r.links << ' ' << r.knots << ' '
       << r.reducible << ' ' << r.surviving << ' ' << r.canon.size();
    for (const auto& [w, c] : r.canon) os << ' ' << word_str(w) << ':' << c;
    os << " end";
    return os.str();
}

bool parse_chunk_line(const std::string& line, size_t nchunks, size_t& idx, ChunkResult& r) {
    std::istringstream is(line);
    std::string tag;
    std::uint64_t count = 0;
    if (!(is >> tag >> idx >> r.total >> r.links >> r.knots >> r.reducible >> r.surviving >>
          count) ||
        tag != "chunk" || idx >= nchunks)
        return false;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::string item;
        if (!(is >> item)) return false;
        size_t colon = item.find(':');
        if (colon == std::string::npos || colon == 0) return false;
        std::vector<int> w;
        for (char ch : item.substr(0, colon)) {
            if (ch < '1' || ch > '8') return false;
            w.push_back(ch - '0');
        }
        try {
            r.canon[w] = std::stoull(item.substr(colon + 1));
        } catch (const std::exception&) {
            return false;
        }
    }
    std::string tail;
    return (is >> tail) && tail == "end";
}

int resolve_threads(int requested, size_t nchunks) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("FPB_THREADS")) t = std::atoi(env);
        if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
        if (t <= 0) t = 1;
    }
    if (static_cast<size_t>(t) > nchunks && nchunks > 0) t = static_cast<int>(nchunks);
    return t;
}

}  // namespace

std::string classify_code(const BasketCode& code, const ReferenceTable& table) {
    if (component_count(code) != 1)
        throw std::invalid_argument("classify: code bounds a link, not a knot");
    return lookup(table, fingerprint(code));
}

CensusReport run_census(int n, const ReferenceTable& table, const CensusOptions& options) {
    if (n < 0 || n > 8) throw std::out_of_range("census: n must be in [0, 8]");
    const auto t0 = std::chrono::steady_clock::now();

    const int plen = std::min(std::max(options.chunk_prefix, 0), 2 * n);
    std::vector<std::vector<int>> prefixes = make_prefixes(n, plen);
    std::vector<ChunkResult> results(prefixes.size());

    // Resume: mark chunks already recorded as done.
    std::ofstream resume_out;
    if (!options.resume_path.empty()) {
        std::ifstream in(options.resume_path);
        std::string line;
        std::string expect = "census n=" + std::to_string(n) + " chunks=" +
                             std::to_string(prefixes.size());
        bool header_ok = false;
        if (in && std::getline(in, line)) {
            header_ok = line == expect;
            if (!header_ok)
                std::cerr << "census: resume file is for a different run; starting fresh\n";
        }
        while (header_ok && std::getline(in, line)) {
            size_t idx;
            ChunkResult r;
            if (!parse_chunk_line(line, prefixes.size(), idx, r)) {
                std::cerr << "census: discarding corrupt resume line\n";
                continue;
            }
            r.done = true;
            results[idx] = std::move(r);
        }
        in.close();
        resume_out.open(options.resume_path, header_ok ? std::ios::app : std::ios::trunc);
        if (!resume_out) throw std::runtime_error("census: cannot write " + options.resume_path);
        if (!header_ok) resume_out << expect << "\n" << std::flush;
    }

    const int threads = resolve_threads(options.threads, prefixes.size());
    std::atomic<size_t> next{0};
    std::mutex resume_mutex;
    auto worker = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= prefixes.size()) return;
            if (results[idx].done) continue;
            process_chunk(n, prefixes[idx], results[idx]);
            results[idx].done = true;
            if (resume_out.is_open()) {
                std::lock_guard<std::mutex> lock(resume_mutex);
                resume_out << chunk_line(idx, results[idx]) << "\n" << std::flush;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge (map insertion is order-independent).
    CensusReport rep;
    rep.n = n;
    std::map<std::vector<int>, std::uint64_t> canon;
    for (const ChunkResult& r : results) {
        rep.total += r.total;
        rep.link_codes += r.links;
        rep.knot_codes += r.knots;
        rep.type_one_reducible += r.reducible;
        rep.surviving += r.surviving;
        for (const auto& [w, c] : r.canon) canon[w] += c;
    }

    // One classification per symmetry class.
    for (const auto& [w, c] : canon) {
        const ReferenceEntry* e = find_entry(table, fingerprint(BasketCode{w}));
        std::string name = e ? (e->composite ? "composite:" + e->name : e->name) : "unknown";
        rep.class_counts[name] += c;
    }

    rep.threads_used = threads;
    rep.chunks = static_cast<int>(prefixes.size());
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<int> fpbk_lookup(const std::string& name) {
    static const std::map<std::string, std::vector<int>> known = {
        {"unknot", {0}},
        {"3_1", {4}},
        {"4_1", {4}},
        // the fpbk-6 classification
        {"5_1", {6}},
        {"5_2", {6}},
        {"6_1", {6}},
        {"6_2", {6}},
        {"6_3", {6}},
        {"7_6", {6}},
        {"7_7", {6}},
        {"8_1", {6}},
        {"8_3", {6}},
        {"8_12", {6}},
        {"8_20", {6}},
        {"8_21", {6}},
        {"9_42", {6}},
        {"9_44", {6}},
        {"9_46", {6}},
        {"9_48", {6}},
        {"10_132", {6}},
        {"10_136", {6}},
        {"10_137", {6}},
        {"10_140", {6}},
        {"11n_38", {6}},
        {"12n_462", {6}},
        {"13n_973", {6}},
        {"14n_17954", {6}},
        {"15n_45460", {6}},
        {"16n_246032", {6}},
        // settled fpbk-8 knots
        {"7_2", {8}},
        {"7_4", {8}},
        {"9_45", {8}},
        // narrowed to two candidates
        {"9_2", {8, 10}},
        {"9_5", {8, 10}},
        {"9_35", {8, 10}},
    };
    auto it = known.find(name);
    if (it == known.end())
        throw std::invalid_argument("fpbk: no established value for '" + name + "'");
    return it->second;
}

std::string report_csv(const CensusReport& report) {
    std::string out;
    for (const auto& [name, count] : report.class_counts)
        out += name + "," + std::to_string(count) + "\n";
    return out;
}

std::string report_json(const CensusReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["total"] = report.total;
    j["link_codes"] = report.link_codes;
    j["knot_codes"] = report.knot_codes;
    j["type_one_reducible"] = report.type_one_reducible;
    j["surviving"] = report.surviving;
    j["classes"] = nlohmann::json::object();
    for (const auto& [name, count] : report.class_counts) j["classes"][name] = count;
    return j.dump(1) + "\n";
}

void emit_report(const CensusReport& report, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "csv")
        body = report_csv(report);
    else if (format == "json")
        body = report_json(report);
    else
        throw std::invalid_argument("emit_report: format must be csv or json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open " + path);
    out << body;
    if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace fpb
