#include "qpl/overpartitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qpl::ops {

int Overpartition::weight() const {
    int w = 0;
    for (const Part& p : parts) w += p.size;
    return w;
}

bool Overpartition::valid() const {
    std::map<int, int> overlines;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (parts[t].size < 1) return false;
        if (t > 0 && parts[t].size > parts[t - 1].size) return false;
        if (parts[t].overlined && ++overlines[parts[t].size] > 1) return false;
    }
    return true;
}

std::string Overpartition::str() const {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t > 0) s += "+";
        s += std::to_string(parts[t].size);
        if (parts[t].overlined) s += "~";
    }
    return s;
}

nlohmann::json Overpartition::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Part& p : parts)
        arr.push_back({{"part", p.size}, {"overlined", p.overlined}});
    return arr;
}

namespace {

/* (plain copies, has overlined copy) per size. */
std::map<int, std::pair<int, bool>> tally(const Overpartition& op) {
    std::map<int, std::pair<int, bool>> t;
    for (const Overpartition::Part& p : op.parts) {
        auto& e = t[p.size];
        if (p.overlined) e.second = true;
        else e.first += 1;
    }
    return t;
}

}  // namespace

bool SeqPattern::matches_at(const Overpartition& op, int shift) const {
    auto t = tally(op);
    std::map<int, std::pair<int, int>> need;   // value -> (plain, overlined)
    for (const Entry& e : entries) {
        auto& d = need[e.offset + shift];
        if (e.overlined) d.second += 1;
        else d.first += 1;
    }
    for (const auto& [v, d] : need) {
        auto it = t.find(v);
        int plain = (it == t.end()) ? 0 : it->second.first;
        int over = (it == t.end() || !it->second.second) ? 0 : 1;
        if (d.second > over || d.first > plain) return false;
    }
    return true;
}

bool SeqPattern::matches(const Overpartition& op) const {
    if (entries.empty() || op.parts.empty()) return false;
    int low = entries.front().offset;
    for (const Entry& e : entries) low = std::min(low, e.offset);
    int high = op.parts.front().size;   // largest part
    for (int shift = 0; low + shift <= high; ++shift) {
        if (matches_at(op, shift)) return true;
    }
    return false;
}

std::vector<Overpartition> enum_overpartitions(int n) {
    if (n < 0) throw std::invalid_argument("enum_overpartitions: negative weight");
    if (n > 25) throw std::invalid_argument("enum_overpartitions: capped at n <= 25");
    std::vector<Overpartition> out;
    Overpartition cur;
    /* Descend by blocks of equal parts; the overline choice is made once
     * per size, on the first (leftmost) copy. */
    auto rec_blocks = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int s = std::min(rem, max_part); s >= 1; --s) {
            for (int count = 1; count * s <= rem; ++count) {
                for (int over = 1; over >= 0; --over) {
                    for (int c = 0; c < count; ++c)
                        cur.parts.push_back({s, over == 1 && c == 0});
                    self(self, rem - count * s, s - 1);
                    for (int c = 0; c < count; ++c) cur.parts.pop_back();
                }
            }
        }
    };
    rec_blocks(rec_blocks, n, n);
    return out;
}

Constraints forbidden_patterns(int i, int k) {
    if (i < 0 || k < 0)
        throw std::invalid_argument("forbidden_patterns: i, k must be non-negative");
    Constraints c;
    c.i = i;
    c.k = k;
    c.min_overline = i;
    if (k >= 1) {
        SeqPattern run;
        if (i == 0) {
            /* values 1..2k+1, odd values overlined */
            for (int v = 1; v <= 2 * k + 1; ++v)
                run.entries.push_back({v, v % 2 == 1});
        } else {
            if (i + 1 > 2 * k + 1)
                throw std::invalid_argument(
                    "forbidden_patterns: the excluded run needs i <= 2k");
            /* plain 2..i, then both copies of i+1 (one overlined), then
             * i+2..2k+1 with overlines on values of the same parity as
             * i+1. */
            for (int v = 2; v <= i; ++v) run.entries.push_back({v, false});
            run.entries.push_back({i + 1, true});
            run.entries.push_back({i + 1, false});
            for (int v = i + 2; v <= 2 * k + 1; ++v)
                run.entries.push_back({v, (v - (i + 1)) % 2 == 0});
        }
        c.patterns.push_back(std::move(run));
    }
    return c;
}

bool Constraints::admits(const Overpartition& op) const {
    auto t = tally(op);
    int prev_over = 0;
    bool have_prev = false;
    for (const auto& [size, e] : t) {
        if (!e.second) continue;
        if (min_overline > 0 && size <= min_overline) return false;
        if (no_adjacent_overlines && have_prev && size == prev_over + 1) return false;
        prev_over = size;
        have_prev = true;
    }
    for (const SeqPattern& p : patterns) {
        if (p.matches(op)) return false;
    }
    return true;
}

FilteredCount count_filtered(int n, int i, int k) {
    Constraints c = forbidden_patterns(i, k);
    FilteredCount out;
    out.by_parts.assign(n + 1, 0);
    for (const Overpartition& op : enum_overpartitions(n)) {
        if (!c.admits(op)) continue;
        out.total += 1;
        out.by_parts[op.parts.size()] += 1;
    }
    return out;
}

long long count_2color(int n) {
    if (n < 0) throw std::invalid_argument("count_2color: negative weight");
    /* DP over part values, red (any value) then green (== 1 mod 3). */
    std::vector<long long> ways(n + 1, 0);
    ways[0] = 1;
    for (int v = 1; v <= n; ++v)
        for (int w = v; w <= n; ++w) ways[w] += ways[w - v];
    for (int v = 1; v <= n; v += 3)
        for (int w = v; w <= n; ++w) ways[w] += ways[w - v];
    return ways[n];
}

long long count_overpartitions(int n) {
    if (n < 0) throw std::invalid_argument("count_overpartitions: negative weight");
    /* Count partitions weighted by 2^{number of distinct sizes}:
     * blocks of (size s, multiplicity c) contribute weight 2. */
    std::vector<std::vector<long long>> memo(n + 1, std::vector<long long>(n + 1, -1));
    auto rec = [&](auto&& self, int rem, int max_part) -> long long {
        if (rem == 0) return 1;
        if (max_part == 0) return 0;
        long long& m = memo[rem][max_part];
        if (m >= 0) return m;
        long long total = self(self, rem, max_part - 1);
        for (int c = 1; c * max_part <= rem; ++c)
            total += 2 * self(self, rem - c * max_part, max_part - 1);
        return m = total;
    };
    return rec(rec, n, n);
}

}  // namespace qpl::ops
