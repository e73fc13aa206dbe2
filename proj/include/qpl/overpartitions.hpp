#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qpl::ops {

/* A partition in which the first appearance of any part size may be
 * overlined. Parts are stored weakly decreasing; at most one copy of each
 * size carries the overline. */
struct Overpartition {
    struct Part {
        int size = 0;
        bool overlined = false;
    };
    std::vector<Part> parts;

    int weight() const;
    bool valid() const;     // weakly decreasing, one overline per size
    std::string str() const;            // e.g. "5~+1+1"
    nlohmann::json to_json() const;
};

/* A fixed run of values with prescribed overline status, matched at any
 * shift j >= 0 as a sub-multiset: each entry (offset+j, overlined) must be
 * matched by a distinct part with exactly that overline status. */
struct SeqPattern {
    struct Entry {
        int offset = 0;
        bool overlined = false;
    };
    std::vector<Entry> entries;

    bool matches_at(const Overpartition& op, int shift) const;
    bool matches(const Overpartition& op) const;   // some shift >= 0
};

/* Complete duplicate-free enumeration. Guarded to n <= 25. */
std::vector<Overpartition> enum_overpartitions(int n);

/* The constraint set excluding overpartitions from the (i,k) class:
 * adjacent overlined sizes, the length-(2k+1) alternating-overline run
 * (doubled at i+1 when i > 0), and, for i > 0, any overlined part <= i. */
struct Constraints {
    int i = 0;
    int k = 0;
    bool no_adjacent_overlines = true;
    int min_overline = 0;               // overlined parts must exceed this
    std::vector<SeqPattern> patterns;   // forbidden runs

    bool admits(const Overpartition& op) const;
};
Constraints forbidden_patterns(int i, int k);

struct FilteredCount {
    long long total = 0;
    std::vector<long long> by_parts;    // index = number of parts
};
FilteredCount count_filtered(int n, int i, int k);

/* Partitions into red parts (unrestricted) and green parts == 1 (mod 3). */
long long count_2color(int n);

/* Total overpartitions of n (no constraints). */
long long count_overpartitions(int n);

}  // namespace qpl::ops
