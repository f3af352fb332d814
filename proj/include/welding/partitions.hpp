#pragma once

#include <string>
#include <vector>

namespace welding {

// Partition of a nonnegative integer, parts stored non-increasing.
// The string form joins parts with '+' ("4+2+1"); the empty partition
// prints as "".
struct Partition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    // multiplicity of part k
    int count(int k) const {
        int c = 0;
        for (int p : parts) c += (p == k);
        return c;
    }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const;
    static Partition parse(const std::string& s);
};

// All partitions of n in the canonical order used everywhere in this
// project: [1,1,...,1] first, [n] last (reverse lexicographic on the
// non-increasing part lists). Deterministic across runs.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n (by enumeration; the tests check this
// against the pentagonal-number recurrence independently).
long partition_count(int n);

} // namespace welding
