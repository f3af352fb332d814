#include "welding/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace welding {

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s) {
    Partition p;
    if (s.empty()) return p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        if (next == std::string::npos) next = s.size();
        const int part = std::stoi(s.substr(pos, next - pos));
        if (part <= 0) throw std::invalid_argument("partition parts must be positive");
        p.parts.push_back(part);
        pos = next + 1;
    }
    if (!std::is_sorted(p.parts.rbegin(), p.parts.rend()))
        throw std::invalid_argument("partition parts must be non-increasing: " + s);
    return p;
}

namespace {

void enumerate_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n == 0 ? 1 : n, cur, out);
    // descending-lex generation, reversed so that [1,...,1] comes first
    std::reverse(out.begin(), out.end());
    return out;
}

long partition_count(int n) {
    return static_cast<long>(enumerate_partitions(n).size());
}

} // namespace welding
