#pragma once

#include "welding/partitions.hpp"
#include "welding/rational.hpp"
#include "welding/virasoro.hpp"

#include <map>
#include <string>
#include <vector>

namespace welding {

// Exact joint-moment table E(u^P ubar^Q) for one level (common weight of P
// and Q). Entries are solved jointly from the infinitesimal-invariance
// equations; symmetry under (P,Q) swap is verified after the solve, not
// imposed before it.
struct MomentTable {
    int level = 0;
    std::map<std::pair<Partition, Partition>, Rational> entries;
    std::map<std::pair<Partition, Partition>, std::vector<std::string>> provenance;
    std::vector<std::string> equation_ids;

    const Rational& at(const Partition& p, const Partition& q) const;
    std::string to_json(bool with_provenance = false) const;
    std::string to_csv() const;
};

struct EquationSystem {
    struct Equation {
        std::string id;
        std::map<std::pair<Partition, Partition>, Rational> lhs; // level-n unknowns
        Rational rhs = 0; // lower-level data moved to the right-hand side
    };
    int level = 0;
    std::vector<Equation> equations;
    std::vector<std::pair<Partition, Partition>> unknowns; // canonical order
};

class MomentEngine {
public:
    // Solves levels lazily up to max_level (levels 7 and 8 are heavy and
    // gated behind allow_large at the CLI layer, not here).
    explicit MomentEngine(int max_level = 8) : max_level_(max_level) {}

    const MomentTable& table(int level);

    // E(u^P ubar^Q); exactly zero when the weights differ (rotation
    // invariance), otherwise a table lookup at the common weight.
    Rational moment(const Partition& p, const Partition& q);

    // Equations for one level, lower levels already substituted.
    EquationSystem assemble_level(int level);

    // Solve from a (possibly reordered) equation list.
    MomentTable solve_system(const EquationSystem& sys);
    MomentTable solve_level_shuffled(int level, unsigned seed);

    struct Identity {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Identity> verify_identities(int n_max);

    int max_level() const { return max_level_; }

private:
    int max_level_;
    std::vector<MomentTable> tables_;
};

// The factored forms of the two generating derivations, as exact
// element-level identities:
//   Lbar_{-1}(rho0 u^P ubar^Q') = u^P R1(ubar^Q') + N1(u^P) ubar^Q'
//   Lbar_{-2}(rho0^2 u^P ubar^Q'') = u^P R2(ubar^Q'') + N2(u^P) ubar^Q''
//                                    - 3 N1(u^P) ubar_1 ubar^Q''
// Checked for every (P, Q) pair at the given level.
bool assembly_routes_consistent(int level, std::string* detail = nullptr);

// FNV-1a over a string; used to compare solver outputs byte-for-byte.
uint64_t fnv1a(const std::string& s);

} // namespace welding
