#include "welding/moments.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace welding {

namespace {

Partition partition_of(const Monomial& m, Family f) {
    Partition p;
    const auto& exps = m.gen[static_cast<int>(f)];
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
        for (int c = 0; c < it->second; ++c) p.parts.push_back(it->first);
    return p;
}

} // namespace

const Rational& MomentTable::at(const Partition& p, const Partition& q) const {
    auto it = entries.find({p, q});
    if (it == entries.end())
        throw std::out_of_range("moment table " + std::to_string(level) + " has no entry " +
                                p.str() + "|" + q.str());
    return it->second;
}

std::string MomentTable::to_json(bool with_provenance) const {
    std::ostringstream os;
    os << "{\"schema\":\"moments-v1\",\"level\":" << level << ",\"moments\":{";
    bool first = true;
    for (const auto& [key, val] : entries) {
        if (!first) os << ",";
        first = false;
        os << "\"" << key.first.str() << "|" << key.second.str() << "\":\"" << to_string(val)
           << "\"";
    }
    os << "}";
    if (with_provenance) {
        os << ",\"provenance\":{";
        first = true;
        for (const auto& [key, eqs] : provenance) {
            if (!first) os << ",";
            first = false;
            os << "\"" << key.first.str() << "|" << key.second.str() << "\":[";
            for (size_t i = 0; i < eqs.size(); ++i) {
                if (i) os << ",";
                os << "\"" << eqs[i] << "\"";
            }
            os << "]";
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

std::string MomentTable::to_csv() const {
    std::ostringstream os;
    os << "P,Q,value\n";
    for (const auto& [key, val] : entries)
        os << key.first.str() << "," << key.second.str() << "," << to_string(val) << "\n";
    return os.str();
}

EquationSystem MomentEngine::assemble_level(int level) {
    if (level < 1) throw std::invalid_argument("assemble_level: level >= 1");
    for (int l = 0; l < level; ++l) table(l); // lower levels must be solved

    EquationSystem sys;
    sys.level = level;
    const auto pn = enumerate_partitions(level);
    for (const auto& p : pn)
        for (const auto& q : pn) sys.unknowns.emplace_back(p, q);

    auto add_equation = [&](const std::string& id, const AlgebraElement& x) {
        EquationSystem::Equation eq;
        eq.id = id;
        for (const auto& [mono, coeff] : x.terms()) {
            if (mono.r0c || mono.r0d || mono.ric || mono.rid)
                throw std::logic_error("moment equation not rho-free: " + id);
            if (!coeff.is_constant())
                throw std::logic_error("moment equation carries lambda: " + id);
            const Rational c = coeff.constant();
            const int wu = mono.weight(Family::u);
            const int wb = mono.weight(Family::ubar);
            if (wu != wb) continue; // rotation invariance kills E of this term
            const Partition p = partition_of(mono, Family::u);
            const Partition q = partition_of(mono, Family::ubar);
            if (wu == level) {
                eq.lhs[{p, q}] += c;
                if (eq.lhs[{p, q}] == 0) eq.lhs.erase({p, q});
            } else {
                eq.rhs -= c * tables_[wu].at(p, q);
            }
        }
        sys.equations.push_back(std::move(eq));
    };

    const AlgebraElement rho0 = AlgebraElement::rho0_power(1);
    const AlgebraElement rho0sq = AlgebraElement::rho0_power(2);
    for (const auto& p : pn) {
        const AlgebraElement up = AlgebraElement::from_partition(Family::u, p);
        for (const auto& q1 : enumerate_partitions(level - 1)) {
            const AlgebraElement x =
                apply_Lbar(-1, rho0 * up * AlgebraElement::from_partition(Family::ubar, q1));
            add_equation("Lbar1:" + p.str() + "|" + q1.str(), x);
        }
        if (level >= 2)
            for (const auto& q2 : enumerate_partitions(level - 2)) {
                const AlgebraElement x =
                    apply_Lbar(-2, rho0sq * up * AlgebraElement::from_partition(Family::ubar, q2));
                add_equation("Lbar2:" + p.str() + "|" + q2.str(), x);
            }
    }
    // conjugate-role equations: u and ubar swapped
    for (const auto& q : pn) {
        const AlgebraElement ubq = AlgebraElement::from_partition(Family::ubar, q);
        for (const auto& p1 : enumerate_partitions(level - 1)) {
            const AlgebraElement x =
                apply_L(-1, rho0 * AlgebraElement::from_partition(Family::u, p1) * ubq);
            add_equation("L1:" + p1.str() + "|" + q.str(), x);
        }
        if (level >= 2)
            for (const auto& p2 : enumerate_partitions(level - 2)) {
                const AlgebraElement x =
                    apply_L(-2, rho0sq * AlgebraElement::from_partition(Family::u, p2) * ubq);
                add_equation("L2:" + p2.str() + "|" + q.str(), x);
            }
    }
    return sys;
}

MomentTable MomentEngine::solve_system(const EquationSystem& sys) {
    std::map<std::pair<Partition, Partition>, int> col;
    for (size_t i = 0; i < sys.unknowns.size(); ++i)
        col[sys.unknowns[i]] = static_cast<int>(i);

    RationalMatrix a(static_cast<int>(sys.equations.size()), static_cast<int>(sys.unknowns.size()));
    std::vector<Rational> b(sys.equations.size());
    for (size_t r = 0; r < sys.equations.size(); ++r) {
        for (const auto& [key, c] : sys.equations[r].lhs) a.at(static_cast<int>(r), col.at(key)) = c;
        b[r] = sys.equations[r].rhs;
    }
    const std::vector<Rational> x = solve_exact(a, b);

    MomentTable t;
    t.level = sys.level;
    for (size_t i = 0; i < sys.unknowns.size(); ++i) t.entries[sys.unknowns[i]] = x[i];
    for (const auto& eq : sys.equations) {
        t.equation_ids.push_back(eq.id);
        for (const auto& [key, c] : eq.lhs) t.provenance[key].push_back(eq.id);
    }
    // symmetry is a consequence, not an assumption; a failure here means an
    // assembly or formula bug
    for (const auto& [key, val] : t.entries) {
        const auto sym = t.entries.find({key.second, key.first});
        if (sym == t.entries.end() || sym->second != val)
            throw std::logic_error("moment table asymmetric at " + key.first.str() + "|" +
                                   key.second.str());
    }
    return t;
}

const MomentTable& MomentEngine::table(int level) {
    if (level < 0) throw std::invalid_argument("negative level");
    if (level > max_level_)
        throw std::invalid_argument("level " + std::to_string(level) + " above configured cap " +
                                    std::to_string(max_level_));
    if (static_cast<int>(tables_.size()) > level) return tables_[level];
    if (level == 0) {
        MomentTable t0;
        t0.level = 0;
        t0.entries[{Partition{}, Partition{}}] = 1; // unit mass
        tables_.push_back(std::move(t0));
        return tables_[0];
    }
    table(level - 1);
    tables_.push_back(solve_system(assemble_level(level)));
    return tables_[level];
}

Rational MomentEngine::moment(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight()) return 0;
    return table(p.weight()).at(p, q);
}

MomentTable MomentEngine::solve_level_shuffled(int level, unsigned seed) {
    EquationSystem sys = assemble_level(level);
    std::mt19937 rng(seed);
    std::shuffle(sys.equations.begin(), sys.equations.end(), rng);
    return solve_system(sys);
}

std::vector<MomentEngine::Identity> MomentEngine::verify_identities(int n_max) {
    std::vector<Identity> out;
    for (int n = 1; n <= n_max; ++n) {
        const Rational want(1, n + 1);
        const Partition single{{n}};
        for (const auto& p : enumerate_partitions(n)) {
            const Rational got = moment(p, single);
            Identity id;
            id.name = "E(u^{" + p.str() + "} ubar_{" + std::to_string(n) + "}) = 1/" +
                      std::to_string(n + 1);
            id.pass = (got == want);
            id.detail = to_string(got);
            out.push_back(std::move(id));
        }
        // table symmetry
        bool sym = true;
        const auto& t = table(n);
        for (const auto& [key, val] : t.entries)
            if (t.at(key.second, key.first) != val) sym = false;
        out.push_back({"level " + std::to_string(n) + " table symmetric", sym, ""});
    }
    return out;
}

bool assembly_routes_consistent(int level, std::string* detail) {
    const AlgebraElement rho0 = AlgebraElement::rho0_power(1);
    const AlgebraElement rho0sq = AlgebraElement::rho0_power(2);
    const AlgebraElement ub1 = AlgebraElement::generator(Family::ubar, 1);
    for (const auto& p : enumerate_partitions(level)) {
        const AlgebraElement up = AlgebraElement::from_partition(Family::u, p);
        for (const auto& q1 : enumerate_partitions(level - 1)) {
            const AlgebraElement ubq = AlgebraElement::from_partition(Family::ubar, q1);
            const AlgebraElement leibniz = apply_Lbar(-1, rho0 * up * ubq);
            const AlgebraElement factored = up * apply_R1(ubq) + apply_N1(up) * ubq;
            if (!(leibniz == factored)) {
                if (detail)
                    *detail = "Lbar_{-1} routes differ at " + p.str() + "|" + q1.str();
                return false;
            }
        }
        if (level < 2) continue;
        for (const auto& q2 : enumerate_partitions(level - 2)) {
            const AlgebraElement ubq = AlgebraElement::from_partition(Family::ubar, q2);
            const AlgebraElement leibniz = apply_Lbar(-2, rho0sq * up * ubq);
            const AlgebraElement factored =
                up * apply_R2(ubq) + apply_N2(up) * ubq - Rational(3) * (apply_N1(up) * (ub1 * ubq));
            if (!(leibniz == factored)) {
                if (detail)
                    *detail = "Lbar_{-2} routes differ at " + p.str() + "|" + q2.str();
                return false;
            }
        }
    }
    return true;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace welding
