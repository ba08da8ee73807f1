#include "cqs/sweep.hpp"

#include <sstream>

#include "cqs/delta.hpp"
#include "cqs/errors.hpp"

namespace cqs {

namespace {

/// All r-vectors of length s with 1 <= sum <= max_r, lexicographic.
std::vector<std::vector<Int>> all_configs(int s, const Int& max_r) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> r(s, Int(0));
    auto rec = [&](auto&& self, int v, const Int& used) -> void {
        if (v == s) {
            if (used > 0) out.push_back(r);
            return;
        }
        for (Int c = 0; used + c <= max_r; ++c) {
            r[v] = c;
            self(self, v + 1, used + c);
        }
        r[v] = 0;
    };
    rec(rec, 0, Int(0));
    return out;
}

}  // namespace

SweepReport keystone_sweep(const Int& max_n, const Int& max_r,
                           const std::vector<std::uint64_t>& seeds, bool adversarial) {
    if (max_n < 2) throw InvalidInput("keystone_sweep: max_n below 2");
    if (max_r < 1) throw InvalidInput("keystone_sweep: max_r below 1");
    SweepReport rep;
    for (Int n = 2; n <= max_n; ++n) {
        for (Int q = 1; q < n; ++q) {
            if (gcd(n, q) != 1) continue;
            CyclicType type(n, q);
            GeneratorTable tab = generator_table(type);
            const int s = tab.graph.s();
            for (const std::vector<Int>& r : all_configs(s, max_r)) {
                CutConfiguration bare{r, std::nullopt};
                bool pass = check_inequality(tab.graph, bare).pass;
                Int total = bare.total();

                std::vector<std::pair<std::string, CutConfiguration>> assignments;
                for (std::uint64_t seed : seeds) {
                    assignments.emplace_back("seed " + std::to_string(seed),
                                             sample_positions(bare, seed));
                }
                if (adversarial)
                    assignments.emplace_back("adversarial", adversarial_positions(bare));

                for (const auto& [label, cfg] : assignments) {
                    bool rank_full =
                        Int(tangent_rank(tangent_matrix(tab, cfg))) == total;
                    bool ordinary = is_ordinary_tuple(branches_from_config(tab, cfg));
                    ++rep.cases;
                    if (pass != rank_full || pass != ordinary) {
                        rep.disagreements.push_back(SweepDisagreement{
                            type, r, *cfg.positions, label, pass, rank_full, ordinary});
                    }
                }
            }
        }
    }
    return rep;
}

std::string render_report(const SweepReport& rep) {
    std::ostringstream os;
    os << rep.cases << " cases, " << rep.disagreements.size() << " disagreements\n";
    for (const SweepDisagreement& d : rep.disagreements) {
        os << "DISAGREE n=" << d.type.n << " q=" << d.type.q << " r=";
        for (size_t v = 0; v < d.r.size(); ++v) os << (v ? "," : "") << d.r[v].str();
        os << " [" << d.assignment << "] positions=";
        bool first = true;
        for (size_t v = 0; v < d.positions.size(); ++v) {
            for (const GaussRat& c : d.positions[v]) {
                os << (first ? "" : ";") << (v + 1) << ":" << to_string(c);
                first = false;
            }
        }
        os << " inequality=" << (d.inequality_pass ? "PASS" : "FAIL")
           << " rank_full=" << (d.rank_full ? "yes" : "no")
           << " delta_ordinary=" << (d.delta_ordinary ? "yes" : "no") << "\n";
    }
    return os.str();
}

}  // namespace cqs
