#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cqs/cf.hpp"
#include "cqs/delta.hpp"
#include "cqs/errors.hpp"
#include "cqs/generators.hpp"
#include "cqs/hcycles.hpp"
#include "cqs/jets.hpp"
#include "cqs/resolution.hpp"
#include "cqs/sweep.hpp"
#include "cqs/toric.hpp"

using json = nlohmann::ordered_json;
using namespace cqs;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Output {
    std::string text;
    json doc;
};

json base_doc(const std::string& command) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    return doc;
}

json int_list(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(x.str());
    return arr;
}

std::string tuple_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + ")";
}

std::vector<Int> parse_config(const std::string& text, int s) {
    std::vector<Int> r;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InvalidInput("config: empty entry");
        for (size_t i = 0; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw InvalidInput("config: entries must be nonnegative integers");
        }
        r.emplace_back(tok.c_str());
    }
    if (static_cast<int>(r.size()) != s)
        throw InvalidInput("config: expected " + std::to_string(s) + " entries");
    return r;
}

/// "v:c,v:c,..." with c a Gaussian rational (integers as shorthand).
std::vector<std::pair<int, GaussRat>> parse_cuts(const std::string& text) {
    std::vector<std::pair<int, GaussRat>> cuts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t colon = tok.find(':');
        if (colon == std::string::npos) throw InvalidInput("cuts: expected v:c entries");
        int v = 0;
        try {
            v = std::stoi(tok.substr(0, colon));
        } catch (const std::exception&) {
            throw InvalidInput("cuts: bad vertex index");
        }
        cuts.emplace_back(v, parse_gauss(tok.substr(colon + 1)));
    }
    if (cuts.empty()) throw InvalidInput("cuts: empty list");
    return cuts;
}

std::string render_matrix(const GaussMat& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<size_t> width(m.cols(), 0);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            cells[i][j] = to_string(m(i, j));
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::ostringstream os;
    for (long i = 0; i < m.rows(); ++i) {
        os << " ";
        for (long j = 0; j < m.cols(); ++j) {
            os << " " << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
        }
        os << "\n";
    }
    return os.str();
}

json matrix_doc(const GaussMat& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Output run_resolve(const CyclicType& t) {
    ResolutionGraph g = build_graph(t);
    HJExpansion e = hj_expand(t);
    HJExpansion dual = hj_expand(CyclicType(t.n, t.n - t.q));
    IntVec zmin = fundamental_cycle(g);
    auto [mult, embdim] = mult_and_embdim(g);

    std::vector<Int> zv(zmin.data(), zmin.data() + zmin.size());
    std::vector<Int> val;
    for (int v : g.val) val.emplace_back(v);

    auto bracket_str = [](const std::vector<Int>& v) {
        std::string out = "[";
        for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
        return out + "]";
    };
    std::ostringstream os;
    os << "X(" << t.n << "," << t.q << ")\n";
    os << "n/q = " << bracket_str(e.entries) << "\n";
    os << "val = " << tuple_str(val) << "\n";
    os << "det(-I) = " << t.n << "\n";
    os << "Z_min = " << tuple_str(zv) << "\n";
    os << "mult = " << mult << "\n";
    os << "embdim = " << embdim << "\n";
    os << "n/(n-q) = " << bracket_str(dual.entries) << "\n";

    json doc = base_doc("resolve");
    doc["n"] = t.n.str();
    doc["q"] = t.q.str();
    doc["chain"] = int_list(e.entries);
    doc["valencies"] = int_list(val);
    doc["det"] = t.n.str();
    doc["z_min"] = int_list(zv);
    doc["mult"] = mult.str();
    doc["embdim"] = embdim.str();
    doc["dual_expansion"] = int_list(dual.entries);
    return {os.str(), doc};
}

Output run_generators(const CyclicType& t, bool diagram) {
    GeneratorTable tab = generator_table(t);
    std::string text = diagram ? riemenschneider_diagram(tab) : render_table(tab);

    json doc = base_doc("generators");
    doc["n"] = t.n.str();
    doc["q"] = t.q.str();
    json rows = json::array();
    for (size_t j = 0; j < tab.rows.size(); ++j) {
        json row;
        row["monomial"] = monomial_name(tab, static_cast<int>(j));
        row["multiplicities"] = int_list(tab.rows[j]);
        rows.push_back(row);
    }
    doc["rows"] = rows;
    doc["dual_expansion"] = int_list(dual_expansion_from_zigzag(tab).entries);
    return {text, doc};
}

Output run_sh(const CyclicType& t, long h) {
    std::vector<ShTuple> seq = sh_sequence(t);
    std::ostringstream os;
    json doc = base_doc("sh");
    doc["n"] = t.n.str();
    doc["q"] = t.q.str();
    json tuples = json::array();
    for (const ShTuple& tup : seq) {
        if (h >= 0 && tup.h != h) continue;
        os << "s_" << tup.h << " = " << tuple_str(tup.a) << "\n";
        json jt;
        jt["h"] = tup.h.str();
        jt["a"] = int_list(tup.a);
        tuples.push_back(jt);
    }
    if (h >= 0 && tuples.empty()) throw InvalidInput("sh: class out of range");
    doc["tuples"] = tuples;
    return {os.str(), doc};
}

Output run_check(const CyclicType& t, const std::string& config, const std::string& verify,
                 std::uint64_t seed, bool& disagreement) {
    GeneratorTable tab = generator_table(t);
    CutConfiguration bare{parse_config(config, tab.graph.s()), std::nullopt};
    Verdict verdict = check_inequality(tab.graph, bare);
    Int total = bare.total();
    bool want_rank = verify == "rank" || verify == "all";
    bool want_delta = verify == "delta" || verify == "all";

    std::ostringstream os;
    os << "X(" << t.n << "," << t.q << ") r = " << tuple_str(bare.r) << "\n";
    os << "inequality: " << (verdict.pass ? "PASS" : "FAIL");
    if (verdict.witness)
        os << " [" << verdict.witness->v1 << "," << verdict.witness->v2 << "]";
    os << "\n";

    json doc = base_doc("check");
    doc["n"] = t.n.str();
    doc["q"] = t.q.str();
    doc["r"] = int_list(bare.r);
    doc["inequality"] = verdict.pass ? "PASS" : "FAIL";
    if (verdict.witness) doc["witness"] = {verdict.witness->v1, verdict.witness->v2};

    disagreement = false;
    if (want_rank || want_delta) {
        CutConfiguration cfg = sample_positions(bare, seed);
        os << "positions (seed " << seed << "):";
        json jpos = json::array();
        for (int v = 0; v < tab.graph.s(); ++v) {
            for (const GaussRat& c : (*cfg.positions)[v]) {
                os << " " << (v + 1) << ":" << to_string(c);
                jpos.push_back({{"vertex", v + 1}, {"c", to_string(c)}});
            }
        }
        os << "\n";
        doc["seed"] = seed;
        doc["positions"] = jpos;

        if (want_rank) {
            GaussMat m = tangent_matrix(tab, cfg);
            int rank = tangent_rank(m);
            bool full = Int(rank) == total;
            os << "tangent matrix:\n" << render_matrix(m);
            os << "rank = " << rank << " of " << total << (full ? " (full)" : " (not full)")
               << "\n";
            doc["tangent_matrix"] = matrix_doc(m);
            doc["rank"] = rank;
            doc["rank_full"] = full;
            if (full != verdict.pass) disagreement = true;
        }
        if (want_delta) {
            if (total == 0) {
                os << "delta: skipped (no discs)\n";
                doc["delta"] = nullptr;
            } else {
                long d = delta(branches_from_config(tab, cfg));
                bool ordinary = Int(d) == total - 1;
                os << "delta = " << d << " (ordinary iff " << (total - 1) << ")"
                   << (ordinary ? " -> ordinary" : " -> not ordinary") << "\n";
                doc["delta"] = d;
                doc["delta_ordinary"] = ordinary;
                if (ordinary != verdict.pass) disagreement = true;
            }
        }
        os << "layers agree: " << (disagreement ? "NO -- CROSS-LAYER DISAGREEMENT" : "yes")
           << "\n";
        doc["layers_agree"] = !disagreement;
    }
    return {os.str(), doc};
}

Output run_enumerate(const CyclicType& t, bool maximal, long max_r_arg) {
    ResolutionGraph g = build_graph(t);
    Int max_r = max_r_arg >= 0 ? Int(max_r_arg) : mult_and_embdim(g).second;
    std::vector<CutConfiguration> configs = enumerate_admissible(g, max_r, maximal);

    std::ostringstream os;
    json doc = base_doc("enumerate");
    doc["n"] = t.n.str();
    doc["q"] = t.q.str();
    doc["maximal"] = maximal;
    doc["max_r"] = max_r.str();
    json list = json::array();
    for (const CutConfiguration& cfg : configs) {
        os << tuple_str(cfg.r) << "\n";
        list.push_back(int_list(cfg.r));
    }
    os << configs.size() << " configuration" << (configs.size() == 1 ? "" : "s") << "\n";
    doc["configurations"] = list;
    doc["count"] = configs.size();
    return {os.str(), doc};
}

Output run_delta_cmd(const CyclicType* t, const std::string& cuts_arg,
                     const std::vector<std::string>& branch_args, long order_cap) {
    std::vector<BranchParam> branches;
    std::vector<std::string> labels;
    if (!cuts_arg.empty()) {
        if (t == nullptr) throw InvalidInput("delta: --cuts requires n and q");
        GeneratorTable tab = generator_table(*t);
        for (const auto& [v, c] : parse_cuts(cuts_arg)) {
            branches.push_back(branch_from_cut(tab, v, c));
            labels.push_back("E" + std::to_string(v) + "@" + to_string(c));
        }
    }
    for (size_t i = 0; i < branch_args.size(); ++i) {
        BranchParam b;
        std::stringstream ss(branch_args[i]);
        std::string coord;
        while (std::getline(ss, coord, ';')) b.coords.push_back(parse_jet(coord));
        if (order_cap >= 0) b.order_cap = static_cast<int>(order_cap);
        branches.push_back(std::move(b));
        labels.push_back("branch " + std::to_string(i + 1));
    }
    if (branches.empty()) throw InvalidInput("delta: no branches given");

    long d = delta(branches);
    std::ostringstream os;
    os << "delta = " << d << "\n";
    json doc = base_doc("delta");
    doc["branches"] = labels;
    doc["delta"] = d;
    json pairs = json::array();
    for (size_t i = 0; i < branches.size(); ++i) {
        for (size_t j = i + 1; j < branches.size(); ++j) {
            long hir = hironaka_intersection({branches[i]}, {branches[j]});
            os << "Hironaka(" << labels[i] << ", " << labels[j] << ") = " << hir << "\n";
            pairs.push_back({{"first", labels[i]}, {"second", labels[j]}, {"hironaka", hir}});
        }
    }
    doc["pairwise_hironaka"] = pairs;
    return {os.str(), doc};
}

Output run_xcheck(long max_n, long max_r, std::uint64_t seed, bool& disagreement) {
    SweepReport rep = keystone_sweep(Int(max_n), Int(max_r), {seed}, true);
    disagreement = !rep.disagreements.empty();
    json doc = base_doc("xcheck");
    doc["max_n"] = max_n;
    doc["max_r"] = max_r;
    doc["seed"] = seed;
    doc["cases"] = rep.cases;
    json list = json::array();
    for (const SweepDisagreement& d : rep.disagreements) {
        json jd;
        jd["n"] = d.type.n.str();
        jd["q"] = d.type.q.str();
        jd["r"] = int_list(d.r);
        jd["assignment"] = d.assignment;
        json jpos = json::array();
        for (size_t v = 0; v < d.positions.size(); ++v) {
            for (const GaussRat& c : d.positions[v])
                jpos.push_back({{"vertex", v + 1}, {"c", to_string(c)}});
        }
        jd["positions"] = jpos;
        jd["inequality"] = d.inequality_pass ? "PASS" : "FAIL";
        jd["rank_full"] = d.rank_full;
        jd["delta_ordinary"] = d.delta_ordinary;
        list.push_back(jd);
    }
    doc["disagreements"] = list;
    return {render_report(rep), doc};
}

void emit(const Output& out, bool as_json, const std::string& out_path) {
    std::string payload = as_json ? out.doc.dump(2) + "\n" : out.text;
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInput("cannot open output file " + out_path);
        f << payload;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact resolution data, invariant generators, and curve-germ "
                 "verdicts for cyclic quotient surface singularities X(n,q)"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    long n = 0, q = 0;
    auto add_nq = [&](CLI::App* cmd) {
        cmd->add_option("n", n, "order of the cyclic group")->required();
        cmd->add_option("q", q, "weight, coprime to n, 0 < q < n")->required();
    };

    CLI::App* c_resolve = app.add_subcommand("resolve", "resolution graph data");
    add_nq(c_resolve);

    bool diagram = false;
    CLI::App* c_gen = app.add_subcommand("generators", "invariant-monomial generator table");
    add_nq(c_gen);
    c_gen->add_flag("--diagram", diagram, "prepend the point-diagram staircase");

    long sh_h = -1;
    CLI::App* c_sh = app.add_subcommand("sh", "minimal Lipman-cone representatives s_h");
    add_nq(c_sh);
    c_sh->add_option("class", sh_h, "print only the tuple of this class");

    std::string config, verify = "none";
    std::uint64_t seed = 1;
    CLI::App* c_check = app.add_subcommand("check", "decide a cut configuration");
    add_nq(c_check);
    c_check->add_option("--config", config, "comma-separated r_1,...,r_s")->required();
    c_check->add_option("--verify", verify, "none|rank|delta|all")
        ->check(CLI::IsMember({"none", "rank", "delta", "all"}));
    c_check->add_option("--seed", seed, "position sampling seed");

    bool maximal = false;
    long max_r = -1;
    CLI::App* c_enum = app.add_subcommand("enumerate", "admissible configurations");
    add_nq(c_enum);
    c_enum->add_flag("--maximal", maximal, "only maximal configurations");
    c_enum->add_option("--max-r", max_r, "total disc bound (default: embdim)");

    std::string cuts;
    std::vector<std::string> branch_args;
    long order_cap = -1;
    CLI::App* c_delta = app.add_subcommand("delta", "delta invariant of a branch union");
    c_delta->add_option("n", n, "order of the cyclic group");
    c_delta->add_option("q", q, "weight, coprime to n, 0 < q < n");
    c_delta->add_option("--cuts", cuts, "comma-separated v:c transversal cuts");
    c_delta->add_option("--branch", branch_args,
                        "raw branch: coordinate polynomials in t separated by ';'");
    c_delta->add_option("--order-cap", order_cap,
                        "truncation order beyond which raw branches are unknown");

    long x_max_n = 8, x_max_r = 3;
    std::uint64_t x_seed = 1;
    CLI::App* c_xcheck = app.add_subcommand("xcheck", "keystone equivalence sweep");
    c_xcheck->add_option("--max-n", x_max_n, "sweep all coprime (n,q) with n <= this");
    c_xcheck->add_option("--max-r", x_max_r, "total disc bound per configuration");
    c_xcheck->add_option("--seed", x_seed, "position sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Output out;
        bool disagreement = false;
        if (*c_resolve) {
            out = run_resolve(CyclicType(Int(n), Int(q)));
        } else if (*c_gen) {
            out = run_generators(CyclicType(Int(n), Int(q)), diagram);
        } else if (*c_sh) {
            out = run_sh(CyclicType(Int(n), Int(q)), sh_h);
        } else if (*c_check) {
            out = run_check(CyclicType(Int(n), Int(q)), config, verify, seed, disagreement);
        } else if (*c_enum) {
            out = run_enumerate(CyclicType(Int(n), Int(q)), maximal, max_r);
        } else if (*c_delta) {
            std::optional<CyclicType> t;
            if (n != 0) t.emplace(Int(n), Int(q));
            out = run_delta_cmd(t ? &*t : nullptr, cuts, branch_args, order_cap);
        } else if (*c_xcheck) {
            out = run_xcheck(x_max_n, x_max_r, x_seed, disagreement);
        }
        emit(out, as_json, out_path);
        return disagreement ? 3 : 0;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const InconclusiveTruncation& e) {
        std::cerr << "inconclusive truncation: " << e.what() << "\n";
        return 3;
    }
}
