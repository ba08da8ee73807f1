#include "cqs/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cqs/errors.hpp"

namespace cqs {

namespace {

void check_entry(const ResolutionGraph& g, const MultiplicitySystem& m, int idx) {
    const int s = g.s();
    if (idx >= 1 && idx <= s) {
        if (m[idx] < 1) throw InvalidInput("complete: interior multiplicity below 1");
    } else {
        if (m[idx] < 0) throw InvalidInput("complete: end multiplicity below 0");
    }
}

}  // namespace

void complete_right(const ResolutionGraph& g, MultiplicitySystem& m, int w) {
    const int s = g.s();
    if (static_cast<int>(m.size()) != s + 2)
        throw InvalidInput("complete_right: system length != s+2");
    if (w < 0 || w > s) throw InvalidInput("complete_right: pair index out of range");
    for (int v = w + 1; v <= s; ++v) {
        m[v + 1] = g.k[v - 1] * m[v] - m[v - 1];
        check_entry(g, m, v + 1);
    }
}

void complete_left(const ResolutionGraph& g, MultiplicitySystem& m, int w) {
    const int s = g.s();
    if (static_cast<int>(m.size()) != s + 2)
        throw InvalidInput("complete_left: system length != s+2");
    if (w < 0 || w > s) throw InvalidInput("complete_left: pair index out of range");
    for (int v = w; v >= 1; --v) {
        m[v - 1] = g.k[v - 1] * m[v] - m[v + 1];
        check_entry(g, m, v - 1);
    }
}

MultiplicitySystem system_through(const ResolutionGraph& g, int u, const Int& left_of_u) {
    const int s = g.s();
    if (u < 1 || u > s) throw InvalidInput("system_through: vertex out of range");
    MultiplicitySystem m(s + 2, Int(0));
    m[u] = 1;
    m[u - 1] = left_of_u;
    check_entry(g, m, u - 1);
    complete_right(g, m, u - 1);
    complete_left(g, m, u - 1);
    return m;
}

namespace {

void verify_table(const GeneratorTable& tab) {
    const ResolutionGraph& g = tab.graph;
    const int s = g.s();
    const int t2 = static_cast<int>(tab.rows.size());
    Int expected = mult_and_embdim(g).second;
    if (Int(t2) != expected)
        throw VerificationFailure("generator_table: row count != embdim");
    for (int j = 1; j < t2; ++j) {
        if (!(tab.rows[j - 1][0] < tab.rows[j][0]))
            throw VerificationFailure("generator_table: m_0 not strictly increasing");
    }
    // Zigzag: every column's 1-entries form a contiguous block of size
    // k_v - val_v + 1, and consecutive blocks overlap in exactly one row.
    int prev_last = -1;
    for (int v = 1; v <= s; ++v) {
        int first = -1, last = -1;
        for (int j = 0; j < t2; ++j) {
            if (tab.rows[j][v] == 1) {
                if (first < 0) first = j;
                last = j;
            }
        }
        if (first < 0) throw VerificationFailure("generator_table: column without 1-entry");
        for (int j = first; j <= last; ++j) {
            if (tab.rows[j][v] != 1)
                throw VerificationFailure("generator_table: 1-block not contiguous");
        }
        Int block = g.k[v - 1] - g.val[v - 1] + 1;
        if (Int(last - first + 1) != block)
            throw VerificationFailure("generator_table: 1-block size != k_v - val_v + 1");
        if (v > 1 && first != prev_last)
            throw VerificationFailure("generator_table: consecutive blocks overlap != 1 row");
        prev_last = last;
    }
    for (const auto& row : tab.rows) {
        bool has_one = false;
        for (int v = 1; v <= s; ++v) has_one = has_one || row[v] == 1;
        if (!has_one) throw VerificationFailure("generator_table: row without 1-entry");
    }
}

}  // namespace

GeneratorTable generator_table(const CyclicType& t) {
    ResolutionGraph g = build_graph(t);
    const int s = g.s();
    std::set<MultiplicitySystem> seen;
    std::vector<MultiplicitySystem> rows;
    auto add = [&](MultiplicitySystem m) {
        if (seen.insert(m).second) rows.push_back(std::move(m));
    };
    if (s == 1) {
        // Single vertex: both end ranges collapse into m_0 = 0..k_1.
        for (Int a = 0; a <= g.k[0]; ++a) add({a, Int(1), g.k[0] - a});
    } else {
        for (Int a = 0; a < g.k[0]; ++a) add(system_through(g, 1, a));
        for (int u = 2; u < s; ++u) {
            for (Int a = 1; a < g.k[u - 1]; ++a) add(system_through(g, u, a));
        }
        for (Int a = 1; a <= g.k[s - 1]; ++a) add(system_through(g, s, a));
    }
    std::sort(rows.begin(), rows.end(),
              [](const MultiplicitySystem& a, const MultiplicitySystem& b) {
                  return a[0] < b[0];
              });
    GeneratorTable tab{std::move(g), std::move(rows)};
    verify_table(tab);
    return tab;
}

int dim_count(const GeneratorTable& tab, int u) {
    const ResolutionGraph& g = tab.graph;
    if (u < 1 || u > g.s()) throw InvalidInput("dim_count: vertex out of range");
    int count = 0;
    for (const auto& row : tab.rows) {
        if (row[u] == 1) ++count;
    }
    if (Int(count) != g.k[u - 1] - g.val[u - 1] + 1)
        throw VerificationFailure("dim_count: count != k_u - val_u + 1");
    return count;
}

HJExpansion dual_expansion_from_zigzag(const GeneratorTable& tab) {
    const int s = tab.graph.s();
    std::vector<Int> d;
    for (int j = 1; j <= tab.t(); ++j) {
        Int ones(0);
        for (int v = 1; v <= s; ++v) {
            if (tab.rows[j][v] == 1) ++ones;
        }
        d.push_back(ones + 1);
    }
    HJExpansion result(std::move(d));
    const CyclicType& t = tab.graph.type;
    HJExpansion expect = hj_expand(CyclicType(t.n, t.n - t.q));
    if (result.entries != expect.entries)
        throw VerificationFailure("dual_expansion_from_zigzag: mismatch with hj_expand(n, n-q)");
    return result;
}

bool dual_recursion_check(const GeneratorTable& tab) {
    HJExpansion d = dual_expansion_from_zigzag(tab);
    const int s = tab.graph.s();
    for (int j = 1; j <= tab.t(); ++j) {
        for (int v = 0; v <= s + 1; ++v) {
            if (tab.rows[j - 1][v] - d.entries[j - 1] * tab.rows[j][v] + tab.rows[j + 1][v] != 0)
                return false;
        }
    }
    return true;
}

bool equation_exponent_check(const GeneratorTable& tab, int j, int k) {
    if (j < 1 || k > tab.t() || j > k)
        throw InvalidInput("equation_exponent_check: need 1 <= j <= k <= t");
    HJExpansion d = dual_expansion_from_zigzag(tab);
    const int s = tab.graph.s();
    for (int v = 0; v <= s + 1; ++v) {
        Int lhs = tab.rows[j - 1][v] + tab.rows[k + 1][v];
        Int rhs;
        if (j == k) {
            rhs = d.entries[j - 1] * tab.rows[j][v];
        } else {
            rhs = (d.entries[j - 1] - 1) * tab.rows[j][v] +
                  (d.entries[k - 1] - 1) * tab.rows[k][v];
            for (int l = j + 1; l < k; ++l) rhs += (d.entries[l - 1] - 2) * tab.rows[l][v];
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool xy_identity_check(const GeneratorTable& tab) {
    const CyclicType& t = tab.graph.type;
    const int s = tab.graph.s();
    const int last = tab.t() + 1;
    for (int v = 0; v <= s + 1; ++v) {
        if (tab.rows[last][v] + (t.n - t.q) * tab.rows[0][v] != t.n * tab.rows[1][v])
            return false;
    }
    return true;
}

std::string monomial_name(const GeneratorTable& tab, int j) {
    if (j < 0 || j >= static_cast<int>(tab.rows.size()))
        throw InvalidInput("monomial_name: row index out of range");
    const MultiplicitySystem& row = tab.rows[j];
    const Int& n1 = row[tab.graph.s() + 1];  // exponent of z1
    const Int& n2 = row[0];                  // exponent of z2
    std::string out;
    if (n1 > 0) {
        out += "z1";
        if (n1 > 1) out += "^" + n1.str();
    }
    if (n2 > 0) {
        if (!out.empty()) out += "*";
        out += "z2";
        if (n2 > 1) out += "^" + n2.str();
    }
    if (out.empty()) out = "1";
    return out;
}

namespace {

std::string pad_left(const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

std::string pad_right(const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

std::string cell(const Int& m, bool emphasize) {
    std::string body = m.str();
    return emphasize ? "[" + body + "]" : body;
}

}  // namespace

std::string render_table(const GeneratorTable& tab) {
    const int s = tab.graph.s();
    const int rows = static_cast<int>(tab.rows.size());

    std::vector<std::string> names(rows);
    std::vector<std::string> left(rows), right(rows);
    std::vector<std::vector<std::string>> mid(rows, std::vector<std::string>(s));
    for (int j = 0; j < rows; ++j) {
        names[j] = monomial_name(tab, j);
        left[j] = tab.rows[j][0].str();
        right[j] = tab.rows[j][s + 1].str();
        for (int v = 1; v <= s; ++v) {
            mid[j][v - 1] = cell(tab.rows[j][v], tab.rows[j][v] == 1);
        }
    }
    size_t wname = 0, wleft = 0, wright = 0;
    std::vector<size_t> wmid(s, 0);
    for (int j = 0; j < rows; ++j) {
        wname = std::max(wname, names[j].size());
        wleft = std::max(wleft, left[j].size());
        wright = std::max(wright, right[j].size());
        for (int v = 0; v < s; ++v) wmid[v] = std::max(wmid[v], mid[j][v].size());
    }
    std::ostringstream os;
    for (int j = 0; j < rows; ++j) {
        os << pad_right(names[j], wname) << "  " << pad_left(left[j], wleft) << " <-";
        for (int v = 0; v < s; ++v) os << "  " << pad_left(mid[j][v], wmid[v]);
        os << "  -> " << pad_left(right[j], wright) << "\n";
    }
    return os.str();
}

std::string riemenschneider_diagram(const GeneratorTable& tab) {
    HJExpansion d = dual_expansion_from_zigzag(tab);
    std::ostringstream os;
    long start = 0;
    for (int j = 0; j < d.length(); ++j) {
        long dots = d.entries[j].convert_to<long>() - 1;
        os << std::string(2 * start, ' ');
        for (long i = 0; i < dots; ++i) os << (i ? " *" : "*");
        os << "\n";
        start += dots - 1;
    }
    os << "\n" << render_table(tab);
    return os.str();
}

}  // namespace cqs
