#include "cqs/jets.hpp"

#include <cctype>
#include <sstream>

#include "cqs/errors.hpp"

namespace cqs {

int jet_order(const Jet& p) {
    for (size_t d = 0; d < p.size(); ++d) {
        if (!p[d].is_zero()) return static_cast<int>(d);
    }
    return INT_MAX;
}

void jet_trim(Jet& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Jet jet_mul(const Jet& a, const Jet& b, int cap) {
    Jet out;
    if (a.empty() || b.empty()) return out;
    size_t top = std::min<size_t>(a.size() + b.size() - 1, static_cast<size_t>(cap) + 1);
    out.assign(top, GaussRat(0));
    for (size_t i = 0; i < a.size() && i < top; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < top; ++j) out[i + j] += a[i] * b[j];
    }
    jet_trim(out);
    return out;
}

bool jet_equal_to(const Jet& a, const Jet& b, int cap) {
    for (size_t d = 0; d <= static_cast<size_t>(cap); ++d) {
        GaussRat ca = d < a.size() ? a[d] : GaussRat(0);
        GaussRat cb = d < b.size() ? b[d] : GaussRat(0);
        if (ca != cb) return false;
    }
    return true;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

/// Splits on '+'/'-' at paren depth 0; each piece carries its sign ('+' for
/// the first if unsigned). Pieces are nonempty or InvalidInput.
std::vector<std::string> split_terms(const std::string& s) {
    std::string w = s;
    if (w[0] != '+' && w[0] != '-') w = "+" + w;
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        char c = w[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw InvalidInput("parse: unbalanced ')'");
        if (depth == 0 && (c == '+' || c == '-') && i > 0) {
            if (cur.size() <= 1) throw InvalidInput("parse: empty term");
            out.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    if (depth != 0) throw InvalidInput("parse: unbalanced '('");
    if (cur.size() <= 1) throw InvalidInput("parse: empty term");
    out.push_back(cur);
    return out;
}

Rat parse_rat(const std::string& tok) {
    auto parse_int = [](const std::string& t) {
        if (t.empty()) throw InvalidInput("parse: empty integer");
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInput("parse: bad integer '" + t + "'");
        }
        return Int(t.c_str());
    };
    size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(parse_int(tok));
    Int den = parse_int(tok.substr(slash + 1));
    if (den == 0) throw InvalidInput("parse: zero denominator");
    return Rat(parse_int(tok.substr(0, slash))) / Rat(den);
}

/// One signed atom: "+p/q", "-i", "+p/q*i", ...
GaussRat parse_atom(const std::string& term) {
    Rat sign(term[0] == '-' ? -1 : 1);
    std::string body = term.substr(1);
    if (body.empty()) throw InvalidInput("parse: empty term");
    if (body == "i") return GaussRat(Rat(0), sign);
    bool imag = false;
    if (body.size() >= 2 && body.substr(body.size() - 2) == "*i") {
        imag = true;
        body = body.substr(0, body.size() - 2);
    }
    Rat mag = sign * parse_rat(body);
    return imag ? GaussRat(Rat(0), mag) : GaussRat(mag);
}

long parse_degree(const std::string& tok) {
    if (tok.empty()) throw InvalidInput("parse: empty exponent");
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("parse: bad exponent '" + tok + "'");
    }
    if (tok.size() > 6) throw InvalidInput("parse: exponent too large");
    return std::stol(tok);
}

}  // namespace

GaussRat parse_gauss(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        // Strip one outer pair if it spans the whole string.
        int depth = 0;
        bool spans = true;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                spans = false;
                break;
            }
        }
        if (spans) s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw InvalidInput("parse: empty coefficient");
    GaussRat out(0);
    for (const std::string& term : split_terms(s)) out += parse_atom(term);
    return out;
}

Jet parse_jet(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw InvalidInput("parse: empty polynomial");
    Jet out;
    auto put = [&out](long deg, const GaussRat& c) {
        if (out.size() <= static_cast<size_t>(deg)) out.resize(deg + 1, GaussRat(0));
        out[deg] += c;
    };
    for (const std::string& term : split_terms(s)) {
        char sign = term[0];
        std::string body = term.substr(1);
        long deg = 0;
        std::string coeff = body;
        if (body == "t") {
            deg = 1;
            coeff.clear();
        } else if (body.rfind("t^", 0) == 0) {
            deg = parse_degree(body.substr(2));
            coeff.clear();
        } else {
            size_t star = body.rfind("*t");
            if (star != std::string::npos) {
                std::string tail = body.substr(star + 2);
                if (tail.empty()) {
                    deg = 1;
                    coeff = body.substr(0, star);
                } else if (tail[0] == '^') {
                    deg = parse_degree(tail.substr(1));
                    coeff = body.substr(0, star);
                }
            }
        }
        GaussRat c = coeff.empty() ? GaussRat(1) : parse_gauss(coeff);
        if (sign == '-') c = -c;
        put(deg, c);
    }
    jet_trim(out);
    return out;
}

std::string jet_to_string(const Jet& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d].is_zero()) continue;
        GaussRat c = p[d];
        bool neg = false;
        std::string body;
        if (c.im == 0) {
            neg = c.re < 0;
            Rat mag = neg ? Rat(-c.re) : c.re;
            body = (mag == 1 && d > 0) ? "" : to_string(mag);
        } else if (c.re == 0) {
            neg = c.im < 0;
            Rat mag = neg ? Rat(-c.im) : c.im;
            body = (mag == 1 ? std::string("i") : to_string(mag) + "*i");
        } else {
            body = "(" + to_string(c) + ")";
        }
        std::string tpart;
        if (d == 1) tpart = "t";
        else if (d > 1) tpart = "t^" + std::to_string(d);
        std::string term = body;
        if (!tpart.empty()) term += (body.empty() ? "" : "*") + tpart;
        if (first) {
            os << (neg ? "-" : "") << term;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << term;
        }
    }
    if (first) return "0";
    return os.str();
}

BranchParam branch_from_cut(const GeneratorTable& tab, int v, const GaussRat& c) {
    const int s = tab.graph.s();
    if (v < 1 || v > s) throw InvalidInput("branch_from_cut: vertex out of range");
    if (c.is_zero()) throw InvalidInput("branch_from_cut: position must be nonzero");
    BranchParam b;
    for (const MultiplicitySystem& row : tab.rows) {
        long deg = row[v].convert_to<long>();
        Jet coord(deg + 1, GaussRat(0));
        coord[deg] = pow_gauss(c, row[v + 1].convert_to<long>());
        b.coords.push_back(std::move(coord));
    }
    return b;
}

}  // namespace cqs
