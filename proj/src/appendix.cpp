#include "ppforge/appendix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ppforge::appendix {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::runtime_error(std::string("expected '") + c + "'");
    }
    BigInt integer() {
        ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::runtime_error("expected integer");
        return BigInt(s.substr(start, pos - start));
    }
    bool at_end() {
        ws();
        return pos >= s.size();
    }
};

std::vector<ApproxTerm> parse_approx(Cursor& c, std::string* normalized) {
    std::vector<ApproxTerm> terms;
    std::ostringstream norm;
    bool first = true;
    int sign = 1;
    if (c.eat('-')) {
        sign = -1;
        norm << "-";
    }
    for (;;) {
        BigInt num = c.integer();
        if (num < 0) throw std::runtime_error("approx term: signed numerator not in grammar");
        BigInt den = 1;
        c.ws();
        // int ['/' int] '/' Pi '^' int  -- a digit after '/' is the optional denominator
        if (c.eat('/')) {
            c.ws();
            if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
                den = c.integer();
                c.expect('/');
            }
        } else {
            throw std::runtime_error("approx term: expected '/'");
        }
        c.ws();
        if (c.s.compare(c.pos, 2, "Pi") != 0 && c.s.compare(c.pos, 2, "pi") != 0)
            throw std::runtime_error("approx term: expected Pi");
        std::string pi_word = c.s.substr(c.pos, 2);
        c.pos += 2;
        c.expect('^');
        BigInt e = c.integer();
        ApproxTerm t;
        t.u = BigRational(num, den) * sign;
        t.u.canonicalize();
        t.pi_exp = e.get_si();
        terms.push_back(t);

        norm << num.get_str();
        if (den != 1) norm << "/" << den.get_str();
        norm << "/" << pi_word << "^" << e.get_str();

        c.ws();
        if (c.eat('+')) {
            sign = 1;
            norm << "+";
        } else if (c.eat('-')) {
            sign = -1;
            norm << "-";
        } else {
            break;
        }
        first = false;
        (void)first;
    }
    if (normalized) *normalized = norm.str();
    return terms;
}

AppendixRow parse_row(const std::string& line, long line_no) {
    Cursor c{line};
    AppendixRow row;
    row.line_no = line_no;
    row.P = c.integer();
    c.expect(',');
    row.k1 = c.integer().get_si();
    c.expect(',');
    row.k2 = c.integer().get_si();
    c.expect(',');
    c.expect('[');
    for (int i = 0; i < 5; ++i) {
        row.vec[static_cast<size_t>(i)] = c.integer();
        if (i < 4) c.expect(',');
    }
    c.expect(']');
    c.expect(',');
    row.approx = parse_approx(c, &row.approx_text);
    if (!c.at_end()) throw std::runtime_error("trailing input after approximation");
    return row;
}

}  // namespace

ParseResult parse_corpus(const std::string& text) {
    ParseResult res;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        try {
            res.rows.push_back(parse_row(line, line_no));
        } catch (const std::exception& e) {
            res.errors.push_back({line_no, e.what()});
        }
    }
    return res;
}

ParseResult parse_corpus_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        ParseResult r;
        r.errors.push_back({0, "cannot open corpus file: " + path});
        return r;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_corpus(ss.str());
}

std::string format_approx(const std::vector<ApproxTerm>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        BigRational u = t.u;
        u.canonicalize();
        bool neg = u < 0;
        if (neg) u = -u;
        if (neg)
            out << "-";
        else if (!first)
            out << "+";
        out << BigInt(u.get_num()).get_str();
        if (u.get_den() != 1) out << "/" << BigInt(u.get_den()).get_str();
        out << "/Pi^" << t.pi_exp;
        first = false;
    }
    return out.str();
}

std::string serialize_row(const AppendixRow& row) {
    std::ostringstream out;
    out << row.P.get_str() << ", " << row.k1 << ", " << row.k2 << ", [";
    for (size_t i = 0; i < 5; ++i) {
        if (i) out << ", ";
        out << row.vec[i].get_str();
    }
    out << "], " << format_approx(row.approx);
    return out.str();
}

}  // namespace ppforge::appendix
