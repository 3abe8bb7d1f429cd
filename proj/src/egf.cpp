#include "ppforge/egf.hpp"

#include <cctype>

#include "ppforge/kernel.hpp"

namespace ppforge::egf {

std::unique_ptr<TrigExpr> TrigExpr::constant(BigRational v) {
    auto e = std::make_unique<TrigExpr>();
    e->kind = Kind::Const;
    v.canonicalize();
    e->value = std::move(v);
    return e;
}

std::unique_ptr<TrigExpr> TrigExpr::var() {
    auto e = std::make_unique<TrigExpr>();
    e->kind = Kind::Var;
    return e;
}

std::unique_ptr<TrigExpr> TrigExpr::sin(long j) {
    auto e = std::make_unique<TrigExpr>();
    e->kind = Kind::Sin;
    e->mult = j;
    return e;
}

std::unique_ptr<TrigExpr> TrigExpr::cos(long j) {
    auto e = std::make_unique<TrigExpr>();
    e->kind = Kind::Cos;
    e->mult = j;
    return e;
}

std::unique_ptr<TrigExpr> TrigExpr::node(Kind k, std::unique_ptr<TrigExpr> a,
                                         std::unique_ptr<TrigExpr> b) {
    auto e = std::make_unique<TrigExpr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

bool TrigExpr::equals(const TrigExpr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Const: return value == o.value;
        case Kind::Var: return true;
        case Kind::Sin:
        case Kind::Cos: return mult == o.mult;
        default: return lhs->equals(*o.lhs) && rhs->equals(*o.rhs);
    }
}

std::string TrigExpr::pretty() const {
    switch (kind) {
        case Kind::Const: return value.get_str();
        case Kind::Var: return "x";
        case Kind::Sin:
            return mult == 1 ? "sin(x)" : "sin(" + std::to_string(mult) + "x)";
        case Kind::Cos:
            return mult == 1 ? "cos(x)" : "cos(" + std::to_string(mult) + "x)";
        case Kind::Add: return "(" + lhs->pretty() + "+" + rhs->pretty() + ")";
        case Kind::Sub: return "(" + lhs->pretty() + "-" + rhs->pretty() + ")";
        case Kind::Mul: return "(" + lhs->pretty() + "*" + rhs->pretty() + ")";
        case Kind::Div: return "(" + lhs->pretty() + "/" + rhs->pretty() + ")";
    }
    return "";
}

namespace {

constexpr long kMaxMultiplier = 64;

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::unique_ptr<TrigExpr> run() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::unique_ptr<TrigExpr> expr() {
        auto e = term();
        for (;;) {
            if (eat('+'))
                e = TrigExpr::node(TrigExpr::Kind::Add, std::move(e), term());
            else if (eat('-'))
                e = TrigExpr::node(TrigExpr::Kind::Sub, std::move(e), term());
            else
                return e;
        }
    }

    std::unique_ptr<TrigExpr> term() {
        auto e = factor();
        for (;;) {
            if (eat('*'))
                e = TrigExpr::node(TrigExpr::Kind::Mul, std::move(e), factor());
            else if (eat('/'))
                e = TrigExpr::node(TrigExpr::Kind::Div, std::move(e), factor());
            else
                return e;
        }
    }

    std::unique_ptr<TrigExpr> factor() {
        skip_ws();
        if (eat('-'))
            return TrigExpr::node(TrigExpr::Kind::Sub,
                                  TrigExpr::constant(BigRational(0)), factor());
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        throw ParseError("unexpected character", pos_);
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return BigInt(s_.substr(start, pos_ - start));
    }

    std::unique_ptr<TrigExpr> number() {
        BigInt n = integer();
        // "p/q" only binds as a rational literal when q is a bare integer not
        // followed by an alphanumeric opener; otherwise '/' is division.
        size_t save = pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t p2 = pos_ + 1;
            while (p2 < s_.size() && std::isspace(static_cast<unsigned char>(s_[p2]))) ++p2;
            if (p2 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p2]))) {
                pos_ = p2;
                BigInt d = integer();
                if (d == 0) throw ParseError("zero denominator", pos_);
                return TrigExpr::constant(BigRational(n, d));
            }
        }
        pos_ = save;
        return TrigExpr::constant(BigRational(n));
    }

    std::unique_ptr<TrigExpr> name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "x") return TrigExpr::var();
        if (id != "sin" && id != "cos")
            throw ParseError("unsupported function '" + id + "'", start);
        if (!eat('(')) throw ParseError("expected '(' after " + id, pos_);
        long j = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt k = integer();
            if (k < 1 || k > kMaxMultiplier)
                throw ParseError("argument multiplier out of range", pos_);
            j = k.get_si();
            eat('*');
        }
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'x')
            throw ParseError("expected 'x' in " + id + "(...)", pos_);
        ++pos_;
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        return id == "sin" ? TrigExpr::sin(j) : TrigExpr::cos(j);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<TrigExpr> parse(const std::string& text) { return Parser(text).run(); }

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(order, o.order));
    for (long i = 0; i <= r.order; ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r(std::min(order, o.order));
    for (long i = 0; i <= r.order; ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries r(std::min(order, o.order));
    for (long i = 0; i <= r.order; ++i) {
        if (coeffs[i] == 0) continue;
        for (long j = 0; i + j <= r.order; ++j) {
            if (o.coeffs[j] == 0) continue;
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
        }
    }
    return r;
}

// Long division with the divisor cleared to integers by its common
// denominator; keeps intermediate rationals small.
PowerSeries PowerSeries::operator/(const PowerSeries& o) const {
    if (o.coeffs[0] == 0) throw PoleAtZero();
    long n = std::min(order, o.order);

    BigInt den = 1;
    for (long i = 0; i <= n; ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), o.coeffs[i].get_den().get_mpz_t());
    std::vector<BigInt> b(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        BigRational s = o.coeffs[i] * BigRational(den);
        s.canonicalize();
        b[i] = BigInt(s.get_num());
    }

    PowerSeries q(n);
    std::vector<BigRational> rem(coeffs.begin(), coeffs.begin() + n + 1);
    BigRational b0(b[0]);
    for (long i = 0; i <= n; ++i) {
        BigRational qi = rem[i] * BigRational(den) / b0;
        qi.canonicalize();
        q.coeffs[i] = qi;
        if (qi == 0) continue;
        BigRational scaled = qi / BigRational(den);
        scaled.canonicalize();
        for (long j = 1; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            rem[i + j] -= scaled * BigRational(b[j]);
        }
    }
    return q;
}

PowerSeries sin_series(long j, long order) {
    PowerSeries s(order);
    BigRational term(j);  // j^n / n! at n=1
    for (long n = 1; n <= order; n += 2) {
        s.coeffs[n] = ((n - 1) / 2 % 2 == 0) ? term : -term;
        term *= BigRational(BigInt(j) * BigInt(j), BigInt(n + 1) * BigInt(n + 2));
        term.canonicalize();
    }
    return s;
}

PowerSeries cos_series(long j, long order) {
    PowerSeries s(order);
    BigRational term(1);
    for (long n = 0; n <= order; n += 2) {
        s.coeffs[n] = (n / 2 % 2 == 0) ? term : -term;
        term *= BigRational(BigInt(j) * BigInt(j), BigInt(n + 1) * BigInt(n + 2));
        term.canonicalize();
    }
    return s;
}

PowerSeries expand(const TrigExpr& e, long order) {
    switch (e.kind) {
        case TrigExpr::Kind::Const: {
            PowerSeries s(order);
            s.coeffs[0] = e.value;
            return s;
        }
        case TrigExpr::Kind::Var: {
            PowerSeries s(order);
            if (order >= 1) s.coeffs[1] = 1;
            return s;
        }
        case TrigExpr::Kind::Sin: return sin_series(e.mult, order);
        case TrigExpr::Kind::Cos: return cos_series(e.mult, order);
        case TrigExpr::Kind::Add: return expand(*e.lhs, order) + expand(*e.rhs, order);
        case TrigExpr::Kind::Sub: return expand(*e.lhs, order) - expand(*e.rhs, order);
        case TrigExpr::Kind::Mul: return expand(*e.lhs, order) * expand(*e.rhs, order);
        case TrigExpr::Kind::Div: return expand(*e.lhs, order) / expand(*e.rhs, order);
    }
    throw std::logic_error("expand: bad node");
}

std::vector<BigRational> egf_terms(const TrigExpr& expr, long count) {
    PowerSeries s = expand(expr, count);
    std::vector<BigRational> out(static_cast<size_t>(count) + 1);
    BigInt f = 1;
    for (long n = 0; n <= count; ++n) {
        if (n > 0) f *= n;
        out[n] = s.coeffs[n] * BigRational(f);
        out[n].canonicalize();
    }
    return out;
}

std::vector<BigRational> take_stride(const std::vector<BigRational>& terms, long offset,
                                     long step) {
    std::vector<BigRational> out;
    for (size_t i = static_cast<size_t>(offset); i < terms.size(); i += step)
        out.push_back(terms[i]);
    return out;
}

}  // namespace ppforge::egf
