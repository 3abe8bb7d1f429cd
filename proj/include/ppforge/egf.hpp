#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::egf {

// Expression tree over rational constants, x, sin(j*x), cos(j*x) and + - * /.
struct TrigExpr {
    enum class Kind { Const, Var, Sin, Cos, Add, Sub, Mul, Div };

    Kind kind;
    BigRational value;  // Const
    long mult = 1;      // Sin/Cos argument multiplier j
    std::unique_ptr<TrigExpr> lhs, rhs;

    static std::unique_ptr<TrigExpr> constant(BigRational v);
    static std::unique_ptr<TrigExpr> var();
    static std::unique_ptr<TrigExpr> sin(long j);
    static std::unique_ptr<TrigExpr> cos(long j);
    static std::unique_ptr<TrigExpr> node(Kind k, std::unique_ptr<TrigExpr> a,
                                          std::unique_ptr<TrigExpr> b);

    bool equals(const TrigExpr& o) const;
    std::string pretty() const;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t position() const { return pos_; }

  private:
    size_t pos_;
};

// Raised when a series division hits a divisor with zero constant term.
class PoleAtZero : public std::runtime_error {
  public:
    PoleAtZero() : std::runtime_error("pole at x=0") {}
};

// Grammar: integers; rationals p/q; x; sin(Kx), cos(Kx) with optional
// integer K ("sin(x)", "sin(3x)", "sin(3*x)"); + - * /; parentheses;
// whitespace insignificant. Unary minus is accepted.
std::unique_ptr<TrigExpr> parse(const std::string& text);

// Exact truncated power series with rational coefficients c_0..c_N.
struct PowerSeries {
    std::vector<BigRational> coeffs;  // size order+1
    long order;

    explicit PowerSeries(long n) : coeffs(static_cast<size_t>(n) + 1), order(n) {}
    const BigRational& operator[](size_t i) const { return coeffs[i]; }
    BigRational& operator[](size_t i) { return coeffs[i]; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    // Long division; throws PoleAtZero if o.coeffs[0] == 0.
    PowerSeries operator/(const PowerSeries& o) const;
};

PowerSeries sin_series(long j, long order);
PowerSeries cos_series(long j, long order);

// Expand expr as an exact series through x^order.
PowerSeries expand(const TrigExpr& expr, long order);

// EGF terms a(n) = n! * c_n for n = 0..count. Values may be non-integral;
// integrality is the caller's question, not an assumption.
std::vector<BigRational> egf_terms(const TrigExpr& expr, long count);

// Entries at stride (offset, offset+step, ...), for odd/even-supported rows.
std::vector<BigRational> take_stride(const std::vector<BigRational>& terms, long offset,
                                     long step);

}  // namespace ppforge::egf
