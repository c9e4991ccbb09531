#include "lgpot/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace lgpot {

namespace {

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

bool valid_var_name(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return ident_char(c); });
}

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars)
        : src_(src), vars_(vars) {}

    Expression run() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
        Expression e = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            throw ParseError(std::string("unexpected character '") + src_[pos_] + "'",
                             pos_);
        return e;
    }

private:
    Expression parse_expr() {
        Expression lhs = parse_term();
        while (true) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                char op = src_[pos_++];
                Expression rhs = parse_term();
                Expression node;
                node.kind = op == '+' ? Expression::Kind::Add : Expression::Kind::Sub;
                node.children.push_back(std::move(lhs));
                node.children.push_back(std::move(rhs));
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    Expression parse_term() {
        Expression lhs = parse_factor();
        while (true) {
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*') {
                ++pos_;
                Expression rhs = parse_factor();
                Expression node;
                node.kind = Expression::Kind::Mul;
                node.children.push_back(std::move(lhs));
                node.children.push_back(std::move(rhs));
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    // Unary minus binds looser than "^": -x^2 means -(x^2).
    Expression parse_factor() {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '-') {
            DepthGuard guard(*this);
            ++pos_;
            Expression node;
            node.kind = Expression::Kind::Neg;
            node.children.push_back(parse_factor());
            return node;
        }
        return parse_power();
    }

    Expression parse_power() {
        Expression base = parse_atom();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            std::int64_t k = parse_int();
            Expression node;
            node.kind = Expression::Kind::Pow;
            node.exponent = k;
            node.children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    Expression parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("expected expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            DepthGuard guard(*this);
            ++pos_;
            Expression e = parse_expr();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c >= '0' && c <= '9') return parse_literal();
        if (ident_start(c)) return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expression parse_literal() {
        std::string num = scan_digits();
        std::string den;
        std::size_t den_start = 0;
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            den_start = pos_;
            if (pos_ >= src_.size() || !(src_[pos_] >= '0' && src_[pos_] <= '9'))
                throw ParseError("expected denominator digits", pos_);
            den = scan_digits();
            if (den.find_first_not_of('0') == std::string::npos)
                throw ParseError("literal with zero denominator", den_start);
        }
        bool imaginary = false;
        // "i" glued to the digits is the imaginary-unit suffix, unless it
        // starts a longer identifier.
        if (pos_ < src_.size() && src_[pos_] == 'i' &&
            (pos_ + 1 >= src_.size() || !ident_char(src_[pos_ + 1]))) {
            ++pos_;
            imaginary = true;
        }
        Rational r = den.empty() ? Rational::from_string(num)
                                 : Rational::from_string(num + "/" + den);
        Expression node;
        node.kind = Expression::Kind::Literal;
        node.literal = imaginary ? Scalar(GaussianRational(Rational(0), r)) : Scalar(r);
        return node;
    }

    Expression parse_ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) {
                Expression node;
                node.kind = Expression::Kind::Var;
                node.var_index = i;
                return node;
            }
        }
        if (name == "i") {
            Expression node;
            node.kind = Expression::Kind::Literal;
            node.literal = Scalar::i();
            return node;
        }
        throw ParseError("unknown variable '" + name + "'", start);
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
        if (pos_ >= src_.size() || !(src_[pos_] >= '0' && src_[pos_] <= '9'))
            throw ParseError("expected integer exponent", pos_);
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        std::int64_t value = 0;
        auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (res.ec != std::errc())
            throw ParseError("integer exponent out of range", start);
        return value;
    }

    std::string scan_digits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r'))
            ++pos_;
    }

    // Bounds recursion so hostile input cannot blow the stack.
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > 256)
                throw ParseError("expression too deeply nested", parser.pos_);
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    std::string_view src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

LaurentPoly lower_pow(const LaurentPoly& base, std::int64_t k) {
    if (k == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("exponent out of range");
    std::uint64_t mag = static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (mag > std::numeric_limits<std::uint32_t>::max())
        throw OverflowError("exponent out of range");
    if (k >= 0) return base.pow(static_cast<std::uint32_t>(mag));
    if (!base.is_unit())
        throw DomainError("negative power of a non-unit Laurent polynomial");
    return base.unit_inverse().pow(static_cast<std::uint32_t>(mag));
}

// Post-order evaluation with an explicit stack; flat sums parse into deep
// left-leaning trees, so recursion is not an option here.
template <typename V, typename LitFn, typename VarFn, typename PowFn>
V fold_expression(const Expression& root, LitFn lit, VarFn var, PowFn pw) {
    struct Frame {
        const Expression* node;
        std::size_t next_child = 0;
        std::vector<V> vals;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{&root});
    std::vector<V> result;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const Expression& n = *top.node;
        if (top.next_child < n.children.size()) {
            const Expression* child = &n.children[top.next_child];
            ++top.next_child;
            stack.push_back(Frame{child}); // invalidates `top`
            continue;
        }
        V v = [&]() -> V {
            switch (n.kind) {
                case Expression::Kind::Literal: return lit(n.literal);
                case Expression::Kind::Var: return var(n.var_index);
                case Expression::Kind::Neg: return -top.vals[0];
                case Expression::Kind::Add: return top.vals[0] + top.vals[1];
                case Expression::Kind::Sub: return top.vals[0] - top.vals[1];
                case Expression::Kind::Mul: return top.vals[0] * top.vals[1];
                case Expression::Kind::Pow: return pw(top.vals[0], n.exponent);
            }
            throw Error("corrupt expression tree");
        }();
        stack.pop_back();
        if (stack.empty())
            result.push_back(std::move(v));
        else
            stack.back().vals.push_back(std::move(v));
    }
    return std::move(result.front());
}

} // namespace

Expression parse_expression(std::string_view src, const std::vector<std::string>& vars) {
    for (const auto& v : vars)
        if (!valid_var_name(v))
            throw DomainError("invalid variable name '" + v + "'");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw DomainError("duplicate variable name '" + vars[i] + "'");
    return Parser(src, vars).run();
}

LaurentPoly lower(const Expression& e, const std::vector<std::string>& vars) {
    return fold_expression<LaurentPoly>(
        e, [&](const Scalar& s) { return LaurentPoly::constant(vars, s); },
        [&](std::size_t i) { return LaurentPoly::variable(vars, i); },
        [](const LaurentPoly& base, std::int64_t k) { return lower_pow(base, k); });
}

LaurentPoly parse_poly(std::string_view src, const std::vector<std::string>& vars) {
    return lower(parse_expression(src, vars), vars);
}

namespace {

Scalar eval_const(const Expression& e) {
    return fold_expression<Scalar>(
        e, [](const Scalar& s) { return s; },
        [](std::size_t) -> Scalar {
            throw DomainError("expected a constant expression");
        },
        [](const Scalar& base, std::int64_t k) { return base.pow(k); });
}

__int128 total_degree(const ExpVec& e) {
    __int128 s = 0;
    for (std::int64_t x : e) s += x;
    return s;
}

std::string monomial_string(const std::vector<std::string>& vars, const ExpVec& e) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

Scalar parse_scalar(std::string_view src) {
    const std::vector<std::string> no_vars;
    return eval_const(Parser(src, no_vars).run());
}

std::string render(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    if (!f.is_exact())
        throw DomainError("cannot render approximate coefficients");

    auto terms = f.sorted_terms();
    // A variable named "i" next to Gaussian coefficients cannot round-trip:
    // the declared variable shadows the imaginary unit on re-parse.
    bool has_gaussian = false;
    for (const auto& [e, c] : terms)
        if (c.tower() == Tower::Gaussian) has_gaussian = true;
    if (has_gaussian)
        for (const auto& v : f.vars())
            if (v == "i")
                throw DomainError("cannot render Gaussian coefficients over a "
                                  "variable named 'i'");
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        __int128 da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return b.first < a.first; // descending lexicographic tie-break
    });

    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono = monomial_string(f.vars(), e);
        std::string body;
        bool negative = false;
        if (c.tower() == Tower::Rational) {
            const Rational& r = c.rational();
            negative = r.sign() < 0;
            std::string mag = r.abs().to_string();
            if (mono.empty())
                body = mag;
            else if (mag == "1")
                body = mono;
            else
                body = mag + "*" + mono;
        } else {
            // Gaussian coefficients stay parenthesized as a unit.
            std::string g = "(" + c.to_string() + ")";
            body = mono.empty() ? g : g + "*" + mono;
        }
        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

} // namespace lgpot
