#include "birkit/parse.hpp"

#include <cctype>
#include <memory>

namespace birkit {

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "QQ") return {FieldTag::QQ, 0, 0};
    if (text == "RR") return {FieldTag::RR, 0, 0};
    if (text == "CC") return {FieldTag::CC, 0, 0};
    if (text.rfind("Qp:", 0) == 0) {
        auto rest = text.substr(3);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw BadParams("expected Qp:<p>:<prec>");
        long long p = std::stoll(rest.substr(0, colon));
        int prec = std::stoi(rest.substr(colon + 1));
        if (p < 2 || prec < 1) throw BadParams("invalid p-adic field parameters");
        // p must be prime for the valuation arithmetic to make sense.
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw BadParams("p must be prime");
        return {FieldTag::Qp, p, prec};
    }
    throw BadParams("unknown field tag: " + text);
}

std::string FieldSpec::str() const {
    switch (tag) {
        case FieldTag::QQ: return "QQ";
        case FieldTag::RR: return "RR";
        case FieldTag::CC: return "CC";
        case FieldTag::Qp:
            return "Qp:" + std::to_string(p) + ":" + std::to_string(prec);
    }
    return "?";
}

namespace {

// ---- tokens ----------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket,
                 RBracket, Colon, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;     // numbers and identifiers
    bool is_decimal = false;
    bool is_imag = false;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            bool decimal = false;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '.') {
                decimal = true;
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t save = i;
                ++i;
                if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
                if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    decimal = true;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                } else {
                    i = save;  // not an exponent, e.g. "2e" would be "2 * e"
                }
            }
            Token t;
            t.kind = Tok::Number;
            t.text = s.substr(start, i - start);
            t.is_decimal = decimal;
            t.pos = start;
            if (i < s.size() && s[i] == 'i') {
                t.is_imag = true;
                ++i;
            }
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back(Token{Tok::Ident, s.substr(start, i - start), false, false, start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ':': k = Tok::Colon; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back(Token{k, std::string(1, c), false, false, start});
        ++i;
    }
    out.push_back(Token{Tok::End, "", false, false, s.size()});
    return out;
}

// ---- AST -------------------------------------------------------------------

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Kind { Num, Var, Imag, Add, Sub, Mul, Div, Neg, Pow } kind;
    // Num
    std::string text;
    bool is_decimal = false;
    // Var
    int var_index = -1;
    // children
    NodePtr lhs, rhs;
    int exponent = 0;
    std::size_t pos = 0;
};

NodePtr make(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    std::vector<NodePtr> parse_bracketed_list() {
        expect(Tok::LBracket, "expected '['");
        std::vector<NodePtr> comps;
        comps.push_back(parse_expr());
        while (cur().kind == Tok::Colon) {
            ++idx_;
            comps.push_back(parse_expr());
        }
        expect(Tok::RBracket, "expected ']' or ':'");
        expect(Tok::End, "trailing input after ']'");
        if (comps.size() < 2) throw SyntaxError("a map needs at least two components", 0);
        return comps;
    }

    NodePtr parse_single_expr() {
        auto e = parse_expr();
        expect(Tok::End, "trailing input");
        return e;
    }

  private:
    const Token& cur() const { return toks_[idx_]; }

    void expect(Tok k, const char* msg) {
        if (cur().kind != k) throw SyntaxError(msg, cur().pos);
        if (k != Tok::End) ++idx_;
    }

    NodePtr parse_expr() {
        auto lhs = parse_term();
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            bool add = cur().kind == Tok::Plus;
            std::size_t pos = cur().pos;
            ++idx_;
            auto rhs = parse_term();
            auto n = make(add ? Node::Kind::Add : Node::Kind::Sub, pos);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_term() {
        auto lhs = parse_factor();
        while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
            bool mul = cur().kind == Tok::Star;
            std::size_t pos = cur().pos;
            ++idx_;
            auto rhs = parse_factor();
            auto n = make(mul ? Node::Kind::Mul : Node::Kind::Div, pos);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_factor() {
        if (cur().kind == Tok::Minus) {
            std::size_t pos = cur().pos;
            ++idx_;
            auto n = make(Node::Kind::Neg, pos);
            n->lhs = parse_factor();
            return n;
        }
        auto base = parse_atom();
        if (cur().kind == Tok::Caret) {
            std::size_t pos = cur().pos;
            ++idx_;
            bool negative = false;
            if (cur().kind == Tok::Minus) {
                negative = true;
                ++idx_;
            }
            if (cur().kind != Tok::Number || cur().is_decimal || cur().is_imag)
                throw SyntaxError("exponent must be an integer", cur().pos);
            int e = std::stoi(cur().text);
            ++idx_;
            auto n = make(Node::Kind::Pow, pos);
            n->lhs = std::move(base);
            n->exponent = negative ? -e : e;
            return n;
        }
        return base;
    }

    NodePtr parse_atom() {
        const Token& t = cur();
        if (t.kind == Tok::Number) {
            ++idx_;
            auto n = make(t.is_imag ? Node::Kind::Imag : Node::Kind::Num, t.pos);
            n->text = t.text;
            n->is_decimal = t.is_decimal;
            return n;
        }
        if (t.kind == Tok::Ident) {
            ++idx_;
            if (t.text == "i") {
                auto n = make(Node::Kind::Imag, t.pos);
                n->text = "1";
                return n;
            }
            if (t.text.size() >= 2 && t.text[0] == 'x') {
                bool digits = true;
                for (std::size_t k = 1; k < t.text.size(); ++k)
                    digits = digits && std::isdigit(static_cast<unsigned char>(t.text[k]));
                if (digits) {
                    auto n = make(Node::Kind::Var, t.pos);
                    n->var_index = std::stoi(t.text.substr(1));
                    return n;
                }
            }
            throw UnknownVariable("unknown identifier '" + t.text + "' at offset " +
                                  std::to_string(t.pos));
        }
        if (t.kind == Tok::LParen) {
            ++idx_;
            auto e = parse_expr();
            expect(Tok::RParen, "expected ')'");
            return e;
        }
        throw SyntaxError("expected a number, variable or '('", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

// Exact rational value of a decimal literal.
Rat rat_from_decimal(const std::string& text) {
    std::size_t epos = text.find_first_of("eE");
    std::string mant = epos == std::string::npos ? text : text.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(text.substr(epos + 1));
    std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    // strip leading zeros: the big-int parser would read them as octal
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    Rat v{Int(digits)};
    return v * rat_pow(Rat(10), exp10);
}

// ---- evaluation into a concrete domain -------------------------------------

template <CoefficientDomain D>
Poly<D> eval_node(const Node& n, const D& dom, int nvars) {
    using P = Poly<D>;
    switch (n.kind) {
        case Node::Kind::Num:
            return P::constant(dom, nvars, dom.from_rat(rat_from_decimal(n.text)));
        case Node::Kind::Imag: {
            if constexpr (std::is_same_v<D, ComplexDomain>) {
                Rat v = rat_from_decimal(n.text);
                return P::constant(dom, nvars, Cx{0.0, static_cast<double>(v)});
            } else {
                throw SyntaxError("imaginary literal outside the complex field", n.pos);
            }
        }
        case Node::Kind::Var:
            if (n.var_index < 0 || n.var_index >= nvars)
                throw UnknownVariable("variable x" + std::to_string(n.var_index) +
                                      " out of range for " + std::to_string(nvars) +
                                      " coordinates");
            return P::variable(dom, nvars, n.var_index);
        case Node::Kind::Add:
            return eval_node<D>(*n.lhs, dom, nvars) + eval_node<D>(*n.rhs, dom, nvars);
        case Node::Kind::Sub:
            return eval_node<D>(*n.lhs, dom, nvars) - eval_node<D>(*n.rhs, dom, nvars);
        case Node::Kind::Neg:
            return -eval_node<D>(*n.lhs, dom, nvars);
        case Node::Kind::Mul:
            return eval_node<D>(*n.lhs, dom, nvars) * eval_node<D>(*n.rhs, dom, nvars);
        case Node::Kind::Div: {
            auto num = eval_node<D>(*n.lhs, dom, nvars);
            auto den = eval_node<D>(*n.rhs, dom, nvars);
            if (!den.is_constant() || den.is_zero())
                throw SyntaxError("division only by nonzero constants", n.pos);
            auto c = den.terms().begin()->second;
            return num.scalar_mul(dom.div(dom.one(), c));
        }
        case Node::Kind::Pow: {
            auto base = eval_node<D>(*n.lhs, dom, nvars);
            int e = n.exponent;
            if (e < 0) {
                if (!base.is_constant() || base.is_zero())
                    throw SyntaxError("negative powers only of nonzero constants", n.pos);
                auto c = base.terms().begin()->second;
                auto inv = dom.div(dom.one(), c);
                auto acc = dom.one();
                for (int k = 0; k < -e; ++k) acc = dom.mul(acc, inv);
                return P::constant(dom, nvars, acc);
            }
            P acc = P::constant(dom, nvars, dom.one());
            for (int k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
    }
    throw SyntaxError("malformed expression", n.pos);
}

template <CoefficientDomain D>
MapTuple<D> build_tuple(const std::vector<NodePtr>& comps, const D& dom) {
    const int nvars = static_cast<int>(comps.size());
    std::vector<Poly<D>> polys;
    for (const auto& c : comps) polys.push_back(eval_node<D>(*c, dom, nvars));
    int degree = -1;
    for (const auto& p : polys) {
        if (!p.is_homogeneous()) throw NonHomogeneous("component is not homogeneous");
        if (!p.is_zero()) {
            if (degree >= 0 && p.total_degree() != degree)
                throw MixedDegrees("components have different degrees");
            degree = p.total_degree();
        }
    }
    if (degree < 0) throw ZeroTuple("all components are zero");
    std::vector<HomogPoly<D>> homog;
    for (const auto& p : polys) homog.push_back(HomogPoly<D>::from_poly(p, degree));
    return MapTuple<D>(std::move(homog));
}

template <CoefficientDomain D>
PointVec<D> build_point(const std::vector<NodePtr>& comps, const D& dom) {
    const int nvars = static_cast<int>(comps.size());
    PointVec<D> out;
    for (const auto& c : comps) {
        auto p = eval_node<D>(*c, dom, nvars);
        if (!p.is_constant()) throw SyntaxError("point coordinates must be constants", 0);
        out.push_back(p.is_zero() ? dom.zero() : p.terms().begin()->second);
    }
    return out;
}

}  // namespace

int MapLiteral::n() const {
    return std::visit([](const auto& t) { return t.n(); }, tuple);
}

int MapLiteral::degree() const {
    return std::visit([](const auto& t) { return t.degree(); }, tuple);
}

MapLiteral parse_map(const std::string& text, const FieldSpec& field) {
    Parser parser(text);
    auto comps = parser.parse_bracketed_list();
    MapLiteral lit{text, field, RatMapTuple::identity(RationalDomain{}, 1)};
    switch (field.tag) {
        case FieldTag::QQ:
            lit.tuple = build_tuple<RationalDomain>(comps, RationalDomain{});
            break;
        case FieldTag::RR:
            lit.tuple = build_tuple<RealDomain>(comps, RealDomain{});
            break;
        case FieldTag::CC:
            lit.tuple = build_tuple<ComplexDomain>(comps, ComplexDomain{});
            break;
        case FieldTag::Qp:
            lit.tuple = build_tuple<PadicDomain>(comps, PadicDomain{field.p, field.prec});
            break;
    }
    return lit;
}

AnyPoint parse_point(const std::string& text, const FieldSpec& field) {
    Parser parser(text);
    auto comps = parser.parse_bracketed_list();
    switch (field.tag) {
        case FieldTag::QQ: return build_point<RationalDomain>(comps, RationalDomain{});
        case FieldTag::RR: return build_point<RealDomain>(comps, RealDomain{});
        case FieldTag::CC: return build_point<ComplexDomain>(comps, ComplexDomain{});
        case FieldTag::Qp: return build_point<PadicDomain>(comps, PadicDomain{field.p, field.prec});
    }
    throw BadParams("unknown field tag");
}

namespace {
template <CoefficientDomain D>
std::string print_tuple(const MapTuple<D>& t) {
    std::string s = "[";
    for (int i = 0; i < t.nvars(); ++i) {
        if (i) s += " : ";
        s += t.component(i).str();
    }
    return s + "]";
}
}  // namespace

std::string print_map(const RatMapTuple& t) { return print_tuple(t); }
std::string print_map(const MapTuple<RealDomain>& t) { return print_tuple(t); }
std::string print_map(const CxMapTuple& t) { return print_tuple(t); }
std::string print_map(const MapTuple<PadicDomain>& t) { return print_tuple(t); }

std::string print_map(const AnyMapTuple& tuple) {
    return std::visit([](const auto& t) { return print_tuple(t); }, tuple);
}

std::string print_point(const AnyPoint& point) {
    return std::visit(
        [](const auto& p) {
            using VecT = std::decay_t<decltype(p)>;
            using D = std::conditional_t<
                std::is_same_v<VecT, PointVec<RationalDomain>>, RationalDomain,
                std::conditional_t<std::is_same_v<VecT, PointVec<RealDomain>>, RealDomain,
                                   std::conditional_t<std::is_same_v<VecT, PointVec<ComplexDomain>>,
                                                      ComplexDomain, PadicDomain>>>;
            D dom{};
            std::string s = "[";
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i) s += " : ";
                s += dom.str(p[i]);
            }
            return s + "]";
        },
        point);
}

}  // namespace birkit
