#include "qhs/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace qhs {

namespace {

constexpr long kMaxExponent = 100000;

struct Token {
    enum class Kind {
        Integer,
        Imaginary,
        QSymbol,
        Generator,
        Plus,
        Minus,
        Star,
        Caret,
        Slash,
        LParen,
        RParen,
        End,
    };
    Kind kind;
    std::size_t offset;
    BigInt value;     // Integer
    char letter = 0;  // Generator
    bool starred = false;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < text.size()) {
        char c = text[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        Token t;
        t.offset = p;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = p;
            while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
                ++p;
            t.kind = Token::Kind::Integer;
            t.value = BigInt(std::string(text.substr(start, p - start)), 10);
            out.push_back(std::move(t));
            continue;
        }
        switch (c) {
        case '+': t.kind = Token::Kind::Plus; break;
        case '-': t.kind = Token::Kind::Minus; break;
        case '*': t.kind = Token::Kind::Star; break;
        case '^': t.kind = Token::Kind::Caret; break;
        case '/': t.kind = Token::Kind::Slash; break;
        case '(': t.kind = Token::Kind::LParen; break;
        case ')': t.kind = Token::Kind::RParen; break;
        case 'i': t.kind = Token::Kind::Imaginary; break;
        case 'q': t.kind = Token::Kind::QSymbol; break;
        case 'a':
        case 'g':
        case 'y':
        case 'z':
            t.kind = Token::Kind::Generator;
            t.letter = c;
            // maximal munch: '*' directly after a generator letter is the
            // involution, not multiplication
            if (p + 1 < text.size() && text[p + 1] == '*') {
                t.starred = true;
                ++p;
            }
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", p);
        }
        ++p;
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.offset = text.size();
    out.push_back(std::move(end));
    return out;
}

struct SuContext {
    using Element = SUq2Element;
    static constexpr const char* name = "su";
    static Element unit() { return SUq2Element::unit(); }
    static Element from_scalar(const QScalar& s) { return SUq2Element::unit() * s; }
    static Element multiply(const Element& a, const Element& b) { return mul(a, b); }
    static std::optional<Element> generator(char letter, bool starred) {
        switch (letter) {
        case 'a': return starred ? SUq2Element::alpha_star() : SUq2Element::alpha();
        case 'g': return starred ? SUq2Element::gamma_star() : SUq2Element::gamma();
        default: return std::nullopt;
        }
    }
    static std::optional<QScalar> as_scalar(const Element& e) { return e.as_scalar(); }
};

struct DiskContext {
    using Element = DiskElement;
    static constexpr const char* name = "disk";
    static Element unit() { return DiskElement::unit(); }
    static Element from_scalar(const QScalar& s) { return DiskElement::unit() * s; }
    static Element multiply(const Element& a, const Element& b) { return mul(a, b); }
    static std::optional<Element> generator(char letter, bool starred) {
        switch (letter) {
        case 'y': return DiskElement::y(); // y is self-adjoint
        case 'z': return starred ? DiskElement::z_star() : DiskElement::z();
        default: return std::nullopt;
        }
    }
    static std::optional<QScalar> as_scalar(const Element& e) { return e.as_scalar(); }
};

template <class Ctx>
class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    typename Ctx::Element run() {
        auto e = parse_expr();
        expect(Token::Kind::End, "unexpected trailing input");
        return e;
    }

private:
    using Element = typename Ctx::Element;

    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    void expect(Token::Kind k, const char* message) {
        if (peek().kind != k)
            throw ParseError(message, peek().offset);
        ++pos_;
    }

    static bool starts_primary(const Token& t) {
        switch (t.kind) {
        case Token::Kind::Integer:
        case Token::Kind::Imaginary:
        case Token::Kind::QSymbol:
        case Token::Kind::Generator:
        case Token::Kind::LParen:
            return true;
        default:
            return false;
        }
    }

    Element parse_expr() {
        bool negate = false;
        if (peek().kind == Token::Kind::Minus) {
            advance();
            negate = true;
        } else if (peek().kind == Token::Kind::Plus) {
            advance();
        }
        Element acc = parse_term();
        if (negate)
            acc = acc * QScalar(-1);
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool minus = advance().kind == Token::Kind::Minus;
            Element t = parse_term();
            acc = minus ? acc + t * QScalar(-1) : acc + t;
        }
        return acc;
    }

    Element parse_term() {
        Element acc = parse_factor();
        for (;;) {
            if (peek().kind == Token::Kind::Star) {
                advance();
                acc = Ctx::multiply(acc, parse_factor());
            } else if (starts_primary(peek())) {
                acc = Ctx::multiply(acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Element parse_factor() {
        Element base = parse_primary();
        if (peek().kind != Token::Kind::Caret)
            return base;
        advance();
        bool negative = false;
        if (peek().kind == Token::Kind::Minus) {
            advance();
            negative = true;
        }
        if (peek().kind != Token::Kind::Integer)
            throw ParseError("expected integer exponent after '^'", peek().offset);
        const Token& exp_tok = advance();
        if (exp_tok.value > kMaxExponent)
            throw ParseError("exponent too large", exp_tok.offset);
        long long e = exp_tok.value.get_si();
        if (negative) {
            auto s = Ctx::as_scalar(base);
            if (!s || s->terms().size() != 1)
                throw ParseError("negative powers need an invertible single-term scalar",
                                 exp_tok.offset);
            const auto& [qe, qc] = *s->terms().begin();
            base = Ctx::from_scalar(
                QScalar::term(GaussianRational(1) / qc, -qe));
        }
        Element acc = Ctx::unit();
        Element pw = base;
        while (e > 0) {
            if (e & 1)
                acc = Ctx::multiply(acc, pw);
            e >>= 1;
            if (e)
                pw = Ctx::multiply(pw, pw);
        }
        return acc;
    }

    Element parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Integer: {
            advance();
            BigInt num = t.value;
            if (peek().kind == Token::Kind::Slash) {
                advance();
                if (peek().kind != Token::Kind::Integer)
                    throw ParseError("expected denominator after '/'", peek().offset);
                const Token& den_tok = advance();
                if (den_tok.value == 0)
                    throw ParseError("zero denominator", den_tok.offset);
                Rational r(num, den_tok.value);
                r.canonicalize();
                return Ctx::from_scalar(QScalar(GaussianRational(r)));
            }
            return Ctx::from_scalar(QScalar(GaussianRational(Rational(num))));
        }
        case Token::Kind::Imaginary:
            advance();
            return Ctx::from_scalar(QScalar(GaussianRational::i()));
        case Token::Kind::QSymbol:
            advance();
            return Ctx::from_scalar(QScalar::q_power(1));
        case Token::Kind::Generator: {
            advance();
            auto g = Ctx::generator(t.letter, t.starred);
            if (!g)
                throw ParseError(std::string("unknown generator '") + t.letter +
                                     (t.starred ? "*" : "") + "' in " + Ctx::name +
                                     " context",
                                 t.offset);
            return *g;
        }
        case Token::Kind::LParen: {
            advance();
            Element e = parse_expr();
            expect(Token::Kind::RParen, "expected ')'");
            return e;
        }
        default:
            throw ParseError("expected a number, scalar symbol, generator or '('",
                             t.offset);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

SUq2Element parse_su(std::string_view text) { return Parser<SuContext>(text).run(); }

DiskElement parse_disk(std::string_view text) { return Parser<DiskContext>(text).run(); }

QScalar parse_scalar(std::string_view text) {
    auto e = Parser<SuContext>(text).run();
    auto s = e.as_scalar();
    if (!s)
        throw ParseError("expression is not a scalar", 0);
    return *s;
}

} // namespace qhs
