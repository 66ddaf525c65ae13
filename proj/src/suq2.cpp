#include "qhs/suq2.hpp"

#include <sstream>
#include <stdexcept>

namespace qhs {

std::string SUq2Monomial::word() const {
    std::string w;
    if (i >= 0)
        w.append(static_cast<std::size_t>(i), kAlpha);
    else
        w.append(static_cast<std::size_t>(-i), kAlphaStar);
    w.append(static_cast<std::size_t>(j), kGamma);
    w.append(static_cast<std::size_t>(k), kGammaStar);
    return w;
}

SUq2Element SUq2Element::monomial(SUq2Monomial m, QScalar c) {
    if (m.j < 0 || m.k < 0)
        throw std::invalid_argument("SUq2Monomial: gamma exponents must be nonnegative");
    SUq2Element e;
    e.add_term(m, c);
    return e;
}

void SUq2Element::add_term(const SUq2Monomial& m, const QScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SUq2Element SUq2Element::operator+(const SUq2Element& o) const {
    SUq2Element r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

SUq2Element SUq2Element::operator-(const SUq2Element& o) const {
    SUq2Element r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

SUq2Element SUq2Element::operator*(const QScalar& c) const {
    SUq2Element r;
    for (const auto& [m, t] : terms_)
        r.add_term(m, t * c);
    return r;
}

std::optional<QScalar> SUq2Element::as_scalar() const {
    if (terms_.empty())
        return QScalar::zero();
    if (terms_.size() == 1 && terms_.begin()->first.is_unit())
        return terms_.begin()->second;
    return std::nullopt;
}

const RewriteSystem& su_rewrite_system() {
    static const RewriteSystem system({
        {"ga", {{QScalar::q_power(-1), "ag"}}},
        {"Ga", {{QScalar::q_power(-1), "aG"}}},
        {"gA", {{QScalar::q_power(1), "Ag"}}},
        {"GA", {{QScalar::q_power(1), "AG"}}},
        {"Gg", {{QScalar::one(), "gG"}}},
        {"aA", {{QScalar::one(), ""}, {-QScalar::q_power(2), "gG"}}},
        {"Aa", {{QScalar::one(), ""}, {-QScalar::one(), "gG"}}},
    });
    return system;
}

namespace {

SUq2Monomial monomial_of_normal_word(const std::string& w) {
    SUq2Monomial m;
    for (char ch : w) {
        switch (ch) {
        case kAlpha: ++m.i; break;
        case kAlphaStar: --m.i; break;
        case kGamma: ++m.j; break;
        case kGammaStar: ++m.k; break;
        default:
            throw std::invalid_argument(std::string("unknown letter '") + ch + "'");
        }
    }
    return m;
}

} // namespace

SUq2Element normalize(const FreeTermMap& words, Strategy strategy) {
    SUq2Element e;
    for (const auto& [w, c] : su_rewrite_system().reduce(words, strategy))
        e.add_term(monomial_of_normal_word(w), c);
    return e;
}

SUq2Element normalize(const std::string& word, const QScalar& coeff, Strategy strategy) {
    FreeTermMap m;
    add_free_term(m, word, coeff);
    return normalize(m, strategy);
}

SUq2Element mul(const SUq2Element& a, const SUq2Element& b) {
    FreeTermMap words;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            add_free_term(words, ma.word() + mb.word(), ca * cb);
    return normalize(words);
}

SUq2Element star(const SUq2Element& a) {
    FreeTermMap words;
    for (const auto& [m, c] : a.terms()) {
        std::string w = m.word();
        std::string starred(w.rbegin(), w.rend());
        for (char& ch : starred) {
            switch (ch) {
            case kAlpha: ch = kAlphaStar; break;
            case kAlphaStar: ch = kAlpha; break;
            case kGamma: ch = kGammaStar; break;
            case kGammaStar: ch = kGamma; break;
            }
        }
        add_free_term(words, starred, c.conj());
    }
    return normalize(words);
}

std::map<long long, SUq2Element> alpha_degree_decompose(const SUq2Element& a) {
    std::map<long long, SUq2Element> parts;
    for (const auto& [m, c] : a.terms())
        parts[m.i].add_term(m, c);
    return parts;
}

bool tn_member(const SUq2Element& a, TorusOrder n) {
    for (const auto& [m, c] : a.terms())
        if (!n.contains(torus_weight(m)))
            return false;
    return true;
}

UPolynomial UPolynomial::u_power(long long e, QScalar c) {
    UPolynomial p;
    p.add_term(e, c);
    return p;
}

void UPolynomial::add_term(long long e, const QScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

UPolynomial UPolynomial::operator+(const UPolynomial& o) const {
    UPolynomial r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

UPolynomial UPolynomial::operator*(const UPolynomial& o) const {
    UPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

UPolynomial quotient_by_gamma(const SUq2Element& a) {
    UPolynomial p;
    for (const auto& [m, c] : a.terms())
        if (m.j == 0 && m.k == 0)
            p.add_term(m.i, c);
    return p;
}

std::string to_string(const SUq2Monomial& m) {
    if (m.is_unit())
        return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* gen, long long e) {
        if (e == 0)
            return;
        if (!first)
            os << ' ';
        os << gen;
        if (e > 1)
            os << '^' << e;
        first = false;
    };
    if (m.i >= 0)
        emit("a", m.i);
    else
        emit("a*", -m.i);
    emit("g", m.j);
    emit("g*", m.k);
    return os.str();
}

namespace {

template <typename TermMap, typename MonoToString>
std::string element_string(const TermMap& terms, MonoToString mono_str) {
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string ms = mono_str(m);
        std::string t;
        if (ms == "1")
            t = to_string(c);
        else
            t = to_factor_string(c) + ms;
        if (out.empty())
            out = t;
        else if (!t.empty() && t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

} // namespace

std::string to_string(const SUq2Element& a) {
    return element_string(a.terms(), [](const SUq2Monomial& m) { return to_string(m); });
}

std::string to_string(const UPolynomial& p) {
    return element_string(p.terms(), [](long long e) -> std::string {
        if (e == 0)
            return "1";
        if (e == 1)
            return "u";
        return "u^" + std::to_string(e);
    });
}

} // namespace qhs
