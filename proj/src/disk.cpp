#include "qhs/disk.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qhs {

std::string DiskMonomial::word() const {
    std::string w(static_cast<std::size_t>(J), kY);
    if (K > 0)
        w.append(static_cast<std::size_t>(K), kZ);
    else if (K < 0)
        w.append(static_cast<std::size_t>(-K), kZStar);
    return w;
}

DiskElement DiskElement::monomial(DiskMonomial m, QScalar c) {
    if (m.J < 0)
        throw std::invalid_argument("DiskMonomial: y-exponent must be nonnegative");
    DiskElement e;
    e.add_term(m, c);
    return e;
}

void DiskElement::add_term(const DiskMonomial& m, const QScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DiskElement DiskElement::operator+(const DiskElement& o) const {
    DiskElement r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

DiskElement DiskElement::operator-(const DiskElement& o) const {
    DiskElement r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

DiskElement DiskElement::operator*(const QScalar& c) const {
    DiskElement r;
    for (const auto& [m, t] : terms_)
        r.add_term(m, t * c);
    return r;
}

std::optional<QScalar> DiskElement::as_scalar() const {
    if (terms_.empty())
        return QScalar::zero();
    if (terms_.size() == 1 && terms_.begin()->first.is_unit())
        return terms_.begin()->second;
    return std::nullopt;
}

const RewriteSystem& disk_rewrite_system() {
    static const RewriteSystem system({
        {"zy", {{QScalar::q_power(-1), "yz"}}},
        {"Zy", {{QScalar::q_power(1), "yZ"}}},
        {"zZ", {{QScalar::one(), ""}, {-QScalar::one(), "yy"}}},
        {"Zz", {{QScalar::one(), ""}, {-QScalar::q_power(2), "yy"}}},
    });
    return system;
}

namespace {

DiskMonomial monomial_of_normal_word(const std::string& w) {
    DiskMonomial m;
    for (char ch : w) {
        switch (ch) {
        case kY: ++m.J; break;
        case kZ: ++m.K; break;
        case kZStar: --m.K; break;
        default:
            throw std::invalid_argument(std::string("unknown letter '") + ch + "'");
        }
    }
    return m;
}

} // namespace

DiskElement disk_normalize(const FreeTermMap& words, Strategy strategy) {
    DiskElement e;
    for (const auto& [w, c] : disk_rewrite_system().reduce(words, strategy))
        e.add_term(monomial_of_normal_word(w), c);
    return e;
}

DiskElement disk_normalize(const std::string& word, const QScalar& coeff,
                           Strategy strategy) {
    FreeTermMap m;
    add_free_term(m, word, coeff);
    return disk_normalize(m, strategy);
}

DiskElement mul(const DiskElement& a, const DiskElement& b) {
    FreeTermMap words;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            add_free_term(words, ma.word() + mb.word(), ca * cb);
    return disk_normalize(words);
}

DiskElement star(const DiskElement& a) {
    FreeTermMap words;
    for (const auto& [m, c] : a.terms()) {
        std::string w = m.word();
        std::string starred(w.rbegin(), w.rend());
        for (char& ch : starred) {
            if (ch == kZ)
                ch = kZStar;
            else if (ch == kZStar)
                ch = kZ;
        }
        add_free_term(words, starred, c.conj());
    }
    return disk_normalize(words);
}

DiskElement f_q(const SUq2Element& a) {
    FreeTermMap words;
    for (const auto& [m, c] : a.terms()) {
        std::string w = m.word();
        for (char& ch : w) {
            switch (ch) {
            case kAlpha: ch = kZStar; break;
            case kAlphaStar: ch = kZ; break;
            case kGamma: ch = kY; break;
            case kGammaStar: ch = kY; break;
            }
        }
        add_free_term(words, w, c);
    }
    return disk_normalize(words);
}

bool disk_tn_member(const DiskMonomial& m, TorusOrder n) {
    for (long long t = m.J; t >= -m.J; t -= 2) {
        if (n.is_infinite()) {
            if (t == m.K)
                return true;
        } else {
            long long r = (t - m.K) % n.value();
            if (r == 0)
                return true;
        }
    }
    return false;
}

long long monomial_exponent(const DiskMonomial& a, const DiskMonomial& b) {
    if ((a.K > 0 && b.K < 0) || (a.K < 0 && b.K > 0))
        throw std::invalid_argument(
            "monomial_exponent: mixed z/z* pair, use q_commutation_exponent");
    return a.J * b.K - b.J * a.K;
}

std::optional<long long> q_commutation_exponent(const DiskElement& a,
                                                const DiskElement& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("q_commutation_exponent: inputs must be nonzero");
    DiskElement ab = mul(a, b);
    DiskElement ba = mul(b, a);
    if (ab == ba)
        return 0;
    if (ab.is_zero() || ba.is_zero())
        return std::nullopt;
    const auto& [w, cba] = *ba.terms().begin();
    auto it = ab.terms().find(w);
    if (it == ab.terms().end())
        return std::nullopt;
    auto ratio = it->second.divexact(cba);
    if (!ratio)
        return std::nullopt;
    auto m = ratio->as_q_power();
    if (!m)
        return std::nullopt;
    if (ab != ba * (*ratio))
        return std::nullopt;
    if (!m->fits_slong_p())
        throw std::overflow_error("q_commutation_exponent: exponent out of range");
    return m->get_si();
}

std::optional<QScalar> brute_force_commutation_oracle(const DiskElement& a,
                                                      const DiskElement& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("commutation oracle: inputs must be nonzero");
    DiskElement ab = mul(a, b);
    DiskElement ba = mul(b, a);
    if (ab.is_zero() && ba.is_zero())
        return QScalar::one();
    if (ab.is_zero() || ba.is_zero())
        return std::nullopt;
    if (ab.terms().size() != ba.terms().size())
        return std::nullopt;
    // Scalar proportionality with nonzero w forces equal supports and
    // cross-multiplied equality of coefficients against a reference term.
    const auto& [w0, ba0] = *ba.terms().begin();
    auto ref = ab.terms().find(w0);
    if (ref == ab.terms().end())
        return std::nullopt;
    const QScalar& ab0 = ref->second;
    for (const auto& [w, cba] : ba.terms()) {
        auto it = ab.terms().find(w);
        if (it == ab.terms().end())
            return std::nullopt;
        if (it->second * ba0 != ab0 * cba)
            return std::nullopt;
    }
    // Proportional in the fraction field; representable iff the reference
    // ratio is an exact Laurent quotient.
    return ab0.divexact(ba0);
}

std::optional<long long> SpectrumReport::min_positive() const {
    auto it = exponents.upper_bound(0);
    if (it == exponents.end())
        return std::nullopt;
    return *it;
}

std::string SpectrumReport::to_text() const {
    std::ostringstream os;
    os << "n=" << n.str() << " D=" << degree_bound << "\n";
    for (long long m : exponents) {
        const auto& [wa, wb] = witnesses.at(m);
        os << "exponent " << m << ": " << to_string(wa) << " , " << to_string(wb)
           << "\n";
    }
    auto mp = min_positive();
    os << "min_positive=" << (mp ? std::to_string(*mp) : std::string("none")) << "\n";
    return os.str();
}

SpectrumReport commutator_spectrum_search(TorusOrder n, long long degree_bound) {
    if (degree_bound < 1)
        throw std::invalid_argument("commutator_spectrum_search: degree bound must be >= 1");
    std::vector<DiskMonomial> basis;
    for (long long J = 0; J <= degree_bound; ++J)
        for (long long K = -(degree_bound - J); K <= degree_bound - J; ++K)
            if (disk_tn_member({J, K}, n))
                basis.push_back({J, K});

    SpectrumReport report;
    report.n = n;
    report.degree_bound = degree_bound;

    for (const DiskMonomial& a : basis) {
        for (const DiskMonomial& b : basis) {
            std::optional<long long> m;
            const bool mixed = (a.K > 0 && b.K < 0) || (a.K < 0 && b.K > 0);
            if (!mixed)
                m = monomial_exponent(a, b);
            else
                m = q_commutation_exponent(DiskElement::monomial(a),
                                           DiskElement::monomial(b));
            if (!m)
                continue;
            if (report.exponents.insert(*m).second) {
                // First witness per exponent; verify it before recording.
                auto check = q_commutation_exponent(DiskElement::monomial(a),
                                                    DiskElement::monomial(b));
                if (!check || *check != *m)
                    throw std::logic_error("spectrum search: witness failed verification");
                report.witnesses.emplace(*m, std::make_pair(a, b));
            }
        }
    }
    return report;
}

std::string to_string(const DiskMonomial& m) {
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
    emit("y", m.J);
    if (m.K > 0)
        emit("z", m.K);
    else
        emit("z*", -m.K);
    return os.str();
}

std::string to_string(const DiskElement& a) {
    if (a.terms().empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        std::string ms = to_string(m);
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

} // namespace qhs
