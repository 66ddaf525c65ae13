#include "qhs/scalar.hpp"

#include <sstream>

namespace qhs {

namespace {

// "3/2", "i", "-i", "3/2*i", "(2+i)", "(1-3/2*i)"
std::string coeff_string(const GaussianRational& c) {
    const Rational& re = c.re();
    const Rational& im = c.im();
    if (im == 0)
        return re.get_str();
    std::string imabs;
    Rational a = abs(im);
    if (a == 1)
        imabs = "i";
    else
        imabs = a.get_str() + "*i";
    if (re == 0)
        return (im < 0 ? "-" : "") + imabs;
    std::ostringstream os;
    os << "(" << re.get_str() << (im < 0 ? " - " : " + ") << imabs << ")";
    return os.str();
}

std::string term_string(const BigInt& e, const GaussianRational& c) {
    std::string qpart;
    if (e == 1)
        qpart = "q";
    else if (e != 0)
        qpart = "q^" + e.get_str();
    if (qpart.empty())
        return coeff_string(c);
    if (c == GaussianRational(1))
        return qpart;
    if (c == GaussianRational(-1))
        return "-" + qpart;
    return coeff_string(c) + "*" + qpart;
}

} // namespace

std::string to_string(const GaussianRational& c) { return coeff_string(c); }

std::string to_string(const QScalar& s) {
    if (s.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        std::string t = term_string(e, c);
        if (out.empty()) {
            out = t;
        } else if (t.size() > 0 && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

std::string to_factor_string(const QScalar& s) {
    if (s.is_one())
        return "";
    if (s == -QScalar::one())
        return "-";
    if (s.terms().size() == 1)
        return to_string(s) + " ";
    return "(" + to_string(s) + ") ";
}

} // namespace qhs
