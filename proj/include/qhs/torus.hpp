#pragma once

#include <stdexcept>
#include <string>

namespace qhs {

/**
 * Order parameter n of the torus subgroup T_n, n in {1, 2, ...} or infinite
 * (the full torus). The associated subgroup of Z is nZ, with the convention
 * that the infinite case selects {0}.
 */
class TorusOrder {
public:
    static TorusOrder finite(long long n) {
        if (n < 1)
            throw std::domain_error("TorusOrder: n must be >= 1");
        TorusOrder t;
        t.n_ = n;
        return t;
    }
    static TorusOrder infinite() { return TorusOrder(); }

    bool is_infinite() const { return n_ == 0; }

    long long value() const {
        if (is_infinite())
            throw std::domain_error("TorusOrder::value: infinite order");
        return n_;
    }

    // weight in nZ (in {0} when infinite)
    bool contains(long long weight) const {
        if (is_infinite())
            return weight == 0;
        return weight % n_ == 0;
    }

    bool is_even() const { return is_infinite() || n_ % 2 == 0; }

    bool operator==(const TorusOrder& o) const { return n_ == o.n_; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }

    // Accepts a positive integer or "inf".
    static TorusOrder parse(const std::string& text);

private:
    TorusOrder() : n_(0) {}
    long long n_;
};

} // namespace qhs
