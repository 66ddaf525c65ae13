#include "qhs/torus.hpp"

namespace qhs {

TorusOrder TorusOrder::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo")
        return infinite();
    try {
        std::size_t used = 0;
        long long n = std::stoll(text, &used);
        if (used != text.size())
            throw std::invalid_argument("");
        return finite(n);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("torus order: expected a positive integer or 'inf', got '" +
                                text + "'");
    }
}

} // namespace qhs
