#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/scalar.hpp"

namespace qhs {

// Free words are strings over a single-character alphabet; a linear
// combination of free words is a sparse map word -> coefficient.
using FreeTermMap = std::map<std::string, QScalar>;

inline void add_free_term(FreeTermMap& m, const std::string& w, const QScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            m.erase(it);
    }
}

// Which redex to contract first. The rewrite systems used here are
// confluent, so both strategies must produce the same normal form; the
// tests exploit that as an oracle.
enum class Strategy { LeftmostFirst, RightmostFirst };

/**
 * Oriented string rewriting over two-letter left-hand sides. Each rule
 * maps an adjacent letter pair to a QScalar-weighted sum of replacement
 * words. The systems instantiated in this project are terminating and
 * confluent on their intended alphabets.
 */
class RewriteSystem {
public:
    struct Rule {
        std::string lhs; // exactly two letters
        std::vector<std::pair<QScalar, std::string>> rhs;
    };

    explicit RewriteSystem(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }

    // Fully reduces coeff * word; the result maps normal-form words to
    // coefficients.
    FreeTermMap reduce_word(const std::string& word, const QScalar& coeff,
                            Strategy strategy = Strategy::LeftmostFirst) const;

    FreeTermMap reduce(const FreeTermMap& words,
                       Strategy strategy = Strategy::LeftmostFirst) const;

private:
    const Rule* find(char a, char b) const;
    int find_redex(const std::string& w, Strategy strategy) const;

    std::vector<Rule> rules_;
    std::map<std::pair<char, char>, std::size_t> index_;
};

} // namespace qhs
