#include "qhs/rewrite.hpp"

#include <stdexcept>

namespace qhs {

RewriteSystem::RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (rules_[r].lhs.size() != 2)
            throw std::invalid_argument("RewriteSystem: rule patterns are letter pairs");
        index_.emplace(std::make_pair(rules_[r].lhs[0], rules_[r].lhs[1]), r);
    }
}

const RewriteSystem::Rule* RewriteSystem::find(char a, char b) const {
    auto it = index_.find({a, b});
    return it == index_.end() ? nullptr : &rules_[it->second];
}

int RewriteSystem::find_redex(const std::string& w, Strategy strategy) const {
    if (w.size() < 2)
        return -1;
    if (strategy == Strategy::LeftmostFirst) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (find(w[p], w[p + 1]))
                return static_cast<int>(p);
    } else {
        for (std::size_t p = w.size() - 1; p-- > 0;)
            if (find(w[p], w[p + 1]))
                return static_cast<int>(p);
    }
    return -1;
}

FreeTermMap RewriteSystem::reduce_word(const std::string& word, const QScalar& coeff,
                                       Strategy strategy) const {
    FreeTermMap pending;
    add_free_term(pending, word, coeff);
    FreeTermMap done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& w = node.key();
        const QScalar& c = node.mapped();
        int p = find_redex(w, strategy);
        if (p < 0) {
            add_free_term(done, w, c);
            continue;
        }
        const Rule* rule = find(w[p], w[p + 1]);
        const std::string prefix = w.substr(0, p);
        const std::string suffix = w.substr(p + 2);
        for (const auto& [rc, rw] : rule->rhs)
            add_free_term(pending, prefix + rw + suffix, c * rc);
    }
    return done;
}

FreeTermMap RewriteSystem::reduce(const FreeTermMap& words, Strategy strategy) const {
    FreeTermMap done;
    for (const auto& [w, c] : words)
        for (const auto& [nw, nc] : reduce_word(w, c, strategy))
            add_free_term(done, nw, nc);
    return done;
}

} // namespace qhs
