#include "qhs/liedata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace qhs {

namespace {

void validate_cartan_shape(const CartanMatrix& a) {
    const std::size_t r = a.size();
    if (r == 0)
        throw std::invalid_argument("Cartan matrix: empty");
    for (const auto& row : a)
        if (row.size() != r)
            throw std::invalid_argument("Cartan matrix: not square");
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i][i] != 2)
            throw std::invalid_argument("Cartan matrix: diagonal entries must be 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                continue;
            if (a[i][j] > 0)
                throw std::invalid_argument("Cartan matrix: off-diagonal entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("Cartan matrix: zero pattern must be symmetric");
            if (a[i][j] * a[j][i] > 3)
                throw std::invalid_argument("Cartan matrix: not of finite type");
        }
    }
}

// Sylvester criterion on the symmetrized matrix diag(d) * A.
void validate_positive_definite(const CartanMatrix& a, const std::vector<long long>& d) {
    const std::size_t r = a.size();
    std::vector<std::vector<mpq_class>> b(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            b[i][j] = mpq_class(static_cast<long>(d[i])) * static_cast<long>(a[i][j]);
    for (std::size_t k = 0; k < r; ++k) {
        if (b[k][k] <= 0)
            throw std::invalid_argument("Cartan matrix: not of finite type");
        for (std::size_t i = k + 1; i < r; ++i) {
            mpq_class f = b[i][k] / b[k][k];
            for (std::size_t j = k; j < r; ++j)
                b[i][j] -= f * b[k][j];
        }
    }
}

} // namespace

std::vector<long long> symmetrizers(const CartanMatrix& cartan) {
    validate_cartan_shape(cartan);
    const int r = static_cast<int>(cartan.size());
    std::vector<mpq_class> ratio(r, 0);
    std::vector<int> component(r, -1);
    int components = 0;
    for (int root = 0; root < r; ++root) {
        if (component[root] >= 0)
            continue;
        component[root] = components;
        ratio[root] = 1;
        std::vector<int> queue{root};
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (int j = 0; j < r; ++j) {
                if (j == i || cartan[i][j] == 0)
                    continue;
                // d_i a_ij = d_j a_ji fixes the ratio along each edge
                mpq_class forced = ratio[i] * static_cast<long>(cartan[i][j]) /
                                   static_cast<long>(cartan[j][i]);
                if (component[j] < 0) {
                    component[j] = components;
                    ratio[j] = forced;
                    queue.push_back(j);
                } else if (ratio[j] != forced) {
                    throw std::invalid_argument("Cartan matrix: not symmetrizable");
                }
            }
        }
        ++components;
    }

    std::vector<long long> d(r, 0);
    for (int comp = 0; comp < components; ++comp) {
        mpz_class denom = 1;
        for (int i = 0; i < r; ++i)
            if (component[i] == comp)
                denom = lcm(denom, ratio[i].get_den());
        mpz_class g = 0;
        for (int i = 0; i < r; ++i)
            if (component[i] == comp)
                g = gcd(g, mpz_class(ratio[i].get_num() * (denom / ratio[i].get_den())));
        for (int i = 0; i < r; ++i) {
            if (component[i] != comp)
                continue;
            mpz_class v = ratio[i].get_num() * (denom / ratio[i].get_den()) / g;
            if (!v.fits_slong_p())
                throw std::invalid_argument("Cartan matrix: symmetrizer overflow");
            d[i] = v.get_si();
            if (d[i] < 1 || d[i] > 3)
                throw std::invalid_argument("Cartan matrix: symmetrizers not in {1,2,3}");
        }
    }
    validate_positive_definite(cartan, d);
    return d;
}

namespace {

CartanMatrix simple_cartan(char series, int n) {
    auto chain = [&](int len) {
        CartanMatrix a(len, std::vector<long long>(len, 0));
        for (int i = 0; i < len; ++i)
            a[i][i] = 2;
        for (int i = 0; i + 1 < len; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
        return a;
    };
    switch (series) {
    case 'A':
        if (n < 1)
            throw std::invalid_argument("root datum: A requires rank >= 1");
        return chain(n);
    case 'B': {
        if (n < 2)
            throw std::invalid_argument("root datum: B requires rank >= 2");
        CartanMatrix a = chain(n);
        a[n - 1][n - 2] = -2; // last root short
        return a;
    }
    case 'C': {
        if (n < 2)
            throw std::invalid_argument("root datum: C requires rank >= 2");
        CartanMatrix a = chain(n);
        a[n - 2][n - 1] = -2; // last root long
        return a;
    }
    case 'D': {
        if (n < 4)
            throw std::invalid_argument("root datum: D requires rank >= 4");
        CartanMatrix a = chain(n - 1);
        a.resize(n);
        a[n - 1].assign(n, 0);
        for (int i = 0; i < n - 1; ++i)
            a[i].resize(n, 0);
        a[n - 1][n - 1] = 2;
        a[n - 3][n - 1] = -1;
        a[n - 1][n - 3] = -1;
        return a;
    }
    case 'E': {
        if (n < 6 || n > 8)
            throw std::invalid_argument("root datum: E requires rank 6, 7 or 8");
        // Node 2 hangs off node 4 of the chain 1-3-4-5-...-n.
        CartanMatrix a(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            a[i][i] = 2;
        auto link = [&](int i, int j) {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        };
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i)
            link(i, i + 1);
        return a;
    }
    case 'F': {
        if (n != 4)
            throw std::invalid_argument("root datum: F requires rank 4");
        CartanMatrix a = chain(4);
        a[2][1] = -2; // roots 3,4 short
        return a;
    }
    case 'G': {
        if (n != 2)
            throw std::invalid_argument("root datum: G requires rank 2");
        return {{2, -3}, {-1, 2}}; // first root short
    }
    default:
        throw std::invalid_argument(std::string("root datum: unknown series '") + series + "'");
    }
}

} // namespace

RootDatum RootDatum::from_type(const std::string& type) {
    CartanMatrix cartan;
    std::stringstream ss(type);
    std::string factor;
    bool any = false;
    while (std::getline(ss, factor, 'x')) {
        if (factor.size() < 2 || factor[0] < 'A' || factor[0] > 'G')
            throw std::invalid_argument("root datum: expected <series><rank>, e.g. A2 or B2xA1");
        int n;
        try {
            std::size_t used = 0;
            n = std::stoi(factor.substr(1), &used);
            if (used + 1 != factor.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("root datum: bad rank in '" + factor + "'");
        }
        CartanMatrix block = simple_cartan(factor[0], n);
        const std::size_t off = cartan.size();
        cartan.resize(off + block.size());
        for (std::size_t i = 0; i < cartan.size(); ++i)
            cartan[i].resize(off + block.size(), 0);
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = 0; j < block.size(); ++j)
                cartan[off + i][off + j] = block[i][j];
        any = true;
    }
    if (!any)
        throw std::invalid_argument("root datum: empty type");
    return from_cartan(std::move(cartan), type);
}

RootDatum RootDatum::from_cartan(CartanMatrix cartan, std::string label) {
    RootDatum datum;
    datum.d_ = symmetrizers(cartan);
    datum.cartan_ = std::move(cartan);
    datum.label_ = std::move(label);
    return datum;
}

long long RootDatum::d_at(int i) const {
    if (i < 1 || i > rank())
        throw std::domain_error("RootDatum: root index out of range");
    return d_[static_cast<std::size_t>(i - 1)];
}

SubgroupData SubgroupData::make(std::vector<int> s,
                                std::vector<std::vector<long long>> l_generators,
                                const RootDatum& datum) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
        if (i < 1 || i > datum.rank())
            throw std::invalid_argument("subgroup data: S index out of range");
    if (static_cast<int>(s.size()) == datum.rank())
        throw std::invalid_argument("subgroup data: K must be proper, S cannot be all simple roots");

    SubgroupData sub;
    sub.s_ = std::move(s);
    for (int i = 1; i <= datum.rank(); ++i)
        if (!std::binary_search(sub.s_.begin(), sub.s_.end(), i))
            sub.s_complement_.push_back(i);
    for (const auto& gen : l_generators)
        if (gen.size() != sub.s_complement_.size())
            throw std::invalid_argument(
                "subgroup data: each L generator needs one coordinate per root in S^c");
    sub.l_generators_ = std::move(l_generators);
    return sub;
}

bool SubgroupData::in_s_complement(int i) const {
    return std::binary_search(s_complement_.begin(), s_complement_.end(), i);
}

int SubgroupData::coordinate_of(int i) const {
    auto it = std::lower_bound(s_complement_.begin(), s_complement_.end(), i);
    if (it == s_complement_.end() || *it != i)
        throw std::domain_error("subgroup data: root index not in S^c");
    return static_cast<int>(it - s_complement_.begin());
}

long long pairing_with_simple_root(const std::vector<long long>& mu, int i,
                                   const SubgroupData& subgroup, const RootDatum& datum) {
    if (mu.size() != subgroup.s_complement().size())
        throw std::invalid_argument("pairing: weight has wrong coordinate count");
    int pos = subgroup.coordinate_of(i); // throws when i is not in S^c
    return datum.d_at(i) * mu[static_cast<std::size_t>(pos)];
}

TorusOrder restriction_torus_order(const SubgroupData& subgroup, const RootDatum& datum,
                                   int i) {
    long long g = 0;
    for (const auto& mu : subgroup.l_generators())
        g = std::gcd(g, pairing_with_simple_root(mu, i, subgroup, datum));
    if (g == 0)
        return TorusOrder::infinite();
    return TorusOrder::finite(g);
}

HomSpaceInvariant invariant_exponent(const SubgroupData& subgroup, const RootDatum& datum) {
    if (subgroup.s_complement().empty())
        throw std::domain_error("invariant_exponent: K must be a proper subgroup (S^c nonempty)");
    HomSpaceInvariant inv;
    bool first = true;
    for (int i : subgroup.s_complement()) {
        TorusOrder n = restriction_torus_order(subgroup, datum, i);
        long long parity_factor = (!n.is_infinite() && n.value() % 2 == 1) ? 1 : 2;
        long long exponent = datum.d_at(i) * parity_factor;
        inv.n.emplace(i, n);
        if (first || exponent < inv.m) {
            inv.m = exponent;
            first = false;
        }
    }
    return inv;
}

bool is_two_cell(const SubgroupData& subgroup, const RootDatum& datum, long long w_length,
                 std::optional<int> i) {
    if (w_length < 0)
        throw std::invalid_argument("is_two_cell: length must be nonnegative");
    if (w_length != 1)
        return false; // length 0 is the counit, length >= 2 has a nonabelian quotient
    if (!i)
        throw std::invalid_argument("is_two_cell: length 1 requires the reflection index");
    if (*i < 1 || *i > datum.rank())
        throw std::domain_error("is_two_cell: root index out of range");
    return subgroup.in_s_complement(*i);
}

DistinguishReport distinguish(double p, double q, const SubgroupData& subgroup,
                              const RootDatum& datum) {
    if (!(p > 0.0 && p <= 1.0) || !(q > 0.0 && q <= 1.0))
        throw std::domain_error(
            "distinguish: parameters must lie in (0,1]; fold r -> 1/r first");
    HomSpaceInvariant inv = invariant_exponent(subgroup, datum);
    DistinguishReport rep;
    rep.m = inv.m;
    rep.p_power = std::pow(p, static_cast<double>(inv.m));
    rep.q_power = std::pow(q, static_cast<double>(inv.m));
    rep.p_commutative = p == 1.0;
    rep.q_commutative = q == 1.0;
    rep.verdict = (p == q) ? Verdict::isomorphic : Verdict::non_isomorphic;
    return rep;
}

std::vector<int> parse_index_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("index set: bad entry '" + item + "'");
        }
    }
    return out;
}

std::vector<std::vector<long long>> parse_weight_list(const std::string& text) {
    std::vector<std::vector<long long>> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("weight list: expected '(' at position " +
                                        std::to_string(pos));
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("weight list: unclosed '('");
        std::vector<long long> weight;
        std::stringstream ss(text.substr(pos + 1, close - pos - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty())
                throw std::invalid_argument("weight list: empty coordinate");
            try {
                std::size_t used = 0;
                long long v = std::stoll(item, &used);
                if (used != item.size())
                    throw std::invalid_argument("");
                weight.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("weight list: bad coordinate '" + item + "'");
            }
        }
        out.push_back(std::move(weight));
        pos = close + 1;
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ';')
                throw std::invalid_argument("weight list: expected ';' between weights");
            ++pos;
            skip_ws();
        }
    }
    return out;
}

} // namespace qhs
