#include "mzv/relations.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "mzv/operators.hpp"

namespace mzv {

namespace {

void require_weight(int k) {
    if (k < 3) throw std::invalid_argument("relation weight must be >= 3");
}

template <typename Key>
std::vector<Poly> grouped_duality(int k, Key key) {
    std::map<std::pair<int, int>, Poly> sums;
    for (const Word& w : basis(k)) sums[key(w)].add_term(w, Rat(1));
    std::vector<Poly> out;
    out.reserve(sums.size());
    for (const auto& [group, sum] : sums) out.push_back(one_minus_tau(sum));
    return out;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::duality_all: return "duality";
        case FamilyKind::duality_ht_sum: return "duality-ht";
        case FamilyKind::duality_k1_sum: return "duality-k1";
        case FamilyKind::derivation: return "derivation";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    auto kind_of = [](std::string_view name) {
        for (auto kind : {FamilyKind::duality_all, FamilyKind::duality_ht_sum, FamilyKind::duality_k1_sum,
                          FamilyKind::derivation})
            if (family_name(kind) == name) return kind;
        throw std::invalid_argument("unknown relation family: " + std::string(name));
    };
    FamilySpec spec;
    constexpr std::string_view union_prefix = "union:";
    if (text.substr(0, union_prefix.size()) != union_prefix) {
        spec.kinds.push_back(kind_of(text));
        return spec;
    }
    text.remove_prefix(union_prefix.size());
    while (true) {
        const auto comma = text.find(',');
        spec.kinds.push_back(kind_of(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return spec;
}

std::string FamilySpec::str() const {
    if (kinds.size() == 1) return std::string(family_name(kinds.front()));
    std::string s = "union:";
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i) s += ',';
        s += family_name(kinds[i]);
    }
    return s;
}

int first_exponent(const Word& w) {
    if (w.empty() || !w.admissible()) throw std::invalid_argument("not an admissible word: " + w.str());
    int k1 = 1;
    for (std::size_t i = 0; i < w.length() && w[i] == Letter::x; ++i) ++k1;
    return k1;
}

std::vector<Poly> duality_all(int k) {
    require_weight(k);
    std::vector<Poly> out;
    out.reserve(basis_size(k));
    for (const Word& w : basis(k)) out.push_back(one_minus_tau(Poly(w)));
    return out;
}

std::vector<Poly> derivation_all(int k) {
    require_weight(k);
    std::vector<Poly> out;
    for (int n = 1; n <= k - 2; ++n)
        for (const Word& w : basis(k - n)) out.push_back(partial(n, w));
    return out;
}

std::vector<Poly> duality_ht_sum(int k) {
    require_weight(k);
    return grouped_duality(k, [](const Word& w) {
        return std::pair{static_cast<int>(w.depth()), static_cast<int>(w.height())};
    });
}

std::vector<Poly> duality_k1_sum(int k) {
    require_weight(k);
    return grouped_duality(k, [](const Word& w) {
        return std::pair{static_cast<int>(w.depth()), first_exponent(w)};
    });
}

Poly sum_depth_k1(int k, int depth, int k1) {
    Poly sum;
    for (const Word& w : basis(k))
        if (static_cast<int>(w.depth()) == depth && first_exponent(w) == k1) sum.add_term(w, Rat(1));
    return sum;
}

std::vector<Poly> generate(FamilyKind kind, int k) {
    switch (kind) {
        case FamilyKind::duality_all: return duality_all(k);
        case FamilyKind::duality_ht_sum: return duality_ht_sum(k);
        case FamilyKind::duality_k1_sum: return duality_k1_sum(k);
        case FamilyKind::derivation: return derivation_all(k);
    }
    throw std::invalid_argument("unknown relation family");
}

std::vector<Poly> generate(const FamilySpec& spec, int k) {
    if (spec.kinds.empty()) throw std::invalid_argument("empty family spec");
    std::vector<Poly> out;
    for (FamilyKind kind : spec.kinds) {
        auto part = generate(kind, k);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace mzv
