#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzv/poly.hpp"

namespace mzv {

enum class FamilyKind {
    duality_all,     // (1 - tau)(w) for every admissible w
    duality_ht_sum,  // duality of sums with fixed weight, depth and height
    duality_k1_sum,  // duality of sums with fixed weight, depth and k1
    derivation,      // d_n(w) for n >= 1, w admissible
};

/*
 * A relation family, or a union of families, at one weight. The string form
 * is "duality", "derivation", "duality-ht", "duality-k1", or
 * "union:duality,derivation" style lists of those.
 */
struct FamilySpec {
    std::vector<FamilyKind> kinds;

    static FamilySpec parse(std::string_view text);
    std::string str() const;
    bool is_union() const { return kinds.size() > 1; }
};

std::string_view family_name(FamilyKind kind);

/// Every function below requires k >= 3 and returns weight-k homogeneous relations.
std::vector<Poly> duality_all(int k);
std::vector<Poly> derivation_all(int k);
std::vector<Poly> duality_ht_sum(int k);
std::vector<Poly> duality_k1_sum(int k);

std::vector<Poly> generate(FamilyKind kind, int k);
/// Concatenation of the member families' lists.
std::vector<Poly> generate(const FamilySpec& spec, int k);

/// First exponent k1 of an admissible nonempty word (leading x-run plus one).
int first_exponent(const Word& w);

/// Sum of the weight-k admissible words with the given depth and first exponent.
Poly sum_depth_k1(int k, int depth, int k1);

}  // namespace mzv
