#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nielsen {

/// How a value of the determinant character was decided.
enum class CharacterMethod {
    trivial_split,  // no eigenvalue of modulus > 1
    product_test,   // sign of det(I - rho(x)D^k) det(I - D^k) for the first k where it is nonzero
    shifted_radius, // sign of det(sI - rho(x)D) det(sI - D) for rational 1 < s below every expanding modulus
};

inline std::string to_string(CharacterMethod m) {
    switch (m) {
    case CharacterMethod::trivial_split: return "trivial_split";
    case CharacterMethod::product_test: return "product_test";
    case CharacterMethod::shifted_radius: return "shifted_radius";
    }
    return "unknown";
}

/// The character x -> det(rho_{>1}(x)) on the holonomy group, indexed like
/// the group's elements.
struct Character {
    std::vector<int> values;
    std::vector<CharacterMethod> methods;
    /// Power k used by product_test, 0 otherwise.
    std::vector<unsigned> decided_at;

    [[nodiscard]] bool is_trivial() const {
        for (int v : values)
            if (v != 1) return false;
        return true;
    }
};

} // namespace nielsen
