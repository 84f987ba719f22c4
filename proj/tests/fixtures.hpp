#pragma once

#include "pbw/central.hpp"
#include "test_util.hpp"

namespace pbwtest {

using namespace pbw;

inline const RationalField QF{};
using QDef = Deformation<RationalField>;

/// Weyl algebra: x y - y x - 1 over x=0, y=1.
inline QDef weyl(int bound) {
    auto p = mono(QF, 1, {0, 1}) - mono(QF, 1, {1, 0}) - mono(QF, 1, {});
    return QDef(QF, Alphabet({"x", "y"}), {p}, bound);
}

/// sl2 enveloping relations over e=0, f=1, h=2:
/// ef - fe - h, he - eh - 2e, hf - fh + 2f.
inline QDef sl2(int bound) {
    auto p1 = mono(QF, 1, {0, 1}) - mono(QF, 1, {1, 0}) - mono(QF, 1, {2});
    auto p2 = mono(QF, 1, {2, 0}) - mono(QF, 1, {0, 2}) - mono(QF, 2, {0});
    auto p3 = mono(QF, 1, {2, 1}) - mono(QF, 1, {1, 2}) + mono(QF, 2, {1});
    return QDef(QF, Alphabet({"e", "f", "h"}), {p1, p2, p3}, bound);
}

/// The perturbed sl2: hf - fh + 2e breaks the Jacobi identity.
inline QDef sl2_perturbed(int bound) {
    auto p1 = mono(QF, 1, {0, 1}) - mono(QF, 1, {1, 0}) - mono(QF, 1, {2});
    auto p2 = mono(QF, 1, {2, 0}) - mono(QF, 1, {0, 2}) - mono(QF, 2, {0});
    auto p3 = mono(QF, 1, {2, 1}) - mono(QF, 1, {1, 2}) + mono(QF, 2, {0});
    return QDef(QF, Alphabet({"e", "f", "h"}), {p1, p2, p3}, bound);
}

/// P = {x^2 y - w, y^3 - w} over x=0, y=1, w=2.
inline QDef ex4(int bound) {
    auto p1 = mono(QF, 1, {0, 0, 1}) - mono(QF, 1, {2});
    auto p2 = mono(QF, 1, {1, 1, 1}) - mono(QF, 1, {2});
    return QDef(QF, Alphabet({"x", "y", "w"}), {p1, p2}, bound);
}

/// Trivial deformation of the cubic down-up algebra (pure cubic relations).
inline QDef downup_trivial(int bound) {
    auto r1 = mono(QF, 1, {0, 0, 1}) - mono(QF, 2, {0, 1, 0}) + mono(QF, 1, {1, 0, 0});
    auto r2 = mono(QF, 1, {0, 1, 1}) - mono(QF, 2, {1, 0, 1}) + mono(QF, 1, {1, 1, 0});
    return QDef(QF, Alphabet({"x", "y"}), {r1, r2}, bound);
}

} // namespace pbwtest
