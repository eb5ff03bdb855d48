#ifndef P3STAB_TEST_HELPERS_HPP
#define P3STAB_TEST_HELPERS_HPP

#include <random>
#include <string>

#include "p3stab/chern.hpp"
#include "p3stab/errors.hpp"

namespace testutil {

using p3stab::ChernCharacter;
using p3stab::Integer;
using p3stab::Rational;

inline ChernCharacter random_character(std::mt19937& rng, int span, bool nonzero_rank = false) {
    std::uniform_int_distribution<int> small(-span, span);
    std::uniform_int_distribution<int> halves(-2 * span, 2 * span);
    std::uniform_int_distribution<int> sixths(-6 * span, 6 * span);
    int v0 = small(rng);
    while (nonzero_rank && v0 == 0) v0 = small(rng);
    return {Rational(v0), Rational(small(rng)), Rational(halves(rng), 2),
            Rational(sixths(rng), 6)};
}

inline ChernCharacter random_rank0(std::mt19937& rng, int span) {
    std::uniform_int_distribution<int> small(-span, span);
    std::uniform_int_distribution<int> halves(-2 * span, 2 * span);
    std::uniform_int_distribution<int> sixths(-6 * span, 6 * span);
    return {Rational(0), Rational(small(rng)), Rational(halves(rng), 2),
            Rational(sixths(rng), 6)};
}

// Z-combination of classes of actual sheaves (O, O_plane, O_line, O_point),
// i.e. a character coming from the Grothendieck group.
inline ChernCharacter random_integral_character(std::mt19937& rng, int span) {
    std::uniform_int_distribution<int> small(-span, span);
    ChernCharacter e0(1, 0, 0, 0);
    ChernCharacter e1(0, 1, Rational(-1, 2), Rational(1, 6));
    ChernCharacter e2(0, 0, 1, -1);
    ChernCharacter e3(0, 0, 0, 1);
    return e0.scaled(small(rng)) + e1.scaled(small(rng)) + e2.scaled(small(rng)) +
           e3.scaled(small(rng));
}

inline Rational random_rational(std::mt19937& rng, int num_span, int den_max) {
    std::uniform_int_distribution<int> num(-num_span, num_span);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rational(num(rng), den(rng));
}

template <typename F>
std::string thrown_code(F&& f) {
    try {
        f();
    } catch (const p3stab::DomainError& e) {
        return e.code();
    } catch (...) {
        return "<other>";
    }
    return "<none>";
}

// chi(O(n)) on P^3; the reference for every Hilbert-polynomial test
inline Rational binom3(const Rational& n) {
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

inline Rational binom2(const Rational& n) { return (n + 1) * (n + 2) / 2; }

} // namespace testutil

#endif
