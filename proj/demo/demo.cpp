// A tour of the library: interpolation, circuits, continuation, sets, gluing.

#include <iostream>

#include "lip/continuation.hpp"
#include "lip/gluing.hpp"

using namespace lip;

int main() {
    // f(-1), f(0), f(1) = 0, 0, 1 has interpolant (x^2+x)/2.
    Sample s = parse_points("(-1,0),(0,0),(1,1)");
    std::cout << "interpolant: " << to_string(interpolate(s)) << "\n";
    std::cout << "verdict: " << to_string(lip_check(s)) << "\n";

    // Newton coefficients of x^3 along 0, 1, -1, 2.
    IntPolynomial cube{0, 0, 0, 1};
    auto d = newton_decompose(sample_of(cube, {0, 1, -1, 2}));
    const auto& ns = std::get<NewtonSeries>(d);
    std::cout << "x^3 in the Newton basis:";
    for (const auto& c : ns.coeffs()) std::cout << " " << c;
    std::cout << "\n";

    // Continuing around the branches at -1 and 1.
    BranchSetup setup{Sample({{0, 0}}), -1, 1, 0, 1};
    std::cout << "values at 2: " << to_string(admissible_extension(setup, 2)) << "\n";
    try {
        admissible_extension(setup, 3);
    } catch (const ObstructedPoint& e) {
        std::cout << "at 3: " << e.what() << "\n";
    }

    // Sets.
    auto v = parse_set("apz(0,2) | {-1,1}");
    NormalSet n = normalize(*v);
    std::cout << to_string(*v) << ": " << to_string(n) << ", density " << to_string(density(n)) << "\n";
    std::cout << "ap(1,2) & ap(2,3) = " << to_string(*ap_intersect(Progression::ascending(1, 2),
                                                                   Progression::ascending(2, 3)))
              << "\n";

    // The two halves of the continued function each glue fine, the whole does not.
    Sample f = build_example3(8);
    GluingFamily fam{{Piece{parse_set("apz(0,2) | {-1}"), f}, Piece{parse_set("apz(0,2) | {1}"), f}}, {-8, 8}};
    GluingReport r = glue_check(fam);
    std::cout << "precondition: " << to_string(*r.precondition) << "\n";
    std::cout << "union: " << to_string(*r.verdict) << "\n";
}
