// Level-five modular equation, built by hand from the public API:
//   X = θ⁵[1,1/5], Y = θ⁵[1,3/5], Z = η⁵(τ)/η(5τ),  5⁵ X⁹Y⁹ = Z¹⁰ (X² − 11XY − Y²)⁵.

#include <qfive/qfive.hpp>

#include <iostream>

int main() {
    using namespace qfive;
    const BigRat order(12);
    FracSeries X = series_pow(theta_const(chr(1, 1, 1, 5), 0, order), 5);
    FracSeries Y = series_pow(theta_const(chr(1, 1, 3, 5), 0, order), 5);
    FracSeries Z = eta_quotient(parse_eta_spec("1:5,5:-1"), order);

    FracSeries XY = X * Y;
    FracSeries form = X * X - CycloQ5(11) * XY - Y * Y;
    FracSeries lhs = CycloQ5(3125) * series_pow(XY, 9);
    FracSeries rhs = series_pow(Z, 10) * series_pow(form, 5);

    std::cout << "X = " << to_string(X.truncated(BigRat(3))) << "\n";
    std::cout << "Y = " << to_string(Y.truncated(BigRat(3))) << "\n";
    std::cout << "Z = " << to_string(Z.truncated(BigRat(3))) << "\n";
    SeriesComparison cmp = series_equal(lhs, rhs);
    std::cout << (cmp.passed ? "modular equation holds" : "modular equation FAILS");
    if (cmp.order_checked) std::cout << " through q^(" << to_string(*cmp.order_checked) << ")";
    std::cout << "\n";
    return cmp.passed ? 0 : 1;
}
