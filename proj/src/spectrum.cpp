#include "rankone/spectrum.hpp"

#include "rankone/errors.hpp"

namespace rankone {

Field field_from_string(const std::string& s) {
    if (s == "R" || s == "r") return Field::R;
    if (s == "C" || s == "c") return Field::C;
    if (s == "H" || s == "h") return Field::H;
    throw RangeError("unknown field '" + s + "' (expected R, C or H)");
}

std::string field_to_string(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        default: return "H";
    }
}

GroupParams group_params(Field field, int n) {
    if (n < 2) throw RangeError("n must be >= 2");
    GroupParams g;
    g.field = field;
    g.n = n;
    switch (field) {
        case Field::R: g.rho = (n - 1) / 2.0; break;
        case Field::C: g.rho = n; break;
        case Field::H: g.rho = 2.0 * n + 1.0; break;
    }
    if (field == Field::H) {
        g.comp_lo = 2.0;
        g.comp_hi = 2.0 * g.rho - 2.0;
    } else {
        g.comp_lo = 0.0;
        g.comp_hi = 2.0 * g.rho;
    }
    return g;
}

ComponentList discrete_components(Field field, int n, double alpha, double beta) {
    ComponentList out;
    out.group = group_params(field, n);
    out.alpha = alpha;
    out.beta = beta;
    if (!out.group.in_range(alpha) || !out.group.in_range(beta))
        throw RangeError("alpha, beta must lie in the complementary range (" +
                         std::to_string(out.group.comp_lo) + ", " +
                         std::to_string(out.group.comp_hi) + ")");
    switch (field) {
        case Field::R:
            for (int j = 0; alpha + beta + 2 * j < out.group.rho; ++j)
                out.components.push_back({alpha + beta + 2 * j, j, "Thm4.1"});
            break;
        case Field::C:
            if (alpha + beta < n) out.components.push_back({alpha + beta, 0, "Thm5.1"});
            break;
        case Field::H:
            if (alpha + beta < 2.0 * n - 1.0) out.components.push_back({alpha + beta, 0, "Thm5.1"});
            break;
    }
    return out;
}

double overgroup_parameter(Field field, int n, double mu) {
    if (n < 2) throw RangeError("n must be >= 2");
    switch (field) {
        case Field::C:
            if (!(mu > 0 && mu < n)) throw RangeError("mu must lie in (0, n) for field C");
            break;
        case Field::H:
            if (!(mu > 2 && mu < 2.0 * n - 1.0))
                throw RangeError("mu must lie in (2, 2n-1) for field H");
            break;
        case Field::R:
            throw RangeError("overgroup parameter is defined for fields C and H only");
    }
    return mu / 2.0;
}

}  // namespace rankone
