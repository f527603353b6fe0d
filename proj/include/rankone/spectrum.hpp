#pragma once

#include <string>
#include <vector>

namespace rankone {

enum class Field { R, C, H };

Field field_from_string(const std::string& s);  // "R" | "C" | "H"
std::string field_to_string(Field f);

// Rank-one group data: rho and the parameter interval carrying an invariant
// inner product. rho = (n-1)/2, n, 2n+1 and the interval is (0, 2rho) for R, C
// and (2, 2rho-2) for H.
struct GroupParams {
    Field field = Field::R;
    int n = 2;
    double rho = 0;
    double comp_lo = 0, comp_hi = 0;  // open interval

    bool in_range(double mu) const { return mu > comp_lo && mu < comp_hi; }
};

GroupParams group_params(Field field, int n);  // throws RangeError for n < 2

struct Component {
    double param = 0;  // alpha + beta + 2j
    int j = 0;
    std::string theorem;  // which result predicts it
};

// Predicted discrete components of pi_alpha (x) pi_beta. For R: every j >= 0
// with alpha+beta+2j < rho. For C (resp. H): the single component alpha+beta
// when alpha+beta < n (resp. < 2n-1). The list is a lower bound on the
// discrete spectrum, not a decomposition.
struct ComponentList {
    GroupParams group;
    double alpha = 0, beta = 0;
    std::vector<Component> components;
};

ComponentList discrete_components(Field field, int n, double alpha, double beta);

// Parameter of the holomorphic representation containing pi_mu discretely:
// nu = mu/2 for mu in (0, n) (C) or (2, 2n-1) (H). Throws RangeError outside.
double overgroup_parameter(Field field, int n, double mu);

}  // namespace rankone
