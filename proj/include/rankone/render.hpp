#pragma once

#include "rankone/bidiff.hpp"
#include "rankone/experiments.hpp"
#include "rankone/spectrum.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace rankone {

// Stable key order keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

std::string latex_ratfun(const RatFun& f);
std::string latex_bidiff(const BidiffOp& op);

// {powA, powB, powC, coeff: {num, den: [...]}} entries, one per monomial.
Json json_bidiff(const BidiffOp& op);
Json json_ratfun(const RatFun& f);

Json json_verify(const VerifyReport& rep);
Json json_pole_report(const PoleReport& rep);
Json json_components(const ComponentList& list);
Json json_bound(const BoundReport& rep);
Json json_norm_suite(const NormSuiteReport& rep);
Json json_equivariance(const EquivarianceReport& rep);
Json json_mc_suite(const McSuiteReport& rep);
Json json_mc_estimate(const McEstimate& est);

std::string csv_bound(const BoundReport& rep);
std::string csv_mc_suite(const McSuiteReport& rep);

}  // namespace rankone
