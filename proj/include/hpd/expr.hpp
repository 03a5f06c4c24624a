#pragma once

#include "hpd/multivector.hpp"

namespace hpd {

// Naming context for one chart: coordinate variables first, then adjoined
// symbolic constants, plus the family's parameter names and jet order.
struct VarTable {
    std::vector<std::string> vars; // coordinates then constants
    int ncoords = 0;
    std::vector<std::string> params;
    int order = 0;

    int nvars() const { return (int)vars.size(); }
    int nparams() const { return (int)params.size(); }
    int coord_index(const std::string& name) const;
};

// Grammar: rationals, variables, parameters, + - * ^ with integer exponents
// (negatives allowed), parentheses, and direction symbols d<coord> joined by
// '^' into polyvector directions. '/' divides by rational constants only.
// No implicit multiplication.
PJet parse_scalar(const std::string& text, const VarTable& vt);

// A sum of scalar-times-direction terms; all terms must share one degree.
Multivector<PJet> parse_multivector(const std::string& text, const VarTable& vt,
                                    int chart);

std::string scalar_str(const PJet& p, const VarTable& vt);
std::string mv_str(const Multivector<PJet>& m, const VarTable& vt);
std::string mv_str(const Multivector<LPoly>& m, const VarTable& vt);

} // namespace hpd
