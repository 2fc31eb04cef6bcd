#pragma once

#include <string>

#include "skewcyc/bounds.hpp"
#include "skewcyc/bridge.hpp"

namespace skewcyc {

// "a^k" power notation when the field carries a log table, "0" for zero,
// plain radix integer otherwise
std::string elem_to_string(const Tower& t, const FieldElem& e);
std::string elem_to_radix_string(const Tower& t, const FieldElem& e);
// accepts "0", "1", "a", "a^k" and plain radix integers
FieldElem parse_elem(const Tower& t, const std::string& s);

// "c_d*X^[d*r] + ... + c_0*X^[0]"
std::string linpoly_to_string(const Tower& t, const LinPoly& f);
LinPoly parse_linpoly(const Tower& t, const std::string& s);

// comma/semicolon CSV of a matrix in element notation
std::string matrix_to_csv(const Tower& t, const Mat& mat);

}  // namespace skewcyc
