#include "skewcyc/format.hpp"

#include <cctype>
#include <sstream>

namespace skewcyc {

std::string elem_to_radix_string(const Tower& t, const FieldElem& e) {
    return std::to_string(t.to_radix(e));
}

std::string elem_to_string(const Tower& t, const FieldElem& e) {
    if (t.is_zero(e)) return "0";
    if (e == t.one()) return "1";
    if (auto lg = t.discrete_log(e)) {
        if (*lg == 1) return "a";
        return "a^" + std::to_string(*lg);
    }
    return elem_to_radix_string(t, e);
}

FieldElem parse_elem(const Tower& t, const std::string& s) {
    if (s.empty()) fail("ParseError", "empty element");
    if (s == "0") return t.zero();
    if (s == "a") {
        if (!t.power_notation_available()) fail("ParseError", "power notation unavailable for this tower");
        return t.primitive_element();
    }
    if (s.rfind("a^", 0) == 0) {
        if (!t.power_notation_available()) fail("ParseError", "power notation unavailable for this tower");
        u64 k = std::stoull(s.substr(2));
        return t.pow(t.primitive_element(), k);
    }
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) fail("ParseError", "cannot parse element '" + s + "'");
    return t.from_radix(std::stoull(s));
}

std::string linpoly_to_string(const Tower& t, const LinPoly& f) {
    if (f.is_zero()) return "0";
    const u32 r = t.params().r;
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (t.is_zero(f.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string coeff = elem_to_string(t, f.c[i]);
        if (coeff != "1") os << coeff << "*";
        os << "X^[" << i * r << "]";
    }
    return os.str();
}

LinPoly parse_linpoly(const Tower& t, const std::string& s) {
    const u32 r = t.params().r;
    auto strip = [](std::string x) {
        size_t b = x.find_first_not_of(" \t");
        size_t e = x.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return x.substr(b, e - b + 1);
    };
    std::string body = strip(s);
    if (body == "0") return lp_zero();
    std::vector<FieldElem> coeffs;
    auto ensure = [&](size_t i) {
        if (coeffs.size() <= i) coeffs.resize(i + 1, t.zero());
    };
    size_t pos = 0;
    while (pos < body.size()) {
        size_t plus = body.find('+', pos);
        std::string term = strip(body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        pos = plus == std::string::npos ? body.size() : plus + 1;
        if (term.empty()) fail("ParseError", "empty term in '" + s + "'");
        std::string coeff_str = "1";
        size_t star = term.find('*');
        std::string mono = term;
        if (star != std::string::npos) {
            coeff_str = strip(term.substr(0, star));
            mono = strip(term.substr(star + 1));
        }
        if (mono.size() < 5 || (mono[0] != 'X' && mono[0] != 'x') || mono.substr(1, 2) != "^[" ||
            mono.back() != ']')
            fail("ParseError", "cannot parse monomial '" + mono + "'");
        u64 exp = std::stoull(mono.substr(3, mono.size() - 4));
        if (exp % r != 0) fail("ParseError", "exponent not a multiple of r in '" + mono + "'");
        size_t idx = (size_t)(exp / r);
        ensure(idx);
        coeffs[idx] = t.add(coeffs[idx], parse_elem(t, coeff_str));
    }
    return lp_from_coeffs(t, std::move(coeffs), CoeffField::full);
}

std::string matrix_to_csv(const Tower& t, const Mat& mat) {
    std::ostringstream os;
    for (const auto& row : mat) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ",";
            os << elem_to_string(t, row[j]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace skewcyc
