#include "schedmech/rational.hpp"

#include <cctype>

namespace schedmech {

std::string ExtRat::str() const {
    if (kind_ == Kind::pos_inf) return "inf";
    if (kind_ == Kind::neg_inf) return "-inf";
    std::string s = numerator().str();
    BigInt den = denominator();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

ExtRat ExtRat::parse(const std::string& text) {
    if (text == "inf" || text == "+inf") return pos_inf();
    if (text == "-inf") return neg_inf();

    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw value_error("malformed rational '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0)
        throw value_error("rational with zero denominator '" + text + "'");
    if (negative) n = -n;
    return ExtRat(n, d);
}

}  // namespace schedmech
