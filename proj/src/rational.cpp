#include "resummap/rational.hpp"

namespace resummap {

double QuadValue::value() const {
    return c1.value() + c2.value() * 1.4142135623730950488 + c3.value() * 1.7320508075688772935 +
           c6.value() * 2.4494897427831780982;
}

std::string QuadValue::str() const {
    return c1.str() + " + " + c2.str() + "*sqrt(2) + " + c3.str() + "*sqrt(3) + " + c6.str() +
           "*sqrt(6)";
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

} // namespace resummap
