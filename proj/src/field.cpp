#include "sposet/field.hpp"

namespace sposet {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "QQ" || s == "q" || s.empty()) return rationals();
    std::string body = s;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') body = s.substr(3, s.size() - 4);
    else if (s.rfind("gf(", 0) == 0 && s.back() == ')') body = s.substr(3, s.size() - 4);
    try {
        std::int64_t p = std::stoll(body);
        if (!is_prime(p)) throw Error(errc::bad_input, "field characteristic must be prime: " + s);
        if (p > (std::int64_t{1} << 31)) throw Error(errc::bad_input, "prime too large: " + s);
        return gf(p);
    } catch (const std::invalid_argument&) {
        throw Error(errc::bad_input, "unrecognized field '" + s + "' (use Q or GF(p))");
    } catch (const std::out_of_range&) {
        throw Error(errc::bad_input, "unrecognized field '" + s + "'");
    }
}

}  // namespace sposet
