#include "qrsym/rat.hpp"

#include <ostream>

namespace qrsym {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::domain_error("Rat::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s), Int(1));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rat::parse: bad rational '" + s + "'");
    }
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace qrsym
