#ifndef QRSYM_WEIGHT_HPP
#define QRSYM_WEIGHT_HPP

#include "qrsym/rat.hpp"

#include <optional>

namespace qrsym {

/// Extremal weight h of the module, with the derived deformation parameter
/// q_R = 1/(2h-1).  Admissibility: 2h must not be a nonpositive integer, so
/// the denominators (nu+2h)...(nu+2h+k-1) never vanish at integers nu >= 0.
/// q_R is left unset (and flagged) when 2h = 1.
class WeightParam {
public:
    explicit WeightParam(const Rat& h) : h_(h) {
        Rat two_h = h * Rat(2);
        if (two_h.is_integer() && two_h.sign() <= 0)
            throw std::domain_error("WeightParam: 2h is a nonpositive integer (h = " +
                                    h.str() + ")");
        if (two_h != Rat(1)) qr_ = Rat(1) / (two_h - Rat(1));
    }

    const Rat& h() const { return h_; }
    bool has_qr() const { return qr_.has_value(); }
    const Rat& qr() const {
        if (!qr_) throw std::domain_error("WeightParam: q_R undefined at 2h = 1");
        return *qr_;
    }
    /// Round trip h = (1/q_R + 1)/2.
    static WeightParam from_qr(const Rat& qr) {
        return WeightParam((qr.inverse() + Rat(1)) / Rat(2));
    }

private:
    Rat h_;
    std::optional<Rat> qr_;
};

}  // namespace qrsym

#endif
