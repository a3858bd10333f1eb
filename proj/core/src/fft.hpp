#pragma once

#include <unsupported/Eigen/FFT>

#include "qwork/core.hpp"

namespace qwork::detail {

// Unnormalized forward transform, inverse scaled by 1/n (Eigen's default).
class Fft {
public:
    Ket forward(const Ket& in) {
        Ket out(in.size());
        engine_.fwd(out, in);
        return out;
    }
    Ket inverse(const Ket& in) {
        Ket out(in.size());
        engine_.inv(out, in);
        return out;
    }

private:
    Eigen::FFT<double> engine_;
};

}  // namespace qwork::detail
