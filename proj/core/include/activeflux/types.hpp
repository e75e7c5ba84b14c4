#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace af {

// Up to three conserved variables; fixed max size keeps everything on the stack.
inline constexpr int kMaxVars = 3;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxVars, kMaxVars>;

// Raised when a state leaves the admissible set or a root find fails.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Vec scalar_vec(double v) {
    Vec r(1);
    r[0] = v;
    return r;
}

} // namespace af
