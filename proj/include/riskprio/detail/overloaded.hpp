#pragma once

namespace riskprio::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace riskprio::detail
