#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace riskprio {

// String identifier that cannot be mixed up with an id of a different kind.
template <typename Tag>
class StrongId {
public:
    StrongId() = default;
    explicit StrongId(std::string value) : value_(std::move(value)) {}

    const std::string& str() const { return value_; }
    bool empty() const { return value_.empty(); }

    auto operator<=>(const StrongId&) const = default;
    bool operator==(const StrongId&) const = default;

private:
    std::string value_;
};

template <typename Tag>
std::ostream& operator<<(std::ostream& os, const StrongId<Tag>& id) {
    return os << id.str();
}

using ActivityId = StrongId<struct ActivityIdTag>;
using RiskId = StrongId<struct RiskIdTag>;

using Days = double;
using Money = double;

}  // namespace riskprio
