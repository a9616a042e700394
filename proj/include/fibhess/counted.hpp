#pragma once

#include <cstdint>
#include <utility>

namespace fibhess {

/// Ring-element wrapper that counts additions, multiplications and negations
/// through thread-local tallies. Wrapping changes no values, so it can sit
/// under det/per or the oracles to measure their ring-operation cost.
template <typename R>
class Counted {
public:
    struct Tally {
        std::uint64_t adds = 0;
        std::uint64_t muls = 0;
        std::uint64_t negs = 0;
        std::uint64_t total() const { return adds + muls + negs; }
    };

    Counted() = default;
    explicit Counted(R v) : v_(std::move(v)) {}

    const R& value() const { return v_; }

    Counted operator+(const Counted& o) const {
        ++tally().adds;
        return Counted(v_ + o.v_);
    }
    Counted operator*(const Counted& o) const {
        ++tally().muls;
        return Counted(v_ * o.v_);
    }
    Counted operator-() const {
        ++tally().negs;
        return Counted(-v_);
    }
    bool operator==(const Counted& o) const { return v_ == o.v_; }

    static Tally& tally() {
        thread_local Tally t;
        return t;
    }
    static void reset() { tally() = Tally{}; }

private:
    R v_{};
};

} // namespace fibhess
