#pragma once

#include <stdexcept>
#include <string>

namespace capf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClosureExceedsCap : Error {
    long limit;
    explicit ClosureExceedsCap(long cap)
        : Error("group closure exceeds order cap " + std::to_string(cap)), limit(cap) {}
};

struct InvalidGenerator : Error {
    using Error::Error;
};

struct LatticeExceedsCap : Error {
    long limit;
    explicit LatticeExceedsCap(long cap, const std::string& what)
        : Error("subgroup lattice cap " + std::to_string(cap) + " exceeded: " + what), limit(cap) {}
};

struct SeriesExplosion : Error {
    long limit;
    explicit SeriesExplosion(long cap)
        : Error("chief series count exceeds cap " + std::to_string(cap)), limit(cap) {}
};

struct NotNormal : Error {
    NotNormal() : Error("subgroup is not normal in the ambient group") {}
};

struct NotFullyNormalized : Error {
    NotFullyNormalized() : Error("subgroup is not fully normalized in the fusion system") {}
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace capf
