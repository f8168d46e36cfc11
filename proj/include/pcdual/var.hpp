#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string_view>

namespace pcdual {

/// Fixed variable registry. The roles are fixed by the dualization pipeline:
/// x1, x2, x3 are (homogeneous) source coordinates, eta, xi, psi the gradient
/// directions of the cone, and x, y the parallel-coordinates plane.
enum class Var : std::uint8_t { x1 = 0, x2, x3, eta, xi, psi, x, y };

inline constexpr std::size_t kVarCount = 8;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x1", "x2", "x3", "eta", "xi", "psi", "x", "y"};

inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::x1, Var::x2, Var::x3, Var::eta, Var::xi, Var::psi, Var::x, Var::y};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

constexpr std::string_view name(Var v) { return kVarNames[index(v)]; }

constexpr std::optional<Var> var_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == s) return static_cast<Var>(i);
    return std::nullopt;
}

using VarSet = std::bitset<kVarCount>;

inline VarSet var_set(std::initializer_list<Var> vars) {
    VarSet s;
    for (Var v : vars) s.set(index(v));
    return s;
}

}  // namespace pcdual
