#pragma once

#include <concepts>
#include <cstdint>

namespace treegf {

/// A commutative ring with unit, as far as the contraction engine needs one:
/// regular value type, constructible from small integers (0 -> ZERO,
/// 1 -> ONE), closed under +, -, *.  Commutativity itself is not expressible
/// in the type system; it is exercised by randomized algebra tests.
template <typename R>
concept Ring = std::regular<R> && std::constructible_from<R, int> &&
               requires(const R& a, const R& b) {
                 { a + b } -> std::convertible_to<R>;
                 { a - b } -> std::convertible_to<R>;
                 { a * b } -> std::convertible_to<R>;
               };

/// Tally of ring operations performed by one algorithm invocation.
/// Call-local; never shared between concurrent runs.
struct OpCounter {
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  std::uint64_t total() const { return muls + adds; }
};

}  // namespace treegf
