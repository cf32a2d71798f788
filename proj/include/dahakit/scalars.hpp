#pragma once

// All exact coefficient fields in one place, plus a uniform arithmetic entry
// point used by the CLI and tests.

#include <string>

#include "dahakit/cyclo.hpp"
#include "dahakit/errors.hpp"
#include "dahakit/prime_field.hpp"
#include "dahakit/ratfunc.hpp"
#include "dahakit/rational.hpp"
#include "dahakit/series.hpp"

namespace dahakit {

enum class ArithOp { Add, Sub, Mul, Div };

template <class S>
S scalar_arith(const S& a, const S& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        default:
            if (scalar_is_zero(b)) throw DivisionByZero();
            return a / b;
    }
}

// one formal unit for the series-variable degeneration routes
struct YVars {
    static constexpr std::size_t count = 1;
    static constexpr std::array<const char*, 1> names{"y"};
    static constexpr const char* label = "y";
};
using YScalar = RatFunc<YVars>;

// backend labels accepted by the CLI
inline bool is_backend_label(const std::string& s) { return s == "qt" || s == "k" || s == "cyclo" || s == "fp"; }

}  // namespace dahakit
