#pragma once

// Shared test scaffolding: Catch2 plus readable stringification for the GMP
// value types.

#include <catch2/catch_amalgamated.hpp>

#include "mldlab/rational.hpp"

namespace Catch {

template <>
struct StringMaker<mpz_class> {
    static std::string convert(const mpz_class& v) { return v.get_str(); }
};

template <>
struct StringMaker<mpq_class> {
    static std::string convert(const mpq_class& v) { return mldlab::rat_str(v); }
};

}  // namespace Catch
