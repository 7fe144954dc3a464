/*
   Copyright 2026 The cyclo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLO_TESTS_FIXTURES_HPP
#define CYCLO_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <utility>

#include <ostream>

#include "cyclo/curve.hpp"
#include "cyclo/funcfield.hpp"

namespace fixture {

inline cyclo::CurvePtr kummer(std::int64_t p, int n, std::initializer_list<std::pair<std::int64_t, int>> branch) {
    auto f = cyclo::gf::Field::make(p);
    std::vector<cyclo::BranchPoint> b;
    for (auto [rho, l] : branch) b.push_back({f->from_integer(rho), l});
    return cyclo::Curve::kummer(f, n, b);
}

inline cyclo::CurvePtr artin_schreier(std::int64_t p, std::initializer_list<std::int64_t> f_coeffs,
                                      std::initializer_list<std::pair<std::int64_t, int>> branch) {
    auto f = cyclo::gf::Field::make(p);
    std::vector<cyclo::BranchPoint> b;
    for (auto [rho, l] : branch) b.push_back({f->from_integer(rho), l});
    return cyclo::Curve::artin_schreier(f, cyclo::Poly::from_ints(f, f_coeffs), b);
}

/// y^2 = x^4 + 4 = (x-1)(x-2)(x-3)(x-4) over F_5.
inline cyclo::CurvePtr quartic() { return kummer(5, 2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}); }

/// y^3 - y = (x^2 + 1) / ((x-1)(x-2)) over F_3.
inline cyclo::CurvePtr as_f3() { return artin_schreier(3, {1, 0, 1}, {{1, 1}, {2, 1}}); }

}  // namespace fixture

namespace cyclo {

// Readable gtest failure messages.
inline void PrintTo(const Poly& a, std::ostream* os) { *os << a.render(); }
inline void PrintTo(const RatFn& a, std::ostream* os) { *os << a.render(); }
inline void PrintTo(const FFElem& a, std::ostream* os) { *os << a.render(); }
inline void PrintTo(const FFDiff& a, std::ostream* os) { *os << a.render(); }

namespace gf {
inline void PrintTo(const FieldElement& a, std::ostream* os) { *os << a.to_string(); }
}  // namespace gf

}  // namespace cyclo

#endif  // CYCLO_TESTS_FIXTURES_HPP
